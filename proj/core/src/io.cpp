#include "bvsym/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bvsym {

using nlohmann::json;

std::string render_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

double require_number(const json& j, const std::string& field) {
    if (!j.contains(field)) throw std::runtime_error("missing field \"" + field + "\"");
    if (!j[field].is_number())
        throw std::runtime_error("field \"" + field + "\" must be a number");
    return j[field].get<double>();
}

std::vector<double> require_numbers(const json& j, const std::string& field) {
    if (!j.contains(field)) throw std::runtime_error("missing field \"" + field + "\"");
    if (!j[field].is_array())
        throw std::runtime_error("field \"" + field + "\" must be an array");
    std::vector<double> out;
    for (const auto& e : j[field]) {
        if (!e.is_number())
            throw std::runtime_error("field \"" + field + "\" must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<Atom> parse_atoms(const json& j, const std::string& field) {
    std::vector<Atom> atoms;
    if (!j.contains(field)) return atoms;
    if (!j[field].is_array())
        throw std::runtime_error("field \"" + field + "\" must be an array");
    for (const auto& a : j[field])
        atoms.push_back({require_number(a, "x"), require_number(a, "h")});
    return atoms;
}

}  // namespace

FunctionFile read_function_json(const std::string& path) {
    const json j = parse_file(path);
    FunctionFile f;
    if (j.contains("cells")) {
        f.kind = FunctionKind::Samples;
        if (!j["cells"].is_array()) throw std::runtime_error("field \"cells\" must be an array");
        for (const auto& c : j["cells"])
            f.samples.push_back({require_number(c, "value"), require_number(c, "measure")});
        return f;
    }
    if (j.contains("domain")) {
        f.kind = FunctionKind::Bv1d;
        const auto dom = require_numbers(j, "domain");
        if (dom.size() != 2) throw std::runtime_error("field \"domain\" must be [a, b]");
        f.bv1d.a = dom[0];
        f.bv1d.b = dom[1];
        f.bv1d.ac_density = require_numbers(j, "ac_density");
        f.bv1d.atoms = parse_atoms(j, "atoms");
        return f;
    }
    if (j.contains("profile")) {
        f.kind = FunctionKind::Radial;
        f.radial.n = static_cast<int>(require_number(j, "n"));
        f.radial.R = require_number(j, "R");
        f.radial.profile = require_numbers(j, "profile");
        f.radial.atoms = parse_atoms(j, "radial_atoms");
        return f;
    }
    throw std::runtime_error(
        path + ": expected one of the fields \"cells\", \"domain\" or \"profile\"");
}

std::string bv1d_to_json(const BVFunction1D& u) {
    json j;
    j["domain"] = {u.a, u.b};
    j["ac_density"] = u.ac_density;
    j["atoms"] = json::array();
    for (const auto& a : u.atoms) j["atoms"].push_back({{"x", a.x}, {"h", a.h}});
    return j.dump();
}

std::string radial_to_json(const RadialBVFunction& u) {
    json j;
    j["n"] = u.n;
    j["R"] = u.R;
    j["profile"] = u.profile;
    j["radial_atoms"] = json::array();
    for (const auto& a : u.atoms) j["radial_atoms"].push_back({{"x", a.x}, {"h", a.h}});
    return j.dump();
}

std::string samples_to_json(const std::vector<MeasuredSample>& cells) {
    json j;
    j["cells"] = json::array();
    for (const auto& c : cells)
        j["cells"].push_back({{"value", c.value}, {"measure", c.measure}});
    return j.dump();
}

void write_step_csv(const std::string& path, const StepFunction& f) {
    std::ostringstream out;
    out << "s,value\n";
    const auto& b = f.breakpoints();
    const auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        out << render_double(b[i]) << "," << render_double(v[i]) << "\n";
    out << render_double(b.back()) << ","
        << render_double(f.tag() == Monotone::Decreasing ? 0.0 : v.back()) << "\n";
    write_text_file(path, out.str());
}

std::vector<MeasuredSample> read_step_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "s,value" || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected \"s,value\" row");
        try {
            rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number");
        }
    }
    if (rows.size() < 2)
        throw std::runtime_error(path + ": need at least two rows of step data");
    std::vector<MeasuredSample> cells;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double measure = rows[i + 1].first - rows[i].first;
        if (!(measure > 0.0))
            throw std::runtime_error(path + ": row " + std::to_string(i + 2) +
                                     ": breakpoints must increase");
        cells.push_back({rows[i].second, measure});
    }
    return cells;
}

void write_symmetrized_csv(const std::string& path, const SymmetrizedProfile& p) {
    std::ostringstream out;
    json hdr;
    hdr["n"] = p.dim();
    hdr["R"] = p.ball().radius;
    hdr["b"] = p.boundary_value();
    hdr["singular_mass"] = p.singular_mass();
    out << "# " << hdr.dump() << "\n";
    out << "s,value\n";
    const auto& edges = p.grad_edges();
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        out << render_double(edges[i]) << "," << render_double(p.eval(edges[i])) << "\n";
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        out << render_double(mid) << "," << render_double(p.eval(mid)) << "\n";
    }
    out << render_double(edges.back()) << "," << render_double(p.boundary_value()) << "\n";
    write_text_file(path, out.str());
}

Polygon read_polygon_json(const std::string& path) {
    const json j = parse_file(path);
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::runtime_error(path + ": missing field \"vertices\"");
    Polygon p;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw std::runtime_error(path + ": field \"vertices\" must hold [x, y] pairs");
        p.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    validate_polygon(p);
    return p;
}

}  // namespace bvsym
