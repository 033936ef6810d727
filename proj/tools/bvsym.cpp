#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bvsym/bvcalc.hpp"
#include "bvsym/generate.hpp"
#include "bvsym/io.hpp"
#include "bvsym/rearrange.hpp"
#include "bvsym/suite.hpp"
#include "bvsym/symmetrize.hpp"
#include "bvsym/torsion.hpp"

namespace {

using namespace bvsym;

StepFunction rearranged_from_file(const std::string& path) {
    const FunctionFile f = read_function_json(path);
    switch (f.kind) {
        case FunctionKind::Samples:
            return decreasing_rearrangement(f.samples);
        case FunctionKind::Bv1d: {
            const auto pp = PiecewiseProfile::from(f.bv1d);
            const auto grid = pp.s_grid(512);
            std::vector<double> vals(grid.size() - 1);
            for (std::size_t i = 0; i + 1 < grid.size(); ++i) vals[i] = pp.u_star(grid[i]);
            return StepFunction(grid, std::move(vals), Monotone::Decreasing);
        }
        case FunctionKind::Radial: {
            const auto pp = PiecewiseProfile::from(f.radial);
            const auto grid = pp.s_grid(512);
            std::vector<double> vals(grid.size() - 1);
            for (std::size_t i = 0; i + 1 < grid.size(); ++i) vals[i] = pp.u_star(grid[i]);
            return StepFunction(grid, std::move(vals), Monotone::Decreasing);
        }
    }
    throw std::runtime_error("unreachable");
}

int cmd_rearrange(const std::string& in, const std::string& out) {
    write_step_csv(out, rearranged_from_file(in));
    return 0;
}

int cmd_symmetrize(const std::string& in, const std::string& out) {
    const FunctionFile f = read_function_json(in);
    if (f.kind == FunctionKind::Samples)
        throw std::runtime_error(in + ": symmetrize needs a BV function, not bare samples");
    const SymmetrizedProfile p = (f.kind == FunctionKind::Bv1d) ? u_star_of_bv(f.bv1d)
                                                                : u_star_of_bv(f.radial);
    write_symmetrized_csv(out, p);
    std::printf("n=%d R=%s b=%s l1=%s\n", p.dim(), render_double(p.ball().radius).c_str(),
                render_double(p.boundary_value()).c_str(), render_double(p.l1()).c_str());
    return 0;
}

int cmd_verify(const SuiteConfig& cfg) {
    const Report rep = run_suite(cfg);
    std::printf("suite=%s passed=%zu failed=%zu worst_margin=%s\n", cfg.suite.c_str(),
                rep.passed, rep.failed, render_double(rep.worst_margin).c_str());
    for (const auto& r : rep.instances)
        if (!r.pass)
            std::printf("FAIL %s[%llu] margin=%s %s\n", r.suite.c_str(),
                        static_cast<unsigned long long>(r.index),
                        render_double(r.margin).c_str(), r.detail.c_str());
    return rep.failed == 0 ? 0 : 1;
}

Polygon shape_polygon(const std::string& shape) {
    if (shape == "square") return Polygon{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
    if (shape == "hexagon") {
        Polygon p;
        for (int k = 0; k < 6; ++k) {
            const double a = std::numbers::pi / 3.0 * k;
            p.vertices.push_back({std::cos(a), std::sin(a)});
        }
        return p;
    }
    if (shape.rfind("polygon:", 0) == 0) return read_polygon_json(shape.substr(8));
    throw std::runtime_error("unknown shape: " + shape);
}

int cmd_torsion(const std::string& functional, const std::string& shape, double param,
                std::size_t grid, const std::string& report) {
    TorsionReport rep;
    if (shape == "ball") {
        // unit-area ball; bound and ball value coincide
        const auto ball = schwarz_ball(1.0, 2);
        rep.functional = functional == "G" ? 'G' : 'F';
        rep.param = param;
        rep.domain = "ball";
        if (rep.functional == 'F') {
            const auto m = minimize_f_ball(ball.radius, 2, param);
            rep.bound = rep.ball_value = m.t_f;
            rep.r_opt = m.r_opt;
        } else {
            rep.bound = rep.ball_value = minimize_g_ball(ball.radius, 2, param);
        }
        rep.margin = 0.0;
    } else {
        const Polygon poly = shape_polygon(shape);
        const auto base = make_grid(poly, grid);
        if (functional == "G") {
            const auto candidates = generate_torsion_candidates(base, 42, 50, false);
            rep = saint_venant_g_suite(poly, param, candidates);
        } else {
            const auto candidates = generate_torsion_candidates(base, 42, 50, true);
            rep = saint_venant_f_suite(poly, param, candidates);
        }
        rep.domain = shape;
    }
    std::string j = "{\"functional\":\"" + std::string(1, rep.functional) +
                    "\",\"param\":" + render_double(rep.param) + ",\"domain\":\"" + rep.domain +
                    "\",\"bound\":" + render_double(rep.bound) +
                    ",\"ball_value\":" + render_double(rep.ball_value) +
                    ",\"margin\":" + render_double(rep.margin) + "}\n";
    std::printf("%s", j.c_str());
    if (!report.empty()) write_text_file(report, j);
    return rep.margin >= -1e-3 ? 0 : 1;
}

int cmd_convert(const std::string& in, const std::string& out) {
    const bool in_json = in.size() > 5 && in.substr(in.size() - 5) == ".json";
    if (in_json) {
        const FunctionFile f = read_function_json(in);
        if (f.kind == FunctionKind::Samples) {
            // lossless step emission: cells in order
            std::vector<double> brk{0.0};
            std::vector<double> vals;
            for (const auto& c : f.samples) {
                brk.push_back(brk.back() + c.measure);
                vals.push_back(c.value);
            }
            write_step_csv(out, StepFunction(std::move(brk), std::move(vals), Monotone::None));
        } else {
            write_step_csv(out, rearranged_from_file(in));
        }
        return 0;
    }
    // CSV -> samples JSON
    write_text_file(out, samples_to_json(read_step_csv(in)) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradient symmetrization and torsion inequality verifier"};
    app.require_subcommand(1);

    std::string in, out;
    auto* sub_re = app.add_subcommand("rearrange", "decreasing rearrangement to CSV");
    sub_re->add_option("--in", in, "function JSON")->required();
    sub_re->add_option("--out", out, "output CSV")->required();

    auto* sub_sym = app.add_subcommand("symmetrize", "symmetrized profile to CSV");
    sub_sym->add_option("--in", in, "BV function JSON")->required();
    sub_sym->add_option("--out", out, "output CSV")->required();

    SuiteConfig cfg;
    auto* sub_ver = app.add_subcommand("verify", "run a verification suite");
    sub_ver->add_option("--suite", cfg.suite,
                        "rearrange|coarea|main-theorem|proposition|polya-szego|"
                        "torsion-F|torsion-G|all");
    sub_ver->add_option("--seed", cfg.seed, "base seed");
    sub_ver->add_option("--count", cfg.count, "instance count");
    sub_ver->add_option("--grid", cfg.grid, "1-D grid resolution");
    sub_ver->add_option("--grid2d", cfg.grid2d, "torsion grid resolution");
    sub_ver->add_option("--tol", cfg.tol, "comparison tolerance");
    sub_ver->add_option("--param", cfg.params, "lambda or m values");
    sub_ver->add_option("--report", cfg.report_path, "JSON report path");

    std::string functional = "F", shape = "square", t_report;
    double param = 0.0;
    std::size_t grid2d = 256;
    auto* sub_tor = app.add_subcommand("torsion", "Saint-Venant comparison on a shape");
    sub_tor->add_option("--functional", functional, "F or G");
    sub_tor->add_option("--shape", shape, "square|hexagon|polygon:FILE|ball");
    sub_tor->add_option("--param", param, "lambda (F) or m (G)");
    sub_tor->add_option("--grid", grid2d, "grid resolution");
    sub_tor->add_option("--report", t_report, "JSON report path");

    std::string conv_in, conv_out;
    auto* sub_conv = app.add_subcommand("convert", "function JSON <-> step CSV");
    sub_conv->add_option("input", conv_in, "input file")->required();
    sub_conv->add_option("output", conv_out, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_re->parsed()) return cmd_rearrange(in, out);
        if (sub_sym->parsed()) return cmd_symmetrize(in, out);
        if (sub_ver->parsed()) return cmd_verify(cfg);
        if (sub_tor->parsed()) return cmd_torsion(functional, shape, param, grid2d, t_report);
        if (sub_conv->parsed()) return cmd_convert(conv_in, conv_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
