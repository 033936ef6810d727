#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "bvsym/generate.hpp"
#include "bvsym/io.hpp"
#include "bvsym/suite.hpp"
#include "bvsym/symmetrize.hpp"

#include "json.hpp"

using namespace bvsym;
namespace {
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/bvsym_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

void write(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}
}  // namespace

TEST_CASE("render_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567, 0.0, -2.5}) {
        CHECK(std::stod(render_double(v)) == v);
    }
}

TEST_CASE("bv1d JSON round trip") {
    const auto u = generate_bv1d(31, 4, 500);
    TempFile f("bv1d.json");
    write_text_file(f.path, bv1d_to_json(u));
    const auto back = read_function_json(f.path);
    REQUIRE(back.kind == FunctionKind::Bv1d);
    CHECK(back.bv1d.a == u.a);
    CHECK(back.bv1d.b == u.b);
    REQUIRE(back.bv1d.ac_density.size() == u.ac_density.size());
    for (std::size_t i = 0; i < u.ac_density.size(); ++i)
        CHECK(back.bv1d.ac_density[i] == u.ac_density[i]);
    REQUIRE(back.bv1d.atoms.size() == u.atoms.size());
    for (std::size_t i = 0; i < u.atoms.size(); ++i) {
        CHECK(back.bv1d.atoms[i].x == u.atoms[i].x);
        CHECK(back.bv1d.atoms[i].h == u.atoms[i].h);
    }
}

TEST_CASE("radial JSON round trip") {
    const auto u = generate_radial(31, 4, 3, 256);
    TempFile f("radial.json");
    write_text_file(f.path, radial_to_json(u));
    const auto back = read_function_json(f.path);
    REQUIRE(back.kind == FunctionKind::Radial);
    CHECK(back.radial.n == u.n);
    CHECK(back.radial.R == u.R);
    REQUIRE(back.radial.profile.size() == u.profile.size());
    for (std::size_t i = 0; i < u.profile.size(); ++i)
        CHECK(back.radial.profile[i] == u.profile[i]);
}

TEST_CASE("samples JSON round trip") {
    const std::vector<MeasuredSample> cells{{1.5, 0.25}, {0.0, 0.5}, {3.0, 0.25}};
    TempFile f("samples.json");
    write_text_file(f.path, samples_to_json(cells));
    const auto back = read_function_json(f.path);
    REQUIRE(back.kind == FunctionKind::Samples);
    REQUIRE(back.samples.size() == 3);
    CHECK(back.samples[1].measure == 0.5);
    CHECK(back.samples[2].value == 3.0);
}

TEST_CASE("malformed input names the offending field") {
    TempFile f("bad.json");
    write(f.path, R"({"cells": [{"value": 1.0}]})");
    CHECK_THROWS_WITH_AS(read_function_json(f.path),
                         doctest::Contains("measure"), std::runtime_error);
    write(f.path, R"({"domain": [0, 1]})");
    CHECK_THROWS_WITH_AS(read_function_json(f.path),
                         doctest::Contains("ac_density"), std::runtime_error);
    write(f.path, "not json at all");
    CHECK_THROWS_AS(read_function_json(f.path), std::runtime_error);
    CHECK_THROWS_AS(read_function_json("/tmp/bvsym_no_such_file.json"),
                    std::runtime_error);
}

TEST_CASE("step CSV round trip") {
    const StepFunction f({0.0, 0.5, 1.25, 2.0}, {3.0, 2.0, 0.5}, Monotone::Decreasing);
    TempFile t("step.csv");
    write_step_csv(t.path, f);
    const auto cells = read_step_csv(t.path);
    REQUIRE(cells.size() >= 3);
    CHECK(cells[0].value == 3.0);
    CHECK(cells[0].measure == 0.5);
    CHECK(cells[1].value == 2.0);
    CHECK(cells[1].measure == 0.75);
}

TEST_CASE("symmetrized CSV carries the header") {
    const auto u = generate_bv1d(31, 7, 500);
    const auto p = u_star_of_bv(u);
    TempFile t("sym.csv");
    write_symmetrized_csv(t.path, p);
    std::ifstream in(t.path);
    std::string first;
    std::getline(in, first);
    REQUIRE(first.rfind("# ", 0) == 0);
    const auto j = nlohmann::json::parse(first.substr(2));
    CHECK(j.at("n").get<int>() == 1);
    CHECK(j.at("R").get<double>() == doctest::Approx(p.ball().radius));
    CHECK(j.at("b").get<double>() == doctest::Approx(p.boundary_value()));
}

TEST_CASE("polygon JSON") {
    TempFile t("poly.json");
    write(t.path, R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})");
    const auto p = read_polygon_json(t.path);
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.vertices[2][0] == 1.0);
    write(t.path, R"({"vertices": [[0,0],[1,1]]})");
    CHECK_THROWS(read_polygon_json(t.path));
}

TEST_CASE("generators are deterministic") {
    const auto a = generate_bv1d(42, 9, 1000);
    const auto b = generate_bv1d(42, 9, 1000);
    CHECK(a.a == b.a);
    CHECK(a.ac_density == b.ac_density);
    REQUIRE(a.atoms.size() == b.atoms.size());
    const auto p1 = generate_convex_polygon(42, 3);
    const auto p2 = generate_convex_polygon(42, 3);
    REQUIRE(p1.vertices.size() == p2.vertices.size());
    CHECK(p1.vertices[0][0] == p2.vertices[0][0]);
    const auto m = polygon_metrics(p1);
    CHECK(m.area == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("suite smoke run with report") {
    SuiteConfig cfg;
    cfg.suite = "rearrange";
    cfg.seed = 42;
    cfg.count = 10;
    cfg.grid = 1000;
    TempFile t("report.json");
    cfg.report_path = t.path;
    const auto rep = run_suite(cfg);
    CHECK(rep.failed == 0);
    CHECK(rep.passed == 10);
    std::ifstream in(t.path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    REQUIRE(text.find("\"schema\"") != std::string::npos);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("schema").get<int>() == 1);
    CHECK(j.at("passed").get<int>() == 10);
    CHECK(j.at("instances").size() == 10);
}

TEST_CASE("suite runs are reproducible under threading") {
    SuiteConfig cfg;
    cfg.suite = "coarea";
    cfg.count = 8;
    cfg.grid = 1000;
    const auto r1 = run_suite(cfg);
    const auto r2 = run_suite(cfg);
    REQUIRE(r1.instances.size() == r2.instances.size());
    for (std::size_t i = 0; i < r1.instances.size(); ++i) {
        CHECK(r1.instances[i].margin == r2.instances[i].margin);
        CHECK(r1.instances[i].pass == r2.instances[i].pass);
    }
    CHECK(thread_count() >= 1);
}
