#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "bvsym/generate.hpp"
#include "bvsym/torsion.hpp"

using namespace bvsym;
namespace {
constexpr double pi = std::numbers::pi;

Polygon unit_square() { return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

Polygon regular_ngon(int k, double area) {
    Polygon p;
    // area of a regular k-gon with circumradius c: (k/2) c^2 sin(2 pi / k)
    const double c = std::sqrt(2.0 * area / (k * std::sin(2.0 * pi / k)));
    for (int i = 0; i < k; ++i)
        p.vertices.push_back(
            {c * std::cos(2.0 * pi * i / k), c * std::sin(2.0 * pi * i / k)});
    return p;
}
}  // namespace

TEST_CASE("radial candidate closed form") {
    // lambda = 0, r = 0 on the unit disk: psi = (R^2 - rho^2) / (2n),
    // F_0 = -pi/16 and T_F = pi/16 (plain torsional rigidity)
    RadialCandidate c{2, 1.0, 0.0};
    CHECK(c.psi(0.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(c.psi(1.0) == doctest::Approx(0.0));
    CHECK(c.dpsi(0.5) == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(evaluate_f_lambda(c, 0.0) == doctest::Approx(-pi / 16.0).epsilon(1e-7));

    // flat-core candidate stays continuous and flat on [0, r]
    RadialCandidate f{2, 1.0, 0.5};
    CHECK(f.dpsi(0.3) == doctest::Approx(0.0));
    CHECK(f.psi(1.0) == doctest::Approx(0.0));
    CHECK(f.psi(0.2) == doctest::Approx(f.psi(0.5)).epsilon(1e-12));

    // n = 3 unit ball, r = 0: psi = (1 - rho^2)/6, F_0 = -(1/2) int psi
    // = -(1/2) [w_3 / 6 * (1 - 3/5)]  ... int (1-rho^2) dx over B_1 is
    // 4 pi (1/3 - 1/5) = 8 pi / 15, so F_0 = -(1/2)(8 pi / 90) = -2 pi / 45
    RadialCandidate c3{3, 1.0, 0.0};
    CHECK(evaluate_f_lambda(c3, 0.0) ==
          doctest::Approx(-2.0 * pi / 45.0).epsilon(1e-9));
}

TEST_CASE("penalized minimization on the ball") {
    // lambda = 0: full support wins
    const auto m0 = minimize_f_ball(1.0, 2, 0.0);
    CHECK(m0.r_opt <= 1e-3);
    CHECK(m0.t_f == doctest::Approx(pi / 16.0).epsilon(1e-9));

    // very large lambda: zero function wins, T_F = 0
    const auto mbig = minimize_f_ball(1.0, 2, 10.0);
    CHECK(mbig.t_f == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mbig.r_opt == doctest::Approx(1.0).epsilon(1e-6));

    // monotone in lambda
    double prev = minimize_f_ball(1.0, 2, 0.0).t_f;
    for (double lam : {0.02, 0.05, 0.1, 0.2, 0.4}) {
        const double cur = minimize_f_ball(1.0, 2, lam).t_f;
        CHECK(cur <= prev + 1e-9);
        CHECK(cur >= -1e-12);
        prev = cur;
    }
}

TEST_CASE("flat-core family is optimal against slope offsets") {
    // brute-force a two-parameter family psi_c(rho) = (psi(rho) + c (R - rho))_+
    // around the optimizer; the offset c = 0 must win
    const double lambda = 0.1;
    const auto best = minimize_f_ball(1.0, 2, lambda);
    const std::size_t N = 2000;
    for (double c : {-0.2, -0.05, 0.05, 0.2}) {
        std::vector<double> psi(N + 1);
        RadialCandidate cand{2, 1.0, best.r_opt};
        for (std::size_t i = 0; i <= N; ++i) {
            const double rho = static_cast<double>(i) / static_cast<double>(N);
            psi[i] = std::max(0.0, cand.psi(rho) + c * (1.0 - rho));
        }
        const double val = evaluate_f_lambda_radial(2, 1.0, psi, lambda);
        CHECK(-val <= best.t_f + 1e-6);
    }
}

TEST_CASE("grid Poisson solve against the disk") {
    // torsion function of the disk: psi = (R^2 - rho^2)/4, energy pi R^4 / 8;
    // F_0 = -pi R^4 / 16
    const auto disk = regular_ngon(64, pi);
    auto g = make_grid(disk, 128);
    solve_torsion_poisson(g);
    const double f = evaluate_f_lambda(g, 0.0);
    // 64-gon at this resolution: a few percent of pi/16
    CHECK(f == doctest::Approx(-pi / 16.0).epsilon(0.05));
    // center value ~ R^2/4 = 0.25
    double vmax = 0.0;
    for (double v : g.values) vmax = std::max(vmax, v);
    CHECK(vmax == doctest::Approx(0.25).epsilon(0.03));
}

TEST_CASE("Saint-Venant for the penalized rigidity") {
    const auto square = unit_square();
    auto base = make_grid(square, 128);
    solve_torsion_poisson(base);
    std::vector<GridFunction2D> cands = generate_torsion_candidates(base, 5, 6, true);
    for (double lam : {0.0, 0.05, 0.2}) {
        const auto rep = saint_venant_f_suite(square, lam, cands);
        CHECK(rep.margin >= -1e-3);
        CHECK(rep.ball_value >= rep.bound - 1e-3);
    }
    // lambda = 0 sanity: square rigidity ~ 0.01757 < disk pi/16 at area 1
    const auto rep0 = saint_venant_f_suite(square, 0.0, cands);
    CHECK(rep0.bound == doctest::Approx(0.017577).epsilon(0.03));
    CHECK(rep0.ball_value == doctest::Approx(pi / 16.0 / (pi * pi)).epsilon(1e-6));
}

TEST_CASE("insulation functional closed forms") {
    // unit disk, m = 1: the Euler-Lagrange solution gives pi/8 + 1/4
    CHECK(minimize_g_ball(1.0, 2, 1.0) == doctest::Approx(pi / 8.0 + 0.25).epsilon(1e-12));
    // m -> 0 recovers the Dirichlet value 2 T(B) = pi/8
    CHECK(minimize_g_ball(1.0, 2, 1e-8) == doctest::Approx(pi / 8.0).epsilon(1e-6));
    // finite-element cross-check
    CHECK(minimize_g_ball_fd(1.0, 2, 1.0) ==
          doctest::Approx(pi / 8.0 + 0.25).epsilon(1e-5));
    CHECK(minimize_g_ball_fd(2.0, 3, 0.7) ==
          doctest::Approx(minimize_g_ball(2.0, 3, 0.7)).epsilon(1e-5));
}

TEST_CASE("insulation quotient on explicit profiles") {
    // constant psi = 1 on the unit disk: gradient term 0, so
    // G = (1/m)(2 pi)^2 / pi^2 = 4/m
    std::vector<double> flat(201, 1.0);
    CHECK(evaluate_g_radial(2, 1.0, flat, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(evaluate_g_radial(2, 1.0, flat, 2.0) == doctest::Approx(2.0).epsilon(1e-12));

    // Dirichlet-type profile (1 - rho^2): no trace, quotient
    // int |grad|^2 / (int psi)^2 = 2 pi / (pi/2)^2 = 8 / pi
    const std::size_t N = 4000;
    std::vector<double> par(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        const double rho = static_cast<double>(i) / static_cast<double>(N);
        par[i] = 1.0 - rho * rho;
    }
    CHECK(evaluate_g_radial(2, 1.0, par, 1.0) == doctest::Approx(8.0 / pi).epsilon(1e-5));

    // the quotient never beats the closed-form optimum
    CHECK(1.0 / evaluate_g_radial(2, 1.0, flat, 1.0) <=
          minimize_g_ball(1.0, 2, 1.0) + 1e-12);
    CHECK(1.0 / evaluate_g_radial(2, 1.0, par, 1.0) <=
          minimize_g_ball(1.0, 2, 1.0) + 1e-12);
}

TEST_CASE("insulation quotient is scale-invariant in psi") {
    const auto square = unit_square();
    auto g = make_grid(square, 96);
    solve_torsion_poisson(g);
    const double q1 = evaluate_g(g, 1.0);
    auto g2 = g;
    for (double& v : g2.values) v *= 3.7;
    CHECK(evaluate_g(g2, 1.0) == doctest::Approx(q1).epsilon(1e-12));
}

TEST_CASE("Saint-Venant for the insulation functional") {
    const auto square = unit_square();
    auto base = make_grid(square, 128);
    solve_torsion_poisson(base);
    const auto cands = generate_torsion_candidates(base, 7, 6, false);
    for (double m : {0.3, 1.0, 4.0}) {
        const auto rep = saint_venant_g_suite(square, m, cands);
        CHECK(rep.margin >= -1e-3);
        // the constant candidate alone certifies 1/G = m A^2 / P^2 = m/16
        // on area 1, perimeter 4
        CHECK(rep.bound >= m / 16.0 - 1e-12);
    }
    // near-equality on an almost-disk
    const auto gon = regular_ngon(64, 1.0);
    auto gb = make_grid(gon, 128);
    solve_torsion_poisson(gb);
    const auto gc = generate_torsion_candidates(gb, 7, 6, false);
    const auto rep = saint_venant_g_suite(gon, 1.0, gc);
    CHECK(rep.margin >= -1e-3);
    CHECK(rep.margin <= 0.05 * rep.ball_value);
}
