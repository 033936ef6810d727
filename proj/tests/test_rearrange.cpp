#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bvsym/generate.hpp"
#include "bvsym/rearrange.hpp"
#include "bvsym/rng.hpp"

using namespace bvsym;
namespace {
constexpr double pi = std::numbers::pi;

std::vector<MeasuredSample> sampled_hat(std::size_t cells) {
    // hat(x) = 2 min(x, 2 - x) on (0, 2), cell averages
    std::vector<MeasuredSample> out(cells);
    const double h = 2.0 / static_cast<double>(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * h;
        out[i] = {2.0 * std::min(x, 2.0 - x), h};
    }
    return out;
}
}  // namespace

TEST_CASE("distribution function of the hat") {
    const auto hat = sampled_hat(4000);
    // |{hat > t}| = 2 - t for 0 <= t < 2
    CHECK(distribution_function(hat, 0.5) == doctest::Approx(1.5).epsilon(1e-3));
    CHECK(distribution_function(hat, 1.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(distribution_function(hat, 2.0) == doctest::Approx(0.0));
    CHECK_THROWS(distribution_function(hat, -1.0));
}

TEST_CASE("rearrangement of a small sample set") {
    const std::vector<MeasuredSample> u{{3.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}};
    const auto star = decreasing_rearrangement(u);
    CHECK(star(0.5) == doctest::Approx(3.0));
    CHECK(star(1.5) == doctest::Approx(2.0));
    CHECK(star(2.5) == doctest::Approx(1.0));
    CHECK(star(3.5) == doctest::Approx(0.0));
    CHECK(star.total_measure() == doctest::Approx(3.0));

    const auto incr = increasing_rearrangement(u, 3.0);
    CHECK(incr(0.5) == doctest::Approx(1.0));
    CHECK(incr(2.5) == doctest::Approx(3.0));
}

TEST_CASE("hat rearranges to 2 - s") {
    const std::size_t cells = 2000;
    const auto hat = sampled_hat(cells);
    const auto star = decreasing_rearrangement(hat);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double s = 2.0 * i / 200.0 * (1.0 - 1e-12);
        worst = std::max(worst, std::abs(star(s) - (2.0 - s)));
    }
    CHECK(worst <= 2.0 * 2.0 / static_cast<double>(cells) + 1e-12);
}

TEST_CASE("equimeasurability") {
    Rng rng(7, 1);
    std::vector<MeasuredSample> u(500);
    for (auto& c : u) c = {rng.uniform(0.0, 3.0), rng.uniform(0.1, 0.5)};
    const auto star = decreasing_rearrangement(u);
    std::vector<MeasuredSample> starred;
    const auto& bp = star.breakpoints();
    const auto& vals = star.values();
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        starred.push_back({vals[i], bp[i + 1] - bp[i]});
    for (int k = 0; k < 20; ++k) {
        const double t = 3.0 * k / 20.0;
        CHECK(distribution_function(u, t) ==
              doctest::Approx(distribution_function(starred, t)).epsilon(1e-12));
    }
}

TEST_CASE("Cavalieri: L^p norms are preserved") {
    Rng rng(11, 2);
    std::vector<MeasuredSample> u(300);
    double sum1 = 0.0, sum2 = 0.0, sup = 0.0;
    for (auto& c : u) {
        c = {rng.uniform(0.0, 2.0), rng.uniform(0.05, 0.4)};
        sum1 += c.value * c.measure;
        sum2 += c.value * c.value * c.measure;
        sup = std::max(sup, c.value);
    }
    const auto star = decreasing_rearrangement(u);
    CHECK(lp_norm(star, 1.0) == doctest::Approx(sum1).epsilon(1e-12));
    CHECK(lp_norm(star, 2.0) == doctest::Approx(std::sqrt(sum2)).epsilon(1e-12));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(lp_norm(star, inf) == doctest::Approx(sup).epsilon(1e-14));
    CHECK_THROWS(lp_norm(star, 0.5));
}

TEST_CASE("schwarz evaluation") {
    // profile f(s) = 2 - s on [0,2]; u_sharp(x) = f(2|x|) in n = 1
    const StepFunction f({0.0, 1.0, 2.0}, {1.5, 0.5}, Monotone::Decreasing);
    // at |x| = 0.25, s = 0.5 -> value 1.5
    CHECK(schwarz_evaluate(f, 1, 0.25, Monotone::Decreasing) == doctest::Approx(1.5));
    CHECK(schwarz_evaluate(f, 1, 0.75, Monotone::Decreasing) == doctest::Approx(0.5));
    CHECK(schwarz_evaluate(f, 1, 2.0, Monotone::Decreasing) == doctest::Approx(0.0));
    // n = 2: s = pi |x|^2
    CHECK(schwarz_evaluate(f, 2, std::sqrt(0.5 / pi), Monotone::Decreasing) ==
          doctest::Approx(1.5));
    CHECK_THROWS(schwarz_evaluate(f, 2, 0.5, Monotone::Increasing));
}

TEST_CASE("Hardy-Littlewood inequality") {
    // u = 1 on (0,1), v = 1 on (1,2) over a common 2-cell grid:
    // integral u v = 0 but integral u* v* = 1/2 on matched halves
    const std::vector<MeasuredSample> u{{1.0, 0.5}, {1.0, 0.5}, {0.0, 0.5}, {0.0, 0.5}};
    const std::vector<MeasuredSample> v{{0.0, 0.5}, {0.0, 0.5}, {1.0, 0.5}, {1.0, 0.5}};
    const auto hl = hardy_littlewood_check(u, v);
    CHECK(hl.lhs == doctest::Approx(0.0));
    CHECK(hl.rhs == doctest::Approx(1.0).epsilon(1e-13));

    // u(x) = x, v(x) = 1 - x on (0,1): lhs -> 1/6, rhs -> 1/3
    const std::size_t cells = 4000;
    std::vector<MeasuredSample> a(cells), b(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(cells);
        a[i] = {x, 1.0 / static_cast<double>(cells)};
        b[i] = {1.0 - x, 1.0 / static_cast<double>(cells)};
    }
    const auto hl2 = hardy_littlewood_check(a, b);
    CHECK(hl2.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-6));
    CHECK(hl2.rhs == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(hl2.lhs <= hl2.rhs + 1e-12);
}

TEST_CASE("random samples: rearrangement invariants") {
    for (std::uint64_t idx = 0; idx < 20; ++idx) {
        Rng rng(99, idx);
        std::vector<MeasuredSample> u(200);
        double mass = 0.0;
        for (auto& c : u) {
            c = {rng.uniform(0.0, 5.0), rng.uniform(0.01, 0.3)};
            mass += c.measure;
        }
        const auto star = decreasing_rearrangement(u);
        CHECK(star.total_measure() == doctest::Approx(mass).epsilon(1e-12));
        const auto& vals = star.values();
        CHECK(std::is_sorted(vals.rbegin(), vals.rend()));
        const auto incr = increasing_rearrangement(u, mass);
        // reflection identity u_*(s) = u*(|Omega| - s) at generic points
        for (int k = 1; k < 10; ++k) {
            const double s = mass * k / 10.0 + 1e-9;
            CHECK(incr(s) == doctest::Approx(star(mass - s)).epsilon(1e-12));
        }
    }
}
