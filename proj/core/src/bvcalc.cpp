#include "bvsym/bvcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bvsym/geometry.hpp"

namespace bvsym {

double StieltjesMeasure::interval_mass(double a, double b) const {
    if (!(b > a)) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double lo = std::max(grid[i], a);
        const double hi = std::min(grid[i + 1], b);
        if (hi > lo) acc += density[i] * (hi - lo);
    }
    for (const auto& [x, m] : atoms)
        if (x > a && x <= b) acc += m;
    return acc;
}

TVSplit total_variation_split(const BVFunction1D& u) {
    return PiecewiseProfile::from(u).tv_split();
}

TVSplit total_variation_split(const RadialBVFunction& u) {
    return PiecewiseProfile::from(u).tv_split();
}

double superlevel_perimeter(const BVFunction1D& u, double t) {
    return PiecewiseProfile::from(u).superlevel_perimeter(t);
}

double superlevel_perimeter(const RadialBVFunction& u, double t) {
    return PiecewiseProfile::from(u).superlevel_perimeter(t);
}

CoareaCheck coarea_identity(const BVFunction1D& u) {
    const auto pp = PiecewiseProfile::from(u);
    return {pp.coarea_integral(), pp.tv_split().total};
}

CoareaCheck coarea_identity(const RadialBVFunction& u) {
    const auto pp = PiecewiseProfile::from(u);
    return {pp.coarea_integral(), pp.tv_split().total};
}

namespace {

double pos(double z) { return z > 0.0 ? z : 0.0; }

}  // namespace

BVFunction1D truncate_above(const BVFunction1D& u, double s) {
    const auto pp = PiecewiseProfile::from(u);
    const double theta = pp.u_star(s);
    BVFunction1D out;
    out.a = u.a;
    out.b = u.b;
    const std::size_t N = u.ac_density.size();
    const double h = (u.b - u.a) / static_cast<double>(N);

    for (const auto& at : u.atoms) {
        const double nh = pos(pp.value_right(at.x) - theta) - pos(pp.value_left(at.x) - theta);
        if (nh != 0.0) out.atoms.push_back({at.x, nh});
    }

    out.ac_density.resize(N);
    std::size_t ai = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const double xl = u.a + h * static_cast<double>(i);
        const double xr = (i + 1 == N) ? u.b : u.a + h * static_cast<double>(i + 1);
        double inc = pos(pp.value_left(xr) - theta) - pos(pp.value_right(xl) - theta);
        while (ai < out.atoms.size() && out.atoms[ai].x < xr) {
            if (out.atoms[ai].x > xl) inc -= out.atoms[ai].h;
            ++ai;
        }
        out.ac_density[i] = inc / (xr - xl);
    }
    return out;
}

RadialBVFunction truncate_above(const RadialBVFunction& u, double s) {
    const auto pp = PiecewiseProfile::from(u);
    const double theta = pp.u_star(s);
    RadialBVFunction out;
    out.n = u.n;
    out.R = u.R;

    for (const auto& at : u.atoms) {
        const double nh = pos(pp.value_right(at.x) - theta) - pos(pp.value_left(at.x) - theta);
        if (nh != 0.0) out.atoms.push_back({at.x, nh});
    }

    const std::size_t M = u.profile.size() - 1;
    const double h = u.R / static_cast<double>(M);
    out.profile.resize(M + 1);
    for (std::size_t i = 0; i <= M; ++i) {
        const double x = (i == M) ? u.R : h * static_cast<double>(i);
        double jsum = 0.0;
        for (const auto& at : out.atoms)
            if (at.x <= x) jsum += at.h;
        const double f = (i == M) ? pos(pp.value_left(x) - theta) : pos(pp.value_right(x) - theta);
        out.profile[i] = f - jsum;
    }
    return out;
}

GFuncs g_functions(const PiecewiseProfile& u, std::size_t grid) {
    const auto s = u.s_grid(grid);
    const std::size_t k = s.size() - 1;
    std::vector<double> g(k), g1(k), g2(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double theta = u.u_star(s[i + 1]);
        g1[i] = u.g1_at(theta);
        g2[i] = u.g2_at(theta);
        // both parts are increasing in s; the closed-form sums can wobble by
        // rounding, which would flip signs in the increment measure
        if (i) {
            g1[i] = std::max(g1[i], g1[i - 1]);
            g2[i] = std::max(g2[i], g2[i - 1]);
        }
        g[i] = g1[i] + g2[i];
    }
    return {StepFunction(s, g, Monotone::Increasing), StepFunction(s, g1, Monotone::Increasing),
            StepFunction(s, g2, Monotone::Increasing)};
}

GFuncs g_functions(const BVFunction1D& u, std::size_t grid) {
    return g_functions(PiecewiseProfile::from(u), grid);
}

GFuncs g_functions(const RadialBVFunction& u, std::size_t grid) {
    return g_functions(PiecewiseProfile::from(u), grid);
}

StieltjesMeasure sigma_from_g(const GFuncs& g) {
    const auto& s = g.G.breakpoints();
    const auto& v1 = g.G1.values();
    const auto& v2 = g.G2.values();
    const std::size_t k = v1.size();
    const double scale = g.G.values().back() + 1.0;

    StieltjesMeasure out;
    out.grid = s;
    out.density.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double d1 = v1[i] - (i ? v1[i - 1] : 0.0);
        const double d2 = v2[i] - (i ? v2[i - 1] : 0.0);
        if (d1 < -1e-12 * scale || d2 < -1e-12 * scale)
            throw std::invalid_argument("sigma_from_g: G parts must be increasing");
        out.density[i] = std::max(d1, 0.0) / (s[i + 1] - s[i]);
        if (d2 > 1e-14 * scale) out.atoms.emplace_back(s[i + 1], d2);
    }
    return out;
}

namespace {

double v_weight_cell(double tl, double tr, int n, double om) {
    // int over [tl, tr] of tau^{1/n - 1} / (n om^{1/n}) dtau
    const double e = 1.0 / n;
    return (std::pow(tr, e) - std::pow(tl, e)) / std::pow(om, e);
}

}  // namespace

double v_eval(const StieltjesMeasure& sigma, int n, double s) {
    if (n < 1) throw std::invalid_argument("v_eval: n >= 1 required");
    const double om = unit_ball_measure(n);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < sigma.grid.size(); ++i) {
        const double tl = std::max(sigma.grid[i], s);
        const double tr = sigma.grid[i + 1];
        if (tr > tl) acc += sigma.density[i] * v_weight_cell(tl, tr, n, om);
    }
    const double e = 1.0 / n;
    for (const auto& [x, m] : sigma.atoms) {
        if (x <= s) continue;
        if (!(x > 0.0)) throw std::invalid_argument("v_eval: atom at tau = 0");
        acc += m * std::pow(x, e - 1.0) / (n * std::pow(om, e));
    }
    return acc;
}

StepFunction v_profile(const StieltjesMeasure& sigma, int n) {
    std::vector<double> brk = sigma.grid;
    for (const auto& [x, m] : sigma.atoms) brk.push_back(x);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    std::vector<double> vals(brk.size() - 1);
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) vals[i] = v_eval(sigma, n, brk[i]);
    return StepFunction(std::move(brk), std::move(vals), Monotone::Decreasing);
}

double envelope_comparison(const PiecewiseProfile& u, const StieltjesMeasure& sigma) {
    const auto& s = sigma.grid;
    double worst = std::numeric_limits<double>::infinity();
    double h_prev = u.envelope_H(u.u_star(s[0]));
    std::size_t ai = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        double mass = sigma.density[i] * (s[i + 1] - s[i]);
        while (ai < sigma.atoms.size() && sigma.atoms[ai].first <= s[i + 1]) {
            if (sigma.atoms[ai].first > s[i]) mass += sigma.atoms[ai].second;
            ++ai;
        }
        const double h_next = u.envelope_H(u.u_star(s[i + 1]));
        worst = std::min(worst, mass - (h_next - h_prev));
        h_prev = h_next;
    }
    return worst;
}

PolyaSzegoCheck polya_szego_bv_check(const BVFunction1D& u) {
    const auto pp = PiecewiseProfile::from(u);
    const TVSplit tv_u = pp.tv_split();

    const double V = pp.domain_measure();
    // Value-distribution gaps: u* jumps there, and u-sharp carries each
    // as a symmetric pair of atoms at |x| = measure / 2.
    const auto gaps = pp.star_gaps();

    // Continuous part of u* at measure s: u*(s) plus the gap heights
    // already crossed.
    auto cont = [&](double s) {
        s = std::clamp(s, 0.0, V);
        double c = pp.u_star(s);
        for (const auto& gv : gaps)
            if (gv.measure <= s) c += gv.height;
        return c;
    };

    const double W = 0.5 * V * (1.0 + 1.0 / 16.0);  // pad so gap atoms stay interior
    BVFunction1D sym;
    sym.a = -W;
    sym.b = W;
    const std::size_t N = 1024;
    sym.ac_density.resize(N);
    const double h = 2.0 * W / static_cast<double>(N);
    auto node_cont = [&](double x) { return cont(std::min(2.0 * std::abs(x), V)); };
    for (std::size_t i = 0; i < N; ++i) {
        const double xl = -W + h * static_cast<double>(i);
        const double xr = (i + 1 == N) ? W : -W + h * static_cast<double>(i + 1);
        sym.ac_density[i] = (node_cont(xr) - node_cont(xl)) / (xr - xl);
    }
    for (const auto& gv : gaps) {
        sym.atoms.push_back({-gv.measure / 2.0, gv.height});
        sym.atoms.push_back({gv.measure / 2.0, -gv.height});
    }
    std::sort(sym.atoms.begin(), sym.atoms.end(),
              [](const Atom& l, const Atom& r) { return l.x < r.x; });

    const TVSplit tv_s = PiecewiseProfile::from(sym).tv_split();
    return {tv_s.total, tv_u.total, tv_s.singular, tv_u.singular};
}

}  // namespace bvsym
