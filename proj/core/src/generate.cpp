#include "bvsym/generate.hpp"

#include <algorithm>
#include <cmath>

#include "bvsym/rng.hpp"

namespace bvsym {

namespace {

struct Tent {
    double c, w, h;
    double operator()(double x) const {
        const double d = 1.0 - std::abs(x - c) / w;
        return d > 0.0 ? h * d : 0.0;
    }
};

std::vector<Atom> indicator_atoms(Rng& rng, double lo, double hi, std::size_t max_bumps) {
    std::vector<Atom> atoms;
    const std::size_t nb = rng.uniform_int(max_bumps + 1);
    for (std::size_t b = 0; b < nb; ++b) {
        const double span = hi - lo;
        double x1 = rng.uniform(lo + 0.02 * span, hi - 0.04 * span);
        double x2 = rng.uniform(x1 + 0.01 * span, hi - 0.01 * span);
        const double h = rng.uniform(0.1, 1.5);
        atoms.push_back({x1, h});
        atoms.push_back({x2, -h});
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& l, const Atom& r) { return l.x < r.x; });
    // collapse coincident locations (vanishing-probability ties)
    std::vector<Atom> out;
    for (const auto& a : atoms) {
        if (!out.empty() && out.back().x == a.x)
            out.back().h += a.h;
        else
            out.push_back(a);
    }
    std::erase_if(out, [](const Atom& a) { return a.h == 0.0; });
    return out;
}

}  // namespace

BVFunction1D generate_bv1d(std::uint64_t seed, std::uint64_t index, std::size_t grid) {
    Rng rng(seed, index);
    BVFunction1D u;
    u.a = rng.uniform(-2.0, 0.0);
    u.b = u.a + rng.uniform(0.5, 3.0);

    const std::size_t nt = 1 + rng.uniform_int(10);
    std::vector<Tent> tents;
    for (std::size_t t = 0; t < nt; ++t) {
        const double c = rng.uniform(u.a, u.b);
        const double wmax = std::min(c - u.a, u.b - c);
        if (wmax <= 1e-3) continue;
        tents.push_back({c, rng.uniform(0.2 * wmax, wmax), rng.uniform(0.1, 2.0)});
    }

    auto cont = [&](double x) {
        double v = 0.0;
        for (const auto& t : tents) v += t(x);
        return v;
    };
    const double h = (u.b - u.a) / static_cast<double>(grid);
    u.ac_density.resize(grid);
    double prev = cont(u.a);
    for (std::size_t i = 0; i < grid; ++i) {
        const double xr = (i + 1 == grid) ? u.b : u.a + h * static_cast<double>(i + 1);
        const double cur = cont(xr);
        u.ac_density[i] = (cur - prev) / h;
        prev = cur;
    }
    u.atoms = indicator_atoms(rng, u.a, u.b, 5);
    return u;
}

RadialBVFunction generate_radial(std::uint64_t seed, std::uint64_t index, int n,
                                 std::size_t grid) {
    Rng rng(seed, index ^ 0x7261646961ULL);
    RadialBVFunction u;
    u.n = n;
    u.R = rng.uniform(0.5, 2.0);

    const std::size_t nt = 1 + rng.uniform_int(10);
    std::vector<Tent> tents;
    for (std::size_t t = 0; t < nt; ++t) {
        const double c = rng.uniform(0.0, u.R);
        tents.push_back({c, rng.uniform(0.05 * u.R, 0.8 * u.R), rng.uniform(0.1, 2.0)});
    }
    auto cont = [&](double rho) {
        double v = 0.0;
        for (const auto& t : tents) v += t(rho);
        return v;
    };
    const double h = u.R / static_cast<double>(grid);
    u.profile.resize(grid + 1);
    for (std::size_t i = 0; i <= grid; ++i)
        u.profile[i] = cont(std::min(h * static_cast<double>(i), u.R));
    u.atoms = indicator_atoms(rng, 0.0, u.R, 5);
    return u;
}

Polygon generate_convex_polygon(std::uint64_t seed, std::uint64_t index) {
    Rng rng(seed, index ^ 0x706F6C79ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::size_t npts = 5 + rng.uniform_int(12);
        std::vector<std::array<double, 2>> pts(npts);
        for (auto& p : pts) p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

        // Andrew monotone chain convex hull
        std::sort(pts.begin(), pts.end());
        auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                        const std::array<double, 2>& b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        };
        std::vector<std::array<double, 2>> hull(2 * npts);
        std::size_t k = 0;
        for (const auto& p : pts) {
            while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
            hull[k++] = p;
        }
        const std::size_t lower = k + 1;
        for (std::size_t i = npts; i-- > 0;) {
            while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
            hull[k++] = pts[i];
        }
        hull.resize(k - 1);
        if (hull.size() < 3) continue;

        Polygon poly{hull};
        const auto metrics = polygon_metrics(poly);
        if (metrics.area < 1e-3) continue;
        const double scale = 1.0 / std::sqrt(metrics.area);
        for (auto& v : poly.vertices) {
            v[0] *= scale;
            v[1] *= scale;
        }
        validate_polygon(poly);
        return poly;
    }
    // overwhelmingly unlikely; a fixed triangle with area 1 as last resort
    return Polygon{{{0.0, 0.0}, {2.0, 0.0}, {0.0, 1.0}}};
}

std::vector<GridFunction2D> generate_torsion_candidates(const GridFunction2D& base,
                                                        std::uint64_t seed,
                                                        std::size_t count,
                                                        bool dirichlet) {
    GridFunction2D torsion = base;
    solve_torsion_poisson(torsion);
    double tmax = 0.0;
    for (double v : torsion.values) tmax = std::max(tmax, v);

    std::vector<GridFunction2D> out;
    out.reserve(count);
    auto masked = [&](auto&& f) {
        GridFunction2D g = base;
        for (std::size_t j = 0; j < g.ny; ++j)
            for (std::size_t i = 0; i < g.nx; ++i) {
                const std::size_t k = g.idx(i, j);
                g.values[k] = g.mask[k]
                                  ? f(g.x0 + g.h * static_cast<double>(i),
                                      g.y0 + g.h * static_cast<double>(j), torsion.values[k])
                                  : 0.0;
            }
        out.push_back(std::move(g));
    };

    masked([](double, double, double t) { return t; });
    if (!dirichlet) masked([](double, double, double) { return 1.0; });

    Rng rng(seed, dirichlet ? 0xF00DULL : 0x600DULL);
    while (out.size() < count) {
        switch (rng.uniform_int(4)) {
            case 0: {  // scaled torsion solution
                const double a = rng.uniform(0.25, 2.0);
                masked([a](double, double, double t) { return a * t; });
                break;
            }
            case 1: {  // truncation
                const double c = rng.uniform(0.1, 0.9) * tmax;
                masked([c](double, double, double t) { return std::max(t - c, 0.0); });
                break;
            }
            case 2: {  // bump field modulation
                const double kx = rng.uniform(0.5, 4.0), ky = rng.uniform(0.5, 4.0);
                const double px = rng.uniform(0.0, 6.28), py = rng.uniform(0.0, 6.28);
                const double a = rng.uniform(0.0, 0.5);
                masked([=](double x, double y, double t) {
                    return t * (1.0 + a * std::sin(kx * x + px) * std::sin(ky * y + py));
                });
                break;
            }
            default: {  // gaussian bumps (plus a lift for the H^1 family)
                const double cx = rng.uniform(base.x0, base.x0 + base.h * (base.nx - 1));
                const double cy = rng.uniform(base.y0, base.y0 + base.h * (base.ny - 1));
                const double s = rng.uniform(0.05, 0.4);
                const double lift = dirichlet ? 0.0 : rng.uniform(0.0, 0.5) * tmax;
                masked([=](double x, double y, double t) {
                    const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
                    return t + tmax * std::exp(-d2 / (2.0 * s * s)) * (dirichlet ? 0.2 : 0.5) +
                           lift;
                });
                break;
            }
        }
    }
    out.resize(count);
    return out;
}

}  // namespace bvsym
