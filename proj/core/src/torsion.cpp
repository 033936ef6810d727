#include "bvsym/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bvsym {

namespace {

bool point_inside(const Polygon& p, double x, double y) {
    // ray casting
    bool in = false;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double xi = p.vertices[i][0], yi = p.vertices[i][1];
        const double xj = p.vertices[j][0], yj = p.vertices[j][1];
        if ((yi > y) != (yj > y)) {
            const double xc = xj + (y - yj) * (xi - xj) / (yi - yj);
            if (x < xc) in = !in;
        }
    }
    return in;
}

struct RadialQuadrature {
    double energy = 0.0;    // 1/2 int |psi'|^2 weighted
    double integral = 0.0;  // int psi weighted
    double max_slope = 0.0;
    std::vector<double> slopes;
    std::vector<double> shell;  // cell volumes
};

RadialQuadrature radial_quadrature(int n, double R, std::span<const double> psi) {
    if (n < 1 || !(R > 0.0) || psi.size() < 2)
        throw std::invalid_argument("radial quadrature: bad arguments");
    const double om = std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    const std::size_t M = psi.size() - 1;
    const double h = R / static_cast<double>(M);
    RadialQuadrature q;
    q.slopes.resize(M);
    q.shell.resize(M);
    for (std::size_t i = 0; i < M; ++i) {
        const double rl = h * static_cast<double>(i);
        const double rr = (i + 1 == M) ? R : h * static_cast<double>(i + 1);
        const double m = (psi[i + 1] - psi[i]) / (rr - rl);
        const double vol = om * (std::pow(rr, n) - std::pow(rl, n));
        q.slopes[i] = m;
        q.shell[i] = vol;
        q.energy += 0.5 * m * m * vol;
        q.max_slope = std::max(q.max_slope, std::abs(m));
        // int of the linear interpolant with weight n om rho^{n-1}
        const double c = psi[i] - m * rl;
        q.integral += n * om * (c * (std::pow(rr, n) - std::pow(rl, n)) / n +
                                m * (std::pow(rr, n + 1) - std::pow(rl, n + 1)) / (n + 1));
    }
    return q;
}

}  // namespace

double RadialCandidate::dpsi(double rho) const {
    if (rho <= r || rho > R) return 0.0;
    return -(std::pow(rho, n) - std::pow(r, n)) / (n * std::pow(rho, n - 1));
}

double RadialCandidate::psi(double rho) const {
    if (rho >= R) return 0.0;
    const double rc = std::max(rho, r);
    double val = (R * R - rc * rc) / (2.0 * n);
    if (r > 0.0) {
        const double q = (n == 2) ? std::log(R / rc)
                                  : (std::pow(R, 2 - n) - std::pow(rc, 2 - n)) / (2.0 - n);
        val -= std::pow(r, n) / n * q;
    }
    return val;
}

double evaluate_f_lambda(const RadialCandidate& cand, double lambda, std::size_t nodes) {
    if (lambda < 0.0) throw std::invalid_argument("evaluate_f_lambda: lambda >= 0 required");
    std::vector<double> psi(nodes + 1);
    const double h = cand.R / static_cast<double>(nodes);
    for (std::size_t i = 0; i <= nodes; ++i)
        psi[i] = cand.psi(std::min(h * static_cast<double>(i), cand.R));
    const auto q = radial_quadrature(cand.n, cand.R, psi);
    const double om = std::pow(std::numbers::pi, cand.n / 2.0) / std::tgamma(cand.n / 2.0 + 1.0);
    const double active = om * (std::pow(cand.R, cand.n) - std::pow(cand.r, cand.n));
    return q.energy - q.integral + lambda * active;
}

double evaluate_f_lambda_radial(int n, double R, std::span<const double> psi, double lambda) {
    const auto q = radial_quadrature(n, R, psi);
    const double eps = 1e-10 * (q.max_slope + 1.0);
    double active = 0.0;
    for (std::size_t i = 0; i < q.slopes.size(); ++i)
        if (std::abs(q.slopes[i]) > eps) active += q.shell[i];
    return q.energy - q.integral + lambda * active;
}

BallFMin minimize_f_ball(double R, int n, double lambda, std::size_t nodes) {
    if (!(R > 0.0)) throw std::invalid_argument("minimize_f_ball: R > 0 required");
    auto f = [&](double r) {
        return evaluate_f_lambda(RadialCandidate{n, R, r}, lambda, nodes);
    };
    const std::size_t coarse = 1000;
    double best_r = R, best_f = 0.0;  // r = R is the zero candidate
    for (std::size_t i = 0; i <= coarse; ++i) {
        const double r = R * static_cast<double>(i) / coarse;
        const double v = f(r);
        if (v < best_f) {
            best_f = v;
            best_r = r;
        }
    }
    double a = std::max(0.0, best_r - R / coarse);
    double b = std::min(R, best_r + R / coarse);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60 && b - a > 1e-12 * R; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    const double rm = 0.5 * (a + b);
    const double fm = f(rm);
    if (fm < best_f) {
        best_f = fm;
        best_r = rm;
    }
    return {best_r, -best_f};
}

GridFunction2D make_grid(const Polygon& p, std::size_t resolution) {
    validate_polygon(p);
    if (resolution < 16) throw std::invalid_argument("make_grid: resolution too small");
    double xmin = p.vertices[0][0], xmax = xmin, ymin = p.vertices[0][1], ymax = ymin;
    for (const auto& v : p.vertices) {
        xmin = std::min(xmin, v[0]);
        xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]);
        ymax = std::max(ymax, v[1]);
    }
    GridFunction2D g;
    g.domain = p;
    g.h = std::max(xmax - xmin, ymax - ymin) / static_cast<double>(resolution - 5);
    g.x0 = xmin - 2.0 * g.h;
    g.y0 = ymin - 2.0 * g.h;
    g.nx = resolution;
    g.ny = resolution;
    g.mask.assign(g.nx * g.ny, 0);
    g.values.assign(g.nx * g.ny, 0.0);
    for (std::size_t j = 0; j < g.ny; ++j)
        for (std::size_t i = 0; i < g.nx; ++i) {
            const double x = g.x0 + g.h * static_cast<double>(i);
            const double y = g.y0 + g.h * static_cast<double>(j);
            if (point_inside(p, x, y)) g.mask[g.idx(i, j)] = 1;
        }
    return g;
}

void solve_torsion_poisson(GridFunction2D& g, double tol) {
    const std::size_t N = g.nx * g.ny;
    std::vector<double> r(N, 0.0), d(N, 0.0), q(N, 0.0);
    std::vector<double>& x = g.values;
    std::fill(x.begin(), x.end(), 0.0);
    const double ih2 = 1.0 / (g.h * g.h);

    auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (std::size_t j = 0; j < g.ny; ++j)
            for (std::size_t i = 0; i < g.nx; ++i) {
                const std::size_t k = g.idx(i, j);
                if (!g.mask[k]) {
                    out[k] = 0.0;
                    continue;
                }
                auto at = [&](std::size_t ii, std::size_t jj) {
                    const std::size_t kk = g.idx(ii, jj);
                    return g.mask[kk] ? v[kk] : 0.0;
                };
                out[k] = ih2 * (4.0 * v[k] - (i ? at(i - 1, j) : 0.0) -
                                (i + 1 < g.nx ? at(i + 1, j) : 0.0) -
                                (j ? at(i, j - 1) : 0.0) - (j + 1 < g.ny ? at(i, j + 1) : 0.0));
            }
    };

    double rr = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        r[k] = g.mask[k] ? 1.0 : 0.0;  // b - A x0 with x0 = 0
        d[k] = r[k];
        rr += r[k] * r[k];
    }
    const double rr0 = rr;
    const std::size_t max_iter = 20 * (g.nx + g.ny);
    for (std::size_t it = 0; it < max_iter && rr > tol * tol * rr0; ++it) {
        apply(d, q);
        double dq = 0.0;
        for (std::size_t k = 0; k < N; ++k) dq += d[k] * q[k];
        const double alpha = rr / dq;
        double rr_new = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
            x[k] += alpha * d[k];
            r[k] -= alpha * q[k];
            rr_new += r[k] * r[k];
        }
        const double beta = rr_new / rr;
        for (std::size_t k = 0; k < N; ++k) d[k] = r[k] + beta * d[k];
        rr = rr_new;
    }
    for (std::size_t k = 0; k < N; ++k)
        if (!g.mask[k]) x[k] = 0.0;
}

double evaluate_f_lambda(const GridFunction2D& g, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("evaluate_f_lambda: lambda >= 0 required");
    auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double {
        if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(g.nx) ||
            j >= static_cast<std::ptrdiff_t>(g.ny))
            return 0.0;
        return g.values[g.idx(static_cast<std::size_t>(i), static_cast<std::size_t>(j))];
    };
    const double h2 = g.h * g.h;
    std::vector<double> gmag(g.nx * g.ny, 0.0);
    double energy = 0.0, integral = 0.0, gmax = 0.0;
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(g.ny); ++j)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(g.nx); ++i) {
            const double gx = (at(i + 1, j) - at(i - 1, j)) / (2.0 * g.h);
            const double gy = (at(i, j + 1) - at(i, j - 1)) / (2.0 * g.h);
            const double m2 = gx * gx + gy * gy;
            energy += 0.5 * m2 * h2;
            integral += at(i, j) * h2;
            const double m = std::sqrt(m2);
            gmag[g.idx(static_cast<std::size_t>(i), static_cast<std::size_t>(j))] = m;
            gmax = std::max(gmax, m);
        }
    const double eps = 1e-10 * (gmax + 1.0);
    double active = 0.0;
    for (double m : gmag)
        if (m > eps) active += h2;
    return energy - integral + lambda * active;
}

namespace {

// Value at an arbitrary point: nearest masked node within a small search
// window (candidates extend continuously to the boundary).
double nearest_inside_value(const GridFunction2D& g, double x, double y) {
    const std::ptrdiff_t ic = static_cast<std::ptrdiff_t>(std::lround((x - g.x0) / g.h));
    const std::ptrdiff_t jc = static_cast<std::ptrdiff_t>(std::lround((y - g.y0) / g.h));
    for (std::ptrdiff_t rad = 0; rad <= 6; ++rad) {
        double best = 0.0, best_d = std::numeric_limits<double>::infinity();
        for (std::ptrdiff_t dj = -rad; dj <= rad; ++dj)
            for (std::ptrdiff_t di = -rad; di <= rad; ++di) {
                const std::ptrdiff_t i = ic + di, j = jc + dj;
                if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(g.nx) ||
                    j >= static_cast<std::ptrdiff_t>(g.ny))
                    continue;
                const std::size_t k = g.idx(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (!g.mask[k]) continue;
                const double dx = g.x0 + g.h * static_cast<double>(i) - x;
                const double dy = g.y0 + g.h * static_cast<double>(j) - y;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best_d) {
                    best_d = d2;
                    best = g.values[k];
                }
            }
        if (best_d < std::numeric_limits<double>::infinity()) return best;
    }
    return 0.0;
}

double boundary_trace(const GridFunction2D& g) {
    double acc = 0.0;
    const std::size_t n = g.domain.vertices.size();
    for (std::size_t e = 0; e < n; ++e) {
        const auto& a = g.domain.vertices[e];
        const auto& b = g.domain.vertices[(e + 1) % n];
        const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
        const std::size_t segs = std::max<std::size_t>(2, static_cast<std::size_t>(len / g.h) + 1);
        for (std::size_t k = 0; k <= segs; ++k) {
            const double t = static_cast<double>(k) / segs;
            const double w = (k == 0 || k == segs) ? 0.5 : 1.0;
            const double x = a[0] + t * (b[0] - a[0]);
            const double y = a[1] + t * (b[1] - a[1]);
            acc += w * std::abs(nearest_inside_value(g, x, y)) * (len / segs);
        }
    }
    return acc;
}

}  // namespace

namespace {

struct GParts {
    double energy = 0.0;  ///< int |grad psi|^2 over interior links
    double mass = 0.0;    ///< int |psi|
    double trace = 0.0;   ///< int_bdry |psi|
    double vmin = 0.0;    ///< smallest masked node value
};

GParts g_parts(const GridFunction2D& g) {
    GParts p;
    p.vmin = std::numeric_limits<double>::infinity();
    const double h2 = g.h * g.h;
    for (std::size_t j = 0; j < g.ny; ++j)
        for (std::size_t i = 0; i < g.nx; ++i) {
            const std::size_t k = g.idx(i, j);
            if (!g.mask[k]) continue;
            p.mass += std::abs(g.values[k]) * h2;
            p.vmin = std::min(p.vmin, g.values[k]);
            if (i + 1 < g.nx && g.mask[g.idx(i + 1, j)]) {
                const double d = g.values[g.idx(i + 1, j)] - g.values[k];
                p.energy += d * d;
            }
            if (j + 1 < g.ny && g.mask[g.idx(i, j + 1)]) {
                const double d = g.values[g.idx(i, j + 1)] - g.values[k];
                p.energy += d * d;
            }
        }
    p.trace = boundary_trace(g);
    return p;
}

}  // namespace

double evaluate_g(const GridFunction2D& g, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("evaluate_g: m > 0 required");
    const GParts p = g_parts(g);
    if (!(p.mass > 0.0)) throw std::invalid_argument("evaluate_g: int |psi| must be positive");
    return (p.energy + p.trace * p.trace / m) / (p.mass * p.mass);
}

double evaluate_g_radial(int n, double R, std::span<const double> psi, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("evaluate_g_radial: m > 0 required");
    const auto q = radial_quadrature(n, R, psi);
    const double om = std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    const double tr = std::abs(psi.back()) * n * om * std::pow(R, n - 1);
    // q.integral integrates psi itself; profiles here are non-negative
    if (!(q.integral > 0.0))
        throw std::invalid_argument("evaluate_g_radial: int |psi| must be positive");
    return (2.0 * q.energy + tr * tr / m) / (q.integral * q.integral);
}

double minimize_g_ball(double R, int n, double m) {
    if (!(R > 0.0) || !(m > 0.0) || n < 1)
        throw std::invalid_argument("minimize_g_ball: bad arguments");
    const double om = std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    const double c = m * std::pow(R, 2 - n) / (n * n * om);
    // T_G = int u over the ball for the Euler-Lagrange solution
    return om * std::pow(R, n + 2) / (n * (n + 2.0)) + c * om * std::pow(R, n);
}

double minimize_g_ball_fd(double R, int n, double m, std::size_t nodes) {
    // Quotient min over radial FE profiles: psi = A^{-1} b, T_G = b^T psi,
    // where A = stiffness + boundary term and b the radial mass vector.
    const double om = std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    const std::size_t M = nodes;
    const double h = R / static_cast<double>(M);
    std::vector<double> diag(M + 1, 0.0), off(M, 0.0), b(M + 1, 0.0);
    for (std::size_t i = 0; i < M; ++i) {
        const double rl = h * static_cast<double>(i);
        const double rr = (i + 1 == M) ? R : h * static_cast<double>(i + 1);
        const double vol = om * (std::pow(rr, n) - std::pow(rl, n));
        const double k = vol / ((rr - rl) * (rr - rl));
        diag[i] += k;
        diag[i + 1] += k;
        off[i] -= k;
        // exact hat-function loads against the weight n om rho^{n-1}
        const double p_n = (std::pow(rr, n + 1) - std::pow(rl, n + 1)) / (n + 1.0);
        const double p_nm1 = (std::pow(rr, n) - std::pow(rl, n)) / n;
        b[i] += n * om * (rr * p_nm1 - p_n) / (rr - rl);
        b[i + 1] += n * om * (p_n - rl * p_nm1) / (rr - rl);
    }
    const double per = n * om * std::pow(R, n - 1);
    diag[M] += per * per / m;

    // Thomas solve of the tridiagonal system
    std::vector<double> cp(M, 0.0), dp(M + 1, 0.0);
    cp[0] = off[0] / diag[0];
    dp[0] = b[0] / diag[0];
    for (std::size_t i = 1; i <= M; ++i) {
        const double den = diag[i] - off[i - 1] * cp[i - 1];
        if (i < M) cp[i] = off[i] / den;
        dp[i] = (b[i] - off[i - 1] * dp[i - 1]) / den;
    }
    std::vector<double> psi(M + 1);
    psi[M] = dp[M];
    for (std::size_t i = M; i-- > 0;) psi[i] = dp[i] - cp[i] * psi[i + 1];

    double t = 0.0;
    for (std::size_t i = 0; i <= M; ++i) t += b[i] * psi[i];
    return t;
}

TorsionReport saint_venant_f_suite(const Polygon& domain, double lambda,
                                   std::span<const GridFunction2D> candidates) {
    const auto metrics = polygon_metrics(domain);
    const auto ball = schwarz_ball(metrics.area, 2);
    double bound = 0.0;
    for (const auto& c : candidates) bound = std::max(bound, -evaluate_f_lambda(c, lambda));
    const auto ball_min = minimize_f_ball(ball.radius, 2, lambda);
    TorsionReport rep;
    rep.functional = 'F';
    rep.param = lambda;
    rep.domain = "polygon";
    rep.bound = bound;
    rep.ball_value = ball_min.t_f;
    rep.margin = ball_min.t_f - bound;
    rep.r_opt = ball_min.r_opt;
    return rep;
}

TorsionReport saint_venant_g_suite(const Polygon& domain, double m,
                                   std::span<const GridFunction2D> candidates) {
    const auto metrics = polygon_metrics(domain);
    const auto ball = schwarz_ball(metrics.area, 2);
    // discrete measure and trace of the constant function on the same grid,
    // for the constant-lift optimization below
    double area_disc = 0.0, per_disc = 0.0;
    if (!candidates.empty()) {
        GridFunction2D ones = candidates.front();
        std::fill(ones.values.begin(), ones.values.end(), 1.0);
        const GParts q = g_parts(ones);
        area_disc = q.mass;
        per_disc = q.trace;
    }
    double bound = 0.0;
    for (const auto& c : candidates) {
        const GParts p = g_parts(c);
        if (!(p.mass > 0.0)) continue;
        bound = std::max(bound, p.mass * p.mass / (p.energy + p.trace * p.trace / m));
        // the quotient along psi + c is rational in c with the interior
        // critical point below; only valid for non-negative psi, where mass
        // and trace shift linearly
        if (p.vmin < 0.0 || per_disc <= 0.0) continue;
        const double denom = p.mass * per_disc - area_disc * p.trace;
        if (denom <= 0.0) continue;
        const double w = area_disc * p.energy * m / denom;
        const double c_opt = (w - p.trace) / per_disc;
        if (c_opt <= 0.0) continue;
        const double tn = p.trace + c_opt * per_disc;
        const double mn = p.mass + c_opt * area_disc;
        bound = std::max(bound, mn * mn / (p.energy + tn * tn / m));
    }
    const double ball_value = minimize_g_ball(ball.radius, 2, m);
    TorsionReport rep;
    rep.functional = 'G';
    rep.param = m;
    rep.domain = "polygon";
    rep.bound = bound;
    rep.ball_value = ball_value;
    rep.margin = ball_value - bound;
    return rep;
}

}  // namespace bvsym
