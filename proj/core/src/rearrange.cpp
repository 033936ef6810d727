#include "bvsym/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bvsym {

namespace {

void check_samples(std::span<const MeasuredSample> samples) {
    if (samples.empty()) throw std::invalid_argument("samples: empty");
    for (const auto& s : samples) {
        if (!(s.measure > 0.0)) throw std::invalid_argument("samples: cell_measure must be > 0");
        if (!std::isfinite(s.value)) throw std::invalid_argument("samples: value not finite");
    }
}

}  // namespace

double distribution_function(std::span<const MeasuredSample> samples, double t) {
    check_samples(samples);
    if (t < 0.0) throw std::invalid_argument("distribution_function: t must be >= 0");
    double acc = 0.0;
    for (const auto& s : samples)
        if (std::abs(s.value) > t) acc += s.measure;
    return acc;
}

StepFunction decreasing_rearrangement(std::span<const MeasuredSample> samples) {
    check_samples(samples);
    std::vector<MeasuredSample> sorted(samples.begin(), samples.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const MeasuredSample& a, const MeasuredSample& b) {
                         return std::abs(a.value) > std::abs(b.value);
                     });
    std::vector<double> bps{0.0};
    std::vector<double> vals;
    for (const auto& s : sorted) {
        const double v = std::abs(s.value);
        if (!vals.empty() && vals.back() == v) {
            bps.back() += s.measure;
        } else {
            vals.push_back(v);
            bps.push_back(bps.back() + s.measure);
        }
    }
    return StepFunction(std::move(bps), std::move(vals), Monotone::Decreasing);
}

StepFunction increasing_rearrangement(std::span<const MeasuredSample> samples,
                                      double total_measure) {
    StepFunction star = decreasing_rearrangement(samples);
    const double mass = star.total_measure();
    // telescoped cell measures can overshoot the domain measure by a few ulps
    if (total_measure < mass * (1.0 - 1e-12))
        throw std::invalid_argument("increasing_rearrangement: total_measure below sample mass");
    total_measure = std::max(total_measure, mass);

    const auto& b = star.breakpoints();
    const auto& v = star.values();
    const std::size_t k = v.size();
    std::vector<double> bps{0.0};
    std::vector<double> vals;
    if (total_measure > mass) {
        vals.push_back(0.0);
        bps.push_back(total_measure - mass);
    }
    for (std::size_t i = k; i-- > 0;) {
        vals.push_back(v[i]);
        bps.push_back(total_measure - b[i]);
    }
    return StepFunction(std::move(bps), std::move(vals), Monotone::Increasing);
}

double schwarz_evaluate(const StepFunction& profile, int n, double radius, Monotone sense) {
    if (profile.tag() != sense)
        throw std::invalid_argument("schwarz_evaluate: profile tag does not match requested sense");
    if (n < 1) throw std::invalid_argument("schwarz_evaluate: n must be >= 1");
    const double pi = 3.14159265358979323846;
    const double om = std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    return profile(om * std::pow(std::abs(radius), n));
}

double lp_norm(const StepFunction& f, double p) {
    if (std::isinf(p)) return f.max_value();
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    return std::pow(f.integral_pow(p), 1.0 / p);
}

HardyLittlewoodCheck hardy_littlewood_check(std::span<const MeasuredSample> u,
                                            std::span<const MeasuredSample> v) {
    check_samples(u);
    check_samples(v);
    if (u.size() != v.size())
        throw std::invalid_argument("hardy_littlewood_check: mismatched grids");
    HardyLittlewoodCheck out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (std::abs(u[i].measure - v[i].measure) > 1e-12 * (u[i].measure + v[i].measure))
            throw std::invalid_argument("hardy_littlewood_check: mismatched cell measures");
        out.lhs += std::abs(u[i].value * v[i].value) * u[i].measure;
    }
    const StepFunction us = decreasing_rearrangement(u);
    const StepFunction vs = decreasing_rearrangement(v);
    // Integrate u* v* over the merged breakpoint grid.
    std::vector<double> grid;
    grid.reserve(us.breakpoints().size() + vs.breakpoints().size());
    grid.insert(grid.end(), us.breakpoints().begin(), us.breakpoints().end());
    grid.insert(grid.end(), vs.breakpoints().begin(), vs.breakpoints().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double s = grid[i];
        out.rhs += us(s) * vs(s) * (grid[i + 1] - s);
    }
    return out;
}

}  // namespace bvsym
