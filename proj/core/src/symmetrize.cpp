#include "bvsym/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bvsym/bvcalc.hpp"

namespace bvsym {

namespace {

// int over [tl, tr] of the profile weight tau^{1/n - 1} / (n om^{1/n}).
double weight_cell(double tl, double tr, int n, double om) {
    const double e = 1.0 / n;
    return (std::pow(tr, e) - std::pow(tl, e)) / std::pow(om, e);
}

}  // namespace

SymmetrizedProfile::SymmetrizedProfile(std::vector<MeasuredSample> agrad_cells,
                                       double singular_mass, double volume, int n)
    : n_(n),
      ball_(schwarz_ball(volume, n)),
      b_([&] {
          if (singular_mass < 0.0)
              throw std::invalid_argument("SymmetrizedProfile: negative singular mass");
          return singular_mass / schwarz_ball(volume, n).perimeter;
      }()),
      singular_mass_(singular_mass),
      edges_(),
      grad_(),
      tail_(),
      profile_star_([&] {
          for (auto& c : agrad_cells) c.value = std::abs(c.value);
          const StepFunction inc = increasing_rearrangement(agrad_cells, volume);
          edges_ = inc.breakpoints();
          grad_ = inc.values();
          const double om = unit_ball_measure(n_);
          const std::size_t k = grad_.size();
          tail_.assign(k + 1, 0.0);
          for (std::size_t i = k; i-- > 0;)
              tail_[i] = tail_[i + 1] + grad_[i] * weight_cell(edges_[i], edges_[i + 1], n_, om);
          std::vector<double> vals(k);
          for (std::size_t i = 0; i < k; ++i) vals[i] = tail_[i] + b_;
          return StepFunction(edges_, std::move(vals), Monotone::Decreasing);
      }()) {}

double SymmetrizedProfile::eval(double s) const {
    if (s < 0.0) throw std::invalid_argument("SymmetrizedProfile::eval: negative s");
    const double V = ball_.volume;
    if (s > V) return 0.0;
    if (s == V) return b_;
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
    const double om = unit_ball_measure(n_);
    return tail_[i + 1] + grad_[i] * weight_cell(s, edges_[i + 1], n_, om) + b_;
}

double SymmetrizedProfile::l1() const {
    // Fubini: int_0^V (u-star)* = int_0^V grad_*(t) w(t) t dt + b V.
    const double om = unit_ball_measure(n_);
    const double e = (n_ + 1.0) / n_;
    double acc = b_ * ball_.volume;
    for (std::size_t i = 0; i < grad_.size(); ++i)
        acc += grad_[i] * (std::pow(edges_[i + 1], e) - std::pow(edges_[i], e)) /
               (e * n_ * std::pow(om, 1.0 / n_));
    return acc;
}

double SymmetrizedProfile::ac_variation() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < grad_.size(); ++i)
        acc += grad_[i] * (edges_[i + 1] - edges_[i]);
    return acc;
}

SymmetrizedProfile u_star_from_parts(std::span<const MeasuredSample> agrad,
                                     double singular_mass, double volume, int n) {
    return SymmetrizedProfile(std::vector<MeasuredSample>(agrad.begin(), agrad.end()),
                              singular_mass, volume, n);
}

SymmetrizedProfile u_star_of_bv(const PiecewiseProfile& u) {
    return SymmetrizedProfile(u.gradient_cells(), u.tv_split().singular, u.domain_measure(),
                              u.dim());
}

SymmetrizedProfile u_star_of_bv(const BVFunction1D& u) {
    return u_star_of_bv(PiecewiseProfile::from(u));
}

SymmetrizedProfile u_star_of_bv(const RadialBVFunction& u) {
    return u_star_of_bv(PiecewiseProfile::from(u));
}

PointwiseComparison pointwise_comparison(const PiecewiseProfile& u) {
    const auto sigma = sigma_from_g(g_functions(u));
    const int n = u.dim();
    const double om = unit_ball_measure(n);
    const double e = 1.0 / n;
    auto wcell = [&](double tl, double tr) {
        return (std::pow(tr, e) - std::pow(tl, e)) / std::pow(om, e);
    };
    const auto& g = sigma.grid;
    const std::size_t k = sigma.density.size();
    // Suffix tails of the weighted measure so each v evaluation is O(1).
    std::vector<double> tail(k + 1, 0.0), aw(k, 0.0);
    {
        std::size_t ai = sigma.atoms.size();
        for (std::size_t i = k; i-- > 0;) {
            while (ai > 0 && sigma.atoms[ai - 1].first > g[i]) {
                --ai;
                const double x = sigma.atoms[ai].first;
                aw[i] += sigma.atoms[ai].second * std::pow(x, e - 1.0) / (n * std::pow(om, e));
            }
            tail[i] = tail[i + 1] + sigma.density[i] * wcell(g[i], g[i + 1]) + aw[i];
        }
    }
    PointwiseComparison out;
    out.max_violation = -std::numeric_limits<double>::infinity();
    auto probe = [&](double s, double v) {
        const double d = u.u_star(s) - v;
        if (d > out.max_violation) {
            out.max_violation = d;
            out.s_at_max = s;
        }
    };
    for (std::size_t i = 0; i < k; ++i) {
        probe(g[i], tail[i]);
        const double mid = 0.5 * (g[i] + g[i + 1]);
        probe(mid, tail[i + 1] + sigma.density[i] * wcell(mid, g[i + 1]) + aw[i]);
    }
    probe(g[k], tail[k]);
    return out;
}

PointwiseComparison pointwise_comparison(const BVFunction1D& u) {
    return pointwise_comparison(PiecewiseProfile::from(u));
}

PointwiseComparison pointwise_comparison(const RadialBVFunction& u) {
    return pointwise_comparison(PiecewiseProfile::from(u));
}

L1Comparison l1_comparison(const PiecewiseProfile& u, double tol) {
    L1Comparison out;
    out.norm_u = u.integral();
    out.norm_ustar = u_star_of_bv(u).l1();
    out.holds = out.norm_u <= out.norm_ustar + tol * std::max(1.0, out.norm_ustar);
    return out;
}

L1Comparison l1_comparison(const BVFunction1D& u, double tol) {
    return l1_comparison(PiecewiseProfile::from(u), tol);
}

L1Comparison l1_comparison(const RadialBVFunction& u, double tol) {
    return l1_comparison(PiecewiseProfile::from(u), tol);
}

VariationPreservation variation_preservation(const PiecewiseProfile& u,
                                             const SymmetrizedProfile& p) {
    const TVSplit tv = u.tv_split();
    return {tv.ac, p.ac_variation(), tv.singular, p.boundary_value() * p.ball().perimeter};
}

VariationPreservation variation_preservation(const BVFunction1D& u,
                                             const SymmetrizedProfile& p) {
    return variation_preservation(PiecewiseProfile::from(u), p);
}

VariationPreservation variation_preservation(const RadialBVFunction& u,
                                             const SymmetrizedProfile& p) {
    return variation_preservation(PiecewiseProfile::from(u), p);
}

}  // namespace bvsym
