#ifndef BVSYM_SYMMETRIZE_HPP
#define BVSYM_SYMMETRIZE_HPP

#include <span>
#include <vector>

#include "bvsym/bv_function.hpp"
#include "bvsym/geometry.hpp"
#include "bvsym/rearrange.hpp"
#include "bvsym/step_function.hpp"

namespace bvsym {

/// The symmetrized function u-star on the volume-matched centered ball:
/// its gradient magnitude is the increasing spherical rearrangement of
/// the absolutely continuous gradient, and the total singular mass is
/// spread uniformly over the boundary sphere as a jump of height
/// boundary_value.
class SymmetrizedProfile {
public:
    SymmetrizedProfile(std::vector<MeasuredSample> agrad_cells, double singular_mass,
                       double volume, int n);

    int dim() const { return n_; }
    const BallSpec& ball() const { return ball_; }
    double boundary_value() const { return b_; }
    double singular_mass() const { return singular_mass_; }

    /// Exact decreasing rearrangement (u-star)*(s).
    double eval(double s) const;

    /// Exact integral over the ball (= integral of eval over [0, volume]).
    double l1() const;

    /// Integral of |grad u-star| over the ball: the mass of the rearranged
    /// absolutely continuous gradient.
    double ac_variation() const;

    /// Sampled carrier of (u-star)* for emission.
    const StepFunction& profile_star() const { return profile_star_; }

    /// Increasing rearrangement of |grad u| used in the construction
    /// (cell value on [edges[i], edges[i+1])).
    const std::vector<double>& grad_edges() const { return edges_; }
    const std::vector<double>& grad_values() const { return grad_; }

private:
    int n_;
    BallSpec ball_;
    double b_;
    double singular_mass_;
    std::vector<double> edges_;  ///< measure breakpoints of |grad u|_*
    std::vector<double> grad_;   ///< increasing cell values
    std::vector<double> tail_;   ///< tail_[i] = int over [edges[i], V] of w grad
    StepFunction profile_star_;
};

SymmetrizedProfile u_star_from_parts(std::span<const MeasuredSample> agrad,
                                     double singular_mass, double volume, int n);

SymmetrizedProfile u_star_of_bv(const BVFunction1D& u);
SymmetrizedProfile u_star_of_bv(const RadialBVFunction& u);
SymmetrizedProfile u_star_of_bv(const PiecewiseProfile& u);

struct PointwiseComparison {
    double max_violation = 0.0;  ///< max over s of u*(s) - v(s)
    double s_at_max = 0.0;
};
PointwiseComparison pointwise_comparison(const PiecewiseProfile& u);
PointwiseComparison pointwise_comparison(const BVFunction1D& u);
PointwiseComparison pointwise_comparison(const RadialBVFunction& u);

struct L1Comparison {
    double norm_u = 0.0;
    double norm_ustar = 0.0;
    bool holds = false;
};
L1Comparison l1_comparison(const PiecewiseProfile& u, double tol = 1e-9);
L1Comparison l1_comparison(const BVFunction1D& u, double tol = 1e-9);
L1Comparison l1_comparison(const RadialBVFunction& u, double tol = 1e-9);

struct VariationPreservation {
    double ac_u = 0.0;
    double ac_star = 0.0;
    double sing_u = 0.0;
    double sing_star = 0.0;
};
VariationPreservation variation_preservation(const PiecewiseProfile& u,
                                             const SymmetrizedProfile& p);
VariationPreservation variation_preservation(const BVFunction1D& u,
                                             const SymmetrizedProfile& p);
VariationPreservation variation_preservation(const RadialBVFunction& u,
                                             const SymmetrizedProfile& p);

}  // namespace bvsym

#endif
