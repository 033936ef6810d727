#ifndef BVSYM_REARRANGE_HPP
#define BVSYM_REARRANGE_HPP

#include <span>

#include "bvsym/step_function.hpp"

namespace bvsym {

/// One measurable cell: a value carried by a positive measure.
struct MeasuredSample {
    double value = 0.0;
    double measure = 0.0;
};

/// mu(t) = |{ |u| > t }| over the sampled cells (strict superlevel).
double distribution_function(std::span<const MeasuredSample> samples, double t);

/// u*(s) = inf{ t > 0 : mu(t) <= s }, equimeasurable with the input.
StepFunction decreasing_rearrangement(std::span<const MeasuredSample> samples);

/// u_*(s) = u*(|Omega| - s) on [0, total_measure].
StepFunction increasing_rearrangement(std::span<const MeasuredSample> samples,
                                      double total_measure);

/// u_sharp(x) = f(w_n |x|^n) for a monotone profile f.  `sense` must match
/// the profile's monotonicity tag.
double schwarz_evaluate(const StepFunction& profile, int n, double radius,
                        Monotone sense);

/// L^p norm of a non-negative step function; p = infinity gives the sup.
double lp_norm(const StepFunction& f, double p);

struct HardyLittlewoodCheck {
    double lhs = 0.0;  ///< integral of u v over the common grid
    double rhs = 0.0;  ///< integral of u* v*
};

/// Both sides of the Hardy-Littlewood inequality; requires a common cell
/// grid (same cell count and cellwise measures).
HardyLittlewoodCheck hardy_littlewood_check(std::span<const MeasuredSample> u,
                                            std::span<const MeasuredSample> v);

}  // namespace bvsym

#endif
