#ifndef BVSYM_STEP_FUNCTION_HPP
#define BVSYM_STEP_FUNCTION_HPP

#include <cstddef>
#include <vector>

namespace bvsym {

enum class Monotone { Decreasing, Increasing, None };

/// Right-continuous step function on [0, s_k].  Value i lives on
/// [s_i, s_{i+1}).  A decreasing step function is 0 beyond its last
/// breakpoint (rearrangements vanish past the total measure); the
/// other tags stay at their last value.
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                 Monotone tag);

    double operator()(double s) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    Monotone tag() const { return tag_; }

    /// Total measure carried: the last breakpoint.
    double total_measure() const { return breakpoints_.back(); }

    double max_value() const;

    /// Exact integral of value^p over [0, s_k].
    double integral_pow(double p) const;
    double integral() const { return integral_pow(1.0); }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    Monotone tag_;
};

}  // namespace bvsym

#endif
