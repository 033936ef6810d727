#include "bvsym/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bvsym {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                           Monotone tag)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)), tag_(tag) {
    if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size())
        throw std::invalid_argument("StepFunction: need k+1 breakpoints for k values");
    if (breakpoints_.front() != 0.0)
        throw std::invalid_argument("StepFunction: breakpoints must start at 0");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    // tolerance is relative to the value scale: entries near zero carry the
    // absolute rounding error of whatever closed-form sums produced them
    double scale = 0.0;
    for (double v : values_) scale = std::max(scale, std::abs(v));
    const double slack = 1e-13 * (scale + 1.0);
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (tag_ == Monotone::Decreasing && values_[i] > values_[i - 1] + slack)
            throw std::invalid_argument("StepFunction: declared decreasing but values increase");
        if (tag_ == Monotone::Increasing && values_[i] + slack < values_[i - 1])
            throw std::invalid_argument("StepFunction: declared increasing but values decrease");
    }
}

double StepFunction::operator()(double s) const {
    if (s < 0.0) throw std::invalid_argument("StepFunction: negative argument");
    if (s >= breakpoints_.back())
        return tag_ == Monotone::Decreasing ? 0.0 : values_.back();
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), s);
    const std::size_t cell = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return values_[cell];
}

double StepFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double StepFunction::integral_pow(double p) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        acc += std::pow(std::abs(values_[i]), p) * (breakpoints_[i + 1] - breakpoints_[i]);
    return acc;
}

}  // namespace bvsym
