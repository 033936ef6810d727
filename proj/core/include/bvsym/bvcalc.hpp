#ifndef BVSYM_BVCALC_HPP
#define BVSYM_BVCALC_HPP

#include <utility>
#include <vector>

#include "bvsym/bv_function.hpp"
#include "bvsym/step_function.hpp"

namespace bvsym {

/// Positive measure on [0, |Omega|]: cellwise-constant density on a grid
/// plus atoms.  Carrier for sigma = F1 dtau + sigma2.
struct StieltjesMeasure {
    std::vector<double> grid;     ///< k+1 nodes, grid[0] = 0, grid[k] = |Omega|
    std::vector<double> density;  ///< k cell values of F1
    std::vector<std::pair<double, double>> atoms;  ///< (location, mass), sorted

    /// sigma((a, b]).
    double interval_mass(double a, double b) const;
    /// sigma((0, s]).
    double cdf(double s) const { return interval_mass(0.0, s); }
    double total() const { return interval_mass(0.0, grid.back()); }
};

TVSplit total_variation_split(const BVFunction1D& u);
TVSplit total_variation_split(const RadialBVFunction& u);

double superlevel_perimeter(const BVFunction1D& u, double t);
double superlevel_perimeter(const RadialBVFunction& u, double t);

struct CoareaCheck {
    double integral = 0.0;  ///< int_0^inf Per({u > t}) dt
    double tv = 0.0;        ///< |Du|(R^n)
};
CoareaCheck coarea_identity(const BVFunction1D& u);
CoareaCheck coarea_identity(const RadialBVFunction& u);

/// f(x, s) = (u - u*(s))_+ in the same representation.
BVFunction1D truncate_above(const BVFunction1D& u, double s);
RadialBVFunction truncate_above(const RadialBVFunction& u, double s);

/// G(s) = |D(u - u*(s))_+|(R^n) and its absolutely continuous / singular
/// parts, sampled on the verification s-grid.  Step value on cell
/// [s_i, s_{i+1}) is the exact G at the right node, so cell increments
/// recover the measure dG exactly at the nodes.
struct GFuncs {
    StepFunction G;
    StepFunction G1;
    StepFunction G2;
};
GFuncs g_functions(const PiecewiseProfile& u, std::size_t grid = 8192);
GFuncs g_functions(const BVFunction1D& u, std::size_t grid = 8192);
GFuncs g_functions(const RadialBVFunction& u, std::size_t grid = 8192);

/// sigma with G(s) = sigma((0, s]): density from the increments of G1,
/// atoms from the increments of G2.
StieltjesMeasure sigma_from_g(const GFuncs& g);

/// Exact v(s) = int over (s, inf) of tau^{1/n - 1} / (n w_n^{1/n}) dsigma.
double v_eval(const StieltjesMeasure& sigma, int n, double s);

/// v sampled as a decreasing step function on the measure's grid.
StepFunction v_profile(const StieltjesMeasure& sigma, int n);

/// min over grid intervals of sigma((a, b]) - (H(u*(b)) - H(u*(a))),
/// where H is the isoperimetric envelope of u.  Non-negative up to
/// quadrature error.
double envelope_comparison(const PiecewiseProfile& u, const StieltjesMeasure& sigma);

struct PolyaSzegoCheck {
    double tv_sym = 0.0;
    double tv = 0.0;
    double singular_sym = 0.0;
    double singular = 0.0;
};
/// Builds u-sharp (the Schwarz rearrangement) as a BVFunction1D on a
/// symmetric interval and compares variations with u.
PolyaSzegoCheck polya_szego_bv_check(const BVFunction1D& u);

}  // namespace bvsym

#endif
