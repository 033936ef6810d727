#ifndef BVSYM_BV_FUNCTION_HPP
#define BVSYM_BV_FUNCTION_HPP

#include <cstddef>
#include <vector>

#include "bvsym/rearrange.hpp"

namespace bvsym {

/// A jump of signed height h at location x.
struct Atom {
    double x = 0.0;
    double h = 0.0;
};

/// Non-negative BV function on (a, b), extended by zero outside:
/// u(x) = int_a^x ac_density + sum of atom heights at locations <= x.
/// The density is cellwise constant on a uniform grid; atoms live
/// strictly inside (a, b).  The implicit boundary jump -u(b^-) at b
/// belongs to the singular part.
struct BVFunction1D {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> ac_density;
    std::vector<Atom> atoms;
};

/// Radial BV function u(x) = p(|x|) on the centered ball of radius R
/// in dimension n >= 2.  `profile` holds node values of the continuous
/// piecewise-linear part on the uniform radial grid over [0, R]; atoms
/// are radial jumps at interior radii.  u(R^-) jumps to zero across the
/// boundary sphere.
struct RadialBVFunction {
    int n = 2;
    double R = 1.0;
    std::vector<double> profile;
    std::vector<Atom> atoms;
};

struct TVSplit {
    double ac = 0.0;
    double singular = 0.0;
    double total = 0.0;
};

/// Exact piecewise-linear-with-jumps model shared by the 1-D and radial
/// carriers.  All level-set quantities (distribution function, decreasing
/// rearrangement, perimeters, coarea integrals, truncation variations)
/// are evaluated by closed-form piecewise arithmetic on this structure.
class PiecewiseProfile {
public:
    struct Piece {
        double x0, x1;  // x0 < x1
        double v0, v1;  // continuous linear values
    };
    struct Jump {
        double x;
        double vm, vp;  // left and right limits (zero outside the domain)
    };

    static PiecewiseProfile from(const BVFunction1D& u);
    static PiecewiseProfile from(const RadialBVFunction& u);

    bool radial() const { return radial_; }
    int dim() const { return n_; }
    double domain_measure() const { return domain_measure_; }
    double max_value() const { return levels_.back(); }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<Jump>& jumps() const { return jumps_; }

    /// |{u > t}| (strict superlevel).
    double mu(double t) const;
    /// |{u >= t}| = left limit of mu at t.
    double mu_closed(double t) const;

    /// Exact decreasing rearrangement u*(s).
    double u_star(double s) const;

    TVSplit tv_split() const;

    /// Per({u > t}, R^n): 2 x interval count in 1-D, sum of sphere areas
    /// at crossing radii in the radial case.
    double superlevel_perimeter(double t) const;

    /// int_0^inf Per({u > t}) dt by exact integration over the level
    /// intervals where the crossing structure is constant.
    double coarea_integral() const;

    /// G1(theta) = int_{u > theta} |grad^a u| dx.
    double g1_at(double theta) const;
    /// G2(theta): singular variation of (u - theta)_+.
    double g2_at(double theta) const;

    /// H(tau) = int_tau^inf n w_n^{1/n} mu(xi)^{1 - 1/n} d xi, with the 1-D
    /// convention mu^0 = 1 on {mu > 0}.
    double envelope_H(double tau) const;

    /// int u dx, exact.
    double integral() const;

    /// The decrease of u* split into its continuous part and its jump part
    /// (jumps of u* are the gaps of the value distribution).
    struct StarDecomposition {
        double continuous = 0.0;
        double jump = 0.0;
    };
    StarDecomposition star_decomposition() const;

    /// One value-distribution gap: mu stays at `measure` while the level
    /// runs over an interval of height `height`, so u* jumps there.
    struct StarGap {
        double measure = 0.0;
        double height = 0.0;
    };
    std::vector<StarGap> star_gaps() const;

    /// |grad^a u| as measured cells covering the whole domain (zero-slope
    /// pieces included), for the symmetrization formula.
    std::vector<MeasuredSample> gradient_cells() const;

    /// Verification grid on [0, |Omega|]: `uniform` equispaced points
    /// merged with the images mu(l), mu(l^-) of every critical level.
    std::vector<double> s_grid(std::size_t uniform) const;

    double value_right(double x) const;
    double value_left(double x) const;

private:
    PiecewiseProfile() = default;
    void finalize();
    double meas(double xlo, double xhi) const;
    double bweight(double x) const;
    // Measure of {piece value > t} within one piece; `grad` weights the
    // result by |slope| instead.
    double piece_above(const Piece& p, double t, bool strict, bool grad) const;

    bool radial_ = false;
    int n_ = 1;
    double om_ = 2.0;  // unit ball measure for n_
    double domain_measure_ = 0.0;
    std::vector<Piece> pieces_;
    std::vector<Jump> jumps_;
    std::vector<double> levels_;    // sorted critical levels, levels_[0] = 0
    std::vector<double> mu_plus_;   // mu(levels_[j])
    std::vector<double> mu_minus_;  // mu(levels_[j]^-)
    std::vector<double> H_cum_;     // envelope_H at levels_[j]
};

}  // namespace bvsym

#endif
