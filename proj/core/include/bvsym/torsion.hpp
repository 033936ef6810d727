#ifndef BVSYM_TORSION_HPP
#define BVSYM_TORSION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bvsym/geometry.hpp"

namespace bvsym {

/// Radial test function for the penalized torsion functional: flat on
/// [0, r], psi'(rho) = -(rho^n - r^n) / (n rho^{n-1}) on (r, R], psi(R) = 0.
struct RadialCandidate {
    int n = 2;
    double R = 1.0;
    double r = 0.0;

    double psi(double rho) const;
    double dpsi(double rho) const;
};

/// F_lambda = 1/2 int |grad psi|^2 - int psi + lambda |{grad psi != 0}|,
/// with the exact active measure w_n (R^n - r^n).
double evaluate_f_lambda(const RadialCandidate& psi, double lambda,
                         std::size_t nodes = 10000);

/// Same functional for an arbitrary radial profile given by node values on
/// the uniform grid over [0, R]; piecewise-linear quadrature, thresholded
/// active set.
double evaluate_f_lambda_radial(int n, double R, std::span<const double> psi,
                                double lambda);

struct BallFMin {
    double r_opt = 0.0;
    double t_f = 0.0;
};
/// T_F(B_R, lambda) = -inf F_lambda over the radial candidate family;
/// coarse bracket over r then golden-section refinement.
BallFMin minimize_f_ball(double R, int n, double lambda, std::size_t nodes = 10000);

/// Node samples on a rectangular grid masked to a polygon; zero outside.
struct GridFunction2D {
    Polygon domain;
    double x0 = 0.0, y0 = 0.0;
    double h = 1.0;
    std::size_t nx = 0, ny = 0;
    std::vector<std::uint8_t> mask;  ///< 1 for nodes strictly inside
    std::vector<double> values;

    std::size_t idx(std::size_t i, std::size_t j) const { return j * nx + i; }
};

/// Grid over the polygon's bounding box (padded by two cells of zeros);
/// `resolution` nodes across the longer side.
GridFunction2D make_grid(const Polygon& p, std::size_t resolution);

/// Discrete solution of -Lap psi = 1 with psi = 0 outside the mask
/// (5-point stencil, conjugate gradients); overwrites values.
void solve_torsion_poisson(GridFunction2D& g, double tol = 1e-10);

/// Grid F_lambda: central-difference gradient, trapezoid integrals,
/// active set {|grad psi| > 1e-10 (max|grad psi| + 1)}.
double evaluate_f_lambda(const GridFunction2D& psi, double lambda);

/// Insulation quotient (int |grad psi|^2 + (1/m)(int_bdry |psi|)^2) /
/// (int |psi|)^2.  The trace integral samples along the polygon edges and
/// reads the nearest interior node value.
double evaluate_g(const GridFunction2D& psi, double m);

/// Radial-profile variant; trace = |psi(R)| n w_n R^{n-1}.
double evaluate_g_radial(int n, double R, std::span<const double> psi, double m);

/// T_G(B_R, m) from the closed-form Euler-Lagrange solution
/// u = (R^2 - rho^2)/(2n) + m R^{2-n}/(n^2 w_n).
double minimize_g_ball(double R, int n, double m);

/// Independent check: exact minimization of the discrete quotient over
/// radial finite-element profiles (tridiagonal solve).
double minimize_g_ball_fd(double R, int n, double m, std::size_t nodes = 512);

struct TorsionReport {
    char functional = 'F';
    double param = 0.0;
    std::string domain;
    double bound = 0.0;       ///< best certified lower bound from candidates
    double ball_value = 0.0;  ///< exact value on the volume-matched ball
    double margin = 0.0;      ///< ball_value - bound
    double r_opt = 0.0;
};

TorsionReport saint_venant_f_suite(const Polygon& domain, double lambda,
                                   std::span<const GridFunction2D> candidates);
TorsionReport saint_venant_g_suite(const Polygon& domain, double m,
                                   std::span<const GridFunction2D> candidates);

}  // namespace bvsym

#endif
