#ifndef BVSYM_GENERATE_HPP
#define BVSYM_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "bvsym/bv_function.hpp"
#include "bvsym/geometry.hpp"
#include "bvsym/torsion.hpp"

namespace bvsym {

/// Random non-negative BV function on a random interval: a sum of up to
/// ten tents and up to five indicator bumps (atom pairs).
BVFunction1D generate_bv1d(std::uint64_t seed, std::uint64_t index,
                           std::size_t grid = 10000);

/// Radial analogue on a random ball in dimension n.
RadialBVFunction generate_radial(std::uint64_t seed, std::uint64_t index, int n = 2,
                                 std::size_t grid = 4096);

/// Random convex polygon (convex hull of random points), area-normalized
/// to one, counter-clockwise.
Polygon generate_convex_polygon(std::uint64_t seed, std::uint64_t index);

/// Test functions on the polygon's grid: the discrete torsion solution,
/// its scalings and truncations, bump fields, and (when `dirichlet` is
/// false) constants and lifted variants for the insulation functional.
std::vector<GridFunction2D> generate_torsion_candidates(const GridFunction2D& base,
                                                        std::uint64_t seed,
                                                        std::size_t count,
                                                        bool dirichlet);

}  // namespace bvsym

#endif
