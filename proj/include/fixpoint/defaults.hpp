#ifndef FIXPOINT_DEFAULTS_HPP
#define FIXPOINT_DEFAULTS_HPP

#include <cstddef>

namespace fixpoint {

/// Central numeric defaults. Reports echo these so runs stay reproducible.
namespace defaults {

inline constexpr double tolerance = 1e-10;
inline constexpr int max_iterations = 1000;
inline constexpr int cauchy_window = 2;

/// Cap on the auto-built epsilon grid (distinct sampled distances).
inline constexpr std::size_t epsilon_grid_cap = 64;

/// Relative tolerance used to cluster floating-point distance duplicates
/// when building the epsilon grid.
inline constexpr double distance_dedup_rel_tol = 1e-12;

/// Boundary slack for membership in closed cyclic sets.
inline constexpr double boundary_tolerance = 1e-12;

/// Relative slack for residual monotonicity of floating-point maps.
inline constexpr double monotone_rel_slack = 1e-14;

/// Two pair spaces alpha values are compared against this sharp threshold;
/// the comparison is exact by design.
inline constexpr double admissible_threshold = 1.0;

/// Grid nodes for the boundary value solver (count, must be odd: m+1 with m even).
inline constexpr std::size_t bvp_nodes = 201;

/// Subintervals for free-standing kernel row quadrature.
inline constexpr int quad_subintervals = 200;

/// Diagonal flag in coupled solves: |x*-y*| below this multiple of the
/// iteration tolerance counts as a diagonal fixed point.
inline constexpr double diagonal_tol_factor = 10.0;

/// Caps for metric axiom validation on large samples.
inline constexpr std::size_t metric_exhaustive_limit = 48;
inline constexpr std::size_t metric_triple_samples = 200000;

} // namespace defaults
} // namespace fixpoint

#endif // FIXPOINT_DEFAULTS_HPP
