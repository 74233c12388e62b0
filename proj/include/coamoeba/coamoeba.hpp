#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "coamoeba/laurent.hpp"

namespace coamoeba {

// A point of the real torus U^n with canonical angles in (-pi, pi].
struct TorusPoint {
  std::vector<double> angles;
  int rank() const { return static_cast<int>(angles.size()); }
};

struct PointCloud {
  int rank = 0;
  std::vector<TorusPoint> points;
  std::string provenance;
};

// A general line a x + b y + c = 0 in the 2-torus; all coefficients nonzero.
struct LineT2 {
  Complex a, b, c;
};

enum class Membership { interior, vertex, closure_boundary, outside };

const char* to_string(Membership m);

// Reduces an angle to the canonical representative in (-pi, pi].
double canonical_angle(double theta);

// Geodesic distance on the circle R/2piZ.
double circle_distance(double a, double b);

// l-infinity geodesic metric on U^n.
double torus_distance(const TorusPoint& p, const TorusPoint& q);

// Entrywise principal argument.
TorusPoint arg_map(const TorusElement& x);

// Entrywise log of modulus.
std::vector<double> log_map(const TorusElement& x);

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All roots (with multiplicity) of sum coefficients[k] z^k, ascending
// order of k, leading coefficient nonzero.  Aberth-Ehrlich simultaneous
// iteration with a deflate-and-polish fallback; throws SolverError if
// neither converges.
std::vector<Complex> solve_univariate(const std::vector<Complex>& coefficients);

// Residual scale used by the solver's acceptance bound
// |p(z)| <= 1e-8 * sum|c_k| * max(1,|z|)^d.
double root_residual_bound(const std::vector<Complex>& coefficients, Complex root);

struct CurveSamplingScheme {
  double r_min = 1e-3;
  double r_max = 1e3;
  int shells = 48;
  int angles = 256;
  // Angle grid offset in units of one angular step (0 = grid includes pi,
  // 0.5 = cell-centered).
  double angle_offset = 0.0;
};

struct CurveSampleStats {
  std::size_t degenerate_samples = 0;
  std::size_t solver_failures = 0;
};

// Samples the coamoeba of a plane curve f(x, y) = 0 (rank 2): for each x
// on a log-polar grid, solves for y and emits arg(x, y).  Optionally
// records the moduli of the solution points (same indexing as points).
PointCloud sample_plane_curve(const LaurentPolynomial& f, const CurveSamplingScheme& scheme,
                              CurveSampleStats* stats = nullptr,
                              std::vector<std::array<double, 2>>* moduli = nullptr);

// Exact two-triangle membership test for the coamoeba of a line in T^2.
// snap_tol is the vertex/boundary snapping tolerance; callers with lower
// precision inputs (e.g. hand-typed angles) may widen it.
Membership line2_membership(const LineT2& line, const TorusPoint& p, double snap_tol = 1e-12);

}  // namespace coamoeba
