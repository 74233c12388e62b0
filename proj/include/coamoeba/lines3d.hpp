#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "coamoeba/coamoeba.hpp"
#include "coamoeba/laurent.hpp"

namespace coamoeba {

// A point of P^1: a finite complex number or the point at infinity.
struct RootP1 {
  bool infinite = false;
  Complex value{0.0, 0.0};

  static RootP1 inf() { return RootP1{true, {0.0, 0.0}}; }
  static RootP1 at(Complex z) { return RootP1{false, z}; }
};

// A line in P^3 through no coordinate plane, held in the normal form with
// root 0 at infinity and parametrization x -> (x - z1, x - z2, x - z3).
// phase_shift records the per-coordinate rotation between the coamoeba of
// the original input and that of the normal form (actual = normal + shift),
// in the U^3 chart that drops the 0th homogeneous angle.
struct LineInP3 {
  std::array<RootP1, 4> roots;  // roots[0] is always infinite
  std::array<double, 3> phase_shift{0.0, 0.0, 0.0};
};

enum class LineClass { two_distinct_roots, three_distinct_roots, real_line, generic };

const char* to_string(LineClass c);

// Rows (a_i, b_i) define the forms l_i = a_i s + b_i t.
LineInP3 line_from_linear_forms(const std::array<std::array<Complex, 2>, 4>& forms);

LineInP3 line_from_roots(const std::array<RootP1, 4>& roots);

std::size_t count_distinct_roots(const std::array<RootP1, 4>& roots);

LineClass classify(const LineInP3& line);

// Whether four distinct points of P^1 lie on a common circle (circles
// through infinity are real lines in C).
bool is_cocircular(const std::array<RootP1, 4>& roots);

// A coordinate line of U P^3 in the theta_0-dropped chart: the point set
// { base + theta * dir } where dir is e_i for free_index i >= 1 and
// (1,1,1) for free_index 0.  Entry free_index-1 of base is meaningless
// for free_index >= 1 and set to 0.
struct PhaseLimitLine {
  int free_index = 0;
  std::array<double, 3> fixed_angles{0.0, 0.0, 0.0};
};

std::array<PhaseLimitLine, 4> phase_limit_lines(const LineInP3& line);

// Pairs (i, j), i < j, of phase limit lines that meet in U P^3
// (congruence systems solved mod 2pi, tolerance 1e-9).
std::vector<std::pair<int, int>> lines_intersect(const std::array<PhaseLimitLine, 4>& lines);

// Distance from a torus point to a phase limit line (l-infinity geodesic).
double distance_to_limit_line(const TorusPoint& p, const PhaseLimitLine& line);

// Constant value of arg(l_0, l_1, l_2) in U P^2 on one arc (0..2) of the
// circle through three distinct roots; l_i = scale_i * (x - root_i), or
// scale_i alone at infinity.  Returned with first angle normalized to 0.
// Arc k has endpoints (root_0, root_2), (root_2, root_1), (root_1, root_0).
TorusPoint arc_image(const std::array<RootP1, 3>& roots, int arc,
                     const std::array<Complex, 3>& scales = {Complex(1.0), Complex(1.0),
                                                             Complex(1.0)});

// One of the 12 interior line segments of a generic line's coamoeba:
// points fixed + theta(u) * dir where dir is as in PhaseLimitLine and
// theta sweeps the circular interval from interval_begin to interval_end
// through interval_mid.
struct CoamoebaSegment {
  int direction_index = 0;
  std::array<double, 3> fixed_angles{0.0, 0.0, 0.0};
  double interval_begin = 0.0;
  double interval_end = 0.0;
  double interval_mid = 0.0;
  int circle_index = 0;  // which root was excluded to form the circle
  int arc_index = 0;

  double free_angle(double u) const;  // u in [0, 1]
  TorusPoint point_at(double u) const;
};

// The 12 segments of a generic (non-cocircular) line, 3 per direction.
std::vector<CoamoebaSegment> coamoeba_segments(const LineInP3& line);

enum class HalfPlane { upper, lower, both };

// arg of the parametrization over a stratified log-polar sample of C
// (shells around each root plus a global shell set around their centroid).
PointCloud sample_membrane(const LineInP3& line, std::size_t samples, HalfPlane half);

struct ContourPiece {
  std::string name;  // "real-0".."real-3", "arc-zeta1..3", "arc-large"
  PointCloud cloud;
};

// Image of the upper-half-plane contour of a real line: four real
// segments and four semicircles (radius eps at each root, 1/eps overall).
std::vector<ContourPiece> contour_image(const LineInP3& line, double epsilon,
                                        int points_per_piece);

// Numerical rank of the 3x2 real Jacobian of arg of the parametrization
// at x (central differences, step 1e-6; singular values above 1e-6*scale).
int differential_rank(const LineInP3& line, Complex x);

// Whether the point satisfies all four triangle-projection constraints of
// the quadrilateral hull (each coordinate-direction projection lies in the
// closed two-triangle coamoeba of the projected plane line).
bool quad_hull_membership(const LineInP3& line, const TorusPoint& p);

}  // namespace coamoeba
