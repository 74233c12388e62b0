#include "coamoeba/lines3d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coamoeba/util.hpp"

namespace coamoeba {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRootCoincideTol = 1e-10;
constexpr double kCocircularTol = 1e-10;
constexpr double kIntersectTol = 1e-9;

bool roots_equal(const RootP1& p, const RootP1& q) {
  if (p.infinite || q.infinite) return p.infinite && q.infinite;
  double scale = 1.0 + std::max(std::abs(p.value), std::abs(q.value));
  return std::abs(p.value - q.value) <= kRootCoincideTol * scale;
}

// Real Moebius map t -> (A t + B) / (C t + D), used to parametrize the
// circle through three points of P^1 by the real axis.
struct Moebius {
  Complex A, B, C, D;

  bool pole_at(double t) const { return std::abs(C * t + D) == 0.0; }
  Complex apply(double t) const { return (A * t + B) / (C * t + D); }
};

// T(inf) = r0, T(0) = r1, T(-1) = r2.
Moebius moebius_through(const std::array<RootP1, 3>& r) {
  if (r[0].infinite) {
    return {r[1].value - r[2].value, r[1].value, Complex(0.0), Complex(1.0)};
  }
  if (r[1].infinite) {
    return {r[0].value, r[0].value - r[2].value, Complex(1.0), Complex(0.0)};
  }
  if (r[2].infinite) {
    return {r[0].value, r[1].value, Complex(1.0), Complex(1.0)};
  }
  Complex D = (r[0].value - r[2].value) / (r[1].value - r[2].value);
  return {r[0].value, r[1].value * D, Complex(1.0), D};
}

// Arc k of the parametrizing real axis; endpoints are preimages of the
// triple entries: t = inf <-> r0, t = 0 <-> r1, t = -1 <-> r2.
struct ArcInfo {
  int lo_root, hi_root;  // triple indices at the two ends
  std::array<double, 4> mid_candidates;
};

const ArcInfo kArcs[3] = {
    {0, 2, {-2.0, -3.0, -1.5, -5.0}},
    {2, 1, {-0.5, -0.25, -0.75, -0.4}},
    {1, 0, {1.0, 2.0, 0.5, 4.0}},
};

// An interior point of the arc avoiding poles of the parametrization and
// the finite roots themselves.
Complex arc_interior_point(const Moebius& T, const std::array<RootP1, 3>& roots, int arc) {
  double scale = 1.0;
  for (const auto& r : roots)
    if (!r.infinite) scale = std::max(scale, std::abs(r.value));
  for (double t : kArcs[arc].mid_candidates) {
    if (T.pole_at(t)) continue;
    Complex x = T.apply(t);
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) continue;
    if (std::abs(x) > 1e12 * scale) continue;
    bool near_root = false;
    for (const auto& r : roots)
      if (!r.infinite && std::abs(x - r.value) <= 1e-9 * scale) near_root = true;
    if (!near_root) return x;
  }
  throw std::runtime_error("could not place an interior point on a circle arc");
}

void require_finite_tail(const LineInP3& line, const char* what) {
  for (int i = 1; i < 4; ++i)
    if (line.roots[i].infinite)
      throw std::invalid_argument(std::string(what) + " requires roots 1..3 to be finite");
}

std::array<Complex, 3> finite_roots(const LineInP3& line) {
  return {line.roots[1].value, line.roots[2].value, line.roots[3].value};
}

void require_distinct(const LineInP3& line, const char* what) {
  if (count_distinct_roots(line.roots) != 4)
    throw std::invalid_argument(std::string(what) + " requires four distinct roots");
}

}  // namespace

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::two_distinct_roots: return "two-distinct-roots";
    case LineClass::three_distinct_roots: return "three-distinct-roots";
    case LineClass::real_line: return "real-line";
    case LineClass::generic: return "generic";
  }
  return "?";
}

std::size_t count_distinct_roots(const std::array<RootP1, 4>& roots) {
  std::size_t n = 0;
  for (int i = 0; i < 4; ++i) {
    bool seen = false;
    for (int j = 0; j < i; ++j)
      if (roots_equal(roots[i], roots[j])) seen = true;
    if (!seen) ++n;
  }
  return n;
}

LineInP3 line_from_linear_forms(const std::array<std::array<Complex, 2>, 4>& forms) {
  for (const auto& row : forms)
    if (row[0] == Complex(0.0) && row[1] == Complex(0.0))
      throw std::invalid_argument("zero linear form");

  std::array<std::array<Complex, 2>, 4> rows = forms;
  // Move root 0 to infinity by the substitution x -> 1/(x - zeta_0);
  // homogeneously (s, t) -> (t, s + zeta_0 t), so (a, b) -> (a zeta_0 + b, a).
  if (rows[0][0] != Complex(0.0)) {
    Complex zeta0 = -rows[0][1] / rows[0][0];
    for (auto& row : rows) {
      Complex a = row[0], b = row[1];
      row[0] = a * zeta0 + b;
      row[1] = a;
    }
    rows[0][0] = Complex(0.0);
  }
  if (rows[0][1] == Complex(0.0))
    throw std::invalid_argument("degenerate linear form after normalization");

  LineInP3 line;
  line.roots[0] = RootP1::inf();
  double arg_b0 = std::arg(rows[0][1]);
  for (int i = 1; i < 4; ++i) {
    if (rows[i][0] == Complex(0.0)) {
      line.roots[i] = RootP1::inf();
      line.phase_shift[i - 1] = canonical_angle(std::arg(rows[i][1]) - arg_b0);
    } else {
      line.roots[i] = RootP1::at(-rows[i][1] / rows[i][0]);
      line.phase_shift[i - 1] = canonical_angle(std::arg(rows[i][0]) - arg_b0);
    }
  }
  if (count_distinct_roots(line.roots) < 2)
    throw std::invalid_argument("forms share a common zero");
  return line;
}

LineInP3 line_from_roots(const std::array<RootP1, 4>& roots) {
  std::array<std::array<Complex, 2>, 4> forms;
  for (int i = 0; i < 4; ++i) {
    if (roots[i].infinite)
      forms[i] = {Complex(0.0), Complex(1.0)};
    else
      forms[i] = {Complex(1.0), -roots[i].value};
  }
  return line_from_linear_forms(forms);
}

LineClass classify(const LineInP3& line) {
  std::size_t n = count_distinct_roots(line.roots);
  if (n <= 2) return LineClass::two_distinct_roots;
  if (n == 3) return LineClass::three_distinct_roots;
  return is_cocircular(line.roots) ? LineClass::real_line : LineClass::generic;
}

bool is_cocircular(const std::array<RootP1, 4>& roots) {
  if (count_distinct_roots(roots) != 4)
    throw std::invalid_argument("cocircularity test requires four distinct roots");
  int at_inf = -1;
  for (int i = 0; i < 4; ++i)
    if (roots[i].infinite) at_inf = i;
  const auto z = [&](int i) { return roots[i].value; };
  Complex cr;
  // Cross ratio (z0 - z2)(z1 - z3) / ((z0 - z3)(z1 - z2)); factors with an
  // infinite entry cancel.
  switch (at_inf) {
    case -1:
      cr = ((z(0) - z(2)) * (z(1) - z(3))) / ((z(0) - z(3)) * (z(1) - z(2)));
      break;
    case 0: cr = (z(1) - z(3)) / (z(1) - z(2)); break;
    case 1: cr = (z(0) - z(2)) / (z(0) - z(3)); break;
    case 2: cr = (z(1) - z(3)) / (z(0) - z(3)); break;
    default: cr = (z(0) - z(2)) / (z(1) - z(2)); break;
  }
  return std::abs(cr.imag()) <= kCocircularTol * std::max(1.0, std::abs(cr));
}

std::array<PhaseLimitLine, 4> phase_limit_lines(const LineInP3& line) {
  require_distinct(line, "phase limit lines");
  require_finite_tail(line, "phase limit lines");
  std::array<PhaseLimitLine, 4> out;
  out[0].free_index = 0;
  out[0].fixed_angles = line.phase_shift;
  auto z = finite_roots(line);
  for (int i = 1; i < 4; ++i) {
    out[i].free_index = i;
    out[i].fixed_angles = {0.0, 0.0, 0.0};
    for (int j = 1; j < 4; ++j) {
      if (j == i) continue;
      out[i].fixed_angles[j - 1] =
          canonical_angle(std::arg(z[i - 1] - z[j - 1]) + line.phase_shift[j - 1]);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> lines_intersect(const std::array<PhaseLimitLine, 4>& lines) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto& L1 = lines[i];
      const auto& L2 = lines[j];
      int f = L1.free_index, g = L2.free_index;
      bool meet = false;
      if (f == 0 && g == 0) {
        double d0 = L1.fixed_angles[0] - L2.fixed_angles[0];
        double d1 = L1.fixed_angles[1] - L2.fixed_angles[1];
        double d2 = L1.fixed_angles[2] - L2.fixed_angles[2];
        meet = circle_distance(d0, d1) <= kIntersectTol &&
               circle_distance(d0, d2) <= kIntersectTol;
      } else if (f == 0 || g == 0) {
        const auto& diag = (f == 0) ? L1 : L2;
        const auto& axis = (f == 0) ? L2 : L1;
        int a = axis.free_index;
        std::array<double, 2> sols;
        int k = 0;
        for (int s = 1; s < 4; ++s) {
          if (s == a) continue;
          sols[k++] = axis.fixed_angles[s - 1] - diag.fixed_angles[s - 1];
        }
        meet = circle_distance(sols[0], sols[1]) <= kIntersectTol;
      } else if (f != g) {
        int k = 6 - f - g;  // the remaining coordinate index
        meet = circle_distance(L1.fixed_angles[k - 1], L2.fixed_angles[k - 1]) <= kIntersectTol;
      } else {
        meet = true;
        for (int s = 1; s < 4; ++s) {
          if (s == f) continue;
          if (circle_distance(L1.fixed_angles[s - 1], L2.fixed_angles[s - 1]) > kIntersectTol)
            meet = false;
        }
      }
      if (meet) out.emplace_back(i, j);
    }
  }
  return out;
}

double distance_to_limit_line(const TorusPoint& p, const PhaseLimitLine& line) {
  if (p.rank() != 3) throw std::invalid_argument("expected a rank 3 torus point");
  if (line.free_index >= 1) {
    double d = 0.0;
    for (int j = 1; j < 4; ++j) {
      if (j == line.free_index) continue;
      d = std::max(d, circle_distance(p.angles[j - 1], line.fixed_angles[j - 1]));
    }
    return d;
  }
  auto dist_at = [&](double theta) {
    double d = 0.0;
    for (int j = 0; j < 3; ++j)
      d = std::max(d, circle_distance(p.angles[j], line.fixed_angles[j] + theta));
    return d;
  };
  const int grid = 8192;
  double best = dist_at(0.0), best_theta = 0.0;
  for (int k = 1; k < grid; ++k) {
    double theta = 2.0 * kPi * k / grid;
    double d = dist_at(theta);
    if (d < best) {
      best = d;
      best_theta = theta;
    }
  }
  double lo = best_theta - 2.0 * kPi / grid, hi = best_theta + 2.0 * kPi / grid;
  for (int iter = 0; iter < 60; ++iter) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (dist_at(m1) < dist_at(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best, dist_at(0.5 * (lo + hi)));
}

TorusPoint arc_image(const std::array<RootP1, 3>& roots, int arc,
                     const std::array<Complex, 3>& scales) {
  if (arc < 0 || arc > 2) throw std::invalid_argument("arc index must be 0, 1 or 2");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (roots_equal(roots[i], roots[j]))
        throw std::invalid_argument("arc image requires three distinct roots");
  for (const auto& s : scales)
    if (s == Complex(0.0)) throw std::invalid_argument("arc image scales must be nonzero");
  Moebius T = moebius_through(roots);
  Complex x = arc_interior_point(T, roots, arc);
  std::array<double, 3> a;
  for (int i = 0; i < 3; ++i) {
    Complex v = roots[i].infinite ? scales[i] : scales[i] * (x - roots[i].value);
    a[i] = std::arg(v);
  }
  TorusPoint p;
  p.angles = {0.0, canonical_angle(a[1] - a[0]), canonical_angle(a[2] - a[0])};
  return p;
}

double CoamoebaSegment::free_angle(double u) const {
  double span = interval_end - interval_begin;
  span -= 2.0 * kPi * std::floor(span / (2.0 * kPi));  // forward sweep in [0, 2pi)
  double to_mid = interval_mid - interval_begin;
  to_mid -= 2.0 * kPi * std::floor(to_mid / (2.0 * kPi));
  double delta = (to_mid <= span + 1e-12) ? span : span - 2.0 * kPi;
  return canonical_angle(interval_begin + u * delta);
}

TorusPoint CoamoebaSegment::point_at(double u) const {
  double theta = free_angle(u);
  TorusPoint p;
  p.angles = {fixed_angles[0], fixed_angles[1], fixed_angles[2]};
  if (direction_index == 0) {
    for (double& a : p.angles) a = canonical_angle(a + theta);
  } else {
    p.angles[direction_index - 1] = theta;
  }
  return p;
}

std::vector<CoamoebaSegment> coamoeba_segments(const LineInP3& line) {
  require_distinct(line, "coamoeba segments");
  require_finite_tail(line, "coamoeba segments");
  if (is_cocircular(line.roots))
    throw std::invalid_argument("coamoeba segments require a non-cocircular line");
  auto z = finite_roots(line);
  const auto& shift = line.phase_shift;

  std::vector<CoamoebaSegment> out;
  out.reserve(12);
  for (int i = 0; i < 4; ++i) {
    // Circle through the three roots other than root i, in index order.
    std::array<RootP1, 3> triple;
    std::array<int, 3> idx;  // original root indices of the triple entries
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) {
        triple[k] = line.roots[j];
        idx[k] = j;
        ++k;
      }
    Moebius T = moebius_through(triple);

    // The free coordinate along segments of direction i is arg(x - target):
    // coordinate i itself for i >= 1, and the anchor coordinate 1 of the
    // diagonal parametrization for i = 0.
    Complex target = (i >= 1) ? z[i - 1] : z[0];

    for (int arc = 0; arc < 3; ++arc) {
      const ArcInfo& info = kArcs[arc];
      Complex x = arc_interior_point(T, triple, arc);
      std::array<double, 3> P;
      for (int j = 1; j < 4; ++j) P[j - 1] = std::arg(x - z[j - 1]);

      CoamoebaSegment seg;
      seg.direction_index = i;
      seg.circle_index = i;
      seg.arc_index = arc;
      if (i >= 1) {
        seg.fixed_angles = {0.0, 0.0, 0.0};
        for (int j = 1; j < 4; ++j)
          if (j != i) seg.fixed_angles[j - 1] = canonical_angle(P[j - 1] + shift[j - 1]);
      } else {
        seg.fixed_angles = {canonical_angle(shift[0]),
                            canonical_angle(P[1] - P[0] + shift[1]),
                            canonical_angle(P[2] - P[0] + shift[2])};
      }

      // Limit of arg(x - target) at one end of the arc.
      auto endpoint_value = [&](int triple_index, bool lo_end) {
        double sign = lo_end ? -1.0 : 1.0;  // t -> -inf at the low end
        const RootP1& rho = triple[triple_index];
        if (rho.infinite) {
          // x ~ A t + B; approach direction sign * A.
          return std::arg(sign * T.A);
        }
        if (!roots_equal(rho, RootP1::at(target))) return std::arg(rho.value - target);
        // Endpoint is the target itself; only the diagonal anchor reaches
        // this, with t -> +-inf and x - target ~ (BC - AD) / (C^2 t).
        Complex K = (T.B * T.C - T.A * T.D) / (T.C * T.C);
        return std::arg(sign * K);
      };
      double s = (i >= 1) ? shift[i - 1] : 0.0;
      seg.interval_begin = canonical_angle(endpoint_value(info.lo_root, true) + s);
      seg.interval_end = canonical_angle(endpoint_value(info.hi_root, false) + s);
      seg.interval_mid = canonical_angle(std::arg(x - target) + s);
      out.push_back(seg);
    }
  }
  return out;
}

PointCloud sample_membrane(const LineInP3& line, std::size_t samples, HalfPlane half) {
  require_finite_tail(line, "membrane sampling");
  auto z = finite_roots(line);
  const auto& shift = line.phase_shift;

  Complex centroid = (z[0] + z[1] + z[2]) / 3.0;
  double scale = 1.0;
  for (const auto& r : z) scale = std::max(scale, std::abs(r - centroid));

  const int angles = 512;
  std::size_t global_shells =
      std::max<std::size_t>(1, (samples * 45) / (100 * angles));
  std::size_t root_shells =
      std::max<std::size_t>(1, (samples * 55) / (300 * angles));

  struct Center {
    Complex c;
    double r_min, r_max;
    std::size_t shells;
  };
  std::vector<Center> centers;
  centers.push_back({centroid, 1e-3 * scale, 1e3 * scale, global_shells});
  for (const auto& r : z) centers.push_back({r, 1e-3 * scale, 10.0 * scale, root_shells});

  PointCloud cloud;
  cloud.rank = 3;
  cloud.provenance = "membrane log-polar shells (512 angles, centroid + per-root centers)";
  for (const auto& ctr : centers) {
    double lr0 = std::log(ctr.r_min), lr1 = std::log(ctr.r_max);
    std::vector<std::vector<TorusPoint>> chunk(ctr.shells);
    parallel_chunks(ctr.shells, [&](std::size_t m) {
      auto& local = chunk[m];
      local.reserve(angles);
      double r = std::exp(lr0 + (lr1 - lr0) * (m + 0.5) / ctr.shells);
      for (int j = 0; j < angles; ++j) {
        double theta = -kPi + 2.0 * kPi * (j + 0.5) / angles;
        Complex x = ctr.c + r * Complex(std::cos(theta), std::sin(theta));
        if (half == HalfPlane::upper && !(x.imag() > 0.0)) continue;
        if (half == HalfPlane::lower && !(x.imag() < 0.0)) continue;
        bool at_root = false;
        for (const auto& rt : z)
          if (x == rt) at_root = true;
        if (at_root) continue;
        TorusPoint p;
        p.angles.resize(3);
        for (int c = 0; c < 3; ++c)
          p.angles[c] = canonical_angle(std::arg(x - z[c]) + shift[c]);
        local.push_back(std::move(p));
      }
    });
    for (auto& local : chunk)
      for (auto& p : local) cloud.points.push_back(std::move(p));
  }
  return cloud;
}

std::vector<ContourPiece> contour_image(const LineInP3& line, double epsilon,
                                        int points_per_piece) {
  require_distinct(line, "contour image");
  require_finite_tail(line, "contour image");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (points_per_piece < 2) throw std::invalid_argument("need at least 2 points per piece");
  auto z = finite_roots(line);
  double scale = 1.0;
  for (const auto& r : z) scale = std::max(scale, std::abs(r));
  std::array<double, 3> zr;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(z[i].imag()) > 1e-12 * scale)
      throw std::invalid_argument("contour image requires a real line");
    zr[i] = z[i].real();
  }
  if (!(zr[0] < zr[1] && zr[1] < zr[2]))
    throw std::invalid_argument("contour image requires roots in increasing order");
  double R = 1.0 / epsilon;
  if (!(zr[0] - epsilon > -R && zr[2] + epsilon < R) || !(zr[1] - zr[0] > 2.0 * epsilon) ||
      !(zr[2] - zr[1] > 2.0 * epsilon))
    throw std::invalid_argument("epsilon too large for this root configuration");

  const auto& shift = line.phase_shift;
  auto image = [&](Complex x) {
    TorusPoint p;
    p.angles.resize(3);
    for (int c = 0; c < 3; ++c)
      p.angles[c] = canonical_angle(std::arg(x - z[c]) + shift[c]);
    return p;
  };

  std::vector<ContourPiece> out;
  auto add_real = [&](const std::string& name, double x0, double x1) {
    ContourPiece piece;
    piece.name = name;
    piece.cloud.rank = 3;
    piece.cloud.provenance = "contour " + name;
    for (int k = 0; k < points_per_piece; ++k) {
      double u = static_cast<double>(k) / (points_per_piece - 1);
      piece.cloud.points.push_back(image(Complex(x0 + u * (x1 - x0), 0.0)));
    }
    out.push_back(std::move(piece));
  };
  auto add_arc = [&](const std::string& name, Complex center, double radius, double a0,
                     double a1) {
    ContourPiece piece;
    piece.name = name;
    piece.cloud.rank = 3;
    piece.cloud.provenance = "contour " + name;
    for (int k = 0; k < points_per_piece; ++k) {
      double u = static_cast<double>(k) / (points_per_piece - 1);
      double a = a0 + u * (a1 - a0);
      piece.cloud.points.push_back(
          image(center + radius * Complex(std::cos(a), std::sin(a))));
    }
    out.push_back(std::move(piece));
  };

  add_real("real-0", -R, zr[0] - epsilon);
  add_arc("arc-zeta1", Complex(zr[0], 0.0), epsilon, kPi, 0.0);
  add_real("real-1", zr[0] + epsilon, zr[1] - epsilon);
  add_arc("arc-zeta2", Complex(zr[1], 0.0), epsilon, kPi, 0.0);
  add_real("real-2", zr[1] + epsilon, zr[2] - epsilon);
  add_arc("arc-zeta3", Complex(zr[2], 0.0), epsilon, kPi, 0.0);
  add_real("real-3", zr[2] + epsilon, R);
  add_arc("arc-large", Complex(0.0, 0.0), R, 0.0, kPi);
  return out;
}

int differential_rank(const LineInP3& line, Complex x) {
  require_finite_tail(line, "differential rank");
  auto z = finite_roots(line);
  double scale = 1.0 + std::abs(x);
  for (const auto& r : z)
    if (std::abs(x - r) <= 1e-9 * scale)
      throw std::invalid_argument("evaluation point coincides with a root");

  const double h = 1e-6;
  auto F = [&](Complex w) {
    std::array<double, 3> a;
    for (int c = 0; c < 3; ++c) a[c] = std::arg(w - z[c]);
    return a;
  };
  std::array<double, 3> col_re, col_im;
  auto fp = F(x + h), fm = F(x - h);
  for (int c = 0; c < 3; ++c)
    col_re[c] = std::remainder(fp[c] - fm[c], 2.0 * kPi) / (2.0 * h);
  fp = F(x + Complex(0.0, h));
  fm = F(x - Complex(0.0, h));
  for (int c = 0; c < 3; ++c)
    col_im[c] = std::remainder(fp[c] - fm[c], 2.0 * kPi) / (2.0 * h);

  double a = 0.0, b = 0.0, c2 = 0.0;
  for (int c = 0; c < 3; ++c) {
    a += col_re[c] * col_re[c];
    b += col_re[c] * col_im[c];
    c2 += col_im[c] * col_im[c];
  }
  double disc = std::sqrt(std::max(0.0, (a - c2) * (a - c2) + 4.0 * b * b));
  double l1 = 0.5 * ((a + c2) + disc), l2 = 0.5 * ((a + c2) - disc);
  double s1 = std::sqrt(std::max(0.0, l1)), s2 = std::sqrt(std::max(0.0, l2));
  if (s1 <= 0.0) return 0;
  int rank = 1;
  if (s2 > 1e-6 * s1) rank = 2;
  return rank;
}

bool quad_hull_membership(const LineInP3& line, const TorusPoint& p) {
  require_distinct(line, "quadrilateral hull membership");
  require_finite_tail(line, "quadrilateral hull membership");
  if (p.rank() != 3) throw std::invalid_argument("expected a rank 3 torus point");
  auto z = finite_roots(line);
  const auto& s = line.phase_shift;
  auto phase = [](double t) { return Complex(std::cos(t), std::sin(t)); };

  // Coordinate projections dropping index i >= 1: the remaining two
  // parametrization entries satisfy (x - z_j) - (x - z_k) = z_k - z_j.
  for (int i = 1; i < 4; ++i) {
    std::array<int, 2> jk;
    int n = 0;
    for (int j = 1; j < 4; ++j)
      if (j != i) jk[n++] = j;
    LineT2 proj{phase(-s[jk[0] - 1]), -phase(-s[jk[1] - 1]),
                z[jk[0] - 1] - z[jk[1] - 1]};
    TorusPoint q;
    q.angles = {p.angles[jk[0] - 1], p.angles[jk[1] - 1]};
    if (line2_membership(proj, q) == Membership::outside) return false;
  }
  // Diagonal projection to ((theta_2 - theta_1), (theta_3 - theta_1)): the
  // ratios u = (x-z2)/(x-z1), v = (x-z3)/(x-z1) satisfy
  // (z1-z3) u - (z1-z2) v + (z3-z2) = 0.
  LineT2 diag{(z[0] - z[2]) * phase(-(s[1] - s[0])),
              -(z[0] - z[1]) * phase(-(s[2] - s[0])), z[2] - z[1]};
  TorusPoint q;
  q.angles = {canonical_angle(p.angles[1] - p.angles[0]),
              canonical_angle(p.angles[2] - p.angles[0])};
  return line2_membership(diag, q) != Membership::outside;
}

}  // namespace coamoeba
