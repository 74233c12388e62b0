#include "coamoeba/coamoeba.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coamoeba/util.hpp"

namespace coamoeba {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kVertexTol = 1e-12;
}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::vertex: return "vertex";
    case Membership::closure_boundary: return "closure-boundary";
    case Membership::outside: return "outside";
  }
  return "?";
}

double canonical_angle(double theta) {
  double t = std::remainder(theta, kTwoPi);  // (-pi, pi] up to the -pi endpoint
  if (t <= -kPi) t = kPi;
  return t;
}

double circle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
  if (p.angles.size() != q.angles.size())
    throw std::invalid_argument("torus_distance rank mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.angles.size(); ++i)
    d = std::max(d, circle_distance(p.angles[i], q.angles[i]));
  return d;
}

TorusPoint arg_map(const TorusElement& x) {
  TorusPoint p;
  p.angles.reserve(x.size());
  for (const Complex& z : x) p.angles.push_back(canonical_angle(std::arg(z)));
  return p;
}

std::vector<double> log_map(const TorusElement& x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const Complex& z : x) out.push_back(std::log(std::abs(z)));
  return out;
}

// ---------------------------------------------------------------------------
// Univariate root finding.

double root_residual_bound(const std::vector<Complex>& c, Complex root) {
  double sum = 0.0;
  for (const Complex& v : c) sum += std::abs(v);
  int d = static_cast<int>(c.size()) - 1;
  return 1e-8 * sum * std::pow(std::max(1.0, std::abs(root)), d);
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z, Complex* deriv = nullptr) {
  Complex p = c.back(), dp = 0.0;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[static_cast<std::size_t>(k)];
  }
  if (deriv) *deriv = dp;
  return p;
}

bool residual_ok(const std::vector<Complex>& c, Complex z) {
  return std::abs(horner(c, z)) <= root_residual_bound(c, z);
}

// Cauchy-style inclusion radius for the initial circle.
double root_radius(const std::vector<Complex>& c) {
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    m = std::max(m, std::abs(c[k] / c.back()));
  return 1.0 + m;
}

bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z) {
  const int d = static_cast<int>(c.size()) - 1;
  const int max_iter = 400;
  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex dp;
      Complex p = horner(c, z[k], &dp);
      if (p == Complex(0.0, 0.0)) continue;
      Complex newton = dp == Complex(0.0, 0.0) ? Complex(1e-3, 1e-3) : p / dp;
      Complex repel(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (diff == Complex(0.0, 0.0)) diff = Complex(1e-14, 1e-14);
        repel += 1.0 / diff;
      }
      Complex denom = 1.0 - newton * repel;
      Complex step = denom == Complex(0.0, 0.0) ? newton : newton / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-14) break;
  }
  return std::all_of(z.begin(), z.end(), [&](Complex r) { return residual_ok(c, r); });
}

// Deflate-and-correct fallback: Newton from several starts on the deflated
// polynomial, each accepted root polished against the original.
bool deflate_and_correct(const std::vector<Complex>& original, std::vector<Complex>& roots) {
  std::vector<Complex> work = original;
  roots.clear();
  while (work.size() > 1) {
    double radius = root_radius(work);
    bool found = false;
    Complex root;
    for (int attempt = 0; attempt < 24 && !found; ++attempt) {
      double ang = 0.7 + attempt * 2.39996;  // golden-angle spread
      double rad = radius * std::pow(0.5, attempt % 6);
      Complex z = Complex(rad * std::cos(ang), rad * std::sin(ang));
      for (int it = 0; it < 200; ++it) {
        Complex dp;
        Complex p = horner(work, z, &dp);
        if (std::abs(p) <= 0.5 * root_residual_bound(work, z)) break;
        if (dp == Complex(0.0, 0.0)) break;
        Complex step = p / dp;
        z -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
      }
      if (residual_ok(work, z)) {
        root = z;
        found = true;
      }
    }
    if (!found) return false;
    // Polish against the original polynomial.
    for (int it = 0; it < 50; ++it) {
      Complex dp;
      Complex p = horner(original, root, &dp);
      if (dp == Complex(0.0, 0.0)) break;
      Complex step = p / dp;
      if (std::abs(step) > 0.1 * (1.0 + std::abs(root))) break;
      root -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(root))) break;
    }
    roots.push_back(root);
    // Synthetic division by (z - root).
    std::vector<Complex> q(work.size() - 1);
    Complex carry = work.back();
    for (int k = static_cast<int>(work.size()) - 2; k >= 0; --k) {
      q[static_cast<std::size_t>(k)] = carry;
      carry = work[static_cast<std::size_t>(k)] + carry * root;
    }
    work = std::move(q);
  }
  return std::all_of(roots.begin(), roots.end(),
                     [&](Complex r) { return residual_ok(original, r); });
}

}  // namespace

std::vector<Complex> solve_univariate(const std::vector<Complex>& coefficients) {
  if (coefficients.size() < 2)
    throw std::invalid_argument("degree must be at least 1");
  if (coefficients.back() == Complex(0.0, 0.0))
    throw std::invalid_argument("leading coefficient must be nonzero");
  const int d = static_cast<int>(coefficients.size()) - 1;
  if (d == 1) return {-coefficients[0] / coefficients[1]};

  std::vector<Complex> z(d);
  double radius = 0.5 * root_radius(coefficients);
  for (int k = 0; k < d; ++k) {
    double ang = kTwoPi * k / d + 0.4;
    z[k] = Complex(radius * std::cos(ang), radius * std::sin(ang));
  }
  if (aberth(coefficients, z)) return z;
  std::vector<Complex> roots;
  if (deflate_and_correct(coefficients, roots)) return roots;
  throw SolverError("root finder did not converge within the iteration cap");
}

// ---------------------------------------------------------------------------
// Plane-curve sampling.

PointCloud sample_plane_curve(const LaurentPolynomial& f, const CurveSamplingScheme& scheme,
                              CurveSampleStats* stats,
                              std::vector<std::array<double, 2>>* moduli) {
  if (f.rank() != 2) throw std::invalid_argument("sample_plane_curve requires rank 2");
  if (f.empty()) throw std::invalid_argument("cannot sample the zero polynomial");
  std::int64_t e_min = f.terms()[0].exponent[1], e_max = e_min;
  bool depends_x = false;
  for (const auto& t : f.terms()) {
    e_min = std::min(e_min, t.exponent[1]);
    e_max = std::max(e_max, t.exponent[1]);
    if (t.exponent[0] != f.terms()[0].exponent[0]) depends_x = true;
  }
  if (e_min == e_max)
    throw std::invalid_argument("polynomial is degenerate in the second variable");
  if (!depends_x)
    throw std::invalid_argument("polynomial does not depend on the first variable");

  const int shells = std::max(1, scheme.shells);
  const int angles = std::max(1, scheme.angles);
  const double log_min = std::log(scheme.r_min), log_max = std::log(scheme.r_max);

  struct ShellResult {
    std::vector<TorusPoint> points;
    std::vector<std::array<double, 2>> moduli;
    CurveSampleStats stats;
  };
  std::vector<ShellResult> results(static_cast<std::size_t>(shells));

  parallel_chunks(static_cast<std::size_t>(shells), [&](std::size_t s) {
    ShellResult& res = results[s];
    double r = shells == 1 ? scheme.r_min
                           : std::exp(log_min + (log_max - log_min) * s / (shells - 1));
    for (int j = 0; j < angles; ++j) {
      double theta = -kPi + kTwoPi * (j + 1 - scheme.angle_offset) / angles;
      Complex x = Complex(r * std::cos(theta), r * std::sin(theta));
      // Coefficients of f(x, .) over the shifted y-exponent range.
      std::vector<Complex> c(static_cast<std::size_t>(e_max - e_min + 1), Complex(0.0, 0.0));
      for (const auto& t : f.terms()) {
        Complex xe = std::pow(x, static_cast<double>(t.exponent[0]));
        c[static_cast<std::size_t>(t.exponent[1] - e_min)] += t.coefficient * xe;
      }
      double max_c = 0.0;
      for (const Complex& v : c) max_c = std::max(max_c, std::abs(v));
      // Numerically vanishing leading coefficients drop the degree.
      std::size_t deg = c.size() - 1;
      bool degenerate = false;
      while (deg > 0 && std::abs(c[deg]) < 1e-12 * max_c) {
        degenerate = true;
        --deg;
      }
      if (degenerate) ++res.stats.degenerate_samples;
      std::size_t low = 0;
      while (low < deg && c[low] == Complex(0.0, 0.0)) ++low;  // y = 0 solutions
      if (deg <= low) continue;
      std::vector<Complex> cc(c.begin() + static_cast<std::ptrdiff_t>(low),
                              c.begin() + static_cast<std::ptrdiff_t>(deg) + 1);
      std::vector<Complex> ys;
      try {
        ys = solve_univariate(cc);
      } catch (const SolverError&) {
        ++res.stats.solver_failures;
        continue;
      }
      for (const Complex& y : ys) {
        if (y == Complex(0.0, 0.0)) continue;
        res.points.push_back(arg_map({x, y}));
        if (moduli) res.moduli.push_back({std::abs(x), std::abs(y)});
      }
    }
  });

  PointCloud cloud;
  cloud.rank = 2;
  cloud.provenance = "sample_plane_curve r=[" + std::to_string(scheme.r_min) + "," +
                     std::to_string(scheme.r_max) + "] shells=" + std::to_string(shells) +
                     " angles=" + std::to_string(angles) +
                     " offset=" + std::to_string(scheme.angle_offset);
  CurveSampleStats total;
  for (auto& res : results) {
    cloud.points.insert(cloud.points.end(), res.points.begin(), res.points.end());
    if (moduli) moduli->insert(moduli->end(), res.moduli.begin(), res.moduli.end());
    total.degenerate_samples += res.stats.degenerate_samples;
    total.solver_failures += res.stats.solver_failures;
  }
  if (stats) *stats = total;
  return cloud;
}

// ---------------------------------------------------------------------------
// Two-triangle membership.

Membership line2_membership(const LineT2& line, const TorusPoint& p, double snap_tol) {
  if (p.rank() != 2) throw std::invalid_argument("line2_membership requires rank 2");
  if (line.a == Complex(0.0, 0.0) || line.b == Complex(0.0, 0.0) ||
      line.c == Complex(0.0, 0.0))
    throw std::invalid_argument("line coefficients must be nonzero");
  double alpha = canonical_angle(p.angles[0] - std::arg(line.a / line.c));
  double beta = canonical_angle(p.angles[1] - std::arg(line.b / line.c));

  const TorusPoint v1{{kPi, 0.0}}, v2{{kPi, kPi}}, v3{{0.0, kPi}};
  TorusPoint q{{alpha, beta}};
  if (torus_distance(q, v1) <= snap_tol || torus_distance(q, v2) <= snap_tol ||
      torus_distance(q, v3) <= snap_tol)
    return Membership::vertex;
  // The closure boundary is the three codual lines of x + y + 1.
  if (circle_distance(alpha, kPi) <= snap_tol ||
      circle_distance(beta, kPi) <= snap_tol ||
      circle_distance(alpha - beta, kPi) <= snap_tol)
    return Membership::closure_boundary;
  if (std::abs(alpha - beta) > kPi) return Membership::interior;
  return Membership::outside;
}

}  // namespace coamoeba
