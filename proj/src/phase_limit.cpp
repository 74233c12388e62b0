#include "coamoeba/phase_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coamoeba {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::int64_t ratio_along(const LatticeVector& d, const LatticeVector& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) return d[i] / u[i];
  return 0;
}

// Coefficients (ascending) of the restriction of the terms supported on
// the edge [a, b] to the primitive direction u, i.e. f|_E = xi^a p(xi^u).
std::vector<Complex> edge_restriction(const LaurentPolynomial& f, const ExponentVector& a,
                                      const LatticeVector& u, std::int64_t length) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(length) + 1, Complex(0.0));
  int n = f.rank();
  for (const auto& term : f.terms()) {
    LatticeVector md(n);
    for (int i = 0; i < n; ++i) md[i] = term.exponent[i] - a[i];
    std::int64_t j = ratio_along(md, u);
    if (j < 0 || j > length) continue;
    bool on_edge = true;
    for (int i = 0; i < n; ++i)
      if (md[i] != j * u[i]) on_edge = false;
    if (on_edge) coeffs[static_cast<std::size_t>(j)] += term.coefficient;
  }
  return coeffs;
}

std::vector<CodualFamily> families_from_roots(int rank, const LatticeVector& u,
                                              std::vector<Complex> roots) {
  std::sort(roots.begin(), roots.end(), [](Complex p, Complex q) {
    return p.real() != q.real() ? p.real() < q.real() : p.imag() < q.imag();
  });
  std::vector<CodualFamily> out;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() &&
           std::abs(roots[j] - roots[i]) <= 1e-8 * (1.0 + std::abs(roots[i])))
      ++j;
    CodualFamily fam;
    fam.hyperplane.rank = rank;
    fam.hyperplane.normal = u;
    fam.hyperplane.offsets = {canonical_angle(std::arg(roots[i]))};
    fam.multiplicity = static_cast<int>(j - i);
    out.push_back(std::move(fam));
    i = j;
  }
  return out;
}

std::vector<CodualFamily> edge_families(const LaurentPolynomial& f, const NewtonPolytope& p,
                                        const std::vector<std::size_t>& face) {
  const ExponentVector& a = p.vertices[face[0]];
  const ExponentVector& b = p.vertices[face[1]];
  LatticeVector d(p.rank);
  for (int i = 0; i < p.rank; ++i) d[i] = b[i] - a[i];
  LatticeVector u = primitive(d);
  std::int64_t length = ratio_along(d, u);
  auto coeffs = edge_restriction(f, a, u, length);
  // The restricted polynomial has roots in C*: the end coefficients sit at
  // vertices of the Newton polytope and are nonzero.
  return families_from_roots(f.rank(), u, solve_univariate(coeffs));
}

LaurentPolynomial edge_initial(const LaurentPolynomial& f, const NewtonPolytope& p,
                               const std::vector<std::size_t>& face) {
  const ExponentVector& a = p.vertices[face[0]];
  const ExponentVector& b = p.vertices[face[1]];
  LatticeVector d(p.rank);
  for (int i = 0; i < p.rank; ++i) d[i] = b[i] - a[i];
  LatticeVector u = primitive(d);
  std::int64_t length = ratio_along(d, u);
  std::vector<LaurentTerm> terms;
  for (const auto& term : f.terms()) {
    LatticeVector md(p.rank);
    for (int i = 0; i < p.rank; ++i) md[i] = term.exponent[i] - a[i];
    std::int64_t j = ratio_along(md, u);
    if (j < 0 || j > length) continue;
    bool on_edge = true;
    for (int i = 0; i < p.rank; ++i)
      if (md[i] != j * u[i]) on_edge = false;
    if (on_edge) terms.push_back(term);
  }
  return LaurentPolynomial(f.rank(), std::move(terms));
}

}  // namespace

CodualHyperplane binomial_coamoeba(const LaurentTerm& t1, const LaurentTerm& t2) {
  if (t1.exponent.size() != t2.exponent.size())
    throw std::invalid_argument("binomial terms must share a rank");
  if (t1.coefficient == Complex(0.0) || t2.coefficient == Complex(0.0))
    throw std::invalid_argument("binomial coefficients must be nonzero");
  int n = static_cast<int>(t1.exponent.size());
  LatticeVector d(n);
  bool zero = true;
  for (int i = 0; i < n; ++i) {
    d[i] = t1.exponent[i] - t2.exponent[i];
    if (d[i] != 0) zero = false;
  }
  if (zero) throw std::invalid_argument("binomial exponents must differ");
  LatticeVector v = primitive(d);
  std::int64_t g = ratio_along(d, v);
  double base = kPi + std::arg(t2.coefficient / t1.coefficient);
  CodualHyperplane h;
  h.rank = n;
  h.normal = v;
  for (std::int64_t k = 0; k < g; ++k)
    h.offsets.push_back(canonical_angle((base + 2.0 * kPi * k) / static_cast<double>(g)));
  std::sort(h.offsets.begin(), h.offsets.end());
  return h;
}

double distance_to_codual(const TorusPoint& p, const CodualHyperplane& h) {
  if (p.rank() != h.rank) throw std::invalid_argument("rank mismatch");
  double pairing = 0.0;
  double norm2 = 0.0;
  for (int i = 0; i < h.rank; ++i) {
    pairing += static_cast<double>(h.normal[i]) * p.angles[i];
    norm2 += static_cast<double>(h.normal[i]) * static_cast<double>(h.normal[i]);
  }
  double best = 2.0 * kPi;
  for (double off : h.offsets) best = std::min(best, circle_distance(pairing, off));
  return best / std::sqrt(norm2);
}

bool on_codual(const TorusPoint& p, const CodualHyperplane& h, double tol) {
  double pairing = 0.0;
  for (int i = 0; i < h.rank; ++i)
    pairing += static_cast<double>(h.normal[i]) * p.angles[i];
  for (double off : h.offsets)
    if (circle_distance(pairing, off) <= tol) return true;
  return false;
}

std::vector<EdgeContribution> hypersurface_phase_limit(const LaurentPolynomial& f) {
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  if (f.is_monomial()) throw std::invalid_argument("a monomial has no edges");
  if (f.rank() < 1 || f.rank() > 3)
    throw std::invalid_argument("supported ranks are 1..3");
  NormalFan fan = normal_fan(newton_polytope(f));
  std::vector<EdgeContribution> out;
  for (const auto& fc : fan.cones) {
    if (fc.face.size() != 2 || fc.cone.dimension() < 1) continue;
    EdgeContribution ec{fc, edge_initial(f, fan.polytope, fc.face),
                        edge_families(f, fan.polytope, fc.face)};
    out.push_back(std::move(ec));
  }
  return out;
}

std::vector<PointCloud> degenerate(
    const LaurentPolynomial& f, const WeightVector& w, const std::vector<double>& t_sequence,
    const CurveSamplingScheme& scheme,
    std::vector<std::vector<std::array<double, 2>>>* moduli) {
  if (f.rank() != 2) throw std::invalid_argument("degeneration sampling is rank 2 only");
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  bool zero = true;
  for (auto wi : w)
    if (wi != 0) zero = false;
  if (zero) throw std::invalid_argument("weight vector must be nonzero");
  if (moduli) moduli->clear();
  std::vector<PointCloud> out;
  for (double t : t_sequence) {
    if (!(t > 0.0)) throw std::invalid_argument("t values must be positive");
    // V(f(t)) = t^{-w} V(f); the leading rescaling keeps coefficients O(1).
    LaurentPolynomial ft = deform(f, w, t);
    ft = scale(ft, std::pow(t, -static_cast<double>(weight_value(f, w))));
    std::vector<std::array<double, 2>> mods;
    PointCloud cloud = sample_plane_curve(ft, scheme, nullptr, moduli ? &mods : nullptr);
    cloud.provenance += " (degeneration fiber t=" + std::to_string(t) + ")";
    if (moduli) moduli->push_back(std::move(mods));
    out.push_back(std::move(cloud));
  }
  return out;
}

WeightVector interior_weight(const Cone& cone) {
  WeightVector w(cone.rank, 0);
  for (const auto& r : cone.rays)
    for (int i = 0; i < cone.rank; ++i) w[i] += r[i];
  bool zero = true;
  for (auto wi : w)
    if (wi != 0) zero = false;
  if (zero && !cone.lineality.empty()) {
    w = cone.lineality.front();
    zero = false;
  }
  if (zero) throw std::invalid_argument("cone has no nonzero interior weight");
  return w;
}

PhaseLimitReport phase_limit_summary(const LaurentPolynomial& f) {
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  if (f.rank() < 1 || f.rank() > 3)
    throw std::invalid_argument("supported ranks are 1..3");
  PhaseLimitReport report{f, {}};
  if (f.is_monomial()) return report;
  NormalFan fan = normal_fan(newton_polytope(f));
  int n = f.rank();
  for (const auto& fc : fan.cones) {
    int d = fc.cone.dimension();
    if (d < 1 || d > n - 1) continue;
    PhaseLimitEntry entry{fc, initial_form(f, interior_weight(fc.cone)), false, {}};
    if (fc.face.size() == 2) {
      entry.closed_form = true;
      entry.families = edge_families(f, fan.polytope, fc.face);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace coamoeba
