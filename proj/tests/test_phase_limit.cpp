#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "coamoeba/laurent.hpp"
#include "coamoeba/phase_limit.hpp"
#include "coamoeba/polytope.hpp"

using namespace coamoeba;

namespace {

constexpr double kPi = 3.14159265358979323846;
const std::vector<std::string> kXY = {"x", "y"};

LaurentTerm term(Complex c, ExponentVector e) { return LaurentTerm{c, std::move(e)}; }

std::int64_t stretch_factor(const ExponentVector& a, const ExponentVector& b,
                            const LatticeVector& v) {
  ExponentVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  for (std::size_t i = 0; i < d.size(); ++i)
    if (v[i] != 0) return d[i] / v[i];
  return 0;
}

}  // namespace

TEST_SUITE("phase_limit") {

TEST_CASE("binomial coamoeba examples") {
  auto f1 = parse("x + 1", {"x"});
  auto h1 = binomial_coamoeba(f1.terms()[0], f1.terms()[1]);
  CHECK(h1.normal == LatticeVector{1});
  REQUIRE(h1.offsets.size() == 1);
  CHECK(h1.offsets[0] == doctest::Approx(kPi));

  auto f2 = parse("x - y", kXY);
  auto h2 = binomial_coamoeba(f2.terms()[0], f2.terms()[1]);
  CHECK((h2.normal == LatticeVector{1, -1} || h2.normal == LatticeVector{-1, 1}));
  REQUIRE(h2.offsets.size() == 1);
  CHECK(std::abs(h2.offsets[0]) < 1e-14);

  auto f3 = parse("x^2 - 1", {"x"});
  auto h3 = binomial_coamoeba(f3.terms()[0], f3.terms()[1]);
  REQUIRE(h3.offsets.size() == 2);
  std::vector<double> offs = h3.offsets;
  std::sort(offs.begin(), offs.end());
  CHECK(std::abs(offs[0]) < 1e-12);
  CHECK(offs[1] == doctest::Approx(kPi));

  CHECK_THROWS_AS(binomial_coamoeba(term(Complex(1.0), {1, 0}), term(Complex(2.0), {1, 0})),
                  std::invalid_argument);
}

TEST_CASE("binomial coamoeba is exactly the zero set") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<std::int64_t> expo(-3, 3);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int iter = 0; iter < 300; ++iter) {
    int rank = 1 + static_cast<int>(rng() % 3);
    ExponentVector a(rank), b(rank);
    for (int i = 0; i < rank; ++i) {
      a[static_cast<std::size_t>(i)] = expo(rng);
      b[static_cast<std::size_t>(i)] = expo(rng);
    }
    if (a == b) continue;
    Complex ca(coeff(rng), coeff(rng)), cb(coeff(rng), coeff(rng));
    if (std::abs(ca) < 0.1 || std::abs(cb) < 0.1) continue;
    auto t1 = term(ca, a);
    auto t2 = term(cb, b);
    auto h = binomial_coamoeba(t1, t2);
    const auto& v = h.normal;
    std::int64_t g = std::llabs(stretch_factor(a, b, v));
    CHECK(h.offsets.size() == static_cast<std::size_t>(g));

    // Lift angles to the torus with moduli balancing |c_a x^a| = |c_b x^b|.
    ExponentVector d(static_cast<std::size_t>(rank));
    double dd = 0.0;
    for (int i = 0; i < rank; ++i) {
      d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
      dd += static_cast<double>(d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)]);
    }
    double bal = std::log(std::abs(cb / ca)) / dd;
    auto eval_mag = [&](const TorusPoint& p) {
      TorusElement x(static_cast<std::size_t>(rank));
      Complex va = ca, vb = cb;
      for (int i = 0; i < rank; ++i) {
        auto idx = static_cast<std::size_t>(i);
        x[idx] = std::exp(Complex(bal * static_cast<double>(d[idx]), p.angles[idx]));
        va *= std::pow(x[idx], static_cast<double>(a[idx]));
        vb *= std::pow(x[idx], static_cast<double>(b[idx]));
      }
      return std::make_pair(std::abs(va + vb), std::abs(va));
    };

    TorusPoint p;
    p.angles.resize(static_cast<std::size_t>(rank));
    for (auto& t : p.angles) t = ang(rng);
    // Project onto a translate: shift along v so <v, theta> hits an offset.
    double vt = 0.0, vv = 0.0;
    for (int i = 0; i < rank; ++i) {
      auto idx = static_cast<std::size_t>(i);
      vt += static_cast<double>(v[idx]) * p.angles[idx];
      vv += static_cast<double>(v[idx] * v[idx]);
    }
    TorusPoint on = p;
    double shift = (h.offsets[rng() % h.offsets.size()] - vt) / vv;
    for (int i = 0; i < rank; ++i)
      on.angles[static_cast<std::size_t>(i)] =
          canonical_angle(on.angles[static_cast<std::size_t>(i)] +
                          shift * static_cast<double>(v[static_cast<std::size_t>(i)]));
    auto [zmag, zscale] = eval_mag(on);
    CHECK(zmag <= 1e-8 * zscale);
    CHECK(on_codual(on, h, 1e-9));
    CHECK(distance_to_codual(on, h) <= 1e-9);

    // Off a translate the balanced modulus is pinned away from zero.
    double delta = 10.0;
    double vp = 0.0;
    for (int i = 0; i < rank; ++i)
      vp += static_cast<double>(v[static_cast<std::size_t>(i)]) *
            p.angles[static_cast<std::size_t>(i)];
    for (double off : h.offsets) delta = std::min(delta, circle_distance(vp, off));
    double gd = std::min(static_cast<double>(g) * delta, kPi);
    auto [wmag, wscale] = eval_mag(p);
    CHECK(wmag >= 2.0 * wscale * std::sin(gd / 2.0) - 1e-9 * wscale);
  }
}

TEST_CASE("codual distance and representative invariance") {
  CodualHyperplane h;
  h.rank = 2;
  h.normal = {1, 0};
  h.offsets = {kPi};
  CHECK(distance_to_codual(TorusPoint{{0.0, 1.3}}, h) == doctest::Approx(kPi));
  CHECK(distance_to_codual(TorusPoint{{kPi - 0.1, -2.0}}, h) == doctest::Approx(0.1));
  CHECK(on_codual(TorusPoint{{kPi, 0.5}}, h, 1e-12));
  CHECK(!on_codual(TorusPoint{{0.0, 0.5}}, h, 1.0));

  CodualHyperplane diag;
  diag.rank = 2;
  diag.normal = {1, 1};
  diag.offsets = {0.0};
  CHECK(distance_to_codual(TorusPoint{{0.1, 0.1}}, diag) ==
        doctest::Approx(0.2 / std::sqrt(2.0)));

  // Adding 2 pi to one coordinate does not change the point of the torus.
  std::mt19937 rng(515);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int iter = 0; iter < 100; ++iter) {
    TorusPoint p{{ang(rng), ang(rng)}};
    TorusPoint q{{p.angles[0] + 2 * kPi, p.angles[1] - 2 * kPi}};
    CHECK(distance_to_codual(p, diag) == doctest::Approx(distance_to_codual(q, diag)));
    CHECK(distance_to_codual(p, h) == doctest::Approx(distance_to_codual(q, h)));
  }
}

TEST_CASE("phase limit of the line") {
  auto edges = hypersurface_phase_limit(parse("x+y+1", kXY));
  REQUIRE(edges.size() == 3);
  std::set<LatticeVector> normals;
  for (const auto& e : edges) {
    REQUIRE(e.families.size() == 1);
    CHECK(e.families[0].multiplicity == 1);
    const auto& h = e.families[0].hyperplane;
    REQUIRE(h.offsets.size() == 1);
    CHECK(h.offsets[0] == doctest::Approx(kPi));
    LatticeVector n = h.normal;
    if (n[0] < 0 || (n[0] == 0 && n[1] < 0))
      for (auto& c : n) c = -c;
    normals.insert(n);
  }
  CHECK(normals == std::set<LatticeVector>{{1, 0}, {1, -1}, {0, 1}});
}

TEST_CASE("phase limit of the hexagon curve") {
  // The Newton polytope is the triangle (0,0), (2,0), (0,2); the monomial
  // x*y sits on the long edge and enriches its restriction.
  auto edges = hypersurface_phase_limit(parse("x^2+x*y+y^2+x+y+1", kXY));
  REQUIRE(edges.size() == 3);
  bool found = false;
  for (const auto& e : edges) {
    LatticeVector n = e.families.empty() ? LatticeVector{} : e.families[0].hyperplane.normal;
    if (n == LatticeVector{1, -1} || n == LatticeVector{-1, 1}) {
      // Restriction z^2 + z + 1: two simple roots e^{+-2 pi i/3}.
      REQUIRE(e.families.size() == 2);
      std::vector<double> offs;
      for (const auto& fam : e.families) {
        CHECK(fam.multiplicity == 1);
        REQUIRE(fam.hyperplane.offsets.size() == 1);
        offs.push_back(fam.hyperplane.offsets[0]);
      }
      std::sort(offs.begin(), offs.end());
      CHECK(offs[0] == doctest::Approx(-2 * kPi / 3));
      CHECK(offs[1] == doctest::Approx(2 * kPi / 3));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("phase limit edge multiplicity") {
  auto edges = hypersurface_phase_limit(parse("x^2 + 2*x + 1 + y", kXY));
  bool found = false;
  for (const auto& e : edges) {
    if (e.families.size() == 1 && e.families[0].multiplicity == 2) {
      // Edge restriction (z + 1)^2; the numerically doubled root may land
      // on either side of the branch cut at pi.
      CHECK(e.families[0].hyperplane.offsets.size() == 1);
      CHECK(circle_distance(e.families[0].hyperplane.offsets[0], kPi) <= 1e-6);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("phase limit degenerate inputs") {
  CHECK_THROWS_AS(hypersurface_phase_limit(parse("(2+0i)*x*y", kXY)), std::invalid_argument);
  CHECK_THROWS_AS(hypersurface_phase_limit(LaurentPolynomial::zero(2)), std::invalid_argument);
  // In one variable the hypersurface is finite: no limit components.
  CHECK(hypersurface_phase_limit(parse("x^2 + 3*x + 2", {"x"})).empty());
}

TEST_CASE("translate count and spacing for univariate binomials") {
  std::mt19937 rng(1881);
  std::uniform_int_distribution<std::int64_t> expo(-6, 6);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int iter = 0; iter < 200; ++iter) {
    std::int64_t A = expo(rng), B = expo(rng);
    if (A == B) continue;
    Complex ca(coeff(rng), coeff(rng)), cb(coeff(rng), coeff(rng));
    if (std::abs(ca) < 0.1 || std::abs(cb) < 0.1) continue;
    auto h = binomial_coamoeba(term(ca, {A}), term(cb, {B}));
    auto g = static_cast<std::size_t>(std::llabs(A - B));
    REQUIRE(h.offsets.size() == g);
    // Offsets are equally spaced by 2 pi / g on the circle.
    std::vector<double> offs = h.offsets;
    std::sort(offs.begin(), offs.end());
    for (std::size_t k = 0; k + 1 < g; ++k)
      CHECK(circle_distance(offs[k], offs[k + 1]) == doctest::Approx(2 * kPi / g));
    // Each translate point is a root of the binomial at balanced modulus.
    double bal = std::log(std::abs(cb / ca)) / static_cast<double>((A - B) * (A - B));
    for (double off : h.offsets) {
      double theta = off * static_cast<double>(h.normal[0]);
      Complex x = std::exp(Complex(bal * static_cast<double>(A - B), theta));
      Complex val = ca * std::pow(x, static_cast<double>(A)) +
                    cb * std::pow(x, static_cast<double>(B));
      double scl = std::abs(ca * std::pow(x, static_cast<double>(A)));
      CHECK(std::abs(val) <= 1e-8 * scl);
    }
  }
}

TEST_CASE("degeneration at t = 1 is the plain sample") {
  auto f = parse("x+y+1", kXY);
  CurveSamplingScheme scheme;
  scheme.shells = 10;
  scheme.angles = 32;
  auto clouds = degenerate(f, {1, 0}, {1.0}, scheme);
  REQUIRE(clouds.size() == 1);
  auto plain = sample_plane_curve(f, scheme);
  REQUIRE(clouds[0].points.size() == plain.points.size());
  for (std::size_t i = 0; i < plain.points.size(); ++i)
    CHECK(torus_distance(clouds[0].points[i], plain.points[i]) <= 1e-14);
}

TEST_CASE("degeneration input validation") {
  auto f = parse("x+y+1", kXY);
  CurveSamplingScheme scheme;
  CHECK_THROWS_AS(degenerate(f, {0, 0}, {0.1}, scheme), std::invalid_argument);
  CHECK_THROWS_AS(degenerate(f, {1, 0}, {0.0}, scheme), std::invalid_argument);
  CHECK_THROWS_AS(degenerate(f, {1, 0}, {-0.5}, scheme), std::invalid_argument);
}

TEST_CASE("windowed degeneration approaches the initial coamoeba") {
  auto f = parse("x+y+1", kXY);
  // in_{(1,0)} f = y + 1, whose coamoeba is the translate theta_2 = pi.
  CurveSamplingScheme scheme;
  scheme.r_min = std::exp(-1.0);
  scheme.r_max = std::exp(1.0);
  scheme.shells = 60;
  scheme.angles = 128;
  scheme.angle_offset = 0.5;
  std::vector<std::vector<std::array<double, 2>>> moduli;
  auto clouds = degenerate(f, {1, 0}, {1e-1, 1e-2}, scheme, &moduli);
  REQUIRE(clouds.size() == 2);
  REQUIRE(moduli.size() == 2);
  std::array<double, 2> worst = {0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    auto ks = static_cast<std::size_t>(k);
    REQUIRE(moduli[ks].size() == clouds[ks].points.size());
    std::size_t windowed = 0;
    for (std::size_t i = 0; i < clouds[ks].points.size(); ++i) {
      auto [mx, my] = moduli[ks][i];
      if (mx < std::exp(-1.0) || mx > std::exp(1.0)) continue;
      if (my < std::exp(-1.0) || my > std::exp(1.0)) continue;
      ++windowed;
      worst[ks] = std::max(worst[ks],
                           circle_distance(clouds[ks].points[i].angles[1], kPi));
    }
    CHECK(windowed > 100);
  }
  CHECK(worst[1] < worst[0]);
  CHECK(worst[1] < 0.05);
}

TEST_CASE("phase limit summary") {
  auto rep = phase_limit_summary(parse("x+y+1", kXY));
  REQUIRE(rep.entries.size() == 3);
  for (const auto& e : rep.entries) {
    CHECK(e.cone.cone.dimension() == 1);
    CHECK(e.closed_form);
    CHECK(e.families.size() == 1);
    CHECK(!e.initial.is_monomial());
    CHECK(e.initial.terms().size() == 2);
  }

  CHECK(phase_limit_summary(parse("(2+0i)*x*y", kXY)).entries.empty());

  auto hexrep = phase_limit_summary(parse("x^2+x*y+y^2+x+y+1", kXY));
  CHECK(hexrep.entries.size() == 3);
  bool found = false;
  for (const auto& e : hexrep.entries)
    if (e.families.size() == 2) found = true;
  CHECK(found);

  // Rank 3 simplex: 6 polytope edges give closed forms, 4 facets do not.
  auto rep3 = phase_limit_summary(parse("x+y+z+1", {"x", "y", "z"}));
  int closed = 0, open = 0;
  for (const auto& e : rep3.entries) {
    if (e.closed_form)
      ++closed;
    else
      ++open;
  }
  CHECK(closed == 6);
  CHECK(open == 4);
}

}  // TEST_SUITE
