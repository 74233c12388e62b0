#pragma once

#include <array>
#include <vector>

#include "coamoeba/coamoeba.hpp"
#include "coamoeba/laurent.hpp"
#include "coamoeba/polytope.hpp"

namespace coamoeba {

// A finite union of parallel translates of a codimension one subtorus:
// { theta in U^n : <normal, theta> = offset_k mod 2pi for some k }.
struct CodualHyperplane {
  int rank = 0;
  LatticeVector normal;          // primitive
  std::vector<double> offsets;   // canonical in (-pi, pi], sorted
};

// Solution set in U^n of the binomial t1 + t2 = 0: with d = a - b = g v
// (v primitive), the g translates <v, theta> = (pi + arg(c_b/c_a) + 2 pi k)/g.
CodualHyperplane binomial_coamoeba(const LaurentTerm& t1, const LaurentTerm& t2);

// Distance from a point to the nearest translate, measured orthogonally
// to the normal (Euclidean on the flat torus).
double distance_to_codual(const TorusPoint& p, const CodualHyperplane& h);

// Whether p lies on some translate within the given angular tolerance.
bool on_codual(const TorusPoint& p, const CodualHyperplane& h, double tol);

struct CodualFamily {
  CodualHyperplane hyperplane;
  int multiplicity = 1;  // multiplicity of the restricted-polynomial root
};

struct EdgeContribution {
  FanCone cone;               // normal cone of the edge
  LaurentPolynomial initial;  // initial form supported on the edge
  std::vector<CodualFamily> families;
};

// Closed-form phase limit components of a hypersurface, one per edge of
// the Newton polytope: the initial form restricts to a univariate
// polynomial along the primitive edge direction and each of its roots
// contributes one translate family.  Rank 1..3.
std::vector<EdgeContribution> hypersurface_phase_limit(const LaurentPolynomial& f);

// One cloud per t: a sample of the rescaled fiber t^{-w} V(f), whose
// arg image converges to the coamoeba of the initial scheme as t -> 0.
// Rank 2 only.  Optionally records coordinate moduli per cloud.
std::vector<PointCloud> degenerate(
    const LaurentPolynomial& f, const WeightVector& w, const std::vector<double>& t_sequence,
    const CurveSamplingScheme& scheme,
    std::vector<std::vector<std::array<double, 2>>>* moduli = nullptr);

struct PhaseLimitEntry {
  FanCone cone;
  LaurentPolynomial initial;
  bool closed_form = false;  // true for edges, where families are computed
  std::vector<CodualFamily> families;
};

// Weight directions with non-monomial initial form, their initial forms,
// and closed-form coamoebae where available (edges).  Rank 1..3.
struct PhaseLimitReport {
  LaurentPolynomial f;
  std::vector<PhaseLimitEntry> entries;
};

PhaseLimitReport phase_limit_summary(const LaurentPolynomial& f);

// A weight vector in the relative interior of the cone; the cone must be
// nonzero-dimensional.
WeightVector interior_weight(const Cone& cone);

}  // namespace coamoeba
