#pragma once

#include <cstdint>
#include <vector>

#include "coamoeba/laurent.hpp"

namespace coamoeba {

using LatticeVector = std::vector<std::int64_t>;

// Newton polytope of a Laurent polynomial: the extreme points of the
// convex hull of its support.
struct NewtonPolytope {
  int rank = 0;
  std::vector<ExponentVector> vertices;
};

// A rational polyhedral cone given by primitive generating rays together
// with a basis of its lineality space.
struct Cone {
  int rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;

  // Dimension of the linear span of rays and lineality.
  int dimension() const;
};

// A cone of the normal fan, tagged with the polytope face it is normal
// to.  The face is recorded as the sorted list of indices of the
// polytope vertices it contains.
struct FanCone {
  Cone cone;
  std::vector<std::size_t> face;
};

// The outer normal fan under the tropical minimum convention: the cone
// of a face F is { w : <m, w> is minimized over the polytope exactly on F }.
struct NormalFan {
  NewtonPolytope polytope;
  std::vector<FanCone> cones;
};

NewtonPolytope newton_polytope(const LaurentPolynomial& f);

// Complete normal fan; supports rank 1..3.
NormalFan normal_fan(const NewtonPolytope& p);

// Cones of the normal fan of dimension between 1 and n-1: the directions
// w != 0 for which in_w f is not a monomial.  Empty for monomials.
std::vector<Cone> logarithmic_limit_directions(const LaurentPolynomial& f);

// The unique fan cone whose relative interior contains w.
const FanCone& cone_of(const NormalFan& fan, const WeightVector& w);

// gcd-reduced copy; the zero vector is returned unchanged.
LatticeVector primitive(LatticeVector v);

// Rank of a set of integer vectors (exact fraction-free elimination).
int lattice_rank(const std::vector<LatticeVector>& vectors, int ambient);

}  // namespace coamoeba
