#include "coamoeba/polytope.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coamoeba {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 gcd64(i64 a, i64 b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

i128 dot128(const LatticeVector& a, const LatticeVector& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += i128(a[i]) * b[i];
  return s;
}

}  // namespace

LatticeVector primitive(LatticeVector v) {
  i64 g = 0;
  for (i64 x : v) g = gcd64(g, x);
  if (g > 1)
    for (i64& x : v) x /= g;
  return v;
}

int lattice_rank(const std::vector<LatticeVector>& vectors, int ambient) {
  // Fraction-free Gaussian elimination.
  std::vector<std::vector<i128>> m;
  for (const auto& v : vectors) {
    if (is_zero(v)) continue;
    m.emplace_back(v.begin(), v.end());
  }
  int rank = 0;
  for (int col = 0; col < ambient && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] == 0) continue;
      i128 a = m[rank][col], b = m[r][col];
      for (int c = 0; c < ambient; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

int Cone::dimension() const {
  std::vector<LatticeVector> gens = rays;
  gens.insert(gens.end(), lineality.begin(), lineality.end());
  return lattice_rank(gens, rank);
}

namespace {

// Basis of the orthogonal complement of the affine-hull direction space.
std::vector<LatticeVector> orthogonal_complement(const std::vector<LatticeVector>& dirs,
                                                 int n, int d) {
  if (d == n) return {};
  if (d == 0) {
    std::vector<LatticeVector> basis;
    for (int i = 0; i < n; ++i) {
      LatticeVector e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  if (n == 2) {  // d == 1
    LatticeVector e = primitive(dirs[0]);
    return {primitive({-e[1], e[0]})};
  }
  // n == 3
  if (d == 2) {
    // Find two independent directions.
    LatticeVector a = dirs[0];
    for (std::size_t i = 1; i < dirs.size(); ++i) {
      LatticeVector c = cross(a, dirs[i]);
      if (!is_zero(c)) return {primitive(c)};
    }
    throw std::logic_error("degenerate direction set");
  }
  // n == 3, d == 1
  LatticeVector e = primitive(dirs[0]);
  LatticeVector axis(3, 0);
  axis[e[0] == 0 && e[1] == 0 ? 0 : 2] = 1;
  LatticeVector v1 = primitive(cross(e, axis));
  if (is_zero(v1)) {
    axis = {0, 1, 0};
    v1 = primitive(cross(e, axis));
  }
  LatticeVector v2 = primitive(cross(e, v1));
  return {v1, v2};
}

std::vector<LatticeVector> point_directions(const std::vector<ExponentVector>& pts) {
  std::vector<LatticeVector> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
  return dirs;
}

// --- 2D hull (monotone chain), exact ---

i128 cross2(const std::array<i64, 2>& o, const std::array<i64, 2>& a,
            const std::array<i64, 2>& b) {
  return i128(a[0] - o[0]) * (b[1] - o[1]) - i128(a[1] - o[1]) * (b[0] - o[0]);
}

// Indices of hull vertices in counterclockwise order; collinear interior
// points are dropped.
std::vector<std::size_t> hull2d(const std::vector<std::array<i64, 2>>& pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a] < pts[b];
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() <= 2) return idx;
  std::vector<std::size_t> hull;
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross2(pts[hull[hull.size() - 2]], pts[hull[hull.size() - 1]], pts[*it]) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
  };
  build(idx.begin(), idx.end());
  hull.pop_back();
  std::size_t lower = hull.size();
  build(idx.rbegin(), idx.rend());
  hull.pop_back();
  (void)lower;
  return hull;
}

// Project 3D points to 2D by dropping the coordinate with the largest
// plane-normal component (injective on the plane).
int drop_coordinate(const LatticeVector& normal) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(normal[i]) > std::abs(normal[k])) k = i;
  return k;
}

struct Facet {
  LatticeVector inner_normal;         // primitive, face minimizes <.,normal>
  std::vector<std::size_t> points;    // indices of support points on the facet
};

// Brute-force facet enumeration for a full-dimensional 3D point set.
std::vector<Facet> facets3d(const std::vector<ExponentVector>& pts) {
  std::vector<Facet> out;
  std::set<LatticeVector> seen;
  std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        LatticeVector g = cross(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
        if (is_zero(g)) continue;
        g = primitive(g);
        i128 c = dot128(pts[i], g);
        bool above = false, below = false;
        for (std::size_t q = 0; q < k; ++q) {
          i128 v = dot128(pts[q], g);
          if (v > c) above = true;
          if (v < c) below = true;
        }
        if (above && below) continue;
        // Orient inward: the facet must minimize.
        if (below)
          for (i64& x : g) x = -x;
        if (seen.count(g)) continue;
        seen.insert(g);
        Facet f;
        f.inner_normal = g;
        i128 c2 = dot128(pts[i], f.inner_normal);
        for (std::size_t q = 0; q < k; ++q)
          if (dot128(pts[q], f.inner_normal) == c2) f.points.push_back(q);
        out.push_back(std::move(f));
      }
  return out;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.empty()) throw std::invalid_argument("Newton polytope of the zero polynomial");
  int n = f.rank();
  std::vector<ExponentVector> pts;
  for (const auto& t : f.terms()) pts.push_back(t.exponent);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto dirs = point_directions(pts);
  int d = lattice_rank(dirs, n);

  NewtonPolytope p;
  p.rank = n;
  if (d == 0) {
    p.vertices = {pts[0]};
    return p;
  }
  if (d == 1) {
    LatticeVector e = primitive(dirs.empty() ? LatticeVector(n, 0) : dirs[0]);
    for (const auto& dv : dirs)
      if (!is_zero(dv)) {
        e = primitive(dv);
        break;
      }
    auto param = [&](const ExponentVector& q) { return dot128(sub(q, pts[0]), e); };
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (param(pts[i]) < param(pts[lo])) lo = i;
      if (param(pts[i]) > param(pts[hi])) hi = i;
    }
    p.vertices = {pts[lo], pts[hi]};
  } else if (d == 2) {
    int dropped = -1;
    LatticeVector normal;
    if (n == 3) {
      normal = orthogonal_complement(dirs, 3, 2)[0];
      dropped = drop_coordinate(normal);
    }
    std::vector<std::array<i64, 2>> proj;
    for (const auto& q : pts) {
      if (n == 2) proj.push_back({q[0], q[1]});
      else {
        std::array<i64, 2> a{};
        int w = 0;
        for (int c = 0; c < 3; ++c)
          if (c != dropped) a[w++] = q[c];
        proj.push_back(a);
      }
    }
    for (std::size_t i : hull2d(proj)) p.vertices.push_back(pts[i]);
  } else {
    auto fs = facets3d(pts);
    for (std::size_t q = 0; q < pts.size(); ++q) {
      std::vector<LatticeVector> normals;
      for (const auto& f : fs)
        if (std::find(f.points.begin(), f.points.end(), q) != f.points.end())
          normals.push_back(f.inner_normal);
      if (lattice_rank(normals, n) == 3) p.vertices.push_back(pts[q]);
    }
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

NormalFan normal_fan(const NewtonPolytope& p) {
  int n = p.rank;
  if (n < 1 || n > 3) throw std::invalid_argument("normal_fan supports rank 1..3 only");
  NormalFan fan;
  fan.polytope = p;
  const auto& verts = p.vertices;
  auto dirs = point_directions(verts);
  int d = lattice_rank(dirs, n);
  std::vector<LatticeVector> lin = orthogonal_complement(dirs, n, d);

  std::vector<std::size_t> all(verts.size());
  std::iota(all.begin(), all.end(), 0);

  if (d == 0) {
    fan.cones.push_back({Cone{n, {}, lin}, all});
    return fan;
  }

  // The full polytope always contributes the minimal cone.
  fan.cones.push_back({Cone{n, {}, lin}, all});

  if (d == 1) {
    LatticeVector e = primitive(sub(verts[1], verts[0]));
    LatticeVector me = e;
    for (i64& x : me) x = -x;
    fan.cones.push_back({Cone{n, {e}, lin}, {0}});
    fan.cones.push_back({Cone{n, {me}, lin}, {1}});
    return fan;
  }

  if (d == 2) {
    int dropped = -1;
    if (n == 3) dropped = drop_coordinate(lin[0]);
    std::vector<std::array<i64, 2>> proj;
    for (const auto& q : verts) {
      if (n == 2) proj.push_back({q[0], q[1]});
      else {
        std::array<i64, 2> a{};
        int w = 0;
        for (int c = 0; c < 3; ++c)
          if (c != dropped) a[w++] = q[c];
        proj.push_back(a);
      }
    }
    std::vector<std::size_t> cycle = hull2d(proj);  // all inputs are vertices
    std::size_t m = cycle.size();
    // Inner normal of each edge, sign-checked against the opposite side.
    std::vector<LatticeVector> edge_ray(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a = cycle[i], b = cycle[(i + 1) % m];
      LatticeVector e = sub(verts[b], verts[a]);
      LatticeVector r;
      if (n == 2) r = {-e[1], e[0]};
      else r = cross(e, lin[0]);
      r = primitive(r);
      // r must satisfy <v, r> >= <a, r> for all vertices v.
      bool flip = false;
      i128 base = dot128(verts[a], r);
      for (const auto& q : verts) {
        i128 v = dot128(q, r);
        if (v < base) {
          flip = true;
          break;
        }
      }
      if (flip)
        for (i64& x : r) x = -x;
      edge_ray[i] = r;
      fan.cones.push_back({Cone{n, {r}, lin}, sorted_unique({a, b})});
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t prev = (i + m - 1) % m;
      fan.cones.push_back({Cone{n, {edge_ray[prev], edge_ray[i]}, lin}, {cycle[i]}});
    }
    return fan;
  }

  // d == 3 (so n == 3).
  std::vector<ExponentVector> pts = verts;
  auto fs = facets3d(pts);
  // Facet cones.
  for (const auto& f : fs)
    fan.cones.push_back({Cone{n, {f.inner_normal}, {}}, sorted_unique(f.points)});
  // Edge cones from adjacent facet pairs.
  std::set<std::vector<std::size_t>> edge_seen;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(fs[i].points.begin(), fs[i].points.end(),
                            fs[j].points.begin(), fs[j].points.end(),
                            std::back_inserter(common));
      if (common.size() < 2) continue;
      if (!edge_seen.insert(common).second) continue;
      fan.cones.push_back(
          {Cone{n, {fs[i].inner_normal, fs[j].inner_normal}, {}}, common});
    }
  // Vertex cones.
  for (std::size_t q = 0; q < pts.size(); ++q) {
    std::vector<LatticeVector> normals;
    for (const auto& f : fs)
      if (std::binary_search(f.points.begin(), f.points.end(), q))
        normals.push_back(f.inner_normal);
    fan.cones.push_back({Cone{n, normals, {}}, {q}});
  }
  return fan;
}

std::vector<Cone> logarithmic_limit_directions(const LaurentPolynomial& f) {
  NormalFan fan = normal_fan(newton_polytope(f));
  std::vector<Cone> out;
  for (const auto& fc : fan.cones) {
    int dim = fc.cone.dimension();
    if (dim >= 1 && dim <= f.rank() - 1) out.push_back(fc.cone);
  }
  return out;
}

const FanCone& cone_of(const NormalFan& fan, const WeightVector& w) {
  const auto& verts = fan.polytope.vertices;
  if (static_cast<int>(w.size()) != fan.polytope.rank)
    throw std::invalid_argument("weight rank does not match fan rank");
  i128 best = dot128(verts[0], LatticeVector(w.begin(), w.end()));
  LatticeVector wv(w.begin(), w.end());
  for (const auto& v : verts) best = std::min(best, dot128(v, wv));
  std::vector<std::size_t> face;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (dot128(verts[i], wv) == best) face.push_back(i);
  for (const auto& fc : fan.cones)
    if (fc.face == face) return fc;
  throw std::logic_error("normal fan is missing a face cone");
}

}  // namespace coamoeba
