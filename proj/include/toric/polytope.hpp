#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

using Vec2 = std::array<long long, 2>;
using Vec3 = std::array<long long, 3>;
using RatPoint = std::array<Rat, 2>;

inline long long det2(const Vec2& a, const Vec2& b) {
  return a[0] * b[1] - a[1] * b[0];
}

long long gcd_ll(long long a, long long b);

// Facet data of a 2-d moment polytope: cyclically ordered outward primitive
// normals with rational support constants.  Everything downstream reads off
// this one structure.
struct MomentPolytope {
  std::vector<Vec2> normals;
  std::vector<Rat> supports;
  std::vector<std::string> labels;  // optional, same length when present

  int n() const { return static_cast<int>(normals.size()); }
  int cyc(int i) const { return ((i % n()) + n()) % n(); }
  const Vec2& normal(int i) const { return normals[cyc(i)]; }
  const Rat& support(int i) const { return supports[cyc(i)]; }
};

// Canonicalizes the listing sense to det(v_i, v_{i+1}) = -1, reversing the
// cyclic order when the input was listed the other way round.
MomentPolytope canonical_orientation(MomentPolytope p);

struct Violation {
  std::string check;
  int index = -1;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_delzant(const MomentPolytope& p);
void require_valid(const MomentPolytope& p);  // throws on the first violation

// Vertex i solves <x, v_i> = k_i and <x, v_{i+1}> = k_{i+1}.
std::vector<RatPoint> vertices(const MomentPolytope& p);

// Exact area centroid; realizes the mean-normalized moment map.
RatPoint centroid(const MomentPolytope& p);

// Translates the polytope so the centroid sits at the origin.
MomentPolytope normalize_supports(const MomentPolytope& p);

// Normals mapped by (a,b) -> (a,-b) and the cyclic order reversed.
MomentPolytope reflect(const MomentPolytope& p);

// Complete simplicial fan given by rays and maximal cones (as ray-index sets).
struct Fan {
  int dimension = 2;
  std::vector<Vec3> rays;  // third coordinate unused in dimension 2
  std::vector<std::vector<int>> max_cones;
};

// 3-d polytope as a plain inequality system <normal, x> <= support.
struct Polytope3 {
  std::vector<Vec3> normals;
  std::vector<Rat> supports;
};

Fan fan_of(const MomentPolytope& p);
Fan fan_of(const Polytope3& p);

// Minimal ray subsets not spanning a cone.
std::vector<std::vector<int>> primitive_collections(const Fan& f);

// Walls of a complete fan: (m-1)-cones with their two incident maximal cones.
struct Wall {
  std::vector<int> rays;
  int cone_a = -1;
  int cone_b = -1;
};
std::vector<Wall> fan_walls(const Fan& f);

// Lattice length of edge i (between vertices i-1 and i); rational for
// rational supports.
Rat edge_length(const MomentPolytope& p, int i);

}  // namespace toric
