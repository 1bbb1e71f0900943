#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

MomentPolytope canonical_orientation(MomentPolytope p) {
  int n = p.n();
  if (n < 3) return p;
  bool all_plus = true;
  for (int i = 0; i < n; ++i)
    if (det2(p.normal(i), p.normal(i + 1)) != 1) all_plus = false;
  if (!all_plus) return p;
  MomentPolytope q;
  for (int i = n - 1; i >= 0; --i) {
    q.normals.push_back(p.normals[i]);
    q.supports.push_back(p.supports[i]);
    if (!p.labels.empty()) q.labels.push_back(p.labels[i]);
  }
  return q;
}

namespace {

// Exact angular order of nonzero lattice vectors, counterclockwise from +x.
int half(const Vec2& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

}  // namespace

ValidationReport validate_delzant(const MomentPolytope& p) {
  ValidationReport rep;
  auto fail = [&](const std::string& check, int idx, const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back({check, idx, msg});
  };

  int n = p.n();
  if (n < 3 || p.supports.size() != p.normals.size()) {
    fail("shape", -1, "need at least 3 facets and matching support count");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    const Vec2& v = p.normals[i];
    if (v[0] == 0 && v[1] == 0) {
      fail("primitive", i, "zero normal");
      return rep;
    }
    if (gcd_ll(v[0], v[1]) != 1)
      fail("primitive", i, "normal not primitive");
  }
  if (!rep.ok) return rep;

  long long sense = det2(p.normal(0), p.normal(1));
  for (int i = 0; i < n; ++i) {
    long long d = det2(p.normal(i), p.normal(i + 1));
    if (d != 1 && d != -1) {
      fail("smooth", i, "adjacent normals do not span the lattice");
    } else if (d != sense) {
      fail("smooth", i, "inconsistent rotation sense");
    }
  }
  if (!rep.ok) return rep;

  // One full rotation: distinct directions, and exactly one wrap of the
  // angular order along the cycle.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (det2(p.normals[i], p.normals[j]) == 0)
        fail("complete", j, "repeated normal direction");
  if (!rep.ok) return rep;
  int wraps = 0;
  for (int i = 0; i < n; ++i) {
    bool asc = angle_less(p.normal(i), p.normal(i + 1));
    if ((sense > 0 && !asc) || (sense < 0 && asc)) ++wraps;
  }
  if (wraps != 1) {
    fail("complete", -1, "normals do not complete a single rotation");
    return rep;
  }

  auto verts = vertices(p);
  for (int i = 0; i < n; ++i) {
    Rat len = edge_length(p, i);
    if (len <= 0) fail("edge", i, "facet supports no edge of positive length");
  }
  for (int i = 0; i < n && rep.ok; ++i)
    for (int j = 0; j < n; ++j) {
      Rat lhs = verts[i][0] * p.normals[j][0] + verts[i][1] * p.normals[j][1];
      if (lhs > p.supports[j]) {
        fail("convex", i, "vertex violates a facet inequality");
        break;
      }
    }
  return rep;
}

void require_valid(const MomentPolytope& p) {
  auto rep = validate_delzant(p);
  if (!rep.ok)
    throw std::invalid_argument("invalid polytope: " +
                                rep.violations.front().check + " at facet " +
                                std::to_string(rep.violations.front().index));
}

std::vector<RatPoint> vertices(const MomentPolytope& p) {
  int n = p.n();
  std::vector<RatPoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec2& a = p.normal(i);
    const Vec2& b = p.normal(i + 1);
    long long d = det2(a, b);
    if (d == 0)
      throw std::invalid_argument("parallel adjacent normals at facet " +
                                  std::to_string(i));
    const Rat &ka = p.support(i), &kb = p.support(i + 1);
    out.push_back({(ka * b[1] - kb * a[1]) / d, (kb * a[0] - ka * b[0]) / d});
  }
  return out;
}

RatPoint centroid(const MomentPolytope& p) {
  auto v = vertices(p);
  int n = p.n();
  Rat area2(0), cx(0), cy(0);
  for (int i = 0; i < n; ++i) {
    const RatPoint& a = v[i];
    const RatPoint& b = v[(i + 1) % n];
    Rat cross = a[0] * b[1] - b[0] * a[1];
    area2 += cross;
    cx += (a[0] + b[0]) * cross;
    cy += (a[1] + b[1]) * cross;
  }
  if (area2 == 0) throw std::invalid_argument("degenerate polygon");
  return {cx / (3 * area2), cy / (3 * area2)};
}

MomentPolytope normalize_supports(const MomentPolytope& p) {
  RatPoint c = centroid(p);
  MomentPolytope q = p;
  for (int i = 0; i < p.n(); ++i)
    q.supports[i] -= c[0] * p.normals[i][0] + c[1] * p.normals[i][1];
  return q;
}

MomentPolytope reflect(const MomentPolytope& p) {
  MomentPolytope q;
  int n = p.n();
  for (int i = n - 1; i >= 0; --i) {
    q.normals.push_back({p.normals[i][0], -p.normals[i][1]});
    q.supports.push_back(p.supports[i]);
    if (!p.labels.empty()) q.labels.push_back(p.labels[i]);
  }
  return q;
}

Rat edge_length(const MomentPolytope& p, int i) {
  auto v = vertices(p);
  int n = p.n();
  const RatPoint& from = v[((i - 1) % n + n) % n];
  const RatPoint& to = v[((i) % n + n) % n];
  Rat dx = to[0] - from[0], dy = to[1] - from[1];
  const Vec2& nor = p.normal(i);
  // Primitive edge direction for the det = -1 listing sense; the +1 sense
  // flips it, matching the reversed traversal.
  long long sense = det2(p.normal(0), p.normal(1));
  Vec2 dir{nor[1], -nor[0]};
  if (sense > 0) dir = {-nor[1], nor[0]};
  if (dir[0] != 0) return dx / dir[0];
  return dy / dir[1];
}

Fan fan_of(const MomentPolytope& p) {
  Fan f;
  f.dimension = 2;
  for (const Vec2& v : p.normals) f.rays.push_back({v[0], v[1], 0});
  for (int i = 0; i < p.n(); ++i)
    f.max_cones.push_back({i, (i + 1) % p.n()});
  return f;
}

namespace {

Rat det3(const std::array<Vec3, 3>& m) {
  Rat d(0);
  d += Rat(m[0][0]) * (Rat(m[1][1]) * m[2][2] - Rat(m[1][2]) * m[2][1]);
  d -= Rat(m[0][1]) * (Rat(m[1][0]) * m[2][2] - Rat(m[1][2]) * m[2][0]);
  d += Rat(m[0][2]) * (Rat(m[1][0]) * m[2][1] - Rat(m[1][1]) * m[2][0]);
  return d;
}

}  // namespace

Fan fan_of(const Polytope3& p) {
  int n = static_cast<int>(p.normals.size());
  Fan f;
  f.dimension = 3;
  f.rays = p.normals;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Rat d = det3({p.normals[a], p.normals[b], p.normals[c]});
        if (d == 0) continue;
        // Common point of the three facet planes, by Cramer's rule.
        std::array<std::array<Rat, 3>, 3> m;
        for (int j = 0; j < 3; ++j) {
          m[0][j] = p.normals[a][j];
          m[1][j] = p.normals[b][j];
          m[2][j] = p.normals[c][j];
        }
        std::array<Rat, 3> rhs{p.supports[a], p.supports[b], p.supports[c]};
        std::array<Rat, 3> x;
        for (int col = 0; col < 3; ++col) {
          std::array<std::array<Rat, 3>, 3> num = m;
          for (int r = 0; r < 3; ++r) num[r][col] = rhs[r];
          Rat dd(0);
          dd += num[0][0] * (num[1][1] * num[2][2] - num[1][2] * num[2][1]);
          dd -= num[0][1] * (num[1][0] * num[2][2] - num[1][2] * num[2][0]);
          dd += num[0][2] * (num[1][0] * num[2][1] - num[1][1] * num[2][0]);
          x[col] = dd / d;
        }
        bool inside = true;
        int active = 0;
        for (int j = 0; j < n && inside; ++j) {
          Rat lhs = x[0] * p.normals[j][0] + x[1] * p.normals[j][1] +
                    x[2] * p.normals[j][2];
          if (lhs > p.supports[j]) inside = false;
          if (lhs == p.supports[j]) ++active;
        }
        if (!inside) continue;
        if (active != 3)
          throw std::invalid_argument("non-simple vertex in 3-d polytope");
        f.max_cones.push_back({a, b, c});
      }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  f.max_cones.erase(std::unique(f.max_cones.begin(), f.max_cones.end()),
                    f.max_cones.end());
  return f;
}

std::vector<std::vector<int>> primitive_collections(const Fan& f) {
  int n = static_cast<int>(f.rays.size());
  std::vector<std::set<int>> cones;
  for (const auto& c : f.max_cones) cones.emplace_back(c.begin(), c.end());
  auto is_face = [&](const std::vector<int>& s) {
    for (const auto& c : cones)
      if (std::all_of(s.begin(), s.end(),
                      [&](int r) { return c.count(r) > 0; }))
        return true;
    return false;
  };
  std::vector<std::vector<int>> out;
  int max_size = f.dimension + 1;
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int start, int size) {
    if (static_cast<int>(subset.size()) == size) {
      if (is_face(subset)) return;
      // minimal: every proper subset obtained by dropping one element is a face
      for (size_t d = 0; d < subset.size(); ++d) {
        std::vector<int> sub;
        for (size_t j = 0; j < subset.size(); ++j)
          if (j != d) sub.push_back(subset[j]);
        if (!is_face(sub)) return;
      }
      out.push_back(subset);
      return;
    }
    for (int r = start; r < n; ++r) {
      subset.push_back(r);
      rec(r + 1, size);
      subset.pop_back();
    }
  };
  for (int size = 2; size <= max_size; ++size) rec(0, size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Wall> fan_walls(const Fan& f) {
  std::map<std::vector<int>, std::vector<int>> incidence;
  for (size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& rays = f.max_cones[c];
    for (size_t drop = 0; drop < rays.size(); ++drop) {
      std::vector<int> wall;
      for (size_t j = 0; j < rays.size(); ++j)
        if (j != drop) wall.push_back(rays[j]);
      std::sort(wall.begin(), wall.end());
      incidence[wall].push_back(static_cast<int>(c));
    }
  }
  std::vector<Wall> out;
  for (const auto& [rays, cones] : incidence) {
    if (cones.size() != 2)
      throw std::invalid_argument("fan is not complete: wall with " +
                                  std::to_string(cones.size()) + " cones");
    out.push_back({rays, cones[0], cones[1]});
  }
  return out;
}

}  // namespace toric
