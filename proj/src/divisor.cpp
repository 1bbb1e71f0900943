#include "toric/divisor.hpp"

#include <stdexcept>

#include "toric/linalg.hpp"

namespace toric {

CurveClass curve_add(const CurveClass& a, const CurveClass& b) {
  CurveClass out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CurveClass curve_scale(const CurveClass& a, long long k) {
  CurveClass out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

bool in_kernel(const MomentPolytope& p, const CurveClass& c) {
  long long x = 0, y = 0;
  for (int i = 0; i < p.n(); ++i) {
    x += c[i] * p.normals[i][0];
    y += c[i] * p.normals[i][1];
  }
  return x == 0 && y == 0;
}

long long self_intersection_d(const MomentPolytope& p, int i) {
  Vec2 s{p.normal(i - 1)[0] + p.normal(i + 1)[0],
         p.normal(i - 1)[1] + p.normal(i + 1)[1]};
  const Vec2& v = p.normal(i);
  // s = d * v for a unique integer d; anything else is a smoothness failure.
  if (v[0] != 0) {
    if (s[0] % v[0] != 0) throw std::invalid_argument("non-smooth at facet");
    long long d = s[0] / v[0];
    if (s[1] != d * v[1]) throw std::invalid_argument("non-smooth at facet");
    return d;
  }
  if (s[0] != 0 || s[1] % v[1] != 0)
    throw std::invalid_argument("non-smooth at facet");
  return s[1] / v[1];
}

CurveClass facet_class(const MomentPolytope& p, int i) {
  CurveClass c(p.n(), 0);
  c[p.cyc(i - 1)] += 1;
  c[p.cyc(i + 1)] += 1;
  c[p.cyc(i)] -= self_intersection_d(p, i);
  return c;
}

long long chern_number(const CurveClass& c) {
  long long s = 0;
  for (long long a : c) s += a;
  return s;
}

Rat symplectic_area(const MomentPolytope& p, const CurveClass& c) {
  Rat s(0);
  for (int i = 0; i < p.n(); ++i) s += Rat(c[i]) * p.supports[i];
  return s;
}

Classification classify(const MomentPolytope& p) {
  Classification out;
  bool all_pos = true, all_nonneg = true;
  for (int i = 0; i < p.n(); ++i) {
    FacetReport r;
    r.index = i;
    r.d = self_intersection_d(p, i);
    r.self_intersection = -r.d;
    r.cls = facet_class(p, i);
    r.chern = chern_number(r.cls);
    r.area = symplectic_area(p, r.cls);
    if (r.chern <= 0) all_pos = false;
    if (r.chern < 0) all_nonneg = false;
    out.facets.push_back(std::move(r));
  }
  out.kind = all_pos ? NefClass::Fano
                     : (all_nonneg ? NefClass::NefNotFano : NefClass::NonNef);
  return out;
}

std::string nef_class_name(NefClass c) {
  switch (c) {
    case NefClass::Fano:
      return "Fano";
    case NefClass::NefNotFano:
      return "NEF-not-Fano";
    default:
      return "non-NEF";
  }
}

std::vector<CurveClass> h2_basis(const MomentPolytope& p) {
  std::vector<std::vector<long long>> m(2, std::vector<long long>(p.n()));
  for (int i = 0; i < p.n(); ++i) {
    m[0][i] = p.normals[i][0];
    m[1][i] = p.normals[i][1];
  }
  return integer_kernel(m);
}

}  // namespace toric
