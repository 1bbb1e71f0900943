#include "toric/seidel.hpp"

#include <sstream>

namespace toric {

std::string seidel_code_name(SeidelCode c) {
  switch (c) {
    case SeidelCode::C1: return "1";
    case SeidelCode::C2a: return "2a";
    case SeidelCode::C2b: return "2b";
    case SeidelCode::C2c: return "2c";
    case SeidelCode::C2d: return "2d";
    case SeidelCode::C3a: return "3a";
    case SeidelCode::C3b: return "3b";
    case SeidelCode::C3c: return "3c";
    case SeidelCode::C3d: return "3d";
    case SeidelCode::C3e: return "3e";
  }
  return "?";
}

SeidelCase dispatch_case(const MomentPolytope& p, int m) {
  require_valid(p);
  if (p.n() < 4) throw UncoveredPattern("need at least 4 facets");
  auto cls = classify(p);
  if (cls.kind == NefClass::NonNef) throw NotNef("polytope is not NEF");

  auto z = [&](int off) {
    return cls.facets[p.cyc(m + off)].chern == 0;
  };

  // Symmetric patterns first.
  if (!z(0) && !z(-1) && !z(1)) return {SeidelCode::C1, false, 1};
  if (z(0) && !z(-1) && !z(1)) return {SeidelCode::C2a, false, 1};
  if (z(-1) && z(0) && z(1) && !z(-2) && !z(2))
    return {SeidelCode::C2d, false, 1};
  if (!z(0) && z(-1) && z(1) && !z(-2) && !z(2))
    return {SeidelCode::C3c, false, 1};

  // One-sided runs: the 2-family base orientation runs forward, the
  // 3-family base runs backward; the other side is the mirrored match.
  for (int s : {1, -1}) {
    if (z(0) && z(s) && !z(-s) && !z(2 * s))
      return {SeidelCode::C2b, s != 1, s};
    if (z(0) && z(s) && z(2 * s) && !z(-s) && !z(3 * s))
      return {SeidelCode::C2c, s != 1, s};
  }
  for (int s : {-1, 1}) {
    if (!z(0) && z(s) && !z(2 * s) && !z(-s))
      return {SeidelCode::C3a, s != -1, s};
    if (!z(0) && z(s) && z(2 * s) && !z(3 * s) && !z(-s))
      return {SeidelCode::C3b, s != -1, s};
    if (!z(0) && z(s) && z(2 * s) && z(3 * s) && !z(4 * s) && !z(-s))
      return {SeidelCode::C3d, s != -1, s};
    if (!z(0) && z(-s) && z(s) && z(2 * s) && !z(3 * s) && !z(-2 * s))
      return {SeidelCode::C3e, s != -1, s};
  }
  throw UncoveredPattern("chern-vanishing pattern not covered at facet " +
                         std::to_string(m));
}

namespace {

struct TermSpec {
  int coeff;                 // +1 or -1
  int offset;                // class A_{m + dir*offset}
  std::vector<int> shift;    // shift = -sum of w_{offset} entries listed
  std::vector<std::vector<int>> factors;  // each factor: w-sum over offsets
};

// Closed-form tables in the forward orientation; `dir` flips every offset.
std::vector<TermSpec> term_table(SeidelCode code) {
  switch (code) {
    case SeidelCode::C1:
      return {{1, 0, {}, {}}};
    case SeidelCode::C2a:
      return {{1, 0, {}, {{0}}}};
    case SeidelCode::C2b:
      return {{1, 0, {}, {{0}, {0, 1}}},
              {-1, 1, {1}, {{1}, {0, 1}}}};
    case SeidelCode::C2c:
      return {{1, 0, {}, {{0}, {0, 1}, {0, 1, 2}}},
              {-1, 1, {1}, {{1}, {0, 1}, {0, 1, 2}}},
              {-1, 1, {1, 2}, {{1}, {1, 2}, {0, 1, 2}}},
              {1, 2, {1, 2, 2}, {{2}, {1, 2}, {0, 1, 2}}}};
    case SeidelCode::C2d:
      return {{1, 0, {}, {{0}, {0, -1}, {0, -1, 1}}},
              {-1, -1, {-1}, {{-1}, {0, -1}, {0, -1, 1}}},
              {1, 0, {}, {{0}, {0, 1}, {0, -1, 1}}},
              {-1, 1, {1}, {{1}, {0, 1}, {0, -1, 1}}},
              {-1, 0, {}, {{0}, {0, -1, 1}}}};
    case SeidelCode::C3a:
      return {{1, 0, {}, {}}, {-1, 1, {1}, {{1}}}};
    case SeidelCode::C3b:
      return {{1, 0, {}, {}},
              {-1, 1, {1}, {{1}}},
              {-1, 1, {1, 2}, {{1}, {1, 2}}},
              {1, 2, {1, 2, 2}, {{2}, {1, 2}}}};
    case SeidelCode::C3c:
      return {{1, 0, {}, {}},
              {-1, -1, {-1}, {{-1}}},
              {-1, 1, {1}, {{1}}}};
    case SeidelCode::C3d:
      return {{1, 0, {}, {}},
              {-1, 1, {1}, {{1}}},
              {-1, 1, {1, 2}, {{1}, {1, 2}}},
              {1, 2, {1, 2, 2}, {{2}, {1, 2}}},
              {-1, 1, {1, 2, 3}, {{1}, {1, 2, 3}, {1, 2}}},
              {1, 2, {1, 2, 2, 3}, {{2}, {1, 2, 3}, {1, 2}}},
              {1, 2, {1, 2, 2, 3, 3}, {{2}, {2, 3}, {1, 2, 3}}},
              {-1, 3, {1, 2, 2, 3, 3, 3}, {{3}, {2, 3}, {1, 2, 3}}}};
    case SeidelCode::C3e:
      return {{1, 0, {}, {}},
              {-1, -1, {-1}, {{-1}}},
              {-1, 1, {1}, {{1}}},
              {-1, 1, {1, 2}, {{1}, {1, 2}}},
              {1, 2, {1, 2, 2}, {{2}, {1, 2}}}};
  }
  return {};
}

}  // namespace

SeidelElement seidel_element(const MomentPolytope& p, int m, bool normalized) {
  SeidelCase kase = dispatch_case(p, m);
  SeidelElement e;
  e.kase = kase;
  e.facet = p.cyc(m);
  e.phi_max = normalized ? normalize_supports(p).support(m) : p.support(m);

  auto area_at = [&](int off) {
    return symplectic_area(p, facet_class(p, m + kase.dir * off));
  };
  for (const TermSpec& ts : term_table(kase.code)) {
    ClosedTerm t;
    t.coeff = ts.coeff;
    t.cls = facet_class(p, m + kase.dir * ts.offset);
    t.shift = 0;
    for (int o : ts.shift) t.shift -= area_at(o);
    for (const auto& f : ts.factors) {
      Rat w(0);
      for (int o : f) w += area_at(o);
      if (w <= 0)
        throw UncoveredPattern("nonpositive area in a geometric factor");
      t.factors.push_back(w);
    }
    e.closed_form.push_back(std::move(t));
  }
  return e;
}

QuantumClass expand_closed_form(const SeidelElement& e, const Rat& window) {
  QuantumClass out(Direction::Homological);
  for (const ClosedTerm& t : e.closed_form) {
    Rat local = window + t.shift;  // depth left below this term's top
    NovikovSeries s(Direction::Homological);
    if (local >= 0) {
      s = NovikovSeries::one(Direction::Homological);
      for (const Rat& w : t.factors) s = s * geom_expand(w, local);
      s.guard = -local;
      s.prune();
    }
    NovikovSeries shifted = s.shifted(t.coeff, e.phi_max + t.shift, 1);
    shifted.guard = e.phi_max - window;
    out.add_term(ClassKey::curve(t.cls), shifted);
  }
  return out.prune();
}

std::vector<std::pair<CurveClass, CurveClass>> contributions(
    const MomentPolytope& p, int m, const Rat& window) {
  SeidelCase kase = dispatch_case(p, m);
  int s = kase.dir;
  CurveClass an = facet_class(p, m);
  CurveClass a1 = facet_class(p, m + s);
  CurveClass a2 = facet_class(p, m + 2 * s);
  CurveClass am1 = facet_class(p, m - s);
  Rat wn = symplectic_area(p, an);
  Rat w1 = symplectic_area(p, a1);
  Rat w2 = symplectic_area(p, a2);
  Rat wm1 = symplectic_area(p, am1);
  CurveClass zero(p.n(), 0);

  std::vector<std::pair<CurveClass, CurveClass>> out;
  auto neg = [](const CurveClass& c) { return curve_scale(c, -1); };
  switch (kase.code) {
    case SeidelCode::C1:
      out.push_back({zero, an});
      break;
    case SeidelCode::C2a:
      for (long long k = 0; Rat(k) * wn <= window; ++k)
        out.push_back({curve_scale(an, k), an});
      break;
    case SeidelCode::C2b:
      for (long long k = 0; Rat(k) * wn <= window; ++k)
        for (long long l = 0; Rat(k) * wn + Rat(l) * w1 <= window; ++l)
          out.push_back({curve_add(curve_scale(an, k), curve_scale(a1, l)),
                         k >= l ? an : neg(a1)});
      break;
    case SeidelCode::C3a:
      out.push_back({zero, an});
      for (long long k = 1; Rat(k) * w1 <= window; ++k)
        out.push_back({curve_scale(a1, k), neg(a1)});
      break;
    case SeidelCode::C3b:
      out.push_back({zero, an});
      for (long long k = 1; Rat(k) * w1 <= window; ++k)
        out.push_back({curve_scale(a1, k), neg(a1)});
      for (long long k = 1; Rat(k) * w1 <= window; ++k)
        for (long long l = 1; Rat(k) * w1 + Rat(l) * w2 <= window; ++l)
          out.push_back({curve_add(curve_scale(a1, k), curve_scale(a2, l)),
                         k >= l ? neg(a1) : a2});
      break;
    case SeidelCode::C3c:
      out.push_back({zero, an});
      for (long long k = 1; Rat(k) * wm1 <= window; ++k)
        out.push_back({curve_scale(am1, k), neg(am1)});
      for (long long l = 1; Rat(l) * w1 <= window; ++l)
        out.push_back({curve_scale(a1, l), neg(a1)});
      break;
    default:
      throw UncoveredPattern(
          "no tabulated contribution list for case " +
          seidel_code_name(kase.code));
  }
  return out;
}

std::string render_closed_form(
    const SeidelElement& e,
    const std::function<std::string(const CurveClass&)>& name) {
  std::ostringstream out;
  bool first = true;
  for (const ClosedTerm& t : e.closed_form) {
    if (!first) out << " + ";
    first = false;
    out << (t.coeff < 0 ? "- " : "") << name(t.cls) << " (x) q t^{"
        << rat_str(e.phi_max + t.shift) << "}";
    for (const Rat& w : t.factors) out << " / (1 - t^{-" << rat_str(w) << "})";
  }
  return out.str();
}

}  // namespace toric
