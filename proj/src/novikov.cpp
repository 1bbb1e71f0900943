#include "toric/novikov.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace toric {

namespace {

// Directional comparison: "a is further from the tail than b".
bool better(Direction dir, const Rat& a, const Rat& b) {
  return dir == Direction::Homological ? a > b : a < b;
}

std::optional<Rat> worse_of(Direction dir, const std::optional<Rat>& a,
                            const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return better(dir, *a, *b) ? *a : *b;
}

}  // namespace

NovikovSeries NovikovSeries::monomial(Direction d, const Rat& coeff,
                                      const Rat& t, int q) {
  NovikovSeries s(d);
  if (coeff != 0) s.terms[{t, q}] = coeff;
  return s;
}

Rat NovikovSeries::lead() const {
  if (terms.empty()) throw SeriesError("lead of zero series");
  return dir == Direction::Homological ? terms.rbegin()->first.t
                                       : terms.begin()->first.t;
}

Rat NovikovSeries::lead_bound() const {
  if (terms.empty()) {
    if (!guard) throw SeriesError("lead bound of exact zero");
    return *guard;
  }
  Rat l = lead();
  if (guard && better(dir, *guard, l)) return *guard;
  return l;
}

const Rat* NovikovSeries::coeff(const Rat& t, int q) const {
  auto it = terms.find({t, q});
  return it == terms.end() ? nullptr : &it->second;
}

NovikovSeries& NovikovSeries::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    bool drop = it->second == 0;
    if (!drop && guard) {
      drop = dir == Direction::Homological ? it->first.t < *guard
                                           : it->first.t > *guard;
    }
    it = drop ? terms.erase(it) : ++it;
  }
  return *this;
}

NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b) {
  if (a.dir != b.dir) throw SeriesError("direction mismatch in add");
  NovikovSeries out = a;
  for (const auto& [k, c] : b.terms) out.terms[k] += c;
  out.guard = worse_of(a.dir, a.guard, b.guard);
  return out.prune();
}

NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b) {
  return a + b.scaled(-1);
}

NovikovSeries NovikovSeries::operator-() const { return scaled(-1); }

NovikovSeries NovikovSeries::scaled(const Rat& c) const {
  NovikovSeries out(dir);
  out.guard = guard;
  if (c == 0) return out;
  for (const auto& [k, v] : terms) out.terms[k] = v * c;
  return out;
}

NovikovSeries NovikovSeries::shifted(const Rat& c, const Rat& texp,
                                     int qpow) const {
  NovikovSeries out(dir);
  if (guard) out.guard = *guard + texp;
  if (c == 0) return out;
  for (const auto& [k, v] : terms) out.terms[{k.t + texp, k.q + qpow}] = v * c;
  return out;
}

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
  if (a.dir != b.dir) throw SeriesError("direction mismatch in mul");
  NovikovSeries out(a.dir);
  // Missing terms of one factor meet at worst the leading bound of the other.
  std::optional<Rat> g;
  if (a.guard && !b.is_zero()) g = *a.guard + b.lead_bound();
  if (b.guard && !a.is_zero()) {
    Rat h = *b.guard + a.lead_bound();
    g = g ? (better(a.dir, *g, h) ? *g : h) : h;
  }
  if (a.is_zero() && a.guard && b.is_zero() && b.guard)
    g = *a.guard + *b.guard;
  out.guard = g;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms)
      out.terms[{ka.t + kb.t, ka.q + kb.q}] += ca * cb;
  return out.prune();
}

NovikovSeries geom_expand(const Rat& a, const Rat& window, Direction dir) {
  if (a <= 0) throw SeriesError("geom_expand needs a positive area");
  NovikovSeries out(dir);
  long long kmax = rat_floor_div(window, a);
  for (long long k = 0; k <= kmax; ++k) {
    Rat e = a * k;
    out.terms[{dir == Direction::Homological ? -e : e, 0}] = 1;
  }
  out.guard = dir == Direction::Homological ? -window : window;
  return out;
}

NovikovSeries invert_unit(const NovikovSeries& s, const Rat& window) {
  if (s.is_zero()) throw SeriesError("cannot invert zero");
  Rat l = s.lead();
  int count = 0;
  QT lead_key{l, 0};
  for (const auto& [k, c] : s.terms)
    if (k.t == l) {
      ++count;
      lead_key = k;
    }
  if (count != 1)
    throw SeriesError("leading term is not a single monomial");
  Rat lc = s.terms.at(lead_key);

  Rat win = window;
  if (s.guard) {
    Rat have = s.dir == Direction::Homological ? l - *s.guard : *s.guard - l;
    if (have < win) win = have;
  }
  // s = lead * (1 + r) with r strictly below the window origin.
  NovikovSeries r = s.shifted(Rat(1) / lc, -lead_key.t, -lead_key.q);
  r.terms.erase({Rat(0), 0});
  NovikovSeries acc = NovikovSeries::one(s.dir);
  NovikovSeries pow = NovikovSeries::one(s.dir);
  Rat origin(0);
  while (!r.is_zero()) {
    pow = pow * r;
    pow.guard = s.dir == Direction::Homological ? -win : win;
    pow.prune();
    if (pow.is_zero()) break;
    acc = acc + pow;
  }
  acc.guard = s.dir == Direction::Homological ? -win : win;
  acc.prune();
  return acc.shifted(Rat(1) / lc, -lead_key.t, -lead_key.q);
}

bool eq_upto(const NovikovSeries& a, const NovikovSeries& b,
             const Rat& window) {
  if (a.dir != b.dir) throw SeriesError("direction mismatch in eq_upto");
  if (a.is_zero() && b.is_zero()) return true;
  Rat l;
  if (a.is_zero())
    l = b.lead();
  else if (b.is_zero())
    l = a.lead();
  else
    l = better(a.dir, a.lead(), b.lead()) ? a.lead() : b.lead();
  Rat bound = a.dir == Direction::Homological ? l - window : l + window;
  auto in_range = [&](const Rat& t) {
    return a.dir == Direction::Homological ? t >= bound : t <= bound;
  };
  for (const auto& [k, c] : a.terms) {
    if (!in_range(k.t)) continue;
    const Rat* o = b.coeff(k.t, k.q);
    if (!o || *o != c) return false;
  }
  for (const auto& [k, c] : b.terms) {
    if (!in_range(k.t)) continue;
    const Rat* o = a.coeff(k.t, k.q);
    if (!o || *o != c) return false;
  }
  return true;
}

std::string render(const NovikovSeries& s) {
  if (s.terms.empty()) return "0";
  // Decreasing t-exponent, then increasing q-degree.
  std::vector<std::pair<QT, Rat>> items(s.terms.begin(), s.terms.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.t != y.first.t) return x.first.t > y.first.t;
    return x.first.q < y.first.q;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : items) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (a != 1 || (k.q == 0 && k.t == 0)) factors.push_back(rat_str(a));
    if (k.q == 1)
      factors.push_back("q");
    else if (k.q != 0)
      factors.push_back("q^" + std::to_string(k.q));
    if (k.t != 0) factors.push_back("t^{" + rat_str(k.t) + "}");
    for (size_t i = 0; i < factors.size(); ++i)
      out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

void QuantumClass::add_term(const ClassKey& k, const NovikovSeries& s) {
  auto it = comps.find(k);
  if (it == comps.end()) {
    if (!s.is_zero() || s.guard) comps.emplace(k, s);
  } else {
    it->second = it->second + s;
  }
  prune();
}

QuantumClass& QuantumClass::prune() {
  for (auto it = comps.begin(); it != comps.end();) {
    it->second.prune();
    it = (it->second.is_zero() && !it->second.guard) ? comps.erase(it) : ++it;
  }
  return *this;
}

QuantumClass operator+(const QuantumClass& a, const QuantumClass& b) {
  QuantumClass out = a;
  for (const auto& [k, s] : b.comps) out.add_term(k, s);
  return out.prune();
}

QuantumClass operator-(const QuantumClass& a, const QuantumClass& b) {
  QuantumClass out = a;
  for (const auto& [k, s] : b.comps) out.add_term(k, s.scaled(-1));
  return out.prune();
}

QuantumClass QuantumClass::shifted(const Rat& c, const Rat& texp,
                                   int qpow) const {
  QuantumClass out(dir);
  for (const auto& [k, s] : comps) out.comps[k] = s.shifted(c, texp, qpow);
  return out.prune();
}

bool eq_upto(const QuantumClass& a, const QuantumClass& b, const Rat& window) {
  // Window measured from the overall leading exponent.
  std::optional<Rat> l;
  for (const auto* qc : {&a, &b})
    for (const auto& [k, s] : qc->comps)
      if (!s.is_zero() && (!l || better(a.dir, s.lead(), *l))) l = s.lead();
  if (!l) return true;
  Rat bound = a.dir == Direction::Homological ? *l - window : *l + window;
  auto check = [&](const QuantumClass& x, const QuantumClass& y) {
    for (const auto& [k, s] : x.comps) {
      NovikovSeries other(a.dir);
      auto it = y.comps.find(k);
      if (it != y.comps.end()) other = it->second;
      for (const auto& [qt, c] : s.terms) {
        bool in = a.dir == Direction::Homological ? qt.t >= bound
                                                  : qt.t <= bound;
        if (!in) continue;
        const Rat* o = other.coeff(qt.t, qt.q);
        if (!o || *o != c) return false;
      }
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

std::string render(const QuantumClass& qc,
                   const std::function<std::string(const ClassKey&)>& name) {
  if (qc.comps.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, s] : qc.comps) {
    if (!first) out << " + ";
    first = false;
    out << name(k) << " (x) [" << render(s) << "]";
  }
  return out.str();
}

}  // namespace toric
