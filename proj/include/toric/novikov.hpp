#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Homological series have finitely many terms above any exponent bound, so
// the leading term sits at the maximal t-exponent and tails extend downward.
// Cohomological series are the mirror image.  The two are deliberately kept
// apart: mixing them is always a bug.
enum class Direction { Homological, Cohomological };

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Term key: t-exponent and q-power.
struct QT {
  Rat t;
  int q = 0;
  bool operator<(const QT& o) const {
    if (t != o.t) return t < o.t;
    return q < o.q;
  }
  bool operator==(const QT& o) const { return t == o.t && q == o.q; }
};

// Truncated element of the Novikov coefficient ring.
//
// `guard` is the absolute completeness bound: a homological series is exact
// for every exponent >= guard (terms below it were dropped); a cohomological
// one for every exponent <= guard.  No guard means the series is exact.
class NovikovSeries {
 public:
  explicit NovikovSeries(Direction d = Direction::Homological) : dir(d) {}

  static NovikovSeries monomial(Direction d, const Rat& coeff, const Rat& t,
                                int q = 0);
  static NovikovSeries one(Direction d) {
    return monomial(d, 1, 0, 0);
  }

  Direction dir;
  std::map<QT, Rat> terms;
  std::optional<Rat> guard;

  bool is_zero() const { return terms.empty(); }
  // Leading exponent of the stored terms (max for homological).
  Rat lead() const;
  // Upper bound for the true leading exponent, guard included.
  Rat lead_bound() const;
  const Rat* coeff(const Rat& t, int q) const;

  NovikovSeries& prune();  // drop zero coefficients and guarded-out terms

  friend NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b);
  friend NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b);
  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);
  NovikovSeries operator-() const;
  NovikovSeries scaled(const Rat& c) const;
  // Multiplies by the monomial c * q^qpow * t^texp.
  NovikovSeries shifted(const Rat& c, const Rat& texp, int qpow) const;

  bool operator==(const NovikovSeries& o) const {
    return dir == o.dir && terms == o.terms;
  }
};

// 1 + t^{-a} + t^{-2a} + ... down to the window E (homological), or the
// mirrored expansion of 1/(1-t^{a}) for cohomological series.
NovikovSeries geom_expand(const Rat& a, const Rat& window,
                          Direction dir = Direction::Homological);

// Inverse of a series whose unique extremal term is a single monomial.
NovikovSeries invert_unit(const NovikovSeries& s, const Rat& window);

// Compares all terms within `window` of the larger leading exponent.
bool eq_upto(const NovikovSeries& a, const NovikovSeries& b, const Rat& window);

// Canonical rendering: decreasing t-exponent, then q-degree; rationals "p/q".
std::string render(const NovikovSeries& s);

// ---------------------------------------------------------------------------
// Quantum classes: homology-basis-indexed bundles of Novikov series.

struct ClassKey {
  enum class Kind { Fundamental, Curve, Point };
  Kind kind = Kind::Curve;
  std::vector<long long> tuple;  // curve classes only

  static ClassKey fundamental() { return {Kind::Fundamental, {}}; }
  static ClassKey point() { return {Kind::Point, {}}; }
  static ClassKey curve(std::vector<long long> t) {
    return {Kind::Curve, std::move(t)};
  }
  bool operator<(const ClassKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    return tuple < o.tuple;
  }
  bool operator==(const ClassKey& o) const {
    return kind == o.kind && tuple == o.tuple;
  }
};

class QuantumClass {
 public:
  explicit QuantumClass(Direction d = Direction::Homological) : dir(d) {}

  Direction dir;
  std::map<ClassKey, NovikovSeries> comps;

  void add_term(const ClassKey& k, const NovikovSeries& s);
  QuantumClass& prune();

  friend QuantumClass operator+(const QuantumClass& a, const QuantumClass& b);
  friend QuantumClass operator-(const QuantumClass& a, const QuantumClass& b);
  QuantumClass shifted(const Rat& c, const Rat& texp, int qpow) const;

  bool is_zero() const { return comps.empty(); }
};

bool eq_upto(const QuantumClass& a, const QuantumClass& b, const Rat& window);

// Renders with a caller-supplied name for each class key.
std::string render(const QuantumClass& qc,
                   const std::function<std::string(const ClassKey&)>& name);

}  // namespace toric
