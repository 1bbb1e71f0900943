#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "toric/novikov.hpp"

using namespace toric;

namespace {

NovikovSeries random_series(std::mt19937& rng, int nterms) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), q(-2, 2);
  NovikovSeries s(Direction::Homological);
  for (int i = 0; i < nterms; ++i) {
    Rat t = Rat(num(rng), den(rng));
    Rat c = Rat(num(rng), den(rng) + 1);
    if (c == 0) c = 1;
    s.terms[{t, q(rng)}] = c;
  }
  s.prune();
  return s;
}

// Brute-force convolution, independent of the map-based implementation.
NovikovSeries naive_mul(const NovikovSeries& a, const NovikovSeries& b) {
  NovikovSeries out(a.dir);
  std::vector<std::pair<QT, Rat>> av(a.terms.begin(), a.terms.end());
  std::vector<std::pair<QT, Rat>> bv(b.terms.begin(), b.terms.end());
  for (const auto& [ka, ca] : av)
    for (const auto& [kb, cb] : bv) {
      QT k{ka.t + kb.t, ka.q + kb.q};
      out.terms[k] += ca * cb;
    }
  return out.prune();
}

}  // namespace

TEST_CASE("geometric expansion and unit inversion") {
  // a=1, E=3: 1 + t^{-1} + t^{-2} + t^{-3}
  auto g = geom_expand(1, 3);
  CHECK(g.terms.size() == 4);
  CHECK(*g.coeff(Rat(-3), 0) == 1);
  CHECK(*g.coeff(Rat(0), 0) == 1);

  // (1 - t^{-a}) * geom(a) == 1 up to the window, any rational a > 0
  for (Rat a : {Rat(1), Rat(1, 2), Rat(3, 7)}) {
    auto one_minus =
        NovikovSeries::one(Direction::Homological) -
        NovikovSeries::monomial(Direction::Homological, 1, -a);
    auto prod = one_minus * geom_expand(a, 5);
    CHECK(eq_upto(prod, NovikovSeries::one(Direction::Homological), 5));
  }

  // invert(1 - t^{-a}) == geom(a)
  auto inv = invert_unit(NovikovSeries::one(Direction::Homological) -
                             NovikovSeries::monomial(Direction::Homological,
                                                     1, Rat(-1, 2)),
                         4);
  CHECK(eq_upto(inv, geom_expand(Rat(1, 2), 4), 4));

  // invert(q t^{1/2}) = q^{-1} t^{-1/2}
  auto m = NovikovSeries::monomial(Direction::Homological, 1, Rat(1, 2), 1);
  auto mi = invert_unit(m, 3);
  CHECK(*mi.coeff(Rat(-1, 2), -1) == 1);
  CHECK(mi.terms.size() == 1);

  CHECK_THROWS_AS(geom_expand(Rat(-1), 3), SeriesError);
}

TEST_CASE("q t^{1/2} squared") {
  auto m = NovikovSeries::monomial(Direction::Homological, 1, Rat(1, 2), 1);
  auto sq = m * m;
  CHECK(sq.terms.size() == 1);
  CHECK(*sq.coeff(Rat(1), 2) == 1);
}

TEST_CASE("geom product counts lattice solutions") {
  // coefficient of t^{-x} in geom(a)*geom(b) counts k*a + l*b = x
  Rat a(1, 2), b(1, 3), E(4);
  auto prod = geom_expand(a, E) * geom_expand(b, E);
  for (const auto& [k, c] : prod.terms) {
    Rat x = -k.t;
    long long count = 0;
    for (long long i = 0; Rat(i) * a <= x; ++i)
      for (long long j = 0; Rat(i) * a + Rat(j) * b <= x; ++j)
        if (Rat(i) * a + Rat(j) * b == x) ++count;
    CHECK(Rat(count) == c);
  }
}

TEST_CASE("product matches brute-force convolution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_series(rng, 20);
    auto b = random_series(rng, 20);
    CHECK((a * b).terms == naive_mul(a, b).terms);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_series(rng, 8);
    auto b = random_series(rng, 8);
    auto c = random_series(rng, 8);
    CHECK((a * b).terms == (b * a).terms);
    CHECK(((a * b) * c).terms == (a * (b * c)).terms);
    CHECK((a * (b + c)).terms == (a * b + a * c).terms);
  }
}

TEST_CASE("direction mismatch is rejected") {
  NovikovSeries h(Direction::Homological), c(Direction::Cohomological);
  h.terms[{Rat(0), 0}] = 1;
  c.terms[{Rat(0), 0}] = 1;
  CHECK_THROWS_AS(h + c, SeriesError);
  CHECK_THROWS_AS(h * c, SeriesError);
}

TEST_CASE("round-trip inversion") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    NovikovSeries s = random_series(rng, 6);
    // force a unique single-monomial leading term
    s.terms[{Rat(10), 1}] = Rat(3, 2);
    auto inv = invert_unit(s, 5);
    CHECK(eq_upto(invert_unit(inv, 5), s, 5));
    CHECK(eq_upto(s * inv, NovikovSeries::one(Direction::Homological), 5));
  }
}

TEST_CASE("eq_upto semantics") {
  auto g = geom_expand(1, 6);
  CHECK(eq_upto(g, g, 6));
  auto h = g;
  h.terms[{Rat(-2), 0}] += 1;
  CHECK(!eq_upto(g, h, 6));
  // windowed comparison ignores deep disagreement
  CHECK(eq_upto(g, h, 1));
  // agree with exact equality on finite series within window
  NovikovSeries a(Direction::Homological), b(Direction::Homological);
  a.terms[{Rat(0), 0}] = 1;
  b.terms[{Rat(0), 0}] = 1;
  CHECK(eq_upto(a, b, 100));
}

TEST_CASE("cutoff soundness: truncate-then-multiply") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 12);
    auto b = random_series(rng, 12);
    if (a.is_zero() || b.is_zero()) continue;
    Rat E(3);
    auto exact = a * b;
    NovikovSeries ta = a, tb = b;
    ta.guard = a.lead() - E;
    tb.guard = b.lead() - E;
    ta.prune();
    tb.prune();
    auto trunc = ta * tb;
    // every term the truncated product claims complete must match
    for (const auto& [k, c] : trunc.terms) {
      if (trunc.guard && k.t < *trunc.guard) continue;
      const Rat* e = exact.coeff(k.t, k.q);
      CHECK(e != nullptr);
      if (e) CHECK(*e == c);
    }
  }
}

TEST_CASE("rendering is canonical") {
  NovikovSeries s(Direction::Homological);
  s.terms[{Rat(3, 2), 1}] = 1;
  s.terms[{Rat(-1), 2}] = -2;
  CHECK(render(s) == "q*t^{3/2} - 2*q^2*t^{-1}");
  NovikovSeries z(Direction::Homological);
  CHECK(render(z) == "0");
  NovikovSeries c(Direction::Homological);
  c.terms[{Rat(0), 0}] = Rat(-5, 3);
  CHECK(render(c) == "-5/3");
}
