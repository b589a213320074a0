#include <doctest.h>

#include "nhm/errors.hpp"
#include "nhm/interval_set.hpp"
#include "nhm/syntax.hpp"
#include "support.hpp"

using namespace nhm;
using nhm::testing::Rng;

namespace {

IntervalSet is(const char* text) { return parse_interval_set(text); }

// Every endpoint, every midpoint between consecutive endpoints and a point
// beyond each end decides membership for a union of open intervals.
std::vector<Rational> probes_for(std::initializer_list<const IntervalSet*> sets) {
  std::vector<Rational> ends;
  for (const auto* s : sets) {
    for (const auto& iv : s->intervals()) {
      if (iv.lo.is_finite()) ends.push_back(iv.lo.value());
      if (iv.hi.is_finite()) ends.push_back(iv.hi.value());
    }
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Rational> out{Rational(0)};
  for (std::size_t i = 0; i < ends.size(); ++i) {
    out.push_back(ends[i]);
    if (i + 1 < ends.size()) out.push_back(Rational((ends[i] + ends[i + 1]) / 2));
  }
  if (!ends.empty()) {
    out.push_back(Rational(ends.front() - 1));
    out.push_back(Rational(ends.back() + 1));
  }
  return out;
}

}  // namespace

TEST_CASE("rationals print in lowest terms") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(ExtRat::neg_inf() < ExtRat(-1000));
  CHECK(ExtRat(1000) < ExtRat::pos_inf());
  CHECK_THROWS_AS(ExtRat::pos_inf().value(), PreconditionError);
}

TEST_CASE("iset_meet examples") {
  CHECK(iset_meet(is("(-1,1)"), is("(0,2)")) == is("(0,1)"));
  CHECK(iset_meet(is("(0,1)u(2,3)"), is("(1/2,5/2)")) == is("(1/2,1)u(2,5/2)"));
  CHECK(iset_meet(is("(0,1)"), is("empty")).empty());
}

TEST_CASE("iset_contains examples") {
  CHECK(iset_contains(is("(0,1)"), make_rational(1, 2)));
  CHECK_FALSE(iset_contains(is("(0,1)"), Rational(1)));
  CHECK(iset_contains(is("(-inf,inf)"), make_rational(-7, 3)));
}

TEST_CASE("iset_dense_in_line examples") {
  CHECK(iset_dense_in_line(is("(-inf,inf)"), FinSet{Rational(0)}));
  CHECK_FALSE(iset_dense_in_line(is("(0,inf)"), {}));
  CHECK(iset_dense_in_line(is("(-inf,0)u(0,inf)"), {}));
}

TEST_CASE("canonical form keeps touching intervals apart") {
  CHECK(to_string(is("(1,2)u(0,1)")) == "(0,1)u(1,2)");
  CHECK(to_string(is("(0,2)u(1,3)")) == "(0,3)");
  CHECK(iset_finite_complement(is("(-inf,0)u(0,inf)")) == FinSet{Rational(0)});
  CHECK_FALSE(iset_finite_complement(is("(0,inf)")).has_value());
}

TEST_CASE("cofinite_meet examples") {
  CHECK(cofinite_meet(CofiniteSet({1}), CofiniteSet({2})) == CofiniteSet({1, 2}));
  CHECK(cofinite_meet(CofiniteSet({1}), CofiniteSet::empty_set()).is_empty());
  CHECK(cofinite_meet(CofiniteSet({1, 2}), CofiniteSet({2, 3})) == CofiniteSet({1, 2, 3}));
}

TEST_CASE("interval set algebra against a pointwise oracle") {
  Rng rng(nhm::testing::kDefaultSeed);
  for (int round = 0; round < 500; ++round) {
    const IntervalSet a = nhm::testing::interval_set(rng);
    const IntervalSet b = nhm::testing::interval_set(rng);
    const IntervalSet c = nhm::testing::interval_set(rng);
    const IntervalSet m = iset_meet(a, b);
    const IntervalSet j = iset_join(a, b);
    CHECK(m == iset_meet(b, a));
    CHECK(iset_meet(a, a) == a);
    CHECK(iset_meet(iset_meet(a, b), c) == iset_meet(a, iset_meet(b, c)));
    CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
    for (const auto& x : probes_for({&a, &b})) {
      CHECK(iset_contains(m, x) == (iset_contains(a, x) && iset_contains(b, x)));
      CHECK(iset_contains(j, x) == (iset_contains(a, x) || iset_contains(b, x)));
    }
    const FinSet holes{nhm::testing::rational(rng), nhm::testing::rational(rng)};
    const IntervalSet r = iset_remove_points(a, holes);
    for (const auto& x : probes_for({&a})) {
      CHECK(iset_contains(r, x) == (iset_contains(a, x) && !holes.contains(x)));
    }
    if (auto x = iset_pick(a, holes)) {
      CHECK(iset_contains(a, *x));
      CHECK_FALSE(holes.contains(*x));
    } else {
      CHECK(a.empty());
    }
  }
}

TEST_CASE("set syntax round trips") {
  for (const char* text : {"empty", "(-inf,inf)", "(0,1)u(2,3)", "(-1/2,0)u(0,inf)"}) {
    CHECK(to_string(is(text)) == text);
  }
  CHECK(to_string(parse_finset("{1/2,0}")) == "{0,1/2}");
  CHECK(to_string(parse_cofinite_set("cofinite-excl{2,1}")) == "cofinite-excl{1,2}");
  CHECK(parse_cofinite_set("cofinite-empty").is_empty());
  CHECK_THROWS_AS(is("(1,0)"), ParseError);
  CHECK_THROWS_AS(is("(0,1"), ParseError);
}
