#include <doctest.h>

#include "nhm/errors.hpp"
#include "nhm/multiline.hpp"
#include "nhm/syntax.hpp"
#include "nhm/witnesses.hpp"
#include "support.hpp"

using namespace nhm;
using nhm::testing::Rng;

namespace {

Wave wv(const char* text) { return std::get<Wave>(parse_basic(text)); }
MultiLinePoint mp(const char* text) { return std::get<MultiLinePoint>(parse_point(text)); }

std::vector<MultiLinePoint> probes(const std::vector<const Wave*>& ws, unsigned k, Rng& rng) {
  std::vector<MultiLinePoint> out;
  std::vector<Rational> xs{Rational(0)};
  for (const auto* w : ws) {
    for (const auto& iv : w->base().intervals()) {
      if (iv.lo.is_finite()) xs.push_back(iv.lo.value());
      if (iv.hi.is_finite()) xs.push_back(iv.hi.value());
    }
    for (const auto& [x, level] : w->lift()) xs.push_back(x);
  }
  for (int i = 0; i < 8; ++i) xs.push_back(nhm::testing::rational(rng));
  for (const auto& x : xs) {
    for (unsigned l = 0; l < k; ++l) {
      out.push_back({x, l});
      out.push_back({Rational(x + make_rational(1, 16)), l});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("wave_meet examples") {
  CHECK(wave_meet(wv("W[(-1,1)-{0^1}]"), wv("W[(0,2)]")) == wv("W[(0,1)]"));
  CHECK(wave_meet(wv("W[(-1,1)-{0^1}]"), wv("W[(-2,2)-{0^1}]")) == wv("W[(-1,1)-{0^1}]"));
  const Wave w = wv("W[(-3,1)u(2,5)-{0^1,3^1}]");
  CHECK(wave_meet(w, w) == w);
  CHECK(wv("W[(-1,1)-{0}^1]") == wv("W[(-1,1)-{0^1}]"));
}

TEST_CASE("generator examples") {
  const SpaceSpec d = SpaceSpec::doubled();
  CHECK(translate_t(d, Rational(1), mp("D(0 @1)")) == mp("D(1 @1)"));
  CHECK(translate_t(d, make_rational(-1, 2), mp("D(0)")) == mp("D(-1/2 @0)"));
  CHECK_THROWS_AS(translate_t(SpaceSpec::two_origins(), Rational(1), mp("D(0)")), PreconditionError);
  CHECK(exchange_e(d, Rational(0), 0, 1, mp("D(0 @0)")) == mp("D(0 @1)"));
  CHECK(exchange_e(d, Rational(0), 0, 1, mp("D(0 @1)")) == mp("D(0 @0)"));
  CHECK(exchange_e(d, Rational(0), 0, 1, mp("D(1 @0)")) == mp("D(1 @0)"));
  CHECK_THROWS_AS(exchange_e(SpaceSpec::two_origins(), Rational(1), 0, 1, mp("D(1)")), PreconditionError);
  CHECK(reflect(d, make_rational(1, 2), mp("D(0 @1)")) == mp("D(1 @1)"));
}

TEST_CASE("move examples") {
  const SpaceSpec d = SpaceSpec::doubled();
  CHECK(move(d, mp("D(0)"), mp("D(1)")).word == HomeoWord{Shift{Rational(1)}});
  const HomeoCert up = move(d, mp("D(0)"), mp("D(1 @1)"));
  CHECK(up.word == HomeoWord{Shift{Rational(1)}, Exchange{Rational(1), 0, 1}});
  const HomeoCert inv = move(d, mp("D(0)"), mp("D(1)"), true);
  CHECK(inv.word == HomeoWord{Reflect{make_rational(1, 2)}});
  CHECK(inv.involutive);
  CHECK_THROWS_AS(move(SpaceSpec::two_origins(), mp("D(0)"), mp("D(1)")), PreconditionError);
}

TEST_CASE("separable_line examples") {
  const SpaceSpec d = SpaceSpec::doubled();
  CHECK_FALSE(separable_line(d, mp("D(0 @0)"), mp("D(0 @1)")).holds);
  const Verdict v = separable_line(d, mp("D(0 @0)"), mp("D(1 @1)"));
  REQUIRE(v.holds);
  const auto& sep = std::get<SeparatedBy>(v.certificate);
  CHECK(to_string(sep.around_p) == "W[(-1/2,1/2)]");
  CHECK(to_string(sep.around_q) == "W[(1/2,3/2)-{1^1}]");
  CHECK(separable_line(SpaceSpec::two_origins(), mp("D(0)"), mp("D(1)")).holds);
  CHECK_THROWS_AS(separable_line(d, mp("D(0)"), mp("D(0)")), PreconditionError);
}

TEST_CASE("rational_down_dense examples") {
  const DownWitness w = rational_down_dense();
  CHECK(w.dense);
  const auto a = w.select(wv("W[(0,1)-{1/2^1}]"));
  REQUIRE(a.has_value());
  CHECK(a->level == 0);
  CHECK(wv("W[(0,1)-{1/2^1}]").contains(*a));
  CHECK(w.select(wv("W[(-inf,inf)]")) == mp("D(0)"));
  CHECK_FALSE(w.select(Wave{}).has_value());
}

TEST_CASE("chain_connect examples") {
  const SpaceSpec d3 = SpaceSpec::tripled();
  const auto a = chain_connect(d3, mp("D(-1)"), mp("D(1)"), {mp("D(0 @1)"), mp("D(0 @2)")});
  REQUIRE(a.chain.has_value());
  CHECK(a.chain->links == std::vector<BasicOpen>{wv("W[(-2,2)]")});
  const auto b = chain_connect(d3, mp("D(-1)"), mp("D(1)"), {mp("D(0 @0)"), mp("D(0 @1)")});
  REQUIRE(b.chain.has_value());
  CHECK(b.chain->links == std::vector<BasicOpen>{wv("W[(-2,2)-{0^2}]")});
  CHECK(verify_certificate(Space{d3}, Certificate{*b.chain}));
  const auto c = chain_connect(SpaceSpec::two_origins(), mp("D(-1)"), mp("D(1)"),
                               {mp("D(0 @0)"), mp("D(0 @1)")});
  CHECK_FALSE(c.connected);
  CHECK_FALSE(c.chain.has_value());
}

TEST_CASE("branch line witness") {
  const BranchWitness w = branch_non_homogeneity_witness();
  CHECK(branch_nonseparable(w.origin_l, w.origin_r));
  CHECK_FALSE(w.regular_separations.empty());
  for (const auto& s : w.regular_separations) {
    CHECK(verify_certificate(Space{BranchingLine{}}, Certificate{s}));
  }
  CHECK(BranchPoint::make(Rational(-1), Side::R).side == Side::L);
  CHECK_FALSE(branch_nonseparable(BranchPoint::make(Rational(1), Side::L),
                                  BranchPoint::make(Rational(1), Side::R)));
}

TEST_CASE("up points are discrete") {
  const auto iso = up_points_discrete_witness(FinSet{Rational(0), Rational(1)},
                                              FinSet{make_rational(1, 2)});
  REQUIRE(iso.size() == 3);
  CHECK(to_string(iso[0].open) == "W[(-1/2,1/2)-{0^1}]");
  for (const auto& c : iso) CHECK(verify_certificate(Space{SpaceSpec::doubled()}, Certificate{c}));
  CHECK(up_points_discrete_witness({}).empty());
}

TEST_CASE("wave meet is pointwise intersection") {
  Rng rng(nhm::testing::kDefaultSeed + 10);
  for (unsigned k : {2u, 3u}) {
    for (int round = 0; round < 300; ++round) {
      const Wave a = nhm::testing::wave(rng, k);
      const Wave b = nhm::testing::wave(rng, k);
      const Wave m = wave_meet(a, b);
      for (const auto& p : probes({&a, &b}, k, rng)) {
        CHECK(m.contains(p) == (a.contains(p) && b.contains(p)));
      }
    }
  }
}

TEST_CASE("generators act on waves as they act on points") {
  Rng rng(nhm::testing::kDefaultSeed + 11);
  const SpaceSpec d3 = SpaceSpec::tripled();
  for (int round = 0; round < 200; ++round) {
    const Wave w = nhm::testing::wave(rng, 3);
    const Rational s = nhm::testing::rational(rng);
    const unsigned i = static_cast<unsigned>(nhm::testing::uniform(rng, 0, 2));
    const unsigned j = (i + 1 + static_cast<unsigned>(nhm::testing::uniform(rng, 0, 1))) % 3;
    const Wave tw = translate_t(d3, s, w);
    const Wave ew = exchange_e(d3, s, i, j, w);
    const Wave rw = reflect(d3, s, w);
    CHECK(translate_t(d3, Rational(-s), tw) == w);
    CHECK(exchange_e(d3, s, i, j, ew) == w);
    CHECK(reflect(d3, s, rw) == w);
    for (const auto& p : probes({&w}, 3, rng)) {
      CHECK(tw.contains(translate_t(d3, s, p)) == w.contains(p));
      CHECK(ew.contains(exchange_e(d3, s, i, j, p)) == w.contains(p));
      CHECK(rw.contains(reflect(d3, s, p)) == w.contains(p));
      CHECK(exchange_e(d3, s, i, j, exchange_e(d3, s, i, j, p)) == p);
      CHECK(reflect(d3, s, reflect(d3, s, p)) == p);
    }
  }
}

TEST_CASE("non-separability depends on the abscissa only") {
  Rng rng(nhm::testing::kDefaultSeed + 12);
  const SpaceSpec d3 = SpaceSpec::tripled();
  for (int round = 0; round < 200; ++round) {
    const MultiLinePoint p = nhm::testing::line_point(rng, 3);
    MultiLinePoint q = nhm::testing::line_point(rng, 3);
    if (p == q) continue;
    const Verdict v = separable_line(d3, p, q);
    CHECK(v.holds == (p.x != q.x));
    CHECK(v.holds == separable_line(d3, q, p).holds);
    CHECK(verify_certificate(Space{d3}, v.certificate));
  }
}
