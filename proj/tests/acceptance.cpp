// Acceptance suite: one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "nhm/demos.hpp"
#include "nhm/errors.hpp"
#include "nhm/separation.hpp"
#include "nhm/syntax.hpp"
#include "nhm/witnesses.hpp"
#include "support.hpp"

using namespace nhm;
using nhm::testing::Rng;

namespace {

namespace gen = nhm::testing;

const Space kF = FeatherSpace{};

// Collects the first few failures; a criterion passes when none were seen.
struct Tally {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

FeatherPoint feather_non_twin_partner(Rng& rng, const FeatherPoint& p) {
  for (;;) {
    // half the partners are close by, inside a chart at p
    const Chart ch = fp_chart(p, Rational(1));
    FeatherPoint q = gen::coin(rng) ? gen::feather_point(rng)
                                    : ch.point_at(Rational(ch.radius() * make_rational(gen::uniform(rng, -7, 7), 8)));
    if (!(q == p) && !fp_are_twins(p, q)) return q;
  }
}

void twins(Tally& t, Rng& rng) {
  const std::vector<Rational> radii{Rational(1), make_rational(1, 2), make_rational(1, 4), make_rational(1, 8)};
  for (int i = 0; i < 200; ++i) {
    const FeatherPoint p = gen::feather_point(rng);
    const FeatherPoint q = fp_twin(p);
    const Verdict v = separable(kF, p, q);
    t.expect(!v.holds, "separated twins " + to_string(p));
    t.expect(verify_certificate(kF, v.certificate), "twin certificate for " + to_string(p));
    t.expect(!refute_nonseparable(kF, p, q, radii).has_value(), "refuter split " + to_string(p));
  }
  for (int i = 0; i < 200; ++i) {
    const FeatherPoint p = gen::feather_point(rng);
    const FeatherPoint q = feather_non_twin_partner(rng, p);
    const Verdict v = separable(kF, p, q);
    t.expect(v.holds, "not separated " + to_string(p) + " " + to_string(q));
    t.expect(verify_certificate(kF, v.certificate), "bad certificate " + to_string(p) + " " + to_string(q));
    if (const auto* s = std::get_if<SeparatedBy>(&v.certificate)) {
      t.expect(meet(kF, s->around_p, s->around_q).empty(), "overlapping charts");
    }
  }
}

void flips(Tally& t, Rng& rng) {
  for (int i = 0; i < 500; ++i) {
    FeatherPoint s = gen::feather_point(rng, 4, 20);
    if (s.depth() == 0) s = FeatherPoint::make({s.last(), Rational(s.last() + gen::positive(rng))});
    const FeatherPoint r = gen::feather_point(rng);
    t.expect(flip_apply(s, flip_apply(s, r)) == r, "flip not involutive at " + to_string(s) + " on " + to_string(r));
  }
  for (int i = 0; i < 500; ++i) {
    const FeatherPoint p = gen::feather_point(rng, 5);
    const LineNormalization n = normalize_to_line(p);
    FeatherPoint x = p;
    for (const auto& s : n.flips) x = flip_apply(s, x);
    t.expect(x == FeatherPoint::make({p.last()}) && n.result == x, "normalize " + to_string(p));
    const HomeoCert c = feather_normalize(p);
    t.expect(verify_certificate(kF, c), "normalize certificate " + to_string(p));
  }
  for (int i = 0; i < 100; ++i) {
    const FeatherPoint p = gen::feather_point(rng);
    const FeatherPoint q = gen::feather_point(rng);
    const HomeoCert c = feather_move(p, q);
    t.expect(replay(kF, c.word, Point{p}) == Point{q}, "move " + to_string(p) + " -> " + to_string(q));
    t.expect(verify_certificate(kF, c), "move certificate");
  }
}

void homotopy(Tally& t, Rng& rng) {
  for (int i = 0; i < 200; ++i) {
    const FeatherPoint s = gen::feather_point(rng, 5);
    const Rational& s0 = s.coords().front();
    t.expect(homotopy_eval(Rational(0), s) == s, "h_0 moved " + to_string(s));
    const FeatherPoint expect1 = s.depth() > 0 ? FeatherPoint::make({s0, s0}) : FeatherPoint::make({s0});
    t.expect(homotopy_eval(Rational(1), s) == expect1, "h_1 of " + to_string(s));
    t.expect(homotopy_eval(Rational(2), s).coords().size() == 1, "h_2 of " + to_string(s));
  }
  for (int i = 0; i < 40; ++i) {
    const FeatherPoint s = gen::feather_point(rng, 5);
    for (unsigned k = 1; k <= 4; ++k) {
      const SeamCheck c = homotopy_seam(s, k);
      const bool close = c.left_limit == c.right_limit || fp_are_twins(c.left_limit, c.right_limit);
      t.expect(close, "seam 1/" + std::to_string(k) + " limits apart for " + to_string(s));
      t.expect(converges(kF, c.from_left, c.at_seam) && converges(kF, c.from_right, c.at_seam),
               "seam 1/" + std::to_string(k) + " does not converge for " + to_string(s));
      t.expect(c.continuous, "seam flag for " + to_string(s));
    }
  }
}

void convergence(Tally& t, Rng& rng) {
  for (int i = 0; i < 100; ++i) {
    const FeatherPoint p = gen::feather_point(rng, 4, 0);
    const FeatherPoint q = fp_twin(p);
    const SeqDescriptor below = canonical_twin_sequence(kF, p, q);
    t.expect(converges(kF, below, p) && converges(kF, below, q), "from below misses a twin of " + to_string(p));
    SeqDescriptor above = below;
    above.approach = Approach::FromAbove;
    const int hits = int(converges(kF, above, p)) + int(converges(kF, above, q));
    t.expect(hits == 1, "from above converges to " + std::to_string(hits) + " twins of " + to_string(p));
  }
}

std::vector<MultiLinePoint> wave_probes(const Wave& a, const Wave& b, unsigned k, Rng& rng) {
  std::vector<Rational> xs;
  for (const Wave* w : {&a, &b}) {
    for (const auto& iv : w->base().intervals()) {
      if (iv.lo.is_finite()) xs.push_back(iv.lo.value());
      if (iv.hi.is_finite()) xs.push_back(Rational(iv.hi.value() - make_rational(1, 64)));
    }
    for (const auto& [x, l] : w->lift()) xs.push_back(x);
  }
  xs.push_back(gen::rational(rng));
  std::vector<MultiLinePoint> out;
  for (const auto& x : xs) out.push_back({x, static_cast<unsigned>(gen::uniform(rng, 0, k - 1))});
  return out;
}

void waves(Tally& t, Rng& rng) {
  long probes = 0;
  while (probes < 1000) {
    const unsigned k = gen::coin(rng) ? 2 : 3;
    const Wave a = gen::wave(rng, k);
    const Wave b = gen::wave(rng, k);
    const Wave m = wave_meet(a, b);
    for (const auto& p : wave_probes(a, b, k, rng)) {
      ++probes;
      t.expect(m.contains(p) == (a.contains(p) && b.contains(p)), "wave_meet at " + to_string(p));
    }
  }
  for (const SpaceSpec spec : {SpaceSpec::doubled(), SpaceSpec::tripled()}) {
    const Space sp = spec;
    for (int i = 0; i < 100; ++i) {
      const Wave w = gen::wave(rng, spec.k);
      const Rational s = gen::rational(rng);
      const unsigned a = static_cast<unsigned>(gen::uniform(rng, 0, spec.k - 1));
      const unsigned b = (a + 1) % spec.k;
      const Wave tw = translate_t(spec, s, w);
      const Wave ew = exchange_e(spec, s, a, b, w);
      const Wave rw = reflect(spec, s, w);
      for (const auto& p : wave_probes(w, w, spec.k, rng)) {
        t.expect(tw.contains(translate_t(spec, s, p)) == w.contains(p), "translate on waves");
        t.expect(ew.contains(exchange_e(spec, s, a, b, p)) == w.contains(p), "exchange on waves");
        t.expect(rw.contains(reflect(spec, s, p)) == w.contains(p), "reflect on waves");
        t.expect(translate_t(spec, Rational(-s), translate_t(spec, s, p)) == p, "translate inverse");
        t.expect(exchange_e(spec, s, a, b, exchange_e(spec, s, a, b, p)) == p, "exchange involution");
        t.expect(reflect(spec, s, reflect(spec, s, p)) == p, "reflect involution");
      }
    }
    for (int i = 0; i < 200; ++i) {
      const MultiLinePoint p = gen::line_point(rng, spec.k);
      const MultiLinePoint q = gen::line_point(rng, spec.k);
      const HomeoCert c = move(spec, p, q);
      t.expect(replay(sp, c.word, Point{p}) == Point{q}, "move " + to_string(p) + " -> " + to_string(q));
      t.expect(verify_certificate(sp, c), "move certificate");
      const HomeoCert inv = move(spec, p, q, true);
      t.expect(replay(sp, inv.word, Point{p}) == Point{q} && replay(sp, inv.word, Point{q}) == Point{p},
               "involutive move " + to_string(p) + " <-> " + to_string(q));
      t.expect(verify_certificate(sp, inv), "involutive certificate");
    }
  }
}

MultiLinePoint window_point(Rng& rng, unsigned k, const std::vector<MultiLinePoint>& removed) {
  for (;;) {
    const MultiLinePoint p{make_rational(gen::uniform(rng, -15, 15), 8), static_cast<unsigned>(gen::uniform(rng, 0, k - 1))};
    if (std::find(removed.begin(), removed.end(), p) == removed.end()) return p;
  }
}

void fuks_rokhlin(Tally& t, Rng& rng) {
  const SpaceSpec d3 = SpaceSpec::tripled();
  const Interval window{Rational(-2), Rational(2)};
  const auto attempt = [&](const std::vector<MultiLinePoint>& removed) {
    const MultiLinePoint src = window_point(rng, 3, removed);
    const MultiLinePoint dst = window_point(rng, 3, removed);
    const ChainResult r = chain_connect(d3, src, dst, removed, window);
    const std::string what = to_string(src) + " -> " + to_string(dst) + " minus " + to_string(removed[0]) +
                             ", " + to_string(removed[1]);
    t.expect(r.connected && r.chain.has_value(), "no chain " + what);
    if (r.chain) t.expect(verify_certificate(Space{d3}, Certificate{*r.chain}), "chain does not verify " + what);
  };
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i != j) attempt({{Rational(0), i}, {Rational(0), j}});
    }
  }
  for (int n = 0; n < 20; ++n) {
    const MultiLinePoint a{make_rational(gen::uniform(rng, -12, 12), 8), static_cast<unsigned>(gen::uniform(rng, 0, 2))};
    MultiLinePoint b = a;
    while (b == a) b = {make_rational(gen::uniform(rng, -12, 12), 8), static_cast<unsigned>(gen::uniform(rng, 0, 2))};
    attempt({a, b});
  }
  const ChainResult control = chain_connect(SpaceSpec::two_origins(), {Rational(-1), 0}, {Rational(1), 0},
                                            {{Rational(0), 0}, {Rational(0), 1}});
  t.expect(!control.connected && !control.chain, "two-origins control connected");
}

std::vector<Point> lemma_samples(const Space& sp, Rng& rng) {
  std::vector<Point> out;
  for (int i = 0; i < 50; ++i) {
    if (std::holds_alternative<FeatherSpace>(sp)) {
      out.push_back(gen::feather_point(rng));
    } else if (std::get<SpaceSpec>(sp).everywhere()) {
      out.push_back(gen::line_point(rng, 2));
    } else {
      // two-origins: the origins plus ordinary points
      out.push_back(i < 2 ? MultiLinePoint{Rational(0), unsigned(i)} : MultiLinePoint{gen::rational(rng), 0});
    }
  }
  return out;
}

void lemma(Tally& t, Rng& rng) {
  for (const Space& sp : {Space{SpaceSpec::doubled()}, Space{FeatherSpace{}}, Space{SpaceSpec::two_origins()}}) {
    for (const auto& x : lemma_samples(sp, rng)) {
      const MaximalOpen m = maximal_hausdorff_at(sp, x);
      t.expect(member(sp, x, m.open), "maximal open misses " + to_string(x));
      t.expect(m.hausdorff.holds && verify_certificate(sp, m.hausdorff.certificate), "not Hausdorff at " + to_string(x));
      t.expect(m.dense.holds && verify_certificate(sp, m.dense.certificate), "not dense at " + to_string(x));
      // the designated outside point plus random non-members
      std::vector<Point> outside;
      if (m.outside) outside.push_back(*m.outside);
      const bool two_origins = std::holds_alternative<SpaceSpec>(sp) && !std::get<SpaceSpec>(sp).everywhere();
      for (int j = 0; j < 4 && !two_origins; ++j) {
        const Point y = std::holds_alternative<FeatherSpace>(sp) ? Point{fp_twin(gen::feather_point(rng, 3, 0))}
                                                                 : Point{MultiLinePoint{gen::rational(rng), 1}};
        if (!member(sp, y, m.open)) outside.push_back(y);
      }
      t.expect(!outside.empty(), "nothing outside at " + to_string(x));
      for (const auto& y : outside) {
        const Verdict v = adjoin_point(sp, m.open, y);
        t.expect(!v.holds, "adjoining " + to_string(y) + " at " + to_string(x) + " stays Hausdorff");
        t.expect(std::holds_alternative<TwinPair>(v.certificate) && verify_certificate(sp, v.certificate),
                 "adjoin certificate " + to_string(y));
      }
    }
  }
}

void theorem2(Tally& t, Rng& rng) {
  const Space line = SpaceSpec::line();
  std::vector<Point> probes;
  for (int i = 0; i < 100; ++i) probes.push_back(MultiLinePoint{make_rational(i - 50, 7), 0});
  const PipelineReport r = theorem2_pipeline(line, {MultiLinePoint{Rational(0), 0}}, {MultiLinePoint{Rational(0), 0}}, probes);
  t.expect(r.verdict == "separated point found" && r.separated_point.has_value(), "line pipeline: " + r.verdict);
  if (r.separated_point) {
    for (const auto& y : probes) {
      if (y == *r.separated_point) continue;
      const Verdict v = separable(line, *r.separated_point, y);
      t.expect(v.holds && verify_certificate(line, v.certificate), "x0 not separated from " + to_string(y));
    }
  }
  for (const Space& sp : {Space{SpaceSpec::doubled()}, Space{FeatherSpace{}}}) {
    for (int n = 0; n < 20; ++n) {
      const std::size_t size = n == 19 ? 1000 : static_cast<std::size_t>(1 + 50 * n + gen::uniform(rng, 0, 40));
      std::vector<Point> chosen;
      for (std::size_t i = 0; i < size; ++i) {
        if (std::holds_alternative<FeatherSpace>(sp)) {
          chosen.push_back(gen::feather_point(rng));
        } else {
          chosen.push_back(gen::line_point(rng, 2));
        }
      }
      const PipelineReport p = theorem2_pipeline(sp, {chosen.front()}, chosen, {});
      t.expect(p.verdict == "failed at subcover", "pipeline verdict " + p.verdict);
      const StageReport& last = p.stages.back();
      t.expect(last.id == "subcover" && !last.passed, "last stage " + last.id);
      const bool uncovered = !last.certificates.empty() &&
                             std::holds_alternative<Uncovered>(last.certificates.back()) &&
                             verify_certificate(sp, last.certificates.back());
      t.expect(uncovered, "no verified Uncovered for a family of " + std::to_string(size));
      if (uncovered) {
        t.expect(std::get<Uncovered>(last.certificates.back()).opens.size() == size, "opens do not match the family");
      }
    }
  }
}

void cofinite_and_microcompact(Tally& t, Rng& rng) {
  for (int i = 0; i < 50; ++i) {
    std::vector<CofiniteSet> cover;
    std::vector<std::uint64_t> seen;
    const long parts = gen::uniform(rng, 1, 5);
    for (long j = 0; j < parts; ++j) {
      std::vector<std::uint64_t> ex;
      for (long e = gen::uniform(rng, 0, 4); e > 0; --e) ex.push_back(static_cast<std::uint64_t>(gen::uniform(rng, 0, 12)));
      seen.insert(seen.end(), ex.begin(), ex.end());
      cover.emplace_back(ex);
    }
    // close the cover: each excluded value must be contained somewhere
    for (auto x : seen) {
      const bool hit = std::any_of(cover.begin(), cover.end(), [&](const CofiniteSet& c) { return c.contains(x); });
      if (!hit) cover.emplace_back(std::vector<std::uint64_t>{x + 1});
    }
    if (gen::coin(rng, 20)) cover.push_back(CofiniteSet::empty_set());
    const auto sub = quasi_compact_subcover(cover);
    t.expect(sub.size() <= cover.size(), "subcover larger than cover");
    for (const auto& c : sub) t.expect(std::find(cover.begin(), cover.end(), c) != cover.end(), "subcover member not in cover");
    for (std::uint64_t n = 0; n <= 14; ++n) {
      t.expect(std::any_of(sub.begin(), sub.end(), [&](const CofiniteSet& c) { return c.contains(n); }),
               "subcover misses " + std::to_string(n));
    }
  }
  const Space cof = CofiniteSpace{};
  const BaireResult b = baire_intersect(cof, DenseFamily{{}, true}, CofiniteSet(), 1000);
  t.expect(!b.point.has_value() && b.certificates.size() == 1000, "cofinite family not EMPTY");
  for (std::size_t n = 0; n < b.certificates.size(); ++n) {
    const auto* e = std::get_if<ExcludedBy>(&b.certificates[n]);
    t.expect(e && e->candidate == n && e->index == n && verify_certificate(cof, b.certificates[n]),
             "candidate " + std::to_string(n));
  }
  const auto check_chain = [&](const Space& sp, const Point& p, const BasicOpen& v) {
    const CompactCert c = microcompact_neighborhood(sp, p, v);
    t.expect(verify_certificate(sp, Certificate{c}), "compact cert at " + to_string(p));
    return c;
  };
  for (int i = 0; i < 50; ++i) {
    const Space d = SpaceSpec::doubled();
    const Point p = gen::line_point(rng, 2);
    check_chain(d, p, neighborhood(d, p, gen::positive(rng, 2)));
    const Point q = gen::feather_point(rng);
    check_chain(kF, q, neighborhood(kF, q, gen::positive(rng, 2)));
  }
  for (const auto& [sp, p] : {std::pair<Space, Point>{SpaceSpec::doubled(), MultiLinePoint{Rational(0), 1}},
                              std::pair<Space, Point>{FeatherSpace{}, FeatherPoint::make({Rational(0), Rational(0)})}}) {
    const auto chain = microcompact_chain(sp, p, neighborhood(sp, p, Rational(1)), 5);
    t.expect(chain.size() == 5, "chain depth");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      t.expect(verify_certificate(sp, Certificate{chain[i]}), "chain link");
      if (i > 0) {
        t.expect(chain[i - 1].a < chain[i].a && chain[i].b < chain[i - 1].b, "not strictly nested");
      }
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void goldens(Tally& t, const std::string& dir) {
  std::vector<std::pair<std::string, std::string>> runs;
  for (const auto& name : demo_names()) runs.emplace_back(name, "");
  runs.emplace_back("theorem2", "doubled");
  runs.emplace_back("theorem2", "feather");
  for (const auto& [name, variant] : runs) {
    const std::string file = dir + "/" + name + (variant.empty() ? "" : "-" + variant) + ".json";
    const std::string expect = read_file(file);
    const std::string got = report_json(run_demo(name, variant)).dump(2) + "\n";
    t.expect(!expect.empty(), "missing " + file);
    t.expect(got == expect, "output differs from " + file);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::uint64_t seed = gen::kDefaultSeed;
  std::string golden = NHM_GOLDEN_DIR;
  app.add_option("--seed", seed, "Seed for the random generators");
  app.add_option("--golden", golden, "Directory with the demo golden files");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    const char* title;
    std::function<void(Tally&, Rng&)> run;
  };
  const std::vector<Criterion> criteria{
      {"twin non-separability", twins},
      {"flips and homogeneity", flips},
      {"contraction homotopy", homotopy},
      {"twin convergence", convergence},
      {"waves and their generators", waves},
      {"two-point removals stay connected", fuks_rokhlin},
      {"maximal Hausdorff dense opens", lemma},
      {"separation pipeline", theorem2},
      {"quasi-compact, not Baire, microcompact", cofinite_and_microcompact},
      {"demo golden files", [&](Tally& t, Rng&) { goldens(t, golden); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Rng rng(seed + i);
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(t, rng);
    } catch (const std::exception& e) {
      t.failures.insert(t.failures.begin(), std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60) t.failures.push_back("took " + std::to_string(secs) + "s");
    std::printf("%s %zu %s (%ld checks, %.2fs)\n", t.ok() ? "PASS" : "FAIL", i + 1, criteria[i].title, t.checks, secs);
    for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
    failed += t.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
