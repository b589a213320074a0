#include "nhm/separation.hpp"

#include <algorithm>

#include "nhm/errors.hpp"

namespace nhm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

OpenHandle whole_line_wave(std::map<Rational, unsigned> lift) {
  return OpenHandle::of(Wave(IntervalSet::line(), std::move(lift)));
}

Verdict first_uncovered(const Space& space, const std::vector<OpenHandle>& opens, std::vector<Point> probes) {
  for (const auto& q : probes) {
    const bool covered =
        std::any_of(opens.begin(), opens.end(), [&](const OpenHandle& u) { return member(space, q, u); });
    if (!covered) return {false, Uncovered{q, opens}};
  }
  return {true, Covers{opens, std::move(probes)}};
}

/// Candidate points of a basic open, one per call, avoiding `avoid` (the
/// rational coordinate that varies between candidates).
std::optional<Point> candidate_in(const BasicOpen& probe, const FinSet& avoid) {
  return std::visit(
      overloaded{
          [&](const FeatherInterval& iv) -> std::optional<Point> {
            const Segment seg = segments(iv).front();
            const Rational r = pick_rational({seg.lo, seg.hi}, avoid);
            auto c = seg.prefix;
            c.push_back(r);
            return FeatherPoint::make(std::move(c));
          },
          [&](const Wave& w) -> std::optional<Point> {
            const auto x = iset_pick(w.base(), set_union(avoid, w.lifted()));
            if (!x) return std::nullopt;
            return MultiLinePoint{*x, 0};
          },
          [&](const BranchInterval& b) -> std::optional<Point> {
            if (b.empty()) return std::nullopt;
            return BranchPoint::make(pick_rational({b.lo, b.hi}, avoid), b.side);
          },
          [&](const CofiniteSet& c) -> std::optional<Point> {
            if (c.is_empty()) return std::nullopt;
            for (std::uint64_t n = 0;; ++n) {
              if (c.contains(n) && !avoid.contains(Rational(static_cast<unsigned long>(n)))) {
                return CofinitePoint{n};
              }
            }
          },
      },
      probe);
}

Rational varying_coordinate(const Point& p) {
  return std::visit(overloaded{
                        [](const FeatherPoint& f) { return f.last(); },
                        [](const MultiLinePoint& m) { return m.x; },
                        [](const BranchPoint& b) { return b.x; },
                        [](const CofinitePoint& c) { return Rational(static_cast<unsigned long>(c.n)); },
                    },
                    p);
}

FinSet lifts_of(const OpenHandle& u) {
  FinSet out;
  for (const auto& b : u.basics) {
    if (const auto* w = std::get_if<Wave>(&b)) out = set_union(out, w->lifted());
  }
  return out;
}

}  // namespace

MaximalOpen maximal_hausdorff_at(const Space& space, const Point& x) {
  validate(space, x);
  struct {
    OpenHandle open;
    std::optional<Point> outside;
  } m;
  std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            const auto& p = std::get<FeatherPoint>(x);
            if (p.is_upper_twin()) {
              m.open = {{}, StrictSkeleton(p)};
              m.outside = p.truncated();
            } else {
              m.open = {{}, strict_skeleton()};
              m.outside = fp_twin(p);
            }
          },
          [&](const SpaceSpec& spec) {
            const auto& p = std::get<MultiLinePoint>(x);
            std::map<Rational, unsigned> lift;
            if (p.level != 0) lift.emplace(p.x, p.level);
            m.open = whole_line_wave(std::move(lift));
            if (spec.doubled_at(p.x)) {
              m.outside = MultiLinePoint{p.x, p.level == 0 ? 1U : 0U};
            } else if (spec.k > 1) {
              m.outside = MultiLinePoint{spec.domain->elements().front(), 1};
            }
          },
          [&](const BranchingLine&) {
            const auto& p = std::get<BranchPoint>(x);
            const Side keep = p.x == 0 && p.side == Side::R ? Side::R : Side::L;
            const Side drop = keep == Side::L ? Side::R : Side::L;
            m.open = OpenHandle::of(OpenSet{BranchInterval::make(ExtRat::neg_inf(), ExtRat::pos_inf(), keep),
                                            BranchInterval::make(ExtRat(0), ExtRat::pos_inf(), drop)});
            m.outside = BranchPoint{0, drop};
          },
          [&](const CofiniteSpace&) {
            throw PreconditionError("the cofinite space has no nonempty Hausdorff open set");
          },
      },
      space);
  Verdict h = hausdorff_open(space, m.open);
  Verdict d = dense(space, m.open);
  return {x, std::move(m.open), std::move(h), std::move(d), std::move(m.outside)};
}

Verdict adjoin_point(const Space& space, const OpenHandle& u, const Point& y) {
  OpenHandle extended = u;
  extended.basics.push_back(neighborhood(space, y, 1));
  return hausdorff_open(space, extended);
}

std::vector<Point> cover_probes(const Space& space, std::size_t count) {
  std::vector<Point> out;
  std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            for (std::size_t n = 0; n <= count; ++n) {
              const Rational x(static_cast<unsigned long>(n));
              out.emplace_back(FeatherPoint::make({x, x}));
              out.emplace_back(FeatherPoint::make({x, Rational(x + 1)}));
            }
          },
          [&](const SpaceSpec& spec) {
            if (spec.k == 1) {
              out.emplace_back(MultiLinePoint{0, 0});
              return;
            }
            std::vector<Rational> xs;
            if (spec.domain) {
              xs = spec.domain->elements();
            } else {
              for (std::size_t n = 0; n <= count; ++n) xs.emplace_back(static_cast<unsigned long>(n));
            }
            for (const auto& x : xs) {
              for (unsigned j = 1; j < spec.k; ++j) out.emplace_back(MultiLinePoint{x, j});
            }
          },
          [&](const BranchingLine&) {
            out.emplace_back(BranchPoint{0, Side::L});
            out.emplace_back(BranchPoint{0, Side::R});
          },
          [&](const CofiniteSpace&) {
            for (std::size_t n = 0; n <= count; ++n) out.emplace_back(CofinitePoint{n});
          },
      },
      space);
  return out;
}

Verdict subcover_attempt(const Space& space, const std::vector<Point>& chosen) {
  std::vector<OpenHandle> opens;
  opens.reserve(chosen.size());
  for (const auto& x : chosen) opens.push_back(maximal_hausdorff_at(space, x).open);
  std::vector<Point> probes = cover_probes(space, chosen.size() + 1);
  probes.insert(probes.end(), chosen.begin(), chosen.end());
  return first_uncovered(space, opens, std::move(probes));
}

Verdict subcover_attempt(const Space& space, const std::vector<OpenHandle>& cover,
                         const std::vector<std::size_t>& chosen, const std::vector<Point>& extra_probes) {
  std::vector<OpenHandle> opens;
  for (const auto i : chosen) {
    if (i >= cover.size()) throw PreconditionError("chosen member " + std::to_string(i) + " is not in the cover");
    opens.push_back(cover[i]);
  }
  std::vector<Point> probes = cover_probes(space, chosen.size() + 1);
  probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
  return first_uncovered(space, opens, std::move(probes));
}

BaireResult baire_intersect(const Space& space, const DenseFamily& fam, const BasicOpen& probe,
                            std::uint64_t candidates) {
  BaireResult out;
  if (fam.cofinite_singletons) {
    if (!std::holds_alternative<CofiniteSpace>(space)) {
      throw PreconditionError("the family N minus {n} lives on the cofinite space");
    }
    // Candidate n is missing from D_n, so no candidate survives.
    for (std::uint64_t n = 0; n < candidates; ++n) out.certificates.emplace_back(ExcludedBy{n, n});
    return out;
  }
  validate(space, probe);
  for (const auto& u : fam.members) {
    if (!dense(space, u).holds) throw PreconditionError("family member is not dense");
  }
  FinSet avoid;
  for (const auto& u : fam.members) avoid = set_union(avoid, lifts_of(u));
  const std::size_t budget = 4 * (fam.members.size() + 1) + 16;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    const auto c = candidate_in(probe, avoid);
    if (!c) break;
    const bool in_all = member(space, *c, probe) &&
                        std::all_of(fam.members.begin(), fam.members.end(),
                                    [&](const OpenHandle& u) { return member(space, *c, u); });
    if (in_all) {
      std::vector<OpenHandle> opens = fam.members;
      opens.push_back(OpenHandle::of(probe));
      out.point = *c;
      out.certificates.emplace_back(InAll{*c, std::move(opens)});
      return out;
    }
    avoid = set_union(avoid, FinSet{varying_coordinate(*c)});
  }
  return out;
}

PipelineReport theorem2_pipeline(const Space& space, const std::vector<Point>& samples,
                                 const std::vector<Point>& chosen, const std::vector<Point>& probes) {
  PipelineReport report;

  StageReport zorn{"lemma-zorn", true, {}};
  for (const auto& x : samples) {
    const MaximalOpen m = maximal_hausdorff_at(space, x);
    zorn.passed = zorn.passed && m.hausdorff.holds && m.dense.holds;
    zorn.certificates.push_back(m.hausdorff.certificate);
    zorn.certificates.push_back(m.dense.certificate);
    if (m.outside) {
      const Verdict grown = adjoin_point(space, m.open, *m.outside);
      zorn.passed = zorn.passed && !grown.holds;
      zorn.certificates.push_back(grown.certificate);
    }
  }
  report.stages.push_back(std::move(zorn));
  if (!report.stages.back().passed) {
    report.verdict = "failed at lemma-zorn";
    return report;
  }

  const Verdict cover = subcover_attempt(space, chosen);
  report.stages.push_back({"subcover", cover.holds, {cover.certificate}});
  if (!cover.holds) {
    report.verdict = "failed at subcover";
    return report;
  }

  DenseFamily fam;
  for (const auto& x : chosen) fam.members.push_back(maximal_hausdorff_at(space, x).open);
  const Point anchor = chosen.empty() ? samples.front() : chosen.front();
  const BaireResult baire = baire_intersect(space, fam, neighborhood(space, anchor, 1));
  report.stages.push_back({"baire", baire.point.has_value(), baire.certificates});
  if (!baire.point) {
    report.verdict = "failed at baire";
    return report;
  }

  StageReport sep{"separate", true, {}};
  for (const auto& y : probes) {
    if (y == *baire.point) continue;
    const Verdict v = separable(space, *baire.point, y);
    sep.passed = sep.passed && v.holds;
    sep.certificates.push_back(v.certificate);
  }
  report.stages.push_back(std::move(sep));
  if (!report.stages.back().passed) {
    report.verdict = "failed at separate";
    return report;
  }
  report.separated_point = baire.point;
  report.verdict = "separated point found";
  return report;
}

std::vector<CofiniteSet> quasi_compact_subcover(const std::vector<CofiniteSet>& cover) {
  const auto first = std::find_if(cover.begin(), cover.end(), [](const CofiniteSet& c) { return !c.is_empty(); });
  if (first == cover.end()) throw PreconditionError("the list does not cover N: 0 is uncovered");
  std::vector<CofiniteSet> out{*first};
  for (const auto e : first->excluded()) {
    const bool done = std::any_of(out.begin(), out.end(), [&](const CofiniteSet& c) { return c.contains(e); });
    if (done) continue;
    const auto it = std::find_if(cover.begin(), cover.end(), [&](const CofiniteSet& c) { return c.contains(e); });
    if (it == cover.end()) {
      throw PreconditionError("the list does not cover N: " + std::to_string(e) + " is uncovered");
    }
    out.push_back(*it);
  }
  return out;
}

CompactCert microcompact_neighborhood(const Space& space, const Point& p, const BasicOpen& v) {
  if (!member(space, p, v)) throw PreconditionError("the point is not in the given neighbourhood");
  Rational eps = 1;
  if (const auto* fp = std::get_if<FeatherPoint>(&p)) {
    const auto& outer = std::get<FeatherInterval>(v);
    for (;;) {
      const Chart ch = fp_chart(*fp, eps);
      eps = ch.radius();
      if (fi_subset(ch.interval(), outer)) break;
      eps /= 2;
    }
  } else if (const auto* mp = std::get_if<MultiLinePoint>(&p)) {
    const auto& outer = std::get<Wave>(v);
    for (;;) {
      const Wave w = Wave::around(*mp, eps);
      if (wave_meet(w, outer) == w) break;
      eps /= 2;
    }
  } else {
    throw PreconditionError("compact chart neighbourhoods are only built on F and the k-fold lines");
  }
  const Rational half = eps / 2;
  return {p, eps, Rational(-half), half, v};
}

std::vector<CompactCert> microcompact_chain(const Space& space, const Point& p, const BasicOpen& v,
                                            unsigned depth) {
  std::vector<CompactCert> out;
  BasicOpen current = v;
  for (unsigned i = 0; i < depth; ++i) {
    out.push_back(microcompact_neighborhood(space, p, current));
    current = neighborhood(space, p, out.back().b);
  }
  return out;
}

std::vector<ImplicationRow> chart_of_implications() {
  std::vector<ImplicationRow> rows;
  auto compact_fact = [](const Space& s, const Point& p, const BasicOpen& v) {
    return Fact{"locally-compact", true, {microcompact_neighborhood(s, p, v)}};
  };
  auto baire_fact = [](const Space& s, const std::vector<Point>& at, const BasicOpen& probe) {
    DenseFamily fam;
    for (const auto& x : at) fam.members.push_back(maximal_hausdorff_at(s, x).open);
    BaireResult r = baire_intersect(s, fam, probe);
    return Fact{"baire-finite", r.point.has_value(), std::move(r.certificates)};
  };

  {
    const Space s = SpaceSpec::line();
    const OpenHandle all = whole_line_wave({});
    const Verdict h = hausdorff_open(s, all);
    const BasicOpen probe = Wave(IntervalSet::open(Rational(-1), Rational(1)), {});
    rows.push_back({"line",
                    s,
                    {{"hausdorff", h.holds, {h.certificate}},
                     compact_fact(s, MultiLinePoint{0, 0}, probe),
                     baire_fact(s, {MultiLinePoint{0, 0}}, probe)}});
  }
  {
    const Space s = SpaceSpec::doubled();
    const Verdict h = separable(s, MultiLinePoint{0, 0}, MultiLinePoint{0, 1});
    rows.push_back({"D",
                    s,
                    {{"hausdorff", h.holds, {h.certificate}},
                     compact_fact(s, MultiLinePoint{0, 0}, Wave(IntervalSet::open(Rational(-1), Rational(1)), {})),
                     baire_fact(s, {MultiLinePoint{0, 1}, MultiLinePoint{1, 1}},
                                Wave(IntervalSet::open(Rational(-1), Rational(2)), {}))}});
  }
  {
    const Space s = FeatherSpace{};
    const FeatherPoint p = FeatherPoint::make({0, 1});
    const Verdict h = separable(s, FeatherPoint::make({0}), FeatherPoint::make({0, 0}));
    rows.push_back({"F",
                    s,
                    {{"hausdorff", h.holds, {h.certificate}},
                     compact_fact(s, p, fp_chart(p, 1).interval()),
                     baire_fact(s, {p, FeatherPoint::make({0, 0})},
                                FeatherInterval::make(FeatherPoint::make({-1}), FeatherPoint::make({1})))}});
  }
  {
    const Space s = CofiniteSpace{};
    const Verdict h = separable(s, CofinitePoint{0}, CofinitePoint{1});
    const std::vector<CofiniteSet> cover{CofiniteSet({1}), CofiniteSet({2})};
    std::vector<OpenHandle> sub;
    for (auto& c : quasi_compact_subcover(cover)) sub.push_back(OpenHandle::of(c));
    std::vector<Point> probes;
    for (std::uint64_t n = 0; n <= 3; ++n) probes.emplace_back(CofinitePoint{n});
    BaireResult none = baire_intersect(s, {{}, true}, CofiniteSet{}, 8);
    rows.push_back({"cofinite",
                    s,
                    {{"hausdorff", h.holds, {h.certificate}},
                     {"quasi-compact", true, {Covers{std::move(sub), std::move(probes)}}},
                     {"baire", false, std::move(none.certificates)}}});
  }
  return rows;
}

}  // namespace nhm
