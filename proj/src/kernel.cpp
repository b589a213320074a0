#include "nhm/kernel.hpp"

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

template <class T, class V>
const T& as(const V& v, const char* what) {
  const T* p = std::get_if<T>(&v);
  if (p == nullptr) throw PreconditionError(std::string(what) + " does not belong to this space");
  return *p;
}

const char* space_name(const Space& s) {
  switch (s.index()) {
    case 0: return "feather";
    case 1: return "multiline";
    case 2: return "branching line";
    default: return "cofinite";
  }
}

Rational signed_step(const SeqDescriptor& s, unsigned long m) {
  const Rational step = s.scale / Rational(m);
  return s.approach == Approach::FromBelow ? Rational(s.limit - step) : Rational(s.limit + step);
}

std::vector<Rational> prefix_of(const FeatherPoint& p) {
  return {p.coords().begin(), p.coords().end() - 1};
}

/// Gaps of the complement of a canonical interval set with nonempty interior.
std::optional<Interval> interior_gap(const IntervalSet& a) {
  ExtRat cursor = ExtRat::neg_inf();
  for (const auto& part : a.intervals()) {
    if (cursor < part.lo) return Interval{cursor, part.lo};
    cursor = part.hi;
  }
  if (cursor < ExtRat::pos_inf()) return Interval{cursor, ExtRat::pos_inf()};
  return std::nullopt;
}

IntervalSet branch_trace(const OpenHandle& u, Side side) {
  std::vector<Interval> parts;
  for (const auto& b : u.basics) {
    const auto& bi = std::get<BranchInterval>(b);
    if (bi.empty()) continue;
    if (bi.side == side) {
      parts.push_back({bi.lo, bi.hi});
    } else {
      parts.push_back({bi.lo, std::min(bi.hi, ExtRat(0))});
    }
  }
  return IntervalSet(std::move(parts));
}

}  // namespace

void validate(const Space& space, const Point& p) {
  if (space.index() != p.index()) {
    throw PreconditionError(std::string("point does not belong to the ") + space_name(space) + " space");
  }
  if (const auto* spec = std::get_if<SpaceSpec>(&space)) validate(*spec, std::get<MultiLinePoint>(p));
  if (const auto* bp = std::get_if<BranchPoint>(&p)) {
    if (bp->x < 0 && bp->side != Side::L) throw PreconditionError("branch point left of 0 must use side L");
  }
}

void validate(const Space& space, const BasicOpen& b) {
  if (space.index() != b.index()) {
    throw PreconditionError(std::string("basic open does not belong to the ") + space_name(space) +
                            " space");
  }
  if (const auto* spec = std::get_if<SpaceSpec>(&space)) validate(*spec, std::get<Wave>(b));
}

bool is_empty(const BasicOpen& b) {
  return std::visit(overloaded{
                        [](const FeatherInterval&) { return false; },
                        [](const Wave& w) { return w.empty(); },
                        [](const BranchInterval& bi) { return bi.empty(); },
                        [](const CofiniteSet& c) { return c.is_empty(); },
                    },
                    b);
}

Point apply(const Space& space, const Move& g, const Point& p) {
  validate(space, p);
  return std::visit(
      overloaded{
          [&](const Flip& f) -> Point {
            as<FeatherSpace>(space, "flip");
            return flip_apply(f.at, std::get<FeatherPoint>(p));
          },
          [&](const Shift& s) -> Point {
            if (std::holds_alternative<FeatherSpace>(space)) return fp_translate(s.by, std::get<FeatherPoint>(p));
            return translate_t(as<SpaceSpec>(space, "translation"), s.by, std::get<MultiLinePoint>(p));
          },
          [&](const Exchange& e) -> Point {
            return exchange_e(as<SpaceSpec>(space, "exchange"), e.at, e.first, e.second,
                              std::get<MultiLinePoint>(p));
          },
          [&](const Reflect& r) -> Point {
            return reflect(as<SpaceSpec>(space, "reflection"), r.about, std::get<MultiLinePoint>(p));
          },
      },
      g);
}

Point replay(const Space& space, const HomeoWord& word, const Point& p) {
  Point cur = p;
  for (const auto& g : word) cur = apply(space, g, cur);
  return cur;
}

Wave replay(const SpaceSpec& spec, const HomeoWord& word, const Wave& w) {
  Wave cur = w;
  for (const auto& g : word) {
    cur = std::visit(overloaded{
                         [&](const Flip&) -> Wave { throw PreconditionError("flip acts on F only"); },
                         [&](const Shift& s) { return translate_t(spec, s.by, cur); },
                         [&](const Exchange& e) { return exchange_e(spec, e.at, e.first, e.second, cur); },
                         [&](const Reflect& r) { return reflect(spec, r.about, cur); },
                     },
                     g);
  }
  return cur;
}

Point term(const Space& space, const SeqDescriptor& s, unsigned long m) {
  if (m == 0) throw PreconditionError("sequence terms start at m = 1");
  validate(space, s.base);
  const Rational value = signed_step(s, m);
  return std::visit(
      overloaded{
          [&](const FeatherSpace&) -> Point {
            const auto& base = std::get<FeatherPoint>(s.base);
            if (s.index != base.depth()) throw PreconditionError("feather sequences move the last coordinate");
            return FeatherPoint::make(base.with_last(value).coords());
          },
          [&](const SpaceSpec& spec) -> Point {
            if (s.index != 0) throw PreconditionError("line sequences move the abscissa");
            MultiLinePoint t{value, std::get<MultiLinePoint>(s.base).level};
            validate(spec, t);
            return t;
          },
          [&](const BranchingLine&) -> Point {
            if (s.index != 0) throw PreconditionError("line sequences move the abscissa");
            return BranchPoint::make(value, std::get<BranchPoint>(s.base).side);
          },
          [&](const CofiniteSpace&) -> Point {
            throw PreconditionError("no parametric sequences on the cofinite space");
          },
      },
      space);
}

bool converges(const Space& space, const SeqDescriptor& s, const Point& p) {
  validate(space, s.base);
  validate(space, p);
  if (s.scale < 0) throw PreconditionError("sequence scale must be non-negative");
  if (s.scale == 0) {
    // Constant sequence; all spaces here are T1.
    const Point t = term(space, s, 1);
    return t == p;
  }
  return std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            const auto& base = std::get<FeatherPoint>(s.base);
            if (s.index != base.depth()) throw PreconditionError("feather sequences move the last coordinate");
            const auto prefix = prefix_of(base);
            if (!prefix.empty()) {
              const bool ok = s.approach == Approach::FromBelow ? s.limit > prefix.back()
                                                                : s.limit >= prefix.back();
              if (!ok) throw PreconditionError("sequence terms are not feather points");
            }
            const auto& target = std::get<FeatherPoint>(p);
            const auto target_prefix = prefix_of(target);
            if (!target.is_upper_twin()) return prefix == target_prefix && s.limit == target.last();
            // Glued chart of (Q, c, c): (Q, r) for r < c and (Q, c, r) for r >= c.
            const auto lower_prefix = prefix_of(target.truncated());
            return (s.approach == Approach::FromBelow && prefix == lower_prefix && s.limit == target.last()) ||
                   (s.approach == Approach::FromAbove && prefix == target_prefix && s.limit == target.last());
          },
          [&](const SpaceSpec& spec) {
            if (s.index != 0) throw PreconditionError("line sequences move the abscissa");
            const auto& base = std::get<MultiLinePoint>(s.base);
            if (base.level != 0 && !spec.everywhere()) {
              throw PreconditionError("sequence terms are not points of " + to_string(spec));
            }
            // A chart around (y, j) holds no up point except possibly (y, j).
            return base.level == 0 && s.limit == std::get<MultiLinePoint>(p).x;
          },
          [&](const BranchingLine&) {
            if (s.index != 0) throw PreconditionError("line sequences move the abscissa");
            const auto& base = std::get<BranchPoint>(s.base);
            const auto& target = std::get<BranchPoint>(p);
            if (s.limit != target.x) return false;
            const bool tail_glued = s.limit < 0 || (s.limit == 0 && s.approach == Approach::FromBelow);
            return tail_glued || base.side == target.side;
          },
          [&](const CofiniteSpace&) -> bool {
            throw PreconditionError("no parametric sequences on the cofinite space");
          },
      },
      space);
}

SeqDescriptor canonical_twin_sequence(const Space& space, const Point& p, const Point& q) {
  return std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            const auto& a = std::get<FeatherPoint>(p);
            const auto& lower = a.is_upper_twin() ? std::get<FeatherPoint>(q) : a;
            return SeqDescriptor{lower, lower.depth(), lower.last(), Approach::FromBelow, 1};
          },
          [&](const SpaceSpec&) {
            const Rational x = std::get<MultiLinePoint>(p).x;
            return SeqDescriptor{MultiLinePoint{x, 0}, 0, x, Approach::FromBelow, 1};
          },
          [&](const BranchingLine&) {
            return SeqDescriptor{BranchPoint{0, Side::L}, 0, 0, Approach::FromBelow, 1};
          },
          [&](const CofiniteSpace&) -> SeqDescriptor {
            throw PreconditionError("no parametric sequences on the cofinite space");
          },
      },
      space);
}

bool member(const Space& space, const Point& p, const BasicOpen& b) {
  validate(space, p);
  validate(space, b);
  return std::visit(overloaded{
                        [&](const FeatherInterval& iv) { return iv.contains(std::get<FeatherPoint>(p)); },
                        [&](const Wave& w) { return w.contains(std::get<MultiLinePoint>(p)); },
                        [&](const BranchInterval& bi) { return bi.contains(std::get<BranchPoint>(p)); },
                        [&](const CofiniteSet& c) { return c.contains(std::get<CofinitePoint>(p).n); },
                    },
                    b);
}

bool member(const Space& space, const Point& p, const OpenHandle& u) {
  if (u.skeleton) {
    validate(space, p);
    if (u.skeleton->contains(as<FeatherPoint>(p, "point"))) return true;
  }
  return std::any_of(u.basics.begin(), u.basics.end(), [&](const BasicOpen& b) { return member(space, p, b); });
}

OpenSet meet(const Space& space, const BasicOpen& a, const BasicOpen& b) {
  validate(space, a);
  validate(space, b);
  OpenSet out;
  std::visit(overloaded{
                 [&](const FeatherInterval& x) {
                   if (auto m = fi_meet(x, std::get<FeatherInterval>(b))) out.emplace_back(std::move(*m));
                 },
                 [&](const Wave& x) {
                   Wave m = wave_meet(x, std::get<Wave>(b));
                   if (!m.empty()) out.emplace_back(std::move(m));
                 },
                 [&](const BranchInterval& x) {
                   BranchInterval m = branch_meet(x, std::get<BranchInterval>(b));
                   if (!m.empty()) out.emplace_back(m);
                 },
                 [&](const CofiniteSet& x) {
                   CofiniteSet m = cofinite_meet(x, std::get<CofiniteSet>(b));
                   if (!m.is_empty()) out.emplace_back(std::move(m));
                 },
             },
             a);
  return out;
}

BasicOpen neighborhood(const Space& space, const Point& p, const Rational& eps) {
  validate(space, p);
  if (eps <= 0) throw PreconditionError("neighbourhood radius must be positive");
  return std::visit(
      overloaded{
          [&](const FeatherPoint& fp) -> BasicOpen { return fp_chart(fp, eps).interval(); },
          [&](const MultiLinePoint& mp) -> BasicOpen { return Wave::around(mp, eps); },
          [&](const BranchPoint& bp) -> BasicOpen {
            return BranchInterval::make(Rational(bp.x - eps), Rational(bp.x + eps), bp.side);
          },
          [&](const CofinitePoint&) -> BasicOpen { return CofiniteSet{}; },
      },
      p);
}

std::string kind_name(const Certificate& c) {
  static const char* const names[] = {"SeparatedBy", "TwinPair",    "Uncovered", "ExcludedBy",
                                      "Chain",       "HomeoWord",   "CompactCert", "Avoids",
                                      "InAll",       "Isolates",    "Covers",    "Criterion"};
  return names[c.index()];
}

Verdict separable(const Space& space, const Point& p, const Point& q) {
  validate(space, p);
  validate(space, q);
  if (p == q) throw PreconditionError("separable() needs two distinct points");
  const auto separated_at = [&](const Rational& ep, const Rational& eq) -> std::optional<Verdict> {
    BasicOpen a = neighborhood(space, p, ep);
    BasicOpen b = neighborhood(space, q, eq);
    if (!meet(space, a, b).empty()) return std::nullopt;
    return Verdict{true, SeparatedBy{p, q, std::move(a), std::move(b)}};
  };
  return std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            if (fp_are_twins(std::get<FeatherPoint>(p), std::get<FeatherPoint>(q))) {
              return Verdict{false, TwinPair{p, q}};
            }
            // Distinct non-twins have disjoint charts once the radius drops
            // below the relevant coordinate gaps.
            for (Rational eps = 1;; eps /= 2) {
              if (auto v = separated_at(eps, eps)) return *v;
            }
          },
          [&](const SpaceSpec&) {
            const auto& a = std::get<MultiLinePoint>(p);
            const auto& b = std::get<MultiLinePoint>(q);
            if (multiline_nonseparable(a, b)) return Verdict{false, TwinPair{p, q}};
            const Rational eps = std::min(Rational(1), Rational(abs(a.x - b.x) / 2));
            return *separated_at(eps, eps);
          },
          [&](const BranchingLine&) {
            const auto& a = std::get<BranchPoint>(p);
            const auto& b = std::get<BranchPoint>(q);
            if (branch_nonseparable(a, b)) return Verdict{false, TwinPair{p, q}};
            const Rational gap = a.x == b.x ? Rational(a.x) : Rational(abs(a.x - b.x));
            const Rational eps = std::min(Rational(1), Rational(gap / 2));
            return *separated_at(eps, eps);
          },
          [&](const CofiniteSpace&) {
            // Two nonempty cofinite sets always meet.
            return Verdict{false, TwinPair{p, q}};
          },
      },
      space);
}

std::optional<SeparatedBy> refute_nonseparable(const Space& space, const Point& p, const Point& q,
                                               const std::vector<Rational>& radii) {
  for (const auto& ep : radii) {
    for (const auto& eq : radii) {
      BasicOpen a = neighborhood(space, p, ep);
      BasicOpen b = neighborhood(space, q, eq);
      if (meet(space, a, b).empty()) return SeparatedBy{p, q, std::move(a), std::move(b)};
    }
  }
  return std::nullopt;
}

Verdict dense(const Space& space, const OpenHandle& u) {
  for (const auto& b : u.basics) validate(space, b);
  return std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            if (u.skeleton) return Verdict{true, Criterion{"dense", u}};
            // Finitely many intervals reach only finitely many level-one
            // branches; a branch rooted elsewhere misses all of them.
            for (long x = 0;; ++x) {
              const Rational rx(x);
              BasicOpen probe = disjoint_branch_family(rx, Rational(rx + 1), Rational(rx + 2));
              const bool misses = std::all_of(u.basics.begin(), u.basics.end(), [&](const BasicOpen& b) {
                return meet(space, probe, b).empty();
              });
              if (misses) {
                Point witness = FeatherPoint::make({rx, Rational(rx + Rational(3, 2))});
                return Verdict{false, Avoids{std::move(probe), std::move(witness), u}};
              }
            }
          },
          [&](const SpaceSpec&) {
            IntervalSet down;
            for (const auto& b : u.basics) down = iset_join(down, std::get<Wave>(b).base());
            if (iset_dense_in_line(down, {})) return Verdict{true, Criterion{"dense", u}};
            const Interval gap = *interior_gap(down);
            Wave probe(IntervalSet({gap}), {});
            Point witness = MultiLinePoint{pick_rational(gap), 0};
            return Verdict{false, Avoids{std::move(probe), std::move(witness), u}};
          },
          [&](const BranchingLine&) {
            for (Side side : {Side::L, Side::R}) {
              const IntervalSet trace = branch_trace(u, side);
              if (iset_dense_in_line(trace, {})) continue;
              const Interval gap = *interior_gap(trace);
              BasicOpen probe = BranchInterval::make(gap.lo, gap.hi, side);
              Point witness = BranchPoint::make(pick_rational(gap), side);
              return Verdict{false, Avoids{std::move(probe), std::move(witness), u}};
            }
            return Verdict{true, Criterion{"dense", u}};
          },
          [&](const CofiniteSpace&) {
            const bool any = std::any_of(u.basics.begin(), u.basics.end(),
                                         [](const BasicOpen& b) { return !is_empty(b); });
            if (any) return Verdict{true, Criterion{"dense", u}};
            return Verdict{false, Avoids{CofiniteSet{}, CofinitePoint{0}, u}};
          },
      },
      space);
}

Verdict hausdorff_open(const Space& space, const OpenHandle& u) {
  for (const auto& b : u.basics) validate(space, b);
  const auto ok = Verdict{true, Criterion{"hausdorff", u}};
  return std::visit(
      overloaded{
          [&](const FeatherSpace&) {
            // A twin pair always contains exactly one upper twin. Upper twins
            // occur in an interval only at the closed foot of a segment, and in
            // a conjugated skeleton only at the flipped branch point.
            std::vector<FeatherPoint> uppers;
            for (const auto& b : u.basics) {
              for (const auto& seg : segments(std::get<FeatherInterval>(b))) {
                if (!seg.lo_closed) continue;
                auto c = seg.prefix;
                c.push_back(seg.lo);
                uppers.push_back(FeatherPoint::make(std::move(c)));
              }
            }
            if (u.skeleton && u.skeleton->conjugate()) {
              uppers.push_back(fp_twin(u.skeleton->conjugate()->truncated()));
            }
            for (const auto& up : uppers) {
              const FeatherPoint lo = fp_twin(up);
              if (member(space, up, u) && member(space, lo, u)) return Verdict{false, TwinPair{lo, up}};
            }
            return ok;
          },
          [&](const SpaceSpec& spec) {
            FinSet lifted;
            for (const auto& b : u.basics) lifted = set_union(lifted, std::get<Wave>(b).lifted());
            for (const auto& x : lifted.elements()) {
              std::optional<unsigned> seen;
              for (unsigned j = 0; j < spec.levels_at(x); ++j) {
                if (!member(space, MultiLinePoint{x, j}, u)) continue;
                if (seen) return Verdict{false, TwinPair{MultiLinePoint{x, *seen}, MultiLinePoint{x, j}}};
                seen = j;
              }
            }
            return ok;
          },
          [&](const BranchingLine&) {
            const Point l = BranchPoint{0, Side::L};
            const Point r = BranchPoint{0, Side::R};
            if (member(space, l, u) && member(space, r, u)) return Verdict{false, TwinPair{l, r}};
            return ok;
          },
          [&](const CofiniteSpace&) {
            for (const auto& b : u.basics) {
              const auto& c = std::get<CofiniteSet>(b);
              if (c.is_empty()) continue;
              std::vector<std::uint64_t> two;
              for (std::uint64_t n = 0; two.size() < 2; ++n) {
                if (c.contains(n)) two.push_back(n);
              }
              return Verdict{false, TwinPair{CofinitePoint{two[0]}, CofinitePoint{two[1]}}};
            }
            return ok;
          },
      },
      space);
}

namespace {

bool verify_nonseparable(const Space& space, const TwinPair& t) {
  if (t.p == t.q) return false;
  const bool related = std::visit(
      overloaded{
          [&](const FeatherSpace&) { return fp_are_twins(std::get<FeatherPoint>(t.p), std::get<FeatherPoint>(t.q)); },
          [&](const SpaceSpec&) {
            return multiline_nonseparable(std::get<MultiLinePoint>(t.p), std::get<MultiLinePoint>(t.q));
          },
          [&](const BranchingLine&) {
            return branch_nonseparable(std::get<BranchPoint>(t.p), std::get<BranchPoint>(t.q));
          },
          [&](const CofiniteSpace&) { return true; },
      },
      space);
  if (!related) return false;
  if (std::holds_alternative<CofiniteSpace>(space)) return true;
  // Independent route: one sequence converges to both points.
  const SeqDescriptor s = canonical_twin_sequence(space, t.p, t.q);
  return converges(space, s, t.p) && converges(space, s, t.q);
}

bool verify_compact(const Space& space, const CompactCert& c) {
  if (!(-c.chart_radius < c.a && c.a < 0 && 0 < c.b && c.b < c.chart_radius)) return false;
  if (!member(space, c.center, c.neighborhood)) return false;
  std::optional<BasicOpen> chart;
  if (const auto* fp = std::get_if<FeatherPoint>(&c.center)) {
    const Chart ch = fp_chart(*fp, c.chart_radius);
    if (ch.radius() != c.chart_radius) return false;
    if (!fi_subset(ch.interval(), std::get<FeatherInterval>(c.neighborhood))) return false;
    chart = ch.interval();
  } else if (const auto* mp = std::get_if<MultiLinePoint>(&c.center)) {
    Wave w = Wave::around(*mp, c.chart_radius);
    if (wave_meet(w, std::get<Wave>(c.neighborhood)) != w) return false;
    chart = std::move(w);
  } else {
    return false;
  }
  return hausdorff_open(space, OpenHandle::of(*chart)).holds;
}

}  // namespace

bool verify_certificate(const Space& space, const Certificate& cert) {
  try {
    return std::visit(
        overloaded{
            [&](const SeparatedBy& c) {
              return c.p != c.q && member(space, c.p, c.around_p) && member(space, c.q, c.around_q) &&
                     meet(space, c.around_p, c.around_q).empty();
            },
            [&](const TwinPair& c) {
              validate(space, c.p);
              validate(space, c.q);
              return verify_nonseparable(space, c);
            },
            [&](const Uncovered& c) {
              return std::none_of(c.opens.begin(), c.opens.end(),
                                  [&](const OpenHandle& u) { return member(space, c.point, u); });
            },
            [&](const ExcludedBy& c) {
              return std::holds_alternative<CofiniteSpace>(space) &&
                     !CofiniteSet({c.index}).contains(c.candidate);
            },
            [&](const Chain& c) {
              if (c.links.empty()) return false;
              if (!member(space, c.src, c.links.front()) || !member(space, c.dst, c.links.back())) return false;
              for (std::size_t i = 0; i + 1 < c.links.size(); ++i) {
                if (meet(space, c.links[i], c.links[i + 1]).empty()) return false;
              }
              for (const auto& link : c.links) {
                for (const auto& r : c.removed) {
                  if (member(space, r, link)) return false;
                }
              }
              return true;
            },
            [&](const HomeoCert& c) {
              if (replay(space, c.word, c.from) != c.to) return false;
              return !c.involutive || replay(space, c.word, c.to) == c.from;
            },
            [&](const CompactCert& c) { return verify_compact(space, c); },
            [&](const Avoids& c) {
              if (c.set.skeleton || !member(space, c.witness, c.probe)) return false;
              return std::all_of(c.set.basics.begin(), c.set.basics.end(),
                                 [&](const BasicOpen& b) { return meet(space, c.probe, b).empty(); });
            },
            [&](const InAll& c) {
              return std::all_of(c.opens.begin(), c.opens.end(),
                                 [&](const OpenHandle& u) { return member(space, c.point, u); });
            },
            [&](const Isolates& c) {
              return member(space, c.point, c.open) &&
                     std::none_of(c.others.begin(), c.others.end(),
                                  [&](const Point& q) { return q != c.point && member(space, q, c.open); });
            },
            [&](const Covers& c) {
              return std::all_of(c.probes.begin(), c.probes.end(), [&](const Point& q) {
                return std::any_of(c.opens.begin(), c.opens.end(),
                                   [&](const OpenHandle& u) { return member(space, q, u); });
              });
            },
            [&](const Criterion& c) {
              if (c.rule == "hausdorff") return hausdorff_open(space, c.subject).holds;
              if (c.rule == "dense") return dense(space, c.subject).holds;
              return false;
            },
        },
        cert);
  } catch (const PreconditionError&) {
    return false;
  } catch (const std::bad_variant_access&) {
    return false;
  }
}

}  // namespace nhm
