#include "nhm/witnesses.hpp"

#include <algorithm>
#include <deque>

#include "nhm/errors.hpp"

namespace nhm {

HomeoCert feather_normalize(const FeatherPoint& s) {
  const LineNormalization n = normalize_to_line(s);
  HomeoWord word;
  for (const auto& c : n.flips) word.emplace_back(Flip{c});
  return {s, n.result, std::move(word), false};
}

HomeoCert feather_move(const FeatherPoint& p, const FeatherPoint& q) {
  const LineNormalization np = normalize_to_line(p);
  const LineNormalization nq = normalize_to_line(q);
  HomeoWord word;
  for (const auto& c : np.flips) word.emplace_back(Flip{c});
  if (q.last() != p.last()) word.emplace_back(Shift{Rational(q.last() - p.last())});
  for (auto it = nq.flips.rbegin(); it != nq.flips.rend(); ++it) word.emplace_back(Flip{*it});
  return {p, q, std::move(word), false};
}

namespace {

SeqDescriptor side_sequence(const FeatherPoint& s, const Rational& seam, const Rational& delta) {
  const FeatherPoint far = homotopy_eval(Rational(seam + delta), s);
  const FeatherPoint near = homotopy_eval(Rational(seam + delta / 2), s);
  if (far.depth() != near.depth()) throw std::logic_error("homotopy sample straddles a piece boundary");
  // v(m) = limit + a/m with v(1) = far, v(2) = near.
  const Rational limit = 2 * near.last() - far.last();
  const Rational a = far.last() - limit;
  return {far, far.depth(), limit, a < 0 ? Approach::FromBelow : Approach::FromAbove, Rational(abs(a))};
}

}  // namespace

SeamCheck homotopy_seam(const FeatherPoint& s, unsigned k) {
  if (k == 0) throw PreconditionError("seams sit at t = 1/k for k >= 1");
  const Rational seam(1, k);
  const Rational delta(1, 8 * (k + 1) * (k + 1));
  const Space space = FeatherSpace{};
  SeamCheck c{seam,
              side_sequence(s, seam, Rational(-delta)),
              side_sequence(s, seam, delta),
              s,
              s,
              homotopy_eval(seam, s),
              false};
  auto limit_point = [](const SeqDescriptor& d) {
    return FeatherPoint::make(std::get<FeatherPoint>(d.base).with_last(d.limit).coords());
  };
  c.left_limit = limit_point(c.from_left);
  c.right_limit = limit_point(c.from_right);
  const bool related = c.left_limit == c.right_limit || fp_are_twins(c.left_limit, c.right_limit);
  c.continuous = related && converges(space, c.from_left, c.at_seam) && converges(space, c.from_right, c.at_seam);
  return c;
}

HomeoCert move(const SpaceSpec& spec, const MultiLinePoint& p, const MultiLinePoint& q, bool involutive) {
  if (!spec.everywhere()) {
    throw PreconditionError("no homogeneity words on " + to_string(spec) + ": it is not homogeneous");
  }
  validate(spec, p);
  validate(spec, q);
  HomeoWord word;
  if (!involutive) {
    if (p.x != q.x) word.emplace_back(Shift{Rational(q.x - p.x)});
    if (p.level != q.level) word.emplace_back(Exchange{q.x, p.level, q.level});
    return {p, q, std::move(word), false};
  }
  if (p.x == q.x) {
    if (p.level != q.level) word.emplace_back(Exchange{p.x, p.level, q.level});
  } else {
    // Exchanges at both abscissae commute with each other and are swapped by
    // the reflection, so the composite squares to the identity.
    if (p.level != q.level) {
      word.emplace_back(Exchange{p.x, p.level, q.level});
      word.emplace_back(Exchange{q.x, p.level, q.level});
    }
    word.emplace_back(Reflect{Rational((p.x + q.x) / 2)});
  }
  return {p, q, std::move(word), true};
}

Verdict separable_line(const SpaceSpec& spec, const MultiLinePoint& p, const MultiLinePoint& q) {
  return separable(Space{spec}, p, q);
}

ChainResult chain_connect(const SpaceSpec& spec, const MultiLinePoint& src, const MultiLinePoint& dst,
                          const std::vector<MultiLinePoint>& removed, std::optional<Interval> window) {
  validate(spec, src);
  validate(spec, dst);
  for (const auto& r : removed) validate(spec, r);
  if (std::find(removed.begin(), removed.end(), src) != removed.end() ||
      std::find(removed.begin(), removed.end(), dst) != removed.end()) {
    throw PreconditionError("chain endpoints must not be removed");
  }

  std::vector<Rational> special{src.x, dst.x};
  for (const auto& r : removed) special.push_back(r.x);
  const FinSet specials(special);
  if (!window) {
    window = Interval{Rational(specials.elements().front() - 1), Rational(specials.elements().back() + 1)};
  }
  if (!window->lo.is_finite() || !window->hi.is_finite() || window->empty()) {
    throw PreconditionError("chain window must be a bounded nonempty interval");
  }
  const Rational a = window->lo.value();
  const Rational b = window->hi.value();
  for (const auto& x : specials.elements()) {
    if (!(a < x && x < b)) throw PreconditionError("chain window must contain every abscissa");
  }

  constexpr int kGrid = 4;
  std::vector<Rational> grid;
  for (int i = 0; i <= kGrid; ++i) grid.push_back(Rational(a + (b - a) * Rational(i, kGrid)));
  grid.insert(grid.end(), specials.elements().begin(), specials.elements().end());
  grid = FinSet(grid).elements();

  auto is_removed = [&](const MultiLinePoint& p) {
    return std::find(removed.begin(), removed.end(), p) != removed.end();
  };

  // Candidate waves: grid intervals, widest first, with every admissible
  // choice of level over the constrained abscissae inside.
  std::vector<Wave> nodes;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = grid.size() - 1; j > i; --j) {
      const Interval span{grid[i], grid[j]};
      std::vector<std::pair<Rational, std::vector<unsigned>>> choices;
      bool blocked = false;
      for (const auto& x : specials.elements()) {
        if (!span.contains(x)) continue;
        std::vector<unsigned> levels;
        for (unsigned l = 0; l < spec.levels_at(x); ++l) {
          if (is_removed({x, l})) continue;
          const bool pinned_src = x == src.x && src.x != dst.x;
          const bool pinned_dst = x == dst.x && src.x != dst.x;
          if (pinned_src && l != src.level) continue;
          if (pinned_dst && l != dst.level) continue;
          if (src.x == dst.x && x == src.x && l != src.level && l != dst.level) continue;
          levels.push_back(l);
        }
        if (levels.empty()) {
          blocked = true;
          break;
        }
        choices.emplace_back(x, std::move(levels));
      }
      if (blocked) continue;
      std::vector<std::size_t> pick(choices.size(), 0);
      for (;;) {
        std::map<Rational, unsigned> lift;
        for (std::size_t c = 0; c < choices.size(); ++c) lift.emplace(choices[c].first, choices[c].second[pick[c]]);
        nodes.emplace_back(IntervalSet({span}), std::move(lift));
        std::size_t c = 0;
        while (c < choices.size() && ++pick[c] == choices[c].second.size()) pick[c++] = 0;
        if (c == choices.size()) break;
      }
    }
  }

  // Breadth-first search over "meets" starting from waves holding src.
  std::vector<long> parent(nodes.size(), -2);
  std::deque<std::size_t> queue;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (nodes[n].contains(src)) {
      parent[n] = -1;
      queue.push_back(n);
    }
  }
  while (!queue.empty()) {
    const std::size_t n = queue.front();
    queue.pop_front();
    if (nodes[n].contains(dst)) {
      Chain chain{src, dst, {}, {}};
      for (const auto& r : removed) chain.removed.emplace_back(r);
      for (long cur = static_cast<long>(n); cur >= 0; cur = parent[static_cast<std::size_t>(cur)]) {
        chain.links.emplace_back(nodes[static_cast<std::size_t>(cur)]);
      }
      std::reverse(chain.links.begin(), chain.links.end());
      return {true, std::move(chain)};
    }
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      if (parent[m] != -2) continue;
      if (wave_meet(nodes[n], nodes[m]).empty()) continue;
      parent[m] = static_cast<long>(n);
      queue.push_back(m);
    }
  }
  return {false, std::nullopt};
}

BranchWitness branch_non_homogeneity_witness() {
  const Space space = BranchingLine{};
  const BranchPoint l{0, Side::L};
  const BranchPoint r{0, Side::R};
  const BranchPoint regular{1, Side::L};
  BranchWitness w{l, r, TwinPair{l, r}, regular, {}};
  const std::vector<BranchPoint> sample{l,
                                        r,
                                        {1, Side::R},
                                        BranchPoint::make(-1, Side::L),
                                        {2, Side::L},
                                        {Rational(1, 2), Side::R},
                                        {Rational(3, 2), Side::L}};
  for (const auto& q : sample) {
    const Verdict v = separable(space, regular, q);
    if (!v.holds) throw std::logic_error("branching line: regular point failed to separate");
    w.regular_separations.push_back(std::get<SeparatedBy>(v.certificate));
  }
  return w;
}

std::vector<Isolates> up_points_discrete_witness(const FinSet& sample, const FinSet& down_probes) {
  const Rational half(1, 2);
  std::vector<Point> ups;
  for (const auto& x : sample.elements()) ups.emplace_back(MultiLinePoint{x, 1});
  std::vector<Isolates> out;
  for (const auto& x : sample.elements()) {
    const MultiLinePoint p{x, 1};
    out.push_back({p, Wave::around(p, half), ups});
  }
  for (const auto& y : down_probes.elements()) {
    const MultiLinePoint p{y, 0};
    out.push_back({p, Wave::around(p, half), ups});
  }
  return out;
}

}  // namespace nhm
