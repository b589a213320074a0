#include "nhm/multiline.hpp"

#include <algorithm>

#include "nhm/errors.hpp"

namespace nhm {

namespace {

ExtRat shift(const ExtRat& v, const Rational& s) {
  if (!v.is_finite()) return v;
  return Rational(v.value() + s);
}

ExtRat mirror(const ExtRat& v, const Rational& c) {
  switch (v.kind()) {
    case ExtRat::Kind::NegInf: return ExtRat::pos_inf();
    case ExtRat::Kind::PosInf: return ExtRat::neg_inf();
    case ExtRat::Kind::Finite: break;
  }
  return Rational(2 * c - v.value());
}

void check_domain_preserved(const SpaceSpec& spec, const std::function<Rational(const Rational&)>& f,
                            const char* what) {
  if (spec.everywhere()) return;
  std::vector<Rational> image;
  for (const auto& x : spec.domain->elements()) image.push_back(f(x));
  if (FinSet(std::move(image)) != *spec.domain) {
    throw PreconditionError(std::string(what) + " does not preserve the doubling domain of " +
                            to_string(spec));
  }
}

unsigned swap_level(unsigned level, unsigned i, unsigned j) {
  if (level == i) return j;
  if (level == j) return i;
  return level;
}

}  // namespace

void validate(const SpaceSpec& spec, const MultiLinePoint& p) {
  if (p.level >= spec.levels_at(p.x)) {
    throw PreconditionError(to_string(p) + " does not exist in " + to_string(spec));
  }
}

Wave::Wave(IntervalSet base, std::map<Rational, unsigned> lift) : base_(std::move(base)) {
  for (auto& [x, level] : lift) {
    if (!iset_contains(base_, x)) {
      throw PreconditionError("lifted abscissa " + to_string(x) + " lies outside " + to_string(base_));
    }
    if (level != 0) lift_.emplace(x, level);
  }
}

Wave Wave::around(const MultiLinePoint& p, const Rational& radius) {
  std::map<Rational, unsigned> lift;
  if (p.level != 0) lift.emplace(p.x, p.level);
  return Wave(IntervalSet::open(Rational(p.x - radius), Rational(p.x + radius)), std::move(lift));
}

std::optional<unsigned> Wave::level_at(const Rational& x) const {
  if (!iset_contains(base_, x)) return std::nullopt;
  auto it = lift_.find(x);
  return it == lift_.end() ? 0U : it->second;
}

bool Wave::contains(const MultiLinePoint& p) const {
  const auto level = level_at(p.x);
  return level && *level == p.level;
}

FinSet Wave::lifted() const {
  std::vector<Rational> xs;
  xs.reserve(lift_.size());
  for (const auto& [x, level] : lift_) xs.push_back(x);
  return FinSet(std::move(xs));
}

void validate(const SpaceSpec& spec, const Wave& w) {
  for (const auto& [x, level] : w.lift()) validate(spec, MultiLinePoint{x, level});
}

Wave wave_meet(const Wave& a, const Wave& b) {
  IntervalSet base = iset_meet(a.base(), b.base());
  std::map<Rational, unsigned> lift;
  std::vector<Rational> cut;
  const FinSet lifted = set_union(a.lifted(), b.lifted());
  for (const auto& x : lifted.elements()) {
    const auto la = a.level_at(x);
    const auto lb = b.level_at(x);
    if (!la || !lb) continue;
    if (*la == *lb) {
      lift.emplace(x, *la);
    } else {
      cut.push_back(x);
    }
  }
  base = iset_remove_points(base, FinSet(std::move(cut)));
  return Wave(std::move(base), std::move(lift));
}

MultiLinePoint translate_t(const SpaceSpec& spec, const Rational& s, const MultiLinePoint& p) {
  check_domain_preserved(spec, [&](const Rational& x) { return Rational(x + s); }, "translation");
  return {Rational(p.x + s), p.level};
}

Wave translate_t(const SpaceSpec& spec, const Rational& s, const Wave& w) {
  check_domain_preserved(spec, [&](const Rational& x) { return Rational(x + s); }, "translation");
  std::vector<Interval> parts;
  for (const auto& iv : w.base().intervals()) parts.push_back({shift(iv.lo, s), shift(iv.hi, s)});
  std::map<Rational, unsigned> lift;
  for (const auto& [x, level] : w.lift()) lift.emplace(Rational(x + s), level);
  return Wave(IntervalSet(std::move(parts)), std::move(lift));
}

MultiLinePoint exchange_e(const SpaceSpec& spec, const Rational& s, unsigned i, unsigned j,
                          const MultiLinePoint& p) {
  if (!spec.doubled_at(s)) throw PreconditionError("exchange at undoubled abscissa " + to_string(s));
  if (i >= spec.k || j >= spec.k) throw PreconditionError("exchange level out of range");
  if (p.x != s) return p;
  return {p.x, swap_level(p.level, i, j)};
}

Wave exchange_e(const SpaceSpec& spec, const Rational& s, unsigned i, unsigned j, const Wave& w) {
  if (!spec.doubled_at(s)) throw PreconditionError("exchange at undoubled abscissa " + to_string(s));
  if (i >= spec.k || j >= spec.k) throw PreconditionError("exchange level out of range");
  const auto level = w.level_at(s);
  if (!level) return w;
  // Adds or removes one oscillation of the wave at s.
  std::map<Rational, unsigned> lift = w.lift();
  lift.erase(s);
  lift.emplace(s, swap_level(*level, i, j));
  return Wave(w.base(), std::move(lift));
}

MultiLinePoint reflect(const SpaceSpec& spec, const Rational& c, const MultiLinePoint& p) {
  check_domain_preserved(spec, [&](const Rational& x) { return Rational(2 * c - x); }, "reflection");
  return {Rational(2 * c - p.x), p.level};
}

Wave reflect(const SpaceSpec& spec, const Rational& c, const Wave& w) {
  check_domain_preserved(spec, [&](const Rational& x) { return Rational(2 * c - x); }, "reflection");
  std::vector<Interval> parts;
  for (const auto& iv : w.base().intervals()) parts.push_back({mirror(iv.hi, c), mirror(iv.lo, c)});
  std::map<Rational, unsigned> lift;
  for (const auto& [x, level] : w.lift()) lift.emplace(Rational(2 * c - x), level);
  return Wave(IntervalSet(std::move(parts)), std::move(lift));
}

bool multiline_nonseparable(const MultiLinePoint& p, const MultiLinePoint& q) {
  return p != q && p.x == q.x;
}

DownWitness rational_down_dense() {
  return {true, [](const Wave& w) -> std::optional<MultiLinePoint> {
            const auto x = iset_pick(w.base(), w.lifted());
            if (!x) return std::nullopt;
            return MultiLinePoint{*x, 0};
          }};
}

BranchPoint BranchPoint::make(Rational x, Side side) {
  if (x < 0) side = Side::L;
  return {std::move(x), side};
}

BranchInterval BranchInterval::make(ExtRat lo, ExtRat hi, Side side) {
  if (!(lo < hi)) return {ExtRat(0), ExtRat(0), Side::L};
  if (hi <= ExtRat(0)) side = Side::L;
  return {std::move(lo), std::move(hi), side};
}

bool BranchInterval::contains(const BranchPoint& p) const {
  if (!(lo < ExtRat(p.x) && ExtRat(p.x) < hi)) return false;
  return p.x < 0 || p.side == side;
}

BranchInterval branch_meet(const BranchInterval& a, const BranchInterval& b) {
  ExtRat lo = std::max(a.lo, b.lo);
  ExtRat hi = std::min(a.hi, b.hi);
  if (a.side == b.side) return BranchInterval::make(std::move(lo), std::move(hi), a.side);
  // Different sides only share the glued half-line x < 0.
  return BranchInterval::make(std::move(lo), std::min(hi, ExtRat(0)), Side::L);
}

bool branch_nonseparable(const BranchPoint& p, const BranchPoint& q) {
  return p != q && p.x == 0 && q.x == 0;
}

std::string to_string(const SpaceSpec& spec) {
  if (spec.k == 1) return "line";
  if (spec.everywhere()) return spec.k == 2 ? "D" : "D" + std::to_string(spec.k);
  if (spec.k == 2 && *spec.domain == FinSet{Rational(0)}) return "two-origins";
  return "D" + std::to_string(spec.k) + "@" + to_string(*spec.domain);
}

std::string to_string(const MultiLinePoint& p) {
  return "D(" + to_string(p.x) + " @" + std::to_string(p.level) + ")";
}

std::string to_string(const Wave& w) {
  std::string out = "W[" + to_string(w.base());
  if (!w.lift().empty()) {
    out += "-{";
    bool first = true;
    for (const auto& [x, level] : w.lift()) {
      if (!first) out += ",";
      first = false;
      out += to_string(x) + "^" + std::to_string(level);
    }
    out += "}";
  }
  return out + "]";
}

std::string to_string(Side s) { return s == Side::L ? "L" : "R"; }

std::string to_string(const BranchPoint& p) { return "B(" + to_string(p.x) + " @" + to_string(p.side) + ")"; }

std::string to_string(const BranchInterval& b) {
  if (b.empty()) return "BI[empty]";
  return "BI[(" + to_string(b.lo) + "," + to_string(b.hi) + ")@" + to_string(b.side) + "]";
}

}  // namespace nhm
