#include "nhm/interval_set.hpp"

#include <algorithm>

#include "nhm/errors.hpp"

namespace nhm {

FinSet::FinSet(std::initializer_list<Rational> values) : FinSet(std::vector<Rational>(values)) {}

FinSet::FinSet(std::vector<Rational> values) : elements_(std::move(values)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FinSet::contains(const Rational& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
                 std::back_inserter(out));
  FinSet r;
  r.elements_ = std::move(out);
  return r;
}

IntervalSet::IntervalSet(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& i) { return i.empty(); });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  for (auto& next : raw) {
    if (!parts_.empty() && next.lo < parts_.back().hi) {
      parts_.back().hi = std::max(parts_.back().hi, next.hi);
    } else {
      parts_.push_back(std::move(next));
    }
  }
}

IntervalSet canonicalize(const IntervalSet& a) { return IntervalSet(a.intervals()); }

IntervalSet iset_meet(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  // Both inputs are sorted and disjoint, so a two-pointer sweep suffices.
  auto ia = a.intervals().begin();
  auto ib = b.intervals().begin();
  while (ia != a.intervals().end() && ib != b.intervals().end()) {
    Interval cut{std::max(ia->lo, ib->lo), std::min(ia->hi, ib->hi)};
    if (!cut.empty()) out.push_back(cut);
    if (ia->hi < ib->hi) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet iset_join(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet(std::move(all));
}

bool iset_contains(const IntervalSet& a, const ExtRat& x) {
  const auto& parts = a.intervals();
  auto it = std::upper_bound(parts.begin(), parts.end(), x,
                             [](const ExtRat& v, const Interval& i) { return v < i.hi; });
  return it != parts.end() && it->contains(x);
}

IntervalSet iset_remove_points(const IntervalSet& a, const FinSet& points) {
  std::vector<Interval> out;
  for (const auto& part : a.intervals()) {
    ExtRat lo = part.lo;
    for (const auto& p : points.elements()) {
      if (part.contains(p)) {
        out.push_back({lo, p});
        lo = p;
      }
    }
    out.push_back({lo, part.hi});
  }
  return IntervalSet(std::move(out));
}

std::optional<FinSet> iset_finite_complement(const IntervalSet& a) {
  const auto& parts = a.intervals();
  if (parts.empty()) return std::nullopt;
  if (parts.front().lo.kind() != ExtRat::Kind::NegInf) return std::nullopt;
  if (parts.back().hi.kind() != ExtRat::Kind::PosInf) return std::nullopt;
  std::vector<Rational> gaps;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i].hi != parts[i + 1].lo) return std::nullopt;
    gaps.push_back(parts[i].hi.value());
  }
  return FinSet(std::move(gaps));
}

bool iset_dense_in_line(const IntervalSet& a, const FinSet& /*holes*/) {
  // Removing finitely many points never changes whether the complement is finite.
  return iset_finite_complement(a).has_value();
}

Rational pick_rational(const Interval& in, const FinSet& avoid) {
  if (in.empty()) throw PreconditionError("pick_rational on an empty interval");
  Rational lo;
  Rational hi;
  if (!in.lo.is_finite() && !in.hi.is_finite()) {
    lo = -1;
    hi = 1;
  } else if (!in.lo.is_finite()) {
    hi = in.hi.value();
    lo = hi - 2;
  } else if (!in.hi.is_finite()) {
    lo = in.lo.value();
    hi = lo + 2;
  } else {
    lo = in.lo.value();
    hi = in.hi.value();
  }
  const Rational width = hi - lo;
  for (unsigned depth = 1;; ++depth) {
    mpz_class denom = 1;
    denom <<= depth;
    for (mpz_class k = 1; k < denom; k += 2) {
      Rational c = lo + width * Rational(k, denom);
      c.canonicalize();
      if (!avoid.contains(c)) return c;
    }
  }
}

std::optional<Rational> iset_pick(const IntervalSet& a, const FinSet& avoid) {
  if (a.empty()) return std::nullopt;
  return pick_rational(a.intervals().front(), avoid);
}

CofiniteSet::CofiniteSet(std::vector<std::uint64_t> excluded) : excluded_(std::move(excluded)) {
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

CofiniteSet CofiniteSet::empty_set() {
  CofiniteSet s;
  s.empty_ = true;
  return s;
}

bool CofiniteSet::contains(std::uint64_t n) const {
  return !empty_ && !std::binary_search(excluded_.begin(), excluded_.end(), n);
}

CofiniteSet cofinite_meet(const CofiniteSet& a, const CofiniteSet& b) {
  if (a.is_empty() || b.is_empty()) return CofiniteSet::empty_set();
  std::vector<std::uint64_t> all = a.excluded();
  all.insert(all.end(), b.excluded().begin(), b.excluded().end());
  return CofiniteSet(std::move(all));
}

std::string to_string(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(s.elements()[i]);
  }
  return out + "}";
}

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "empty";
  std::string out;
  for (const auto& part : s.intervals()) {
    if (!out.empty()) out += "u";
    out += "(" + to_string(part.lo) + "," + to_string(part.hi) + ")";
  }
  return out;
}

std::string to_string(const CofiniteSet& s) {
  if (s.is_empty()) return "cofinite-empty";
  std::string out = "cofinite-excl{";
  for (std::size_t i = 0; i < s.excluded().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s.excluded()[i]);
  }
  return out + "}";
}

}  // namespace nhm
