#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nhm/rational.hpp"

namespace nhm {

/// Finite sorted duplicate-free set of finite rationals.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Rational> values);
  explicit FinSet(std::vector<Rational> values);

  const std::vector<Rational>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Rational& x) const;

  friend FinSet set_union(const FinSet& a, const FinSet& b);
  friend bool operator==(const FinSet& a, const FinSet& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Rational> elements_;
};

/// Open interval (lo, hi); empty when lo >= hi.
struct Interval {
  ExtRat lo;
  ExtRat hi;

  bool empty() const { return !(lo < hi); }
  bool contains(const ExtRat& x) const { return lo < x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of open intervals in canonical form: sorted, nonempty,
/// and merged wherever two intervals share interior points. Touching
/// intervals such as (0,1) and (1,2) stay separate since 1 is absent.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> raw);

  static IntervalSet line() { return IntervalSet({{ExtRat::neg_inf(), ExtRat::pos_inf()}}); }
  static IntervalSet open(const ExtRat& lo, const ExtRat& hi) { return IntervalSet({{lo, hi}}); }

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet canonicalize(const IntervalSet& a);

IntervalSet iset_meet(const IntervalSet& a, const IntervalSet& b);
IntervalSet iset_join(const IntervalSet& a, const IntervalSet& b);
bool iset_contains(const IntervalSet& a, const ExtRat& x);

/// A minus finitely many points.
IntervalSet iset_remove_points(const IntervalSet& a, const FinSet& points);

/// True iff A minus `holes` meets every nonempty open interval, i.e. iff the
/// complement of A in the line is a finite set of points.
bool iset_dense_in_line(const IntervalSet& a, const FinSet& holes);

/// The complement of A when it is finite (the gaps between touching
/// intervals); nullopt when the complement contains an interval.
std::optional<FinSet> iset_finite_complement(const IntervalSet& a);

/// Deterministic rational inside the open interval avoiding `avoid`: the
/// midpoint first, then the dyadic subdivision points level by level.
/// Unbounded sides are clipped to a width-2 window around the finite end
/// (or (-1,1) for the whole line). Precondition: the interval is nonempty.
Rational pick_rational(const Interval& in, const FinSet& avoid = {});

/// First interval's pick, or nullopt for the empty set.
std::optional<Rational> iset_pick(const IntervalSet& a, const FinSet& avoid = {});

/// Subset of the natural numbers that is either empty or cofinite.
class CofiniteSet {
 public:
  /// N minus `excluded`.
  explicit CofiniteSet(std::vector<std::uint64_t> excluded = {});
  static CofiniteSet empty_set();

  bool is_empty() const { return empty_; }
  const std::vector<std::uint64_t>& excluded() const { return excluded_; }
  bool contains(std::uint64_t n) const;

  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;

 private:
  bool empty_ = false;
  std::vector<std::uint64_t> excluded_;
};

CofiniteSet cofinite_meet(const CofiniteSet& a, const CofiniteSet& b);

std::string to_string(const FinSet& s);
std::string to_string(const IntervalSet& s);
std::string to_string(const CofiniteSet& s);

}  // namespace nhm
