#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhm/rational.hpp"

namespace nhm {

/// A point (s_0, ..., s_n) of the complete feather: s_0 < ... < s_{n-1} <= s_n.
///
/// Length-1 points form the base line. A point whose last step is an
/// equality, (.., c, c), is an "upper twin": it sits at the bottom of the
/// branch grafted at (.., c) and cannot be separated from it.
class FeatherPoint {
 public:
  /// Validates the monotonicity constraint; throws PreconditionError.
  static FeatherPoint make(std::vector<Rational> seq);

  const std::vector<Rational>& coords() const { return seq_; }
  /// The index n of the last coordinate.
  std::size_t depth() const { return seq_.size() - 1; }
  const Rational& last() const { return seq_.back(); }
  bool is_upper_twin() const { return seq_.size() >= 2 && seq_[seq_.size() - 2] == seq_.back(); }

  /// (s_0, ..., s_{n-1}); precondition depth() >= 1.
  FeatherPoint truncated() const;
  /// (s_0, ..., s_{n-1}, r) without validation of r.
  FeatherPoint with_last(const Rational& r) const;

  friend bool operator==(const FeatherPoint&, const FeatherPoint&) = default;
  /// Lexicographic order for containers; unrelated to the feather order.
  friend bool operator<(const FeatherPoint& a, const FeatherPoint& b) { return a.seq_ < b.seq_; }

 private:
  explicit FeatherPoint(std::vector<Rational> seq) : seq_(std::move(seq)) {}
  std::vector<Rational> seq_;
};

FeatherPoint fp_validate(std::vector<Rational> seq);

/// The tree order: (s_0..s_n) < (t_0..t_m) iff n <= m, s_i = t_i for i < n
/// and s_n < t_n.
bool fp_less(const FeatherPoint& p, const FeatherPoint& q);

/// The unique twin partner.
FeatherPoint fp_twin(const FeatherPoint& p);
bool fp_are_twins(const FeatherPoint& p, const FeatherPoint& q);

/// {w : lower < w < upper} with lower < upper.
class FeatherInterval {
 public:
  /// Throws PreconditionError unless lower < upper.
  static FeatherInterval make(FeatherPoint lower, FeatherPoint upper);

  const FeatherPoint& lower() const { return lower_; }
  const FeatherPoint& upper() const { return upper_; }
  bool contains(const FeatherPoint& w) const { return fp_less(lower_, w) && fp_less(w, upper_); }

  friend bool operator==(const FeatherInterval&, const FeatherInterval&) = default;

 private:
  FeatherInterval(FeatherPoint lower, FeatherPoint upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {}
  FeatherPoint lower_;
  FeatherPoint upper_;
};

/// Horizontal piece {(prefix, r) : lo < r < hi}, or lo <= r when
/// `lo_closed` (a segment starting at a branch point).
struct Segment {
  std::vector<Rational> prefix;
  Rational lo;
  bool lo_closed = false;
  Rational hi;
};

/// An interval unfolds into a ladder of segments climbing from the lower
/// endpoint's level to the upper endpoint's level.
std::vector<Segment> segments(const FeatherInterval& iv);

/// Intersection of two intervals: always a single interval or empty.
std::optional<FeatherInterval> fi_meet(const FeatherInterval& a, const FeatherInterval& b);

/// True when every member of `inner` lies in `outer`.
bool fi_subset(const FeatherInterval& inner, const FeatherInterval& outer);

/// Canonical chart around a point with coordinate r - s_last.
///
/// For a strict point the member set is {(s_0..s_{n-1}, r) : |r - s_n| < eps};
/// for an upper twin (.., c, c) it is the glued set
/// {(.., r) : c - eps < r < c} u {(.., c, r) : c <= r < c + eps}.
class Chart {
 public:
  const FeatherPoint& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  const FeatherInterval& interval() const { return interval_; }

  bool contains(const FeatherPoint& w) const { return interval_.contains(w); }
  /// Chart coordinate of a member, nullopt for non-members.
  std::optional<Rational> coord(const FeatherPoint& w) const;
  /// Inverse coordinate map; precondition |c| < radius.
  FeatherPoint point_at(const Rational& c) const;

 private:
  friend Chart fp_chart(const FeatherPoint& p, const Rational& eps);
  Chart(FeatherPoint center, Rational radius, FeatherInterval iv)
      : center_(std::move(center)), radius_(std::move(radius)), interval_(std::move(iv)) {}
  FeatherPoint center_;
  Rational radius_;
  FeatherInterval interval_;
};

/// Chart at p. The radius is shrunk so the lower end stays at or above the
/// previous coordinate, keeping one of the two canonical shapes.
/// Throws PreconditionError for eps <= 0.
Chart fp_chart(const FeatherPoint& p, const Rational& eps);

/// The involution h_s swapping the two branches that emanate from
/// (s_0..s_{n-1}); s must have length >= 2. When r matches both the "inside
/// the branch" and "above the branch point" cases, the first one wins.
FeatherPoint flip_apply(const FeatherPoint& s, const FeatherPoint& r);

struct LineNormalization {
  /// Flip centres in application order: s, s^(1), ..., s^(n-1).
  std::vector<FeatherPoint> flips;
  FeatherPoint result;
};

/// Flips carrying s down to the base line point (s_n).
LineNormalization normalize_to_line(const FeatherPoint& s);

FeatherPoint fp_translate(const Rational& t, const FeatherPoint& p);

/// Contraction homotopy h_t for t in [0, 2]. Each last coordinate is pulled
/// onto the branch point on [1/(n+1), 1/n]; past t = 1 the base line slides
/// by 1 - t. Throws PreconditionError outside [0, 2].
FeatherPoint homotopy_eval(const Rational& t, const FeatherPoint& s);

/// Rows (t, h_t(s)) for t = 0, 2/steps, ..., 2.
std::vector<std::pair<Rational, FeatherPoint>> homotopy_trace(const FeatherPoint& s,
                                                              unsigned steps);

/// The open set of all points that are not upper twins, optionally carried
/// by the flip at `conjugate` (an upper twin or any point of length >= 2).
/// It is Hausdorff, dense, and adding any outside point brings in a twin pair.
class StrictSkeleton {
 public:
  StrictSkeleton() = default;
  explicit StrictSkeleton(std::optional<FeatherPoint> conjugate) : conjugate_(std::move(conjugate)) {}

  const std::optional<FeatherPoint>& conjugate() const { return conjugate_; }

  bool contains(const FeatherPoint& p) const;
  /// A chart around a member that lies inside the set.
  Chart chart_inside(const FeatherPoint& p) const;
  /// For a non-member u, the twin pair {twin(u), u} of which twin(u) is a member.
  std::pair<FeatherPoint, FeatherPoint> maximality_witness(const FeatherPoint& u) const;

  friend bool operator==(const StrictSkeleton&, const StrictSkeleton&) = default;

 private:
  std::optional<FeatherPoint> conjugate_;
};

StrictSkeleton strict_skeleton();

/// {(x, r) : a < r < b} for x < a < b: one open set per level-one branch,
/// pairwise disjoint across distinct x.
FeatherInterval disjoint_branch_family(const Rational& x, const Rational& a, const Rational& b);

std::string to_string(const FeatherPoint& p);
std::string to_string(const FeatherInterval& iv);

}  // namespace nhm
