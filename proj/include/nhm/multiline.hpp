#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nhm/feather.hpp"
#include "nhm/interval_set.hpp"

namespace nhm {

/// k copies of the line glued everywhere except over the doubling domain.
///
/// k = 1 is the ordinary line, k = 2 with domain "all" the everywhere doubled
/// line, k = 3 the tripled line, and k = 2 with domain {0} the line with two
/// origins.
struct SpaceSpec {
  unsigned k = 2;
  /// nullopt: every abscissa carries all k levels.
  std::optional<FinSet> domain;

  static SpaceSpec line() { return {1, std::nullopt}; }
  static SpaceSpec doubled() { return {2, std::nullopt}; }
  static SpaceSpec tripled() { return {3, std::nullopt}; }
  static SpaceSpec fold(unsigned k) { return {k, std::nullopt}; }
  static SpaceSpec two_origins() { return {2, FinSet{Rational(0)}}; }

  bool everywhere() const { return !domain.has_value(); }
  bool doubled_at(const Rational& x) const { return k > 1 && (!domain || domain->contains(x)); }
  unsigned levels_at(const Rational& x) const { return doubled_at(x) ? k : 1; }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// (x, level); level 0 is "down", the others "up".
struct MultiLinePoint {
  Rational x;
  unsigned level = 0;

  friend bool operator==(const MultiLinePoint&, const MultiLinePoint&) = default;
};

/// Throws PreconditionError if the point does not exist in the space.
void validate(const SpaceSpec& spec, const MultiLinePoint& p);

/// Basic open: an open set O downstairs with finitely many abscissae lifted
/// to an upper level. Members are (x, 0) for x in O not lifted, and
/// (x, lift(x)) for each lifted x.
class Wave {
 public:
  Wave() = default;
  /// Lift keys must lie in O; level-0 entries are dropped.
  Wave(IntervalSet base, std::map<Rational, unsigned> lift);

  static Wave around(const MultiLinePoint& p, const Rational& radius);

  const IntervalSet& base() const { return base_; }
  const std::map<Rational, unsigned>& lift() const { return lift_; }
  bool empty() const { return base_.empty(); }

  /// The level of the unique member over x, nullopt when x is outside O.
  std::optional<unsigned> level_at(const Rational& x) const;
  bool contains(const MultiLinePoint& p) const;
  FinSet lifted() const;

  friend bool operator==(const Wave&, const Wave&) = default;

 private:
  IntervalSet base_;
  std::map<Rational, unsigned> lift_;
};

/// Throws PreconditionError when a lifted abscissa is not doubled in the
/// space or a level is out of range.
void validate(const SpaceSpec& spec, const Wave& w);

/// Intersection as a single wave: abscissae where the two waves pick
/// different levels are cut out of O.
Wave wave_meet(const Wave& a, const Wave& b);

// Generators of the homeomorphism group used for homogeneity.

MultiLinePoint translate_t(const SpaceSpec& spec, const Rational& s, const MultiLinePoint& p);
Wave translate_t(const SpaceSpec& spec, const Rational& s, const Wave& w);

/// Swaps levels i and j over abscissa s.
MultiLinePoint exchange_e(const SpaceSpec& spec, const Rational& s, unsigned i, unsigned j,
                          const MultiLinePoint& p);
Wave exchange_e(const SpaceSpec& spec, const Rational& s, unsigned i, unsigned j, const Wave& w);

/// (t, i) -> (2c - t, i).
MultiLinePoint reflect(const SpaceSpec& spec, const Rational& c, const MultiLinePoint& p);
Wave reflect(const SpaceSpec& spec, const Rational& c, const Wave& w);

/// Non-separable iff same abscissa (which is then doubled).
bool multiline_nonseparable(const MultiLinePoint& p, const MultiLinePoint& q);

struct DownWitness {
  bool dense = true;
  /// Rational down point inside a nonempty wave, nullopt for the empty wave.
  std::function<std::optional<MultiLinePoint>(const Wave&)> select;
};

/// Q x {0} is dense: every nonempty wave contains a rational down point.
DownWitness rational_down_dense();

enum class Side : std::uint8_t { L, R };

/// Point of the branching line: two copies of R glued along x < 0.
/// Points with x < 0 are stored with side L.
struct BranchPoint {
  Rational x;
  Side side = Side::L;

  static BranchPoint make(Rational x, Side side);
  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// Real interval (lo, hi) whose x >= 0 part lies on `side`.
struct BranchInterval {
  ExtRat lo;
  ExtRat hi;
  Side side = Side::L;

  /// Canonical: empty intervals collapse to (0,0); side L when hi <= 0.
  static BranchInterval make(ExtRat lo, ExtRat hi, Side side);
  bool empty() const { return !(lo < hi); }
  bool contains(const BranchPoint& p) const;
  friend bool operator==(const BranchInterval&, const BranchInterval&) = default;
};

BranchInterval branch_meet(const BranchInterval& a, const BranchInterval& b);
bool branch_nonseparable(const BranchPoint& p, const BranchPoint& q);

std::string to_string(const SpaceSpec& spec);
std::string to_string(const MultiLinePoint& p);
std::string to_string(const Wave& w);
std::string to_string(Side s);
std::string to_string(const BranchPoint& p);
std::string to_string(const BranchInterval& b);

}  // namespace nhm
