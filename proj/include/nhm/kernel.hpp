#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nhm/feather.hpp"
#include "nhm/interval_set.hpp"
#include "nhm/multiline.hpp"

namespace nhm {

struct FeatherSpace {
  friend bool operator==(const FeatherSpace&, const FeatherSpace&) = default;
};
struct BranchingLine {
  friend bool operator==(const BranchingLine&, const BranchingLine&) = default;
};
/// The natural numbers with the finite-complement topology.
struct CofiniteSpace {
  friend bool operator==(const CofiniteSpace&, const CofiniteSpace&) = default;
};

struct CofinitePoint {
  std::uint64_t n = 0;
  friend bool operator==(const CofinitePoint&, const CofinitePoint&) = default;
};

// The alternatives line up: a space, its points and its basic opens share
// the same variant index.
using Space = std::variant<FeatherSpace, SpaceSpec, BranchingLine, CofiniteSpace>;
using Point = std::variant<FeatherPoint, MultiLinePoint, BranchPoint, CofinitePoint>;
using BasicOpen = std::variant<FeatherInterval, Wave, BranchInterval, CofiniteSet>;
/// Union of finitely many basics of one space; empty list is the empty set.
using OpenSet = std::vector<BasicOpen>;

/// Throws PreconditionError on a tag mismatch or a point outside the space.
void validate(const Space& space, const Point& p);
void validate(const Space& space, const BasicOpen& b);

bool is_empty(const BasicOpen& b);

// ---------------------------------------------------------------------------
// Homeomorphism words

/// Feather flip h_s.
struct Flip {
  FeatherPoint at;
  friend bool operator==(const Flip&, const Flip&) = default;
};
/// Translation of F or of a k-fold line.
struct Shift {
  Rational by;
  friend bool operator==(const Shift&, const Shift&) = default;
};
/// Level swap over one abscissa of a k-fold line.
struct Exchange {
  Rational at;
  unsigned first = 0;
  unsigned second = 1;
  friend bool operator==(const Exchange&, const Exchange&) = default;
};
/// (t, i) -> (2c - t, i) on a k-fold line.
struct Reflect {
  Rational about;
  friend bool operator==(const Reflect&, const Reflect&) = default;
};

using Move = std::variant<Flip, Shift, Exchange, Reflect>;
/// Moves in application order.
using HomeoWord = std::vector<Move>;

Point apply(const Space& space, const Move& g, const Point& p);
Point replay(const Space& space, const HomeoWord& word, const Point& p);
Wave replay(const SpaceSpec& spec, const HomeoWord& word, const Wave& w);

// ---------------------------------------------------------------------------
// Parametric sequences

enum class Approach : std::uint8_t { FromBelow, FromAbove };

/// Terms m -> base with coordinate `index` replaced by limit -/+ scale/m
/// (m = 1, 2, ...). A zero scale is the constant sequence at the limit.
/// Feather descriptors move the last coordinate; line descriptors move the
/// abscissa (index 0).
struct SeqDescriptor {
  Point base;
  std::size_t index = 0;
  Rational limit;
  Approach approach = Approach::FromBelow;
  Rational scale{1};
};

/// The m-th term; throws PreconditionError when it is not a point.
Point term(const Space& space, const SeqDescriptor& s, unsigned long m);

/// Every chart neighbourhood of p contains a tail of the sequence.
/// Throws PreconditionError for a malformed descriptor.
bool converges(const Space& space, const SeqDescriptor& s, const Point& p);

/// The descriptor approaching the lower member of a non-separable pair from
/// below; it converges to both members.
SeqDescriptor canonical_twin_sequence(const Space& space, const Point& p, const Point& q);

// ---------------------------------------------------------------------------
// Open sets given by a predicate plus finitely many basics

struct OpenHandle {
  OpenSet basics;
  /// The strict skeleton of F (possibly flip-conjugated), when present.
  std::optional<StrictSkeleton> skeleton;

  static OpenHandle of(OpenSet basics) { return {std::move(basics), std::nullopt}; }
  static OpenHandle of(BasicOpen b) { return {{std::move(b)}, std::nullopt}; }
  friend bool operator==(const OpenHandle&, const OpenHandle&) = default;
};

bool member(const Space& space, const Point& p, const BasicOpen& b);
bool member(const Space& space, const Point& p, const OpenHandle& u);

/// Intersection presented as basics (empty pieces dropped).
OpenSet meet(const Space& space, const BasicOpen& a, const BasicOpen& b);

/// Canonical neighbourhood of radius eps (feather chart, wave, branch
/// interval; the whole space for the cofinite topology).
BasicOpen neighborhood(const Space& space, const Point& p, const Rational& eps);

// ---------------------------------------------------------------------------
// Certificates

struct SeparatedBy {
  Point p;
  Point q;
  BasicOpen around_p;
  BasicOpen around_q;
};
/// A non-separable pair.
struct TwinPair {
  Point p;
  Point q;
};
/// A point outside every listed open.
struct Uncovered {
  Point point;
  std::vector<OpenHandle> opens;
};
/// Candidate n of the cofinite space is not in D_index = N minus {index}.
struct ExcludedBy {
  std::uint64_t candidate = 0;
  std::uint64_t index = 0;
};
/// Consecutively meeting basics from src to dst, all avoiding `removed`.
struct Chain {
  Point src;
  Point dst;
  std::vector<Point> removed;
  std::vector<BasicOpen> links;
};
/// replay(word, from) == to; when involutive also replay(word, to) == from.
struct HomeoCert {
  Point from;
  Point to;
  HomeoWord word;
  bool involutive = false;
};
/// Closed interval [a, b] in chart coordinates of the chart of given radius
/// at `center`, inside `neighborhood`.
struct CompactCert {
  Point center;
  Rational chart_radius;
  Rational a;
  Rational b;
  BasicOpen neighborhood;
};
/// `probe` is nonempty (contains witness) and misses the open set.
struct Avoids {
  BasicOpen probe;
  Point witness;
  OpenHandle set;
};
/// The point lies in every listed open.
struct InAll {
  Point point;
  std::vector<OpenHandle> opens;
};
/// `open` contains `point` and none of `others`.
struct Isolates {
  Point point;
  BasicOpen open;
  std::vector<Point> others;
};
/// Every probe lies in some listed open.
struct Covers {
  std::vector<OpenHandle> opens;
  std::vector<Point> probes;
};
/// A decidable per-space property of an open set ("hausdorff", "dense"),
/// re-decided by the verifier.
struct Criterion {
  std::string rule;
  OpenHandle subject;
};

using Certificate = std::variant<SeparatedBy, TwinPair, Uncovered, ExcludedBy, Chain, HomeoCert,
                                 CompactCert, Avoids, InAll, Isolates, Covers, Criterion>;

std::string kind_name(const Certificate& c);

struct Verdict {
  bool holds = false;
  Certificate certificate;
};

/// Decides whether two distinct points have disjoint neighbourhoods.
/// Throws PreconditionError when p == q.
Verdict separable(const Space& space, const Point& p, const Point& q);

/// Searches canonical neighbourhoods at the given radii for a disjoint pair.
std::optional<SeparatedBy> refute_nonseparable(const Space& space, const Point& p, const Point& q,
                                               const std::vector<Rational>& radii);

/// Per-space density: true with a Criterion, false with an Avoids witness.
Verdict dense(const Space& space, const OpenHandle& u);

/// True iff u contains no non-separable pair; false with a TwinPair inside u.
Verdict hausdorff_open(const Space& space, const OpenHandle& u);

/// Re-derives the attested fact without trusting the producer.
bool verify_certificate(const Space& space, const Certificate& c);

}  // namespace nhm
