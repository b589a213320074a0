#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhm/kernel.hpp"

namespace nhm {

/// A Hausdorff dense open set through a point, in closed form, together
/// with one designated point outside it whose adjunction breaks Hausdorffness.
struct MaximalOpen {
  Point at;
  OpenHandle open;
  Verdict hausdorff;
  Verdict dense;
  /// nullopt when the open set is the whole space (the ordinary line).
  std::optional<Point> outside;
};

/// D_k and the two-origins line: the full-line wave lifting x if x is up.
/// F: the strict skeleton, flip-conjugated when x is an upper twin.
/// Branching line: everything except the other origin.
/// Throws PreconditionError on the cofinite space (no Hausdorff open is
/// nonempty there).
MaximalOpen maximal_hausdorff_at(const Space& space, const Point& x);

/// hausdorff_open of u together with a chart around y. For y outside a
/// maximal open the verdict is false with a twin pair inside the union.
Verdict adjoin_point(const Space& space, const OpenHandle& u, const Point& y);

/// Points that decide coverage for the cover families below: up points of
/// D_k, upper twins and level-one points of F, the origins elsewhere.
/// `count` bounds the sweep over abscissae 0, 1, 2, ...
std::vector<Point> cover_probes(const Space& space, std::size_t count);

/// Chosen members U_x (x in `chosen`) of the cover by maximal Hausdorff
/// opens. Success is a Covers certificate over the probes, failure an
/// Uncovered point member-checked against every chosen open.
Verdict subcover_attempt(const Space& space, const std::vector<Point>& chosen);

/// Same against an explicit cover; `chosen` indexes into `cover`. Throws
/// PreconditionError for an index outside the family.
Verdict subcover_attempt(const Space& space, const std::vector<OpenHandle>& cover,
                         const std::vector<std::size_t>& chosen, const std::vector<Point>& extra_probes = {});

/// Countable family of dense opens: finitely many handles, or on the
/// cofinite space the family D_n = N minus {n}.
struct DenseFamily {
  std::vector<OpenHandle> members;
  bool cofinite_singletons = false;
};

struct BaireResult {
  /// A point of probe inside every member, when one exists.
  std::optional<Point> point;
  /// InAll for a found point; ExcludedBy per candidate for the empty verdict.
  std::vector<Certificate> certificates;
};

/// Finite families: a point in probe and every member, found by excluding
/// finitely many bad candidates. The cofinite family: empty, with the
/// excluding index of each candidate 0..candidates-1. Throws
/// PreconditionError for a member that is not dense.
BaireResult baire_intersect(const Space& space, const DenseFamily& fam, const BasicOpen& probe,
                            std::uint64_t candidates = 1000);

struct StageReport {
  std::string id;
  bool passed = false;
  std::vector<Certificate> certificates;
};

struct PipelineReport {
  std::vector<StageReport> stages;
  std::optional<Point> separated_point;
  /// "separated point found" or "failed at <stage>".
  std::string verdict;
};

/// Replays the separation argument for homogeneous Lindelöf Baire
/// manifolds: maximal opens at the sample points, a subcover by the opens at
/// `chosen`, a point in their intersection, and its separation from probes.
PipelineReport theorem2_pipeline(const Space& space, const std::vector<Point>& samples,
                                 const std::vector<Point>& chosen, const std::vector<Point>& probes);

/// Finite subcover of a cover of N by cofinite sets: one nonempty member
/// plus a member for each point it excludes. Throws PreconditionError when
/// the list does not cover N.
std::vector<CofiniteSet> quasi_compact_subcover(const std::vector<CofiniteSet>& cover);

/// Closed chart interval [-r/2, r/2] at p whose chart of radius r lies in V.
/// Supported on F and the k-fold lines; throws PreconditionError elsewhere
/// or when p is not in V.
CompactCert microcompact_neighborhood(const Space& space, const Point& p, const BasicOpen& v);

/// Iterates microcompact_neighborhood inside the open chart of its previous
/// result; depth certificates, each strictly inside the one before.
std::vector<CompactCert> microcompact_chain(const Space& space, const Point& p, const BasicOpen& v,
                                            unsigned depth);

struct Fact {
  std::string name;
  bool holds = false;
  std::vector<Certificate> certificates;
};

struct ImplicationRow {
  std::string label;
  Space space;
  std::vector<Fact> facts;
};

/// Rows for the line, D, F and the cofinite space: local compactness via
/// compact neighbourhoods, finite-family Baire, quasi-compactness and the
/// failure of Baire on the cofinite space.
std::vector<ImplicationRow> chart_of_implications();

}  // namespace nhm
