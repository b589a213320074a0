#pragma once

#include <optional>
#include <vector>

#include "nhm/kernel.hpp"

namespace nhm {

// Feather homogeneity.

/// Flip word carrying s to (s_n), as a checkable homeomorphism certificate.
HomeoCert feather_normalize(const FeatherPoint& s);

/// p -> (p_n) by flips, shift by q_n - p_n, then the flips of q in reverse.
HomeoCert feather_move(const FeatherPoint& p, const FeatherPoint& q);

struct SeamCheck {
  Rational seam;
  /// Terms h_{seam - d/m}(s) and h_{seam + d/m}(s) as parametric sequences.
  SeqDescriptor from_left;
  SeqDescriptor from_right;
  FeatherPoint left_limit;
  FeatherPoint right_limit;
  FeatherPoint at_seam;
  /// Limits equal or twins, and both sequences converge to h_seam(s).
  bool continuous = false;
};

/// One-sided behaviour of t -> h_t(s) at t = 1/k. The last coordinate is
/// affine in t on each piece, so two samples per side fix the sequence.
SeamCheck homotopy_seam(const FeatherPoint& s, unsigned k);

// k-fold lines.

/// Word of translations, exchanges and reflections mapping p to q. The
/// involutive variant swaps p and q. Requires the doubling domain "all".
HomeoCert move(const SpaceSpec& spec, const MultiLinePoint& p, const MultiLinePoint& q,
               bool involutive = false);

/// separable() on a k-fold line.
Verdict separable_line(const SpaceSpec& spec, const MultiLinePoint& p, const MultiLinePoint& q);

struct ChainResult {
  bool connected = false;
  /// A Chain certificate when connected; nullopt means inconclusive.
  std::optional<Chain> chain;
};

/// Bounded search for a chain of waves joining src to dst inside the window
/// while avoiding the removed points. Failure is reported as inconclusive,
/// never as disconnected. Default window: one unit beyond all abscissae.
ChainResult chain_connect(const SpaceSpec& spec, const MultiLinePoint& src, const MultiLinePoint& dst,
                          const std::vector<MultiLinePoint>& removed,
                          std::optional<Interval> window = std::nullopt);

struct BranchWitness {
  BranchPoint origin_l;
  BranchPoint origin_r;
  /// The two origins cannot be separated.
  TwinPair origins;
  BranchPoint regular;
  /// `regular` separated from each sampled point.
  std::vector<SeparatedBy> regular_separations;
};

/// The branching line is not homogeneous: (0,L) has a non-separable partner,
/// (1,L) has none, so no homeomorphism exchanges them.
BranchWitness branch_non_homogeneity_witness();

/// In D, each sampled up point (x,1) is isolated by a wave lifting only x,
/// and each probed down point has a wave without up points.
std::vector<Isolates> up_points_discrete_witness(const FinSet& sample, const FinSet& down_probes = {});

}  // namespace nhm
