#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cosmoface/face_engine.hpp"
#include "cosmoface/polytope.hpp"

namespace cosmoface {

/// Result of driving the graph criterion against the LP oracle.
struct DifferentialResult {
  std::int64_t subsets_checked = 0;
  std::int64_t mismatches = 0;
  /// First mismatch, shrunk to a minimal disagreeing subset.
  std::optional<FaceSet> counterexample;
  bool criterion_said_face = false;  // for the counterexample
};

/// Compares is_face with lp_is_face on every subset of V(P_G).
/// Requires vertex_count <= 63. `threads` >= 1 splits the mask range;
/// results are merged in mask order, so the outcome is schedule-free.
DifferentialResult verify_exhaustive(const FaceEngine& engine, int threads = 1);

/// Same on `samples` subsets drawn from mt19937_64(seed), one draw per
/// subset (the exact sequence is pinned by the standard).
DifferentialResult verify_sampled(const FaceEngine& engine, std::int64_t samples,
                                  std::uint64_t seed, int threads = 1);

}  // namespace cosmoface
