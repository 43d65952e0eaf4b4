#pragma once

#include <cstdint>
#include <string>

namespace cosmoface {

/// Resource limits for the enumerative operations. Exceeding a cap raises
/// CapError; results are never silently truncated.
struct Caps {
  std::int64_t max_subgraphs = 1'000'000;
  std::int64_t max_cycles = 100'000;
  std::int64_t max_faces = 1'000'000;
  // brute_force_faces bound on |V(P_G)| (2^n subsets are scanned).
  int max_bf_vertices = 12;

  /// Parses "key=value" pairs separated by commas, whitespace or newlines.
  /// Known keys: max_subgraphs, max_cycles, max_faces, max_bf_vertices.
  /// Unknown keys raise InputError.
  void apply_assignments(const std::string& text);
};

}  // namespace cosmoface
