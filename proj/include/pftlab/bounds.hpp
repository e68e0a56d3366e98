#pragma once

#include <cstddef>

namespace pftlab {

/// Size limits for the exponential parts of the library. The defaults keep
/// every sweep interactive; raising them is an explicit opt-in.
struct Bounds {
  std::size_t max_poset_size = 6;         // enumerate_posets
  std::size_t literal_check_points = 10;  // subset-quantified topology checks
  std::size_t oracle_elements = 16;       // brute-force nucleus enumeration
  std::size_t tower_points = 3;           // |X_L| allowed for a depth-2 tower
  std::size_t max_tower_depth = 2;
  std::size_t max_topology_points = 4;    // enumerate_topologies

  /// Defaults overridden by PFTLAB_MAX_POSET, PFTLAB_LITERAL_POINTS,
  /// PFTLAB_ORACLE_ELEMENTS, PFTLAB_TOWER_POINTS, PFTLAB_TOWER_DEPTH and
  /// PFTLAB_MAX_TOPOLOGY when set to a non-negative integer.
  static Bounds from_env();
};

}  // namespace pftlab
