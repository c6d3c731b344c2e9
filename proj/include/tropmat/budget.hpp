#pragma once

#include <cstdint>

namespace tropmat {

/// Enumeration guards. TROPMAT_BUDGET (a point count) overrides the
/// default 2^24 cap on 0/1-point and flat enumerations.
struct Budget {
  /// Max number of 0/1 points enumerable (default 1 << 24).
  static std::uint64_t max_points();
  /// Largest n allowed for 2^n enumeration under max_points().
  static int max_enum_bits();
  /// Node cap for the exact set-cover search.
  static std::uint64_t max_search_nodes();
  /// Permutation cap for exhaustive tropical determinants (9! by default).
  static int max_det_size();
};

void check_enum_guard(int n);

}  // namespace tropmat
