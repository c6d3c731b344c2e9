#include "tropmat/budget.hpp"

#include <cstdlib>
#include <string>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {
std::uint64_t read_budget_env() {
  const char* env = std::getenv("TROPMAT_BUDGET");
  if (!env) return std::uint64_t{1} << 24;
  try {
    return std::stoull(env);
  } catch (...) {
    return std::uint64_t{1} << 24;
  }
}
}  // namespace

std::uint64_t Budget::max_points() {
  static const std::uint64_t v = read_budget_env();
  return v;
}

int Budget::max_enum_bits() {
  std::uint64_t p = max_points();
  int bits = 0;
  while ((std::uint64_t{1} << (bits + 1)) <= p && bits < 63) ++bits;
  return bits;
}

std::uint64_t Budget::max_search_nodes() { return 10'000'000; }

int Budget::max_det_size() { return 9; }

void check_enum_guard(int n) {
  if (n > Budget::max_enum_bits())
    fail(ErrorCode::GroundSetTooLarge,
         "ground set of size " + std::to_string(n) +
             " exceeds the 2^n enumeration guard (" +
             std::to_string(Budget::max_enum_bits()) +
             "); set TROPMAT_BUDGET to raise it");
}

}  // namespace tropmat
