#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropmat {

/// Subset of a ground set {0,..,n-1}, n <= 64, as a bitmask.
/// Elements are 0-indexed internally; all I/O uses 1-indexed labels.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t b) : bits(b) {}

  static Subset of(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s.bits |= std::uint64_t{1} << e;
    return s;
  }
  /// 1-indexed factory, matching the labels used in files and reports.
  static Subset labels(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s.bits |= std::uint64_t{1} << (e - 1);
    return s;
  }
  static Subset full(int n) {
    return n == 64 ? Subset(~std::uint64_t{0})
                   : Subset((std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int e) const { return bits >> e & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr int lowest() const { return std::countr_zero(bits); }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }

  constexpr Subset with(int e) const {
    return Subset(bits | std::uint64_t{1} << e);
  }
  constexpr Subset without(int e) const {
    return Subset(bits & ~(std::uint64_t{1} << e));
  }

  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits & b.bits);
  }
  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits | b.bits);
  }
  friend constexpr Subset operator^(Subset a, Subset b) {
    return Subset(a.bits ^ b.bits);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits & ~b.bits);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }
  std::vector<int> element_labels() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }
  /// "{1,2,4}" with 1-indexed labels.
  std::string str() const;
};

/// All k-subsets of {0,..,n-1} in lexicographic order of sorted element lists.
std::vector<Subset> k_subsets(int n, int k);

/// Rank of a k-subset in the lexicographic order produced by k_subsets.
int subset_lex_rank(Subset s, int n);

/// Inverse of subset_lex_rank for k-subsets of {0,..,n-1}.
Subset subset_lex_unrank(int rank, int n, int k);

std::uint64_t binomial(int n, int k);

}  // namespace tropmat
