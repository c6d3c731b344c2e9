#include "tropmat/families.hpp"

#include <algorithm>
#include <set>

#include "tropmat/error.hpp"

namespace tropmat {

Matroid uniform(int d, int n) {
  if (d <= 0 || d > n || n > 64)
    fail(ErrorCode::InvalidArgument, "uniform matroid needs 0 < d <= n <= 64");
  if (binomial(n, d + 1) > 1'000'000)
    fail(ErrorCode::SizeBudgetExceeded, "too many circuits for U(d,n)");
  // All (d+1)-subsets; the family satisfies the axioms by construction.
  return Matroid::from_circuits(n, k_subsets(n, d + 1), /*trusted=*/true);
}

std::vector<Subset> uniform_basis(int d, int n, int i) {
  if (i < 1 || i > n) fail(ErrorCode::InvalidArgument, "element out of range");
  std::vector<Subset> out;
  for (Subset c : k_subsets(n, d + 1))
    if (c.contains(i - 1)) out.push_back(c);
  return out;
}

namespace {
void check_partition(int n, const std::vector<std::vector<int>>& blocks) {
  Subset seen;
  for (const auto& block : blocks)
    for (int e : block) {
      if (e < 1 || e > n)
        fail(ErrorCode::InvalidArgument, "block element out of range");
      if (seen.contains(e - 1))
        fail(ErrorCode::InvalidArgument, "blocks are not disjoint");
      seen = seen.with(e - 1);
    }
  if (seen != Subset::full(n))
    fail(ErrorCode::InvalidArgument, "blocks do not cover the ground set");
}
}  // namespace

Matroid partition_matroid(int n, const std::vector<std::vector<int>>& blocks) {
  check_partition(n, blocks);
  std::vector<Subset> circuits;
  for (const auto& block : blocks)
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = a + 1; b < block.size(); ++b)
        circuits.push_back(Subset::labels({block[a], block[b]}));
  return Matroid::from_circuits(n, std::move(circuits), /*trusted=*/true);
}

std::vector<Subset> partition_basis(int n,
                                    const std::vector<std::vector<int>>& blocks) {
  check_partition(n, blocks);
  std::vector<Subset> out;
  for (auto block : blocks) {
    std::sort(block.begin(), block.end());
    for (size_t a = 0; a + 1 < block.size(); ++a)
      out.push_back(Subset::labels({block[a], block[a + 1]}));
  }
  return out;
}

Matroid graphic(const Graph& g) {
  if (g.edge_count() > 64)
    fail(ErrorCode::GroundSetTooLarge, "too many edges for a matroid");
  return Matroid::from_circuits(g.edge_count(), cycles(g), /*trusted=*/true);
}

Matroid cographic(const Graph& g) {
  if (!is_k_edge_connected(g, 3))
    fail(ErrorCode::NotThreeEdgeConnected,
         "cographic matroids are built from 3-edge-connected graphs here");
  std::vector<Subset> circuits;
  for (const EdgeCut& b : bonds(g)) circuits.push_back(b.edges);
  return Matroid::from_circuits(g.edge_count(), std::move(circuits),
                                /*trusted=*/true);
}

std::vector<Subset> cographic_basis(const Graph& g) {
  if (!is_k_edge_connected(g, 3))
    fail(ErrorCode::NotThreeEdgeConnected,
         "cographic matroids are built from 3-edge-connected graphs here");
  std::vector<Subset> out;
  for (const EdgeCut& b : bonds(g))
    if (cut_index(g, b) == 0) out.push_back(b.edges);
  return out;
}

std::vector<Subset> fano_lines() {
  return {Subset::labels({1, 2, 4}), Subset::labels({1, 3, 7}),
          Subset::labels({1, 5, 6}), Subset::labels({2, 3, 5}),
          Subset::labels({2, 6, 7}), Subset::labels({3, 4, 6}),
          Subset::labels({4, 5, 7})};
}

Matroid fano() {
  std::vector<Subset> circuits = fano_lines();
  // The 4-element circuits are exactly the line complements.
  for (Subset line : fano_lines()) circuits.push_back(Subset::full(7) - line);
  return Matroid::from_circuits(7, std::move(circuits));
}

std::vector<Subset> r10_four_cycles() {
  Graph k5 = Graph::complete(5);
  std::vector<Subset> out;
  for (Subset c : cycles(k5))
    if (c.count() == 4) out.push_back(c);
  return out;
}

Matroid r10() {
  std::vector<Subset> circuits = r10_four_cycles();
  for (Subset c : r10_four_cycles()) circuits.push_back(Subset::full(10) - c);
  return Matroid::from_circuits(10, std::move(circuits));
}

}  // namespace tropmat
