#pragma once

#include <vector>

#include "tropmat/graph.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/subset.hpp"

namespace tropmat {

/// U_{d,n}: circuits are all (d+1)-subsets of [n].
Matroid uniform(int d, int n);

/// All (d+1)-subsets containing the fixed element i (1-indexed label).
/// An inclusion-minimal tropical basis of U_{d,n}.
std::vector<Subset> uniform_basis(int d, int n, int i);

/// Circuits are the within-block pairs. Blocks must partition [n]
/// (1-indexed labels inside blocks).
Matroid partition_matroid(int n, const std::vector<std::vector<int>>& blocks);

/// Per block, the path of consecutive pairs (a spanning tree of the
/// block's pair-graph); a tropical basis of the partition matroid.
std::vector<Subset> partition_basis(int n,
                                    const std::vector<std::vector<int>>& blocks);

/// Matroid on edge ids with circuits = cycles(g).
Matroid graphic(const Graph& g);

/// Matroid on edge ids with circuits = bonds(g).
/// Requires g 3-edge-connected; throws NotThreeEdgeConnected.
Matroid cographic(const Graph& g);

/// The bonds splitting g into two bridgeless sides (index-0 bonds);
/// the unique minimal tropical basis of cographic(g).
std::vector<Subset> cographic_basis(const Graph& g);

/// Fano matroid: the 7 lines and the 7 four-element circuits (the line
/// complements).
Matroid fano();
std::vector<Subset> fano_lines();

/// R10 on the 10 edges of K5 (edges ordered lexicographically:
/// 12,13,14,15,23,24,25,34,35,45 as ids 1..10): the fifteen 4-cycles and
/// their complements.
Matroid r10();
std::vector<Subset> r10_four_cycles();

}  // namespace tropmat
