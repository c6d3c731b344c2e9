#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropmat/subset.hpp"

namespace tropmat {

/// Connected simple undirected graph. Edge ids are dense 0..m-1 in input
/// order (1..m in all I/O); vertices 0..V-1.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  /// Validates: endpoints in range, no self-loops, no parallel edges,
  /// connected. Throws InvalidArgument.
  static Graph make(int vertices, std::vector<std::pair<int, int>> edges);

  static Graph complete(int k);
  static Graph cycle(int k);
  static Graph path(int k);
  static Graph prism();
  static Graph petersen();
  /// Named lookup: "k4", "k5", "prism", "petersen", "c4", ...
  static Graph named(const std::string& name);
};

/// An inclusion-minimal edge cut together with the two connected vertex
/// sides it separates.
struct EdgeCut {
  Subset edges;  // edge ids
  Subset side_u;  // vertex set containing vertex 0
  Subset side_v;
};

/// All cycles (closed walks with all vertices of degree two) as edge-id
/// subsets. Guarded to m <= 24 edges.
std::vector<Subset> cycles(const Graph& g);

/// Cycles whose vertex-induced subgraph has no chord.
std::vector<Subset> induced_cycles(const Graph& g);

/// All bonds, via enumeration of vertex bipartitions with connected
/// sides. Guarded to V <= 16 vertices.
std::vector<EdgeCut> bonds(const Graph& g);

/// Bridges of the subgraph induced on the given vertex set (edge ids).
/// An edgeless side (single vertex) has no bridges.
std::vector<int> bridges_in_induced(const Graph& g, Subset vertices);

/// index(C) = bridges(side U) + bridges(side V). Throws if C is not a
/// bond of g.
int cut_index(const Graph& g, const EdgeCut& cut);

/// True iff the graph stays connected after removing any k-1 edges.
bool is_k_edge_connected(const Graph& g, int k);

}  // namespace tropmat
