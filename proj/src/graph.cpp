#include "tropmat/graph.hpp"

#include <algorithm>
#include <set>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    adj[u].push_back({v, i});
    adj[v].push_back({u, i});
  }
  return adj;
}

/// Connectivity of the subgraph induced on `verts`, optionally skipping
/// one edge id.
bool connected_on(const Graph& g, Subset verts, int skip_edge = -1) {
  if (verts.empty()) return false;
  auto adj = adjacency(g);
  Subset seen;
  std::vector<int> stack{verts.lowest()};
  seen = seen.with(verts.lowest());
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [w, ei] : adj[u]) {
      if (ei == skip_edge || !verts.contains(w) || seen.contains(w)) continue;
      seen = seen.with(w);
      stack.push_back(w);
    }
  }
  return seen == verts;
}

}  // namespace

Graph Graph::make(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices <= 0 || vertices > 64)
    fail(ErrorCode::InvalidArgument, "vertex count must be in 1..64");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::InvalidArgument, "self-loops not supported");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      fail(ErrorCode::InvalidArgument, "parallel edges not supported");
  }
  Graph g{vertices, std::move(edges)};
  if (!connected_on(g, Subset::full(vertices)))
    fail(ErrorCode::InvalidArgument, "graph must be connected");
  return g;
}

Graph Graph::complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  return make(k, std::move(edges));
}

Graph Graph::cycle(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return make(k, std::move(edges));
}

Graph Graph::path(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return make(k, std::move(edges));
}

Graph Graph::prism() {
  return make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                  {0, 3}, {1, 4}, {2, 5}});
}

Graph Graph::petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
  return make(10, std::move(edges));
}

Graph Graph::named(const std::string& name) {
  if (name == "prism") return prism();
  if (name == "petersen") return petersen();
  if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'K'))
    return complete(std::stoi(name.substr(1)));
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'C'))
    return cycle(std::stoi(name.substr(1)));
  if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'P'))
    return path(std::stoi(name.substr(1)));
  fail(ErrorCode::InvalidArgument, "unknown graph name: " + name);
}

std::vector<Subset> cycles(const Graph& g) {
  if (g.edge_count() > 24)
    fail(ErrorCode::GroundSetTooLarge,
         "cycle enumeration guarded to 24 edges");
  auto adj = adjacency(g);
  std::set<Subset> out;
  // Paths from a start vertex using only vertices >= start; closing back
  // to the start yields each cycle (twice, once per direction).
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start, int u, Subset visited,
                 Subset edge_set) -> void {
    for (auto [w, ei] : adj[u]) {
      if (w == start && edge_set.count() >= 2)
        out.insert(edge_set.with(ei));
      else if (w > start && !visited.contains(w))
        self(self, start, w, visited.with(w), edge_set.with(ei));
    }
  };
  for (int s = 0; s < g.vertex_count; ++s)
    dfs(dfs, s, s, Subset().with(s), Subset());
  return {out.begin(), out.end()};
}

namespace {
Subset cycle_vertices(const Graph& g, Subset cycle_edges) {
  Subset vs;
  for (int ei : cycle_edges.elements()) {
    vs = vs.with(g.edges[ei].first);
    vs = vs.with(g.edges[ei].second);
  }
  return vs;
}
}  // namespace

std::vector<Subset> induced_cycles(const Graph& g) {
  std::vector<Subset> out;
  for (Subset c : cycles(g)) {
    Subset vs = cycle_vertices(g, c);
    int inside = 0;
    for (auto [u, v] : g.edges)
      if (vs.contains(u) && vs.contains(v)) ++inside;
    if (inside == c.count()) out.push_back(c);  // no chord
  }
  return out;
}

std::vector<EdgeCut> bonds(const Graph& g) {
  const int V = g.vertex_count;
  if (V > 16)
    fail(ErrorCode::GroundSetTooLarge,
         "bond enumeration guarded to 16 vertices");
  std::vector<EdgeCut> out;
  // Side U always contains vertex 0; enumerate proper subsets of the rest.
  const std::uint64_t limit = std::uint64_t{1} << (V - 1);
  for (std::uint64_t rest = 0; rest + 1 < limit; ++rest) {
    Subset side_u = Subset(rest << 1).with(0);
    Subset side_v = Subset::full(V) - side_u;
    if (!connected_on(g, side_u) || !connected_on(g, side_v)) continue;
    Subset cut;
    for (int i = 0; i < g.edge_count(); ++i) {
      auto [u, v] = g.edges[i];
      if (side_u.contains(u) != side_u.contains(v)) cut = cut.with(i);
    }
    out.push_back(EdgeCut{cut, side_u, side_v});
  }
  std::sort(out.begin(), out.end(),
            [](const EdgeCut& a, const EdgeCut& b) { return a.edges < b.edges; });
  return out;
}

std::vector<int> bridges_in_induced(const Graph& g, Subset vertices) {
  std::vector<int> out;
  auto adj = adjacency(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    if (!vertices.contains(u) || !vertices.contains(v)) continue;
    // Bridge iff u and v are separated in the induced subgraph minus i.
    Subset comp;
    std::vector<int> stack{u};
    comp = comp.with(u);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [w, ei] : adj[x]) {
        if (ei == i || !vertices.contains(w) || comp.contains(w)) continue;
        comp = comp.with(w);
        stack.push_back(w);
      }
    }
    if (!comp.contains(v)) out.push_back(i);
  }
  return out;
}

int cut_index(const Graph& g, const EdgeCut& cut) {
  if ((cut.side_u | cut.side_v) != Subset::full(g.vertex_count) ||
      !(cut.side_u & cut.side_v).empty() || !connected_on(g, cut.side_u) ||
      !connected_on(g, cut.side_v))
    fail(ErrorCode::InvalidArgument, "not a bond: sides are not a connected bipartition");
  Subset expect;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    if (cut.side_u.contains(u) != cut.side_u.contains(v)) expect = expect.with(i);
  }
  if (expect != cut.edges)
    fail(ErrorCode::InvalidArgument, "not a bond: edge set does not match the sides");
  return static_cast<int>(bridges_in_induced(g, cut.side_u).size() +
                          bridges_in_induced(g, cut.side_v).size());
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count <= 1) return true;
  if (!connected_on(g, Subset::full(g.vertex_count))) return false;
  int min_cut = g.edge_count() + 1;
  for (const EdgeCut& b : bonds(g)) min_cut = std::min(min_cut, b.edges.count());
  return min_cut >= k;
}

}  // namespace tropmat
