#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "tropmat/error.hpp"
#include "tropmat/families.hpp"
#include "tropmat/graph.hpp"
#include "tropmat/tropical_basis.hpp"

using namespace tropmat;

namespace {

std::set<Subset> as_set(const std::vector<Subset>& v) {
  return {v.begin(), v.end()};
}

bool throws_code(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("uniform matroids") {
  Matroid u24 = uniform(2, 4);
  CHECK(as_set(u24.circuits()) ==
        as_set({Subset::labels({1, 2, 3}), Subset::labels({1, 2, 4}),
                Subset::labels({1, 3, 4}), Subset::labels({2, 3, 4})}));
  CHECK(uniform(3, 3).circuits().empty());
  CHECK(uniform(2, 5).circuits().size() == 10);

  auto b = uniform_basis(2, 4, 1);
  CHECK(as_set(b) == as_set({Subset::labels({1, 2, 3}),
                             Subset::labels({1, 2, 4}),
                             Subset::labels({1, 3, 4})}));
  CHECK(uniform_basis(2, 5, 1).size() == 6);
  CHECK(uniform_basis(1, 2, 1) ==
        std::vector<Subset>{Subset::labels({1, 2})});
}

TEST_CASE("partition matroids") {
  Matroid m = partition_matroid(5, {{1, 2, 3}, {4, 5}});
  CHECK(as_set(m.circuits()) ==
        as_set({Subset::labels({1, 2}), Subset::labels({1, 3}),
                Subset::labels({2, 3}), Subset::labels({4, 5})}));
  CHECK(partition_matroid(3, {{1}, {2}, {3}}).circuits().empty());
  CHECK(partition_matroid(2, {{1, 2}}).circuits().size() == 1);

  auto b = partition_basis(5, {{1, 2, 3}, {4, 5}});
  CHECK(as_set(b) == as_set({Subset::labels({1, 2}), Subset::labels({2, 3}),
                             Subset::labels({4, 5})}));
  CHECK(is_tropical_basis(m, b));
  auto b4 = partition_basis(4, {{1, 2, 3, 4}});
  CHECK(b4.size() == 3);
  CHECK(is_tropical_basis(partition_matroid(4, {{1, 2, 3, 4}}), b4));

  CHECK(throws_code([] { partition_matroid(3, {{1, 2}}); },
                    ErrorCode::InvalidArgument));
}

TEST_CASE("cycles of K4, K5, trees") {
  // K4 edge order: 12,13,14,23,24,34 -> ids 1..6.
  Graph k4 = Graph::complete(4);
  auto cy = cycles(k4);
  CHECK(cy.size() == 7);
  int triangles = 0, quads = 0;
  for (Subset c : cy) (c.count() == 3 ? triangles : quads)++;
  CHECK(triangles == 4);
  CHECK(quads == 3);

  CHECK(cycles(Graph::complete(5)).size() == 37);
  CHECK(cycles(Graph::cycle(3)).size() == 1);
  CHECK(cycles(Graph::path(4)).empty());
}

TEST_CASE("induced cycles") {
  auto ind4 = induced_cycles(Graph::complete(4));
  CHECK(ind4.size() == 4);
  for (Subset c : ind4) CHECK(c.count() == 3);

  auto ind5 = induced_cycles(Graph::complete(5));
  CHECK(ind5.size() == 10);
  for (Subset c : ind5) CHECK(c.count() == 3);

  CHECK(induced_cycles(Graph::cycle(5)).size() == 1);

  // Petersen: the 12 pentagons and 10 hexagons; longer cycles have chords.
  auto indp = induced_cycles(Graph::petersen());
  CHECK(indp.size() == 22);
}

TEST_CASE("graphic matroids") {
  Matroid k4 = graphic(Graph::complete(4));
  CHECK(k4.size() == 6);
  CHECK(k4.circuits().size() == 7);
  // Circuit axioms hold for cycle families.
  CHECK_NOTHROW(Matroid::from_circuits(6, k4.circuits()));

  Matroid tri = graphic(Graph::cycle(3));
  CHECK(tri.circuits().size() == 1);
  CHECK(tri.circuits()[0] == Subset::full(3));

  CHECK(graphic(Graph::path(5)).circuits().empty());
}

TEST_CASE("bonds") {
  Graph k4 = Graph::complete(4);
  auto bs = bonds(k4);
  CHECK(bs.size() == 7);
  int stars = 0, balanced = 0;
  for (const EdgeCut& b : bs) {
    if (b.edges.count() == 3) ++stars;
    if (b.edges.count() == 4) ++balanced;
    // Sides are connected and the cut matches them; cut_index validates.
    CHECK_NOTHROW(cut_index(k4, b));
  }
  CHECK(stars == 4);
  CHECK(balanced == 3);

  auto tri = bonds(Graph::cycle(3));
  CHECK(tri.size() == 3);
  for (const EdgeCut& b : tri) CHECK(b.edges.count() == 2);

  // A bridge is a singleton bond.
  Graph two_triangles = Graph::make(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}});
  bool found_bridge_bond = false;
  for (const EdgeCut& b : bonds(two_triangles))
    if (b.edges == Subset::labels({7})) found_bridge_bond = true;
  CHECK(found_bridge_bond);
}

TEST_CASE("cut_index") {
  Graph k4 = Graph::complete(4);
  for (const EdgeCut& b : bonds(k4)) {
    if (b.edges.count() == 3) CHECK(cut_index(k4, b) == 0);
    if (b.edges.count() == 4) CHECK(cut_index(k4, b) == 2);
  }
  CHECK(throws_code(
      [&] {
        cut_index(k4, EdgeCut{Subset::labels({1}), Subset::labels({1}),
                              Subset::labels({2, 3, 4})});
      },
      ErrorCode::InvalidArgument));
}

TEST_CASE("k-edge-connectivity") {
  CHECK(is_k_edge_connected(Graph::complete(4), 3));
  CHECK(!is_k_edge_connected(Graph::cycle(4), 3));
  CHECK(is_k_edge_connected(Graph::cycle(4), 2));
  CHECK(!is_k_edge_connected(Graph::path(4), 2));
  CHECK(is_k_edge_connected(Graph::path(4), 1));
  CHECK(is_k_edge_connected(Graph::petersen(), 3));
  CHECK(is_k_edge_connected(Graph::prism(), 3));
}

TEST_CASE("cographic matroids") {
  Matroid k4 = cographic(Graph::complete(4));
  CHECK(k4.size() == 6);
  CHECK(k4.circuits().size() == 7);
  CHECK_NOTHROW(Matroid::from_circuits(6, k4.circuits()));

  CHECK(cographic(Graph::complete(5)).size() == 10);
  CHECK(throws_code([] { cographic(Graph::cycle(4)); },
                    ErrorCode::NotThreeEdgeConnected));
}

TEST_CASE("cographic basis of K4 = the 4 vertex stars") {
  // Edge ids: 12=1, 13=2, 14=3, 23=4, 24=5, 34=6.
  auto basis = cographic_basis(Graph::complete(4));
  CHECK(as_set(basis) ==
        as_set({Subset::labels({1, 2, 3}), Subset::labels({1, 4, 5}),
                Subset::labels({2, 4, 6}), Subset::labels({3, 5, 6})}));
}

TEST_CASE("cographic basis equals the necessary circuits (theorem)") {
  for (const Graph& g : {Graph::complete(4), Graph::complete(5), Graph::prism()}) {
    auto basis = cographic_basis(g);
    auto nec = necessary_circuits(cographic(g));
    CHECK(as_set(basis) == as_set(nec.circuits));
  }
}

TEST_CASE("positive-index bonds paste from strictly lower-index bonds") {
  for (const Graph& g : {Graph::complete(4), Graph::complete(5), Graph::prism()}) {
    auto all = bonds(g);
    for (const EdgeCut& c : all) {
      int idx = cut_index(g, c);
      if (idx == 0) continue;
      // Find the bridge split promised by the induction: a bridge e in one
      // side splits it into A and B; the cuts around A and B are bonds of
      // smaller index pasting to c along e.
      bool decomposed = false;
      for (Subset side : {c.side_u, c.side_v}) {
        auto brs = bridges_in_induced(g, side);
        if (brs.empty()) continue;
        int e = brs[0];
        // A = component of side minus e containing one endpoint.
        Subset a_side;
        {
          auto [x, y] = g.edges[static_cast<size_t>(e)];
          std::vector<int> stack{x};
          a_side = a_side.with(x);
          while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int i = 0; i < g.edge_count(); ++i) {
              if (i == e) continue;
              auto [p, q] = g.edges[static_cast<size_t>(i)];
              if (!side.contains(p) || !side.contains(q)) continue;
              int other = -1;
              if (p == u) other = q;
              if (q == u) other = p;
              if (other >= 0 && !a_side.contains(other)) {
                a_side = a_side.with(other);
                stack.push_back(other);
              }
            }
          }
        }
        Subset b_side = side - a_side;
        auto cut_between = [&](Subset s) {
          Subset cut;
          for (int i = 0; i < g.edge_count(); ++i) {
            auto [p, q] = g.edges[static_cast<size_t>(i)];
            if (s.contains(p) != s.contains(q)) cut = cut.with(i);
          }
          return cut;
        };
        Subset full = Subset::full(g.vertex_count);
        EdgeCut c1{cut_between(a_side),
                   a_side.contains(0) ? a_side : full - a_side,
                   a_side.contains(0) ? full - a_side : a_side};
        EdgeCut c2{cut_between(b_side),
                   b_side.contains(0) ? b_side : full - b_side,
                   b_side.contains(0) ? full - b_side : b_side};
        int i1 = cut_index(g, c1);
        int i2 = cut_index(g, c2);
        CHECK(i1 < idx);
        CHECK(i2 < idx);
        CHECK((c1.edges & c2.edges) == Subset().with(e));
        CHECK(paste(c1.edges, c2.edges) == c.edges);
        decomposed = true;
        break;
      }
      CHECK(decomposed);
    }
  }
}

TEST_CASE("fano") {
  Matroid f = fano();
  CHECK(f.circuits().size() == 14);
  CHECK(f.rank(Subset::full(7)) == 3);
  CHECK(std::binary_search(f.circuits().begin(), f.circuits().end(),
                           Subset::labels({1, 2, 4})));
  // The spec's 4-element circuit list.
  for (auto q : {Subset::labels({1, 2, 3, 6}), Subset::labels({1, 4, 6, 7}),
                 Subset::labels({2, 4, 5, 6}), Subset::labels({3, 5, 6, 7}),
                 Subset::labels({1, 2, 5, 7}), Subset::labels({1, 3, 4, 5}),
                 Subset::labels({2, 3, 4, 7})})
    CHECK(std::binary_search(f.circuits().begin(), f.circuits().end(), q));
}

TEST_CASE("r10") {
  Matroid m = r10();
  CHECK(m.size() == 10);
  CHECK(m.circuits().size() == 30);
  auto fours = r10_four_cycles();
  CHECK(fours.size() == 15);
  for (Subset c : m.circuits())
    CHECK((c.count() == 4 || c.count() == 6));
  int sixes = 0;
  for (Subset c : m.circuits())
    if (c.count() == 6) ++sixes;
  CHECK(sixes == 15);
}

TEST_CASE("graph IO-facing constructors validate") {
  CHECK(throws_code([] { Graph::make(3, {{0, 0}}); }, ErrorCode::InvalidArgument));
  CHECK(throws_code([] { Graph::make(3, {{0, 1}, {1, 0}}); },
                    ErrorCode::InvalidArgument));
  CHECK(throws_code([] { Graph::make(4, {{0, 1}, {2, 3}}); },
                    ErrorCode::InvalidArgument));
}
