#include <doctest.h>

#include <algorithm>

#include "tropmat/error.hpp"
#include "tropmat/families.hpp"
#include "tropmat/matroid.hpp"

using namespace tropmat;

namespace {

bool has_code(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("subset basics and lex ranking") {
  Subset s = Subset::labels({1, 2, 4});
  CHECK(s.count() == 3);
  CHECK(s.contains(0));
  CHECK(!s.contains(2));
  CHECK(s.str() == "{1,2,4}");

  // lex rank round-trips over all 3-subsets of [6]
  auto subs = k_subsets(6, 3);
  CHECK(subs.size() == 20);
  for (int r = 0; r < 20; ++r) {
    CHECK(subset_lex_rank(subs[static_cast<size_t>(r)], 6) == r);
    CHECK(subset_lex_unrank(r, 6, 3) == subs[static_cast<size_t>(r)]);
  }
}

TEST_CASE("validate_circuits accepts U(2,4) and the free matroid") {
  Matroid u24 = Matroid::from_circuits(
      4, {Subset::labels({1, 2, 3}), Subset::labels({1, 2, 4}),
          Subset::labels({1, 3, 4}), Subset::labels({2, 3, 4})});
  CHECK(u24.circuits().size() == 4);

  Matroid free3 = Matroid::from_circuits(3, {});
  CHECK(free3.circuits().empty());
  CHECK(free3.is_independent(Subset::full(3)));
}

TEST_CASE("validate_circuits rejects bad families") {
  CHECK(has_code(
      [] {
        Matroid::from_circuits(
            4, {Subset::labels({1, 2}), Subset::labels({1, 2, 3})});
      },
      ErrorCode::ComparabilityViolation));

  // {1,2},{2,3} with no circuit inside {1,3} fails elimination.
  CHECK(has_code(
      [] {
        Matroid::from_circuits(3,
                               {Subset::labels({1, 2}), Subset::labels({2, 3})});
      },
      ErrorCode::EliminationViolation));
}

TEST_CASE("independence and rank on U(2,4) and Fano") {
  Matroid u24 = uniform(2, 4);
  CHECK(u24.is_independent(Subset::labels({1, 2})));
  CHECK(!u24.is_independent(Subset::labels({1, 2, 3})));
  CHECK(u24.rank(Subset::full(4)) == 2);
  CHECK(u24.rank(Subset()) == 0);

  Matroid f = fano();
  CHECK(f.rank(Subset::full(7)) == 3);
}

TEST_CASE("closure and flats") {
  Matroid u24 = uniform(2, 4);
  CHECK(u24.closure(Subset::labels({1})) == Subset::labels({1}));
  CHECK(u24.closure(Subset::labels({1, 2})) == Subset::full(4));
  CHECK(!u24.is_flat(Subset::labels({1, 2})));
  CHECK(u24.is_flat(Subset::full(4)));

  Matroid f = fano();
  CHECK(f.is_flat(Subset::labels({1, 2, 4})));
  CHECK(f.all_flats().size() == 16);

  // U(2,4): empty set, the four singletons, and the whole set.
  auto flats = u24.all_flats();
  CHECK(flats.size() == 6);

  Matroid free2 = Matroid::from_circuits(2, {});
  CHECK(free2.all_flats().size() == 4);
}

TEST_CASE("closure is idempotent, extensive, monotone (small exhaustive)") {
  for (const Matroid& m : {uniform(2, 4), uniform(2, 5), fano()}) {
    const std::uint64_t total = std::uint64_t{1} << m.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Subset s(bits);
      Subset cl = m.closure(s);
      CHECK(s.subset_of(cl));
      CHECK(m.closure(cl) == cl);
    }
    // monotone on a sample of pairs
    for (std::uint64_t a = 0; a < total; a += 3)
      for (std::uint64_t b = a; b < total; b += 5) {
        Subset s(a & b), t(b);
        if (!s.subset_of(t)) continue;
        CHECK(m.closure(s).subset_of(m.closure(t)));
      }
  }
}

TEST_CASE("rank is monotone and submodular on small matroids") {
  for (const Matroid& m :
       {uniform(2, 4), uniform(3, 5), graphic(Graph::complete(4))}) {
    const std::uint64_t total = std::uint64_t{1} << m.size();
    for (std::uint64_t a = 0; a < total; ++a) {
      Subset s(a);
      int rs = m.rank(s);
      CHECK(rs <= s.count());
      for (int e = 0; e < m.size(); ++e) {
        if (s.contains(e)) continue;
        int grow = m.rank(s.with(e)) - rs;
        CHECK(grow >= 0);
        CHECK(grow <= 1);
      }
    }
    // submodularity rank(A)+rank(B) >= rank(AuB)+rank(AnB), sampled
    for (std::uint64_t a = 0; a < total; a += 7)
      for (std::uint64_t b = 0; b < total; b += 11) {
        Subset s(a), t(b);
        CHECK(m.rank(s) + m.rank(t) >= m.rank(s | t) + m.rank(s & t));
      }
  }
}

TEST_CASE("all_flats agrees with the closure definition") {
  for (const Matroid& m : {uniform(2, 4), fano(), graphic(Graph::complete(4))}) {
    auto flats = m.all_flats();
    const std::uint64_t total = std::uint64_t{1} << m.size();
    std::vector<Subset> by_closure;
    for (std::uint64_t bits = 0; bits < total; ++bits)
      if (m.is_flat(Subset(bits))) by_closure.push_back(Subset(bits));
    CHECK(flats == by_closure);
  }
}

TEST_CASE("direct sum and components") {
  Matroid u23 = uniform(2, 3);
  Matroid sum = direct_sum(u23, u23);
  CHECK(sum.size() == 6);
  REQUIRE(sum.circuits().size() == 2);
  CHECK(sum.circuits()[0] == Subset::labels({1, 2, 3}));
  CHECK(sum.circuits()[1] == Subset::labels({4, 5, 6}));

  auto comps = components(sum);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == Subset::labels({1, 2, 3}));
  CHECK(comps[1] == Subset::labels({4, 5, 6}));

  CHECK(components(fano()).size() == 1);
  CHECK(components(Matroid::from_circuits(3, {})).size() == 3);

  Matroid with_free = direct_sum(u23, Matroid::from_circuits(2, {}));
  CHECK(with_free.size() == 5);
  CHECK(with_free.circuits() == u23.circuits());
}

TEST_CASE("simplify removes loops and parallel classes") {
  Matroid m = Matroid::from_circuits(
      5, {Subset::labels({1}), Subset::labels({2, 3}), Subset::labels({2, 4, 5})},
      /*trusted=*/true);
  SimplifyResult r = simplify(m);
  CHECK(r.matroid.size() == 3);  // representatives of {2,3}, {4}, {5}
  REQUIRE(r.matroid.circuits().size() == 1);
  CHECK(r.matroid.circuits()[0] == Subset::full(3));
  CHECK(r.element_map[0] == -1);                      // loop dropped
  CHECK(r.element_map[1] == r.element_map[2]);        // parallel pair merged

  SimplifyResult id = simplify(fano());
  CHECK(id.matroid.size() == 7);
  CHECK(id.matroid.circuits() == fano().circuits());
  for (int e = 0; e < 7; ++e) CHECK(id.element_map[static_cast<size_t>(e)] == e);

  Matroid loops = Matroid::from_circuits(
      2, {Subset::labels({1}), Subset::labels({2})}, /*trusted=*/true);
  SimplifyResult empty = simplify(loops);
  CHECK(empty.matroid.size() == 0);
}

TEST_CASE("paste") {
  CHECK(paste(Subset::labels({1, 2, 4}), Subset::labels({3, 4, 6})) ==
        Subset::labels({1, 2, 3, 6}));
  CHECK(paste(Subset::labels({1, 2}), Subset::labels({2, 3})) ==
        Subset::labels({1, 3}));
  CHECK(paste(Subset::labels({1, 2, 4}), Subset::labels({1, 3, 7})) ==
        Subset::labels({2, 3, 4, 7}));
  CHECK(has_code(
      [] { paste(Subset::labels({1, 2}), Subset::labels({1, 2, 3})); },
      ErrorCode::IntersectionNotSingleton));
}

TEST_CASE("paste of circuits sharing one element is dependent (paper families)") {
  for (const Matroid& m : {fano(), r10(), graphic(Graph::complete(4))}) {
    const auto& cs = m.circuits();
    for (size_t a = 0; a < cs.size(); ++a)
      for (size_t b = a + 1; b < cs.size(); ++b) {
        if ((cs[a] & cs[b]).count() != 1) continue;
        Subset pasted = paste(cs[a], cs[b]);
        CHECK(!m.is_independent(pasted));
        // In the paper families the paste is itself a circuit.
        CHECK(std::binary_search(cs.begin(), cs.end(), pasted));
      }
  }
}
