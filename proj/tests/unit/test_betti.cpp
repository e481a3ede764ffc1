#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "arfbetti/arf.hpp"
#include "arfbetti/betti.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arfbetti;
using Gens = std::vector<Element>;
using Entries = std::map<std::pair<int, Element>, std::size_t>;

namespace {

NumericalSemigroup sg(std::initializer_list<Element> gens) {
  const Gens v(gens);
  return NumericalSemigroup::from_generators(v);
}

// Full table from dense homology of every divisor complex up to `last`.
Entries oracle_table(const Gens& gens, Element last) {
  const auto M = oracle::members_of(gens);
  Entries out;
  for (Element s = 0; s <= last; ++s) {
    const auto h = oracle::reduced_homology(oracle::divisor_faces(gens, M, s));
    for (std::size_t d = 0; d < h.size(); ++d) {
      if (h[d] != 0) out[{static_cast<int>(d), s}] = h[d];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graded Betti examples") {
  const auto N = graded_betti(NumericalSemigroup());
  CHECK(N.entries == Entries{{{0, 0}, 1}});
  CHECK(N.generators == Gens{1});

  const Entries e23{{{0, 0}, 1}, {{1, 6}, 1}};
  CHECK(oracle_table({2, 3}, 20) == e23);
  CHECK(graded_betti(sg({2, 3})).entries == e23);

  const Entries e345{{{0, 0}, 1},  {{1, 8}, 1},  {{1, 9}, 1},
                     {{1, 10}, 1}, {{2, 13}, 1}, {{2, 14}, 1}};
  CHECK(oracle_table({3, 4, 5}, 40) == e345);
  const auto T = graded_betti(sg({3, 4, 5}));
  CHECK(T.entries == e345);
  CHECK(T.degree_bound == 14);
  CHECK(T.at(1, 9) == 1);
  CHECK(T.at(1, 11) == 0);
  CHECK(T.field == FieldSpec{});
}

TEST_CASE("total_betti examples") {
  CHECK(total_betti(graded_betti(NumericalSemigroup())) == std::map<int, std::size_t>{{0, 1}});
  CHECK(total_betti(graded_betti(sg({3, 4, 5}))) ==
        std::map<int, std::size_t>{{0, 1}, {1, 3}, {2, 2}});
  CHECK(total_betti(graded_betti(sg({2, 3}))) == std::map<int, std::size_t>{{0, 1}, {1, 1}});
}

TEST_CASE("degree bound and override") {
  const auto S = sg({3, 7, 8});
  CHECK(betti_degree_bound(S) == 5 + 18);
  CHECK(betti_degree_bound(NumericalSemigroup()) == 0);
  BettiOptions options;
  options.degree_override = 40;
  const auto wide = graded_betti(S, options);
  CHECK(wide.degree_bound == 40);
  CHECK(wide.same_entries(graded_betti(S)));
  options.degree_override = 3;
  CHECK(graded_betti(S, options).degree_bound == 23);
  CHECK(divisor_homology(S, 5).is_zero());
}

TEST_CASE("random semigroups: table matches the dense oracle, both routes") {
  gen::Rng rng(0xbe);
  for (int trial = 0; trial < 60; ++trial) {
    const auto S = NumericalSemigroup::from_generators(gen::coprime_generators(rng, 11, 5));
    CAPTURE(S.to_string());
    const auto excision = graded_betti(S);
    BettiOptions direct;
    direct.route = HomologyRoute::Direct;
    CHECK(graded_betti(S, direct).entries == excision.entries);
    CHECK(oracle_table(S.minimal_generators(), betti_degree_bound(S) + 2 * S.multiplicity()) ==
          excision.entries);
  }
}

TEST_CASE("Betti invariants over the Arf corpus with conductor <= 20") {
  const auto gf = FieldSpec::prime(32749);
  const auto gf2 = FieldSpec::prime(2);
  std::size_t gf2_differences = 0;
  const auto corpus = enumerate_arf(20);
  for (const auto& S : corpus) {
    CAPTURE(S.to_string());
    const auto T = graded_betti(S);
    const int k = static_cast<int>(S.embedding_dimension());
    for (const auto& [cell, dim] : T.entries) {
      CHECK(cell.first < k);
      if (cell.first == 0) {
        CHECK(cell.second == 0);
        CHECK(dim == 1);
      }
    }
    CHECK(T.at(0, 0) == 1);
    CHECK(graded_betti(S, gf).entries == T.entries);
    gf2_differences += graded_betti(S, gf2).entries == T.entries ? 0 : 1;

    // Past the bound every divisor complex is a full simplex. Sampled, and
    // only where the simplex is small enough to list.
    const Element bound = betti_degree_bound(S);
    if (k <= 14) {
      for (Element s : {bound + 1, bound + S.multiplicity(), bound + 3 * S.multiplicity()}) {
        const auto D = squarefree_divisor_complex(S, s);
        CHECK(D.face_count() == (std::size_t{1} << k));
      }
    }
  }
  MESSAGE("GF(2) table differs from Q on " << gf2_differences << " of " << corpus.size()
                                           << " Arf semigroups");
}
