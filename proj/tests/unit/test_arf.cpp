#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "arfbetti/arf.hpp"
#include "arfbetti/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arfbetti;
using Gens = std::vector<Element>;

namespace {

NumericalSemigroup sg(std::initializer_list<Element> gens) {
  const Gens v(gens);
  return NumericalSemigroup::from_generators(v);
}

NumericalSemigroup from_oracle(const oracle::Members& M) {
  const auto c = M.conductor();
  std::vector<bool> below(static_cast<std::size_t>(c));
  for (Element x = 0; x < c; ++x) below[static_cast<std::size_t>(x)] = M(x);
  return NumericalSemigroup::from_members(below);
}

oracle::Members to_oracle(const NumericalSemigroup& S) {
  std::vector<bool> table(static_cast<std::size_t>(S.table_size()));
  for (Element x = 0; x < S.table_size(); ++x) table[static_cast<std::size_t>(x)] = S.contains(x);
  return {table};
}

}  // namespace

TEST_CASE("quotient examples") {
  const auto S = sg({3, 7, 8});
  const auto Q0 = quotient(S, 0);
  REQUIRE(Q0.closed);
  CHECK(*Q0.semigroup == S);

  const auto Q3 = quotient(S, 3);
  REQUIRE(Q3.closed);
  CHECK(*Q3.semigroup == sg({3, 4, 5}));
  CHECK(Q3.members == std::vector<bool>{true, false, false});

  const auto Q = quotient(sg({4, 6, 7}), 4);
  CHECK_FALSE(Q.closed);
  CHECK_FALSE(Q.semigroup.has_value());
  CHECK(Q.members == std::vector<bool>{true, false, true, true, true, false});
  CHECK(Q.contains(2));
  CHECK(Q.contains(3));
  CHECK_FALSE(Q.contains(5));

  try {
    quotient(S, 5);
    FAIL("expected NotMember");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMember);
  }
}

TEST_CASE("is_arf examples") {
  CHECK(is_arf(NumericalSemigroup()));
  CHECK(is_arf(sg({3, 7, 8})));
  CHECK_FALSE(is_arf(sg({4, 6, 7})));
  const auto v = find_arf_violation(sg({4, 6, 7}));
  REQUIRE(v.has_value());
  CHECK(*v == ArfViolation{6, 7, 4});
  CHECK(v->value() == 9);
  CHECK_FALSE(find_arf_violation(sg({3, 7, 8})).has_value());
}

TEST_CASE("blowup and same_multiplicity_blowup examples") {
  CHECK(blowup(sg({3, 7, 8})) == sg({3, 4, 5}));
  CHECK(blowup(sg({2, 3})).is_naturals());
  CHECK(blowup(NumericalSemigroup()).is_naturals());
  CHECK(same_multiplicity_blowup(sg({3, 7, 8})));
  CHECK_FALSE(same_multiplicity_blowup(sg({2, 3})));
  CHECK(same_multiplicity_blowup(NumericalSemigroup()));
}

TEST_CASE("arf_closure examples") {
  CHECK(arf_closure(sg({3, 7, 8})) == sg({3, 7, 8}));
  CHECK(arf_closure(sg({4, 6, 7})) == sg({4, 6, 7, 9}));
  // Decided by the definitional triple check.
  CHECK(oracle::is_arf(oracle::members_of({2, 5})));
  CHECK(arf_closure(sg({2, 5})) == sg({2, 5}));
}

TEST_CASE("multiplicity_sequence examples") {
  CHECK(multiplicity_sequence(NumericalSemigroup()).entries.empty());
  CHECK(multiplicity_sequence(sg({3, 7, 8})).entries == Gens{3, 3});
  CHECK(multiplicity_sequence(sg({2, 3})).entries == Gens{2});
  try {
    multiplicity_sequence(sg({4, 6, 7}));
    FAIL("expected NotArf");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotArf);
  }
}

TEST_CASE("enumerate_arf examples") {
  const auto e0 = enumerate_arf(0);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].is_naturals());
  CHECK(enumerate_arf(2) == std::vector<NumericalSemigroup>{NumericalSemigroup(), sg({2, 3})});
  const auto e6 = enumerate_arf(6);
  CHECK(std::find(e6.begin(), e6.end(), sg({3, 7, 8})) != e6.end());
}

TEST_CASE("check_shift_equivalences examples") {
  CHECK(check_shift_equivalences(sg({3, 7, 8})).empty());
  CHECK(check_shift_equivalences(NumericalSemigroup()).empty());
  try {
    check_shift_equivalences(sg({2, 3}));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
}

TEST_CASE("is_arf matches both definitions on every semigroup with conductor <= 20") {
  std::size_t count = 0;
  std::size_t arf = 0;
  for (oracle::Int c = 0; c <= 20; ++c) {
    for (const auto& gaps : oracle::gap_sets_with_conductor(c)) {
      const auto M = oracle::members_from_gaps(gaps);
      const auto S = from_oracle(M);
      REQUIRE(S.conductor() == c);
      bool all_closed = true;
      for (Element n = 0; n <= c; ++n) {
        if (S.contains(n) && !quotient(S, n).closed) {
          all_closed = false;
          break;
        }
      }
      const bool lib = is_arf(S);
      CAPTURE(S.to_string());
      REQUIRE(lib == all_closed);
      REQUIRE(lib == oracle::is_arf(M));
      ++count;
      arf += lib ? 1 : 0;
    }
  }
  MESSAGE(count << " semigroups, " << arf << " Arf");
  CHECK(arf == enumerate_arf(20).size());
}

TEST_CASE("enumerate_arf equals the filtered gap-set enumeration up to conductor 12") {
  std::set<Gens> expected;
  for (oracle::Int c = 0; c <= 12; ++c) {
    for (const auto& gaps : oracle::gap_sets_with_conductor(c)) {
      const auto M = oracle::members_from_gaps(gaps);
      if (oracle::is_arf(M)) expected.insert(oracle::minimal_generators(M));
    }
  }
  std::set<Gens> got;
  const auto corpus = enumerate_arf(12);
  for (const auto& S : corpus) got.insert(S.minimal_generators());
  CHECK(got.size() == corpus.size());
  CHECK(got == expected);
  CHECK(std::is_sorted(corpus.begin(), corpus.end(), [](const auto& a, const auto& b) {
    return a.conductor() != b.conductor() ? a.conductor() < b.conductor() : a < b;
  }));
}

TEST_CASE("structural facts over the Arf corpus with conductor <= 24") {
  for (const auto& S : enumerate_arf(24)) {
    CAPTURE(S.to_string());
    const auto B = blowup(S);
    REQUIRE(is_arf(B));
    CHECK(S.embedding_dimension() == static_cast<std::size_t>(S.multiplicity()));

    const auto Q = quotient(S, S.multiplicity());
    REQUIRE(Q.closed);
    CHECK(*Q.semigroup == B);

    const auto& gens = S.minimal_generators();
    for (auto x : S.min_elements_mod_multiplicity()) {
      if (x != 0) CHECK(std::find(gens.begin(), gens.end(), x) != gens.end());
    }

    const bool same = same_multiplicity_blowup(S);
    CHECK(same == (gens.size() == 1 || gens[1] >= 2 * gens[0]));
    if (same) {
      Gens shifted{gens[0]};
      for (std::size_t j = 1; j < gens.size(); ++j) shifted.push_back(gens[j] - gens[0]);
      std::sort(shifted.begin(), shifted.end());
      CHECK(B.minimal_generators() == shifted);
      CHECK(check_shift_equivalences(S).empty());
    }

    // The multiplicity sequence follows the blowup chain.
    Gens chain;
    for (auto T = S; !T.is_naturals(); T = blowup(T)) chain.push_back(T.multiplicity());
    CHECK(multiplicity_sequence(S).entries == chain);
  }
}

TEST_CASE("arf_closure is the least Arf superset") {
  gen::Rng rng(0xa7f);
  for (int trial = 0; trial < 150; ++trial) {
    const auto S = NumericalSemigroup::from_generators(gen::coprime_generators(rng, 13, 4));
    if (S.conductor() > 24) continue;
    CAPTURE(S.to_string());
    const auto C = arf_closure(S);
    REQUIRE(oracle::is_arf(to_oracle(C)));
    for (Element x = 0; x < S.table_size(); ++x) {
      if (S.contains(x)) REQUIRE(C.contains(x));
    }
    // Any Arf superset has conductor at most c(S), so it is in this list.
    for (const auto& T : enumerate_arf(S.conductor())) {
      bool superset = true;
      for (Element x = 0; x < S.table_size() && superset; ++x) {
        superset = !S.contains(x) || T.contains(x);
      }
      if (!superset) continue;
      for (Element x = 0; x < C.table_size(); ++x) {
        if (C.contains(x)) REQUIRE(T.contains(x));
      }
    }
  }
}
