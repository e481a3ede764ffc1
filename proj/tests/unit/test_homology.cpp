#include <doctest.h>

#include <cstdint>
#include <vector>

#include "arfbetti/error.hpp"
#include "arfbetti/homology.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arfbetti;

namespace {

const SimplicialComplex kHollowTriangle =
    SimplicialComplex::from_faces(3, {0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110});

BoundaryMatrix dense(const std::vector<std::vector<int>>& rows) {
  BoundaryMatrix M;
  M.rows = rows.size();
  M.cols = rows.empty() ? 0 : rows[0].size();
  M.columns.resize(M.cols);
  for (std::size_t c = 0; c < M.cols; ++c) {
    for (std::size_t r = 0; r < M.rows; ++r) {
      if (rows[r][c] != 0) {
        M.columns[c].push_back({static_cast<std::uint32_t>(r), static_cast<std::int8_t>(rows[r][c])});
      }
    }
  }
  return M;
}

std::size_t oracle_rank(const BoundaryMatrix& M) {
  std::vector<std::vector<mpq_class>> a(M.rows, std::vector<mpq_class>(M.cols, 0));
  for (std::size_t c = 0; c < M.cols; ++c) {
    for (const auto& e : M.columns[c]) a[e.row][c] = e.value;
  }
  return oracle::rational_rank(std::move(a));
}

std::vector<std::size_t> padded(std::vector<std::size_t> h, std::size_t n) {
  h.resize(std::max(h.size(), n), 0);
  return h;
}

}  // namespace

TEST_CASE("FieldSpec") {
  CHECK(FieldSpec::parse("q").is_rationals());
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK(FieldSpec::parse("gf:32749").characteristic() == 32749);
  CHECK(FieldSpec::parse("GF:2").characteristic() == 2);
  CHECK(FieldSpec::parse("gf:32749").name() == "GF(32749)");
  CHECK(FieldSpec().name() == "Q");
  for (const char* bad : {"gf:4", "gf:1", "gf:", "r", "gf:x", "gf:4294967311"}) {
    CAPTURE(bad);
    try {
      FieldSpec::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidField);
    }
  }
}

TEST_CASE("boundary matrix examples") {
  const auto vertex = SimplicialComplex::from_faces(1, {0, 1});
  const auto M = boundary_matrix(vertex, 0);
  CHECK(M.rows == 1);
  CHECK(M.cols == 1);
  CHECK(M.at(0, 0) == 1);

  const auto d1 = boundary_matrix(kHollowTriangle, 1);
  const auto d0 = boundary_matrix(kHollowTriangle, 0);
  REQUIRE(d1.rows == 3);
  REQUIRE(d1.cols == 3);
  // Edges {1,2} {1,3} {2,3} against vertices 1 2 3.
  const int expected[3][3] = {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(d1.at(r, c) == expected[r][c]);
  }
  CHECK(composes_to_zero(d0, d1));

  const auto V = SimplicialComplex::void_complex(3);
  for (int d = 0; d < 3; ++d) {
    const auto E = boundary_matrix(V, d);
    CHECK(E.rows == 0);
    CHECK(E.cols == 0);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(dense({{0, 0}, {0, 0}}), FieldSpec{}) == 0);
  CHECK(rank(BoundaryMatrix{}, FieldSpec{}) == 0);
  CHECK(rank(boundary_matrix(kHollowTriangle, 1), FieldSpec{}) == 2);
  const auto I = dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rank(I, FieldSpec{}) == 3);
  CHECK(rank(I, FieldSpec::prime(2)) == 3);
  // Rank 3 over Q, 2 over GF(2).
  const auto odd = dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rank(odd, FieldSpec{}) == 3);
  CHECK(rank(odd, FieldSpec::prime(2)) == 2);
}

TEST_CASE("reduced homology examples") {
  const auto empty = SimplicialComplex::from_faces(4, {0});
  CHECK(reduced_homology_dims(empty, FieldSpec{}).values() == std::vector<std::size_t>{1});
  CHECK(reduced_homology_dims(kHollowTriangle, FieldSpec{}).values() ==
        std::vector<std::size_t>{0, 0, 1});
  for (std::size_t k = 1; k <= 10; ++k) {
    std::vector<FaceMask> all;
    for (FaceMask f = 0; f < (FaceMask{1} << k); ++f) all.push_back(f);
    const auto h = reduced_homology_dims(SimplicialComplex::from_faces(k, all), FieldSpec{});
    CHECK(h.is_zero());
    CHECK(h.top_dimension() == static_cast<int>(k) - 1);
  }
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3), FieldSpec{}).is_zero());
  // Two points.
  const auto S0 = SimplicialComplex::from_faces(2, {0, 1, 2});
  CHECK(reduced_homology_dims(S0, FieldSpec{}).values() == std::vector<std::size_t>{0, 1});
  CHECK(reduced_homology_dims(S0, FieldSpec{})[5] == 0);
  CHECK(reduced_homology_dims(S0, FieldSpec{})[-4] == 0);
}

TEST_CASE("reduced homology matches the dense oracle on 500 random complexes") {
  gen::Rng rng(0x0c);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = static_cast<int>(gen::uniform(rng, 1, 6));
    const auto C = gen::random_complex(rng, k);
    const auto faces = gen::vertex_lists(C);
    CAPTURE(faces);
    const auto h = reduced_homology_dims(C, FieldSpec{});
    const auto want = oracle::reduced_homology(faces);
    const auto n = std::max(h.values().size(), want.size());
    CHECK(padded(h.values(), n) == padded(want, n));
    // The plain chain route must agree with any shortcut taken above.
    CHECK(chain_homology_dims(C, FieldSpec{}, true) == h);
  }
}

TEST_CASE("boundaries compose to zero and Euler characteristics match") {
  gen::Rng rng(0xbd);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(gen::uniform(rng, 1, 9));
    const auto C = gen::random_complex(rng, k);
    if (C.is_void()) continue;
    for (int d = 1; d <= C.top_dimension(); ++d) {
      const auto upper = boundary_matrix(C, d);
      const auto lower = boundary_matrix(C, d - 1);
      REQUIRE(composes_to_zero(lower, upper));
      for (const auto& col : upper.columns) REQUIRE(col.size() == static_cast<std::size_t>(d + 1));
    }
    std::int64_t chi_faces = 0;
    std::int64_t chi_homology = 0;
    const auto h = reduced_homology_dims(C, FieldSpec{});
    for (int d = -1; d <= C.top_dimension(); ++d) {
      const std::int64_t sign = (d + 2) % 2 == 0 ? 1 : -1;
      chi_faces += sign * static_cast<std::int64_t>(C.faces_of_dim(d).size());
      chi_homology += sign * static_cast<std::int64_t>(h[d]);
    }
    CHECK(chi_faces == chi_homology);
  }
}

TEST_CASE("composes_to_zero detects a wrong sign") {
  auto d1 = boundary_matrix(kHollowTriangle, 1);
  const auto d0 = boundary_matrix(kHollowTriangle, 0);
  d1.columns[0][0].value = static_cast<std::int8_t>(-d1.columns[0][0].value);
  CHECK_FALSE(composes_to_zero(d0, d1));
}

TEST_CASE("rank over Q against GF(p)") {
  gen::Rng rng(0x9f);
  const auto big = FieldSpec::prime(32749);
  const auto two = FieldSpec::prime(2);
  std::size_t gf2_differences = 0;
  std::size_t matrices = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(gen::uniform(rng, 1, 8));
    const auto C = gen::random_complex(rng, k);
    for (int d = 0; d <= C.top_dimension(); ++d) {
      const auto M = boundary_matrix(C, d);
      const auto q = rank(M, FieldSpec{});
      CHECK(q == rank(M, big));
      const auto r2 = rank(M, two);
      CHECK(q >= r2);
      gf2_differences += q != r2 ? 1 : 0;
      ++matrices;
    }
  }
  MESSAGE("GF(2) rank differs from Q on " << gf2_differences << " of " << matrices
                                          << " boundary matrices");
}

TEST_CASE("rank of random sign matrices matches the oracle") {
  gen::Rng rng(0x17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 70));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 70));
    const auto density = gen::uniform(rng, 1, 10);
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
    for (auto& row : a) {
      for (auto& x : row) {
        if (gen::uniform(rng, 1, 10) <= density) x = gen::uniform(rng, 0, 1) ? 1 : -1;
      }
    }
    const auto M = dense(a);
    const auto want = oracle_rank(M);
    CHECK(rank(M, FieldSpec{}) == want);
    CHECK(rank(M, FieldSpec::prime(32749)) <= want);
  }
}
