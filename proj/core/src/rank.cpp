#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arfbetti/homology.hpp"
#include "rank_detail.hpp"

namespace arfbetti {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow so the caller can retry with
// arbitrary precision.
struct CheckedInt {
  using value_type = std::int64_t;
  // Excluded so that negation never overflows.
  static constexpr value_type kMin = std::numeric_limits<value_type>::min();
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r) || r == kMin) throw Overflow{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r) || r == kMin) throw Overflow{};
    return r;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
};

struct BigInt {
  using value_type = boost::multiprecision::cpp_int;
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) {
    return boost::multiprecision::gcd(a, b);
  }
};

template <class Ops>
using SparseColumn = std::vector<std::pair<std::uint32_t, typename Ops::value_type>>;

// Divides a column by the gcd of its entries and makes the pivot positive.
template <class Ops>
void normalize(SparseColumn<Ops>& col) {
  using V = typename Ops::value_type;
  V g = 0;
  for (const auto& [row, v] : col) {
    g = Ops::gcd(g, v < 0 ? V(-v) : v);
    if (g == 1) break;
  }
  if (col.back().second < 0) g = -g;
  if (g != 1) {
    for (auto& entry : col) entry.second /= g;
  }
}

// Columns are visited left to right; each pivot is the column's last nonzero
// row. See rank_detail.hpp.
template <class Ops>
std::size_t integer_rank(const BoundaryMatrix& M, const std::vector<bool>* skip,
                         std::vector<bool>* pivot_rows) {
  using V = typename Ops::value_type;
  std::vector<std::int64_t> pivot_of_row(M.rows, -1);
  std::vector<SparseColumn<Ops>> basis;
  SparseColumn<Ops> col;
  SparseColumn<Ops> next;
  for (std::size_t c = 0; c < M.cols; ++c) {
    if (skip && (*skip)[c]) continue;
    col.clear();
    for (const auto& e : M.columns[c]) col.emplace_back(e.row, V(e.value));
    while (!col.empty()) {
      const std::int64_t idx = pivot_of_row[col.back().first];
      if (idx < 0) {
        normalize<Ops>(col);
        pivot_of_row[col.back().first] = static_cast<std::int64_t>(basis.size());
        basis.push_back(col);
        break;
      }
      // col <- a col - b piv cancels the shared pivot row.
      const auto& piv = basis[static_cast<std::size_t>(idx)];
      const V a = piv.back().second;
      const V b = col.back().second;
      next.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      const std::size_t ni = col.size() - 1;
      const std::size_t nj = piv.size() - 1;
      while (i < ni || j < nj) {
        if (j == nj || (i < ni && col[i].first < piv[j].first)) {
          next.emplace_back(col[i].first, Ops::mul(a, col[i].second));
          ++i;
        } else if (i == ni || piv[j].first < col[i].first) {
          next.emplace_back(piv[j].first, Ops::sub(V(0), Ops::mul(b, piv[j].second)));
          ++j;
        } else {
          V v = Ops::sub(Ops::mul(a, col[i].second), Ops::mul(b, piv[j].second));
          if (v != 0) next.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(col, next);
      if (!col.empty()) normalize<Ops>(col);
    }
  }
  if (pivot_rows) {
    pivot_rows->assign(M.rows, false);
    for (std::size_t r = 0; r < M.rows; ++r) (*pivot_rows)[r] = pivot_of_row[r] >= 0;
  }
  return basis.size();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::size_t modular_rank(const BoundaryMatrix& M, std::uint64_t p, const std::vector<bool>* skip,
                         std::vector<bool>* pivot_rows) {
  using Column = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<std::int64_t> pivot_of_row(M.rows, -1);
  std::vector<Column> basis;
  Column col;
  Column next;
  for (std::size_t c = 0; c < M.cols; ++c) {
    if (skip && (*skip)[c]) continue;
    col.clear();
    for (const auto& e : M.columns[c]) {
      col.emplace_back(e.row, e.value < 0 ? p - static_cast<std::uint64_t>(-e.value)
                                          : static_cast<std::uint64_t>(e.value));
    }
    while (!col.empty()) {
      const std::int64_t idx = pivot_of_row[col.back().first];
      if (idx < 0) {
        // Store with unit pivot.
        const std::uint64_t inv = inverse_mod(col.back().second, p);
        for (auto& entry : col) entry.second = entry.second * inv % p;
        pivot_of_row[col.back().first] = static_cast<std::int64_t>(basis.size());
        basis.push_back(col);
        break;
      }
      const auto& piv = basis[static_cast<std::size_t>(idx)];
      const std::uint64_t factor = col.back().second;
      next.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      const std::size_t ni = col.size() - 1;
      const std::size_t nj = piv.size() - 1;
      while (i < ni || j < nj) {
        if (j == nj || (i < ni && col[i].first < piv[j].first)) {
          next.push_back(col[i]);
          ++i;
        } else if (i == ni || piv[j].first < col[i].first) {
          next.emplace_back(piv[j].first, (p - factor * piv[j].second % p) % p);
          ++j;
        } else {
          const std::uint64_t v = (col[i].second + p - factor * piv[j].second % p) % p;
          if (v != 0) next.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      std::swap(col, next);
    }
  }
  if (pivot_rows) {
    pivot_rows->assign(M.rows, false);
    for (std::size_t r = 0; r < M.rows; ++r) (*pivot_rows)[r] = pivot_of_row[r] >= 0;
  }
  return basis.size();
}

std::size_t rank_impl(const BoundaryMatrix& M, const FieldSpec& field,
                      const std::vector<bool>* skip, std::vector<bool>* pivot_rows) {
  if (M.rows == 0 || M.cols == 0) {
    if (pivot_rows) pivot_rows->assign(M.rows, false);
    return 0;
  }
  if (!field.is_rationals()) return modular_rank(M, field.characteristic(), skip, pivot_rows);
  try {
    return integer_rank<CheckedInt>(M, skip, pivot_rows);
  } catch (const Overflow&) {
    return integer_rank<BigInt>(M, skip, pivot_rows);
  }
}

}  // namespace

std::size_t rank(const BoundaryMatrix& M, const FieldSpec& field) {
  return rank_impl(M, field, nullptr, nullptr);
}

namespace detail {

std::size_t rank_with_clearing(const BoundaryMatrix& M, const FieldSpec& field,
                               const std::vector<bool>& cleared_columns,
                               std::vector<bool>& pivot_rows) {
  return rank_impl(M, field, cleared_columns.empty() ? nullptr : &cleared_columns, &pivot_rows);
}

}  // namespace detail

}  // namespace arfbetti
