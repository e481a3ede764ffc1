#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "arfbetti/homology.hpp"
#include "rank_detail.hpp"

namespace arfbetti {

int BoundaryMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns.at(col);
  const auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const Entry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : 0;
}

namespace {

// Row lookup for facets. Small vertex sets use a table indexed by mask that is
// reused across calls; stale entries are rejected by checking the row itself.
class RowIndex {
 public:
  RowIndex(std::span<const FaceMask> rows, std::size_t vertex_count) : rows_(rows) {
    if (vertex_count <= kMaxVertices) {
      auto& table = scratch();
      const std::size_t size = std::size_t{1} << vertex_count;
      if (table.size() < size) table.resize(size);
      for (std::size_t r = 0; r < rows.size(); ++r) table[rows[r]] = static_cast<std::uint32_t>(r);
      table_ = &table;
    }
  }

  // Row of `facet`, or -1 when it is not a face of the family.
  std::int64_t find(FaceMask facet) const {
    if (table_) {
      const std::uint32_t r = (*table_)[facet];
      return r < rows_.size() && rows_[r] == facet ? static_cast<std::int64_t>(r) : -1;
    }
    const auto it = std::lower_bound(rows_.begin(), rows_.end(), facet, face_lex_less);
    return it != rows_.end() && *it == facet ? it - rows_.begin() : -1;
  }

 private:
  static std::vector<std::uint32_t>& scratch() {
    thread_local std::vector<std::uint32_t> table;
    return table;
  }

  std::span<const FaceMask> rows_;
  const std::vector<std::uint32_t>* table_ = nullptr;
};

}  // namespace

namespace detail {

BoundaryMatrix boundary_matrix_skipping(const FaceFamily& faces, int d,
                                        const std::vector<bool>& skip) {
  const auto cols = faces.faces_of_dim(d);
  const auto rows = faces.faces_of_dim(d - 1);
  BoundaryMatrix M;
  M.rows = rows.size();
  M.cols = cols.size();
  M.columns.resize(cols.size());
  if (rows.empty()) return M;
  const RowIndex index(rows, faces.vertex_count());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    const FaceMask face = cols[j];
    auto& column = M.columns[j];
    std::int8_t sign = 1;
    for (FaceMask rest = face; rest; rest &= rest - 1) {
      const FaceMask facet = face & ~(rest & (~rest + 1));
      if (const auto r = index.find(facet); r >= 0) {
        column.push_back({static_cast<std::uint32_t>(r), sign});
      }
      sign = static_cast<std::int8_t>(-sign);
    }
    // Dropping later vertices gives lexicographically smaller facets, so the
    // rows come out descending.
    std::reverse(column.begin(), column.end());
  }
  return M;
}

}  // namespace detail

BoundaryMatrix boundary_matrix(const FaceFamily& faces, int d) {
  return detail::boundary_matrix_skipping(faces, d, {});
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.cols != upper.rows) {
    throw std::invalid_argument("boundary matrices are not composable");
  }
  std::vector<std::pair<std::uint32_t, int>> terms;
  for (const auto& column : upper.columns) {
    terms.clear();
    for (const auto& e : column) {
      for (const auto& f : lower.columns[e.row]) terms.emplace_back(f.row, e.value * f.value);
    }
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size();) {
      int sum = 0;
      std::size_t j = i;
      for (; j < terms.size() && terms[j].first == terms[i].first; ++j) sum += terms[j].second;
      if (sum != 0) return false;
      i = j;
    }
  }
  return true;
}

}  // namespace arfbetti
