#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arfbetti/divisor_complex.hpp"

namespace arfbetti {

/// Coefficient field: the rationals or GF(p).
class FieldSpec {
 public:
  /// The rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws Error(InvalidField) unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q" / "Q" or "gf:p" (case-insensitive prefix).
  static FieldSpec parse(std::string_view text);

  bool is_rationals() const noexcept { return characteristic_ == 0; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

/// Signed incidence matrix of the boundary map from d-faces to (d-1)-faces,
/// stored by column. Rows and columns follow faces_of_dim order.
struct BoundaryMatrix {
  struct Entry {
    std::uint32_t row;
    std::int8_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Each column sorted by row.
  std::vector<std::vector<Entry>> columns;

  int at(std::size_t row, std::size_t col) const;
};

/// Boundary map in dimension d of a complex or of a relative complex (faces
/// missing from the family are dropped, which is the quotient by the
/// subcomplex). Removing the j-th smallest vertex has sign (-1)^j; d = 0
/// maps every vertex to the empty face with +1.
BoundaryMatrix boundary_matrix(const FaceFamily& faces, int d);

/// Whether lower * upper vanishes, for lower = boundary in dimension d - 1 and
/// upper = boundary in dimension d.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

/// Exact rank. Over Q by fraction-free integer column reduction, over GF(p)
/// by modular reduction. Columns are reduced left to right and each pivot is
/// the last nonzero row of its column.
std::size_t rank(const BoundaryMatrix& M, const FieldSpec& field);

/// Dimensions of (reduced or relative) homology, indexed from dimension -1.
class HomologyDims {
 public:
  HomologyDims() = default;
  explicit HomologyDims(std::vector<std::size_t> from_minus_one)
      : dims_(std::move(from_minus_one)) {}

  /// Zero outside the stored range.
  std::size_t operator[](int d) const noexcept {
    const auto idx = static_cast<std::size_t>(d + 1);
    return d < -1 || idx >= dims_.size() ? 0 : dims_[idx];
  }
  /// Highest stored dimension (top dimension of the complex); -2 when empty.
  int top_dimension() const noexcept { return static_cast<int>(dims_.size()) - 2; }
  bool is_zero() const noexcept;
  const std::vector<std::size_t>& values() const noexcept { return dims_; }

  friend bool operator==(const HomologyDims& a, const HomologyDims& b) noexcept;

 private:
  std::vector<std::size_t> dims_;
};

/// dim H~_d = f_d - rank d_d - rank d_{d+1} for d in [-1, dim C]. The void
/// complex has no homology; {empty face} has H~_{-1} of dimension 1.
HomologyDims reduced_homology_dims(const SimplicialComplex& C, const FieldSpec& field);

/// Same formula on the chains of a pair.
HomologyDims relative_homology_dims(const RelativeComplex& C, const FieldSpec& field);

/// Homology of any face family; both functions above forward here. If
/// `check_boundaries` is set, every consecutive pair of boundary maps is
/// multiplied out and std::logic_error is thrown if it does not vanish.
HomologyDims chain_homology_dims(const FaceFamily& faces, const FieldSpec& field,
                                 bool check_boundaries = false);

}  // namespace arfbetti
