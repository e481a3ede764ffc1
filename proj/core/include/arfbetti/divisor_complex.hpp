#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "arfbetti/semigroup.hpp"

namespace arfbetti {

/// A face as a bitmask; bit j is vertex j + 1.
using FaceMask = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 24;

/// Vertices of a face, 1-based and ascending.
std::vector<int> face_vertices(FaceMask face);

/// Lexicographic order of the sorted vertex lists of two faces of equal size.
inline bool face_lex_less(FaceMask a, FaceMask b) noexcept {
  const FaceMask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// Faces graded by dimension, each dimension sorted by face_lex_less. The
/// empty face lives in dimension -1. This is the chain basis shared by
/// simplicial complexes and relative complexes.
class FaceFamily {
 public:
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  /// Faces of dimension d (cardinality d + 1); empty outside the populated range.
  std::span<const FaceMask> faces_of_dim(int d) const noexcept;

  /// Largest dimension with a face; -2 when there are no faces at all.
  int top_dimension() const noexcept;

  std::size_t face_count() const noexcept;
  bool contains(FaceMask face) const noexcept;

 protected:
  FaceFamily(std::size_t vertex_count, std::vector<FaceMask> faces);

  std::size_t vertex_count_ = 0;
  // by_size_[n] holds faces with n vertices.
  std::vector<std::vector<FaceMask>> by_size_;
};

/// Indicator of the faces over all 2^k subsets; k must not exceed kMaxVertices.
std::vector<bool> face_bitmap(const FaceFamily& faces);

/// A downward closed family of faces on `vertex_count` vertices. The void
/// complex has no faces; every other complex contains the empty face.
class SimplicialComplex : public FaceFamily {
 public:
  static SimplicialComplex void_complex(std::size_t vertex_count);

  /// Throws std::invalid_argument if `faces` is not downward closed or uses a
  /// vertex out of range.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<FaceMask> faces);

  bool is_void() const noexcept { return face_count() == 0; }

 private:
  using FaceFamily::FaceFamily;
};

/// Chains of a pair (K, L) with L a subcomplex of K: the faces of K not in L.
class RelativeComplex : public FaceFamily {
 public:
  /// Throws std::invalid_argument unless L is a subcomplex of K on the same
  /// vertex set.
  static RelativeComplex from_pair(const SimplicialComplex& K, const SimplicialComplex& L);

  /// Trusted constructor for faces already known to form a relative complex.
  static RelativeComplex from_faces(std::size_t vertex_count, std::vector<FaceMask> faces);

 private:
  using FaceFamily::FaceFamily;
};

/// Faces F of {1..k} with s - sum_{i in F} n_i in S, over the minimal
/// generators n_1 < ... < n_k. Void when s is not in S. Enumerates subsets
/// directly; throws Error(TooManyVertices) when k > kMaxVertices.
SimplicialComplex squarefree_divisor_complex(const NumericalSemigroup& S, Element s);

/// The pair (deletion, link) of vertex 1 in the divisor complex at s. Its
/// chains are the faces F of {2..k} with s - sum_F n_i in S but
/// s - sum_F n_i - n_1 not in S. The closed star of vertex 1 is a cone, so
/// the homology of this pair equals the reduced homology of the divisor
/// complex. Only these faces are enumerated.
RelativeComplex excised_divisor_complex(const NumericalSemigroup& S, Element s);

}  // namespace arfbetti
