#include <algorithm>
#include <stdexcept>
#include <string>

#include "arfbetti/homology.hpp"
#include "rank_detail.hpp"

namespace arfbetti {

bool HomologyDims::is_zero() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t v) { return v == 0; });
}

bool operator==(const HomologyDims& a, const HomologyDims& b) noexcept {
  const int top = std::max(a.top_dimension(), b.top_dimension());
  for (int d = -1; d <= top; ++d) {
    if (a[d] != b[d]) return false;
  }
  return true;
}

HomologyDims chain_homology_dims(const FaceFamily& faces, const FieldSpec& field,
                                 bool check_boundaries) {
  const int top = faces.top_dimension();
  if (top < -1) return HomologyDims{};
  // ranks[d] is the rank of the boundary out of dimension d, for d in [0, top].
  // Going down lets the pivots of each map clear columns of the next one.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  std::vector<bool> cleared;
  std::vector<bool> pivots;
  BoundaryMatrix upper;
  for (int d = top; d >= 0; --d) {
    // Cleared columns are never read, so they are not built unless the
    // matrix is multiplied out.
    BoundaryMatrix current = check_boundaries ? boundary_matrix(faces, d)
                                              : detail::boundary_matrix_skipping(faces, d, cleared);
    if (check_boundaries && d < top && !composes_to_zero(current, upper)) {
      throw std::logic_error("boundary maps in dimensions " + std::to_string(d) + " and " +
                             std::to_string(d + 1) + " do not compose to zero");
    }
    ranks[static_cast<std::size_t>(d)] =
        detail::rank_with_clearing(current, field, cleared, pivots);
    cleared.swap(pivots);
    if (check_boundaries) upper = std::move(current);
  }
  std::vector<std::size_t> dims(static_cast<std::size_t>(top + 2), 0);
  for (int d = -1; d <= top; ++d) {
    const std::size_t f = faces.faces_of_dim(d).size();
    const std::size_t out = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
    const std::size_t in = d + 1 <= top ? ranks[static_cast<std::size_t>(d + 1)] : 0;
    dims[static_cast<std::size_t>(d + 1)] = f - out - in;
  }
  return HomologyDims(std::move(dims));
}

namespace {

// A vertex v such that F + v is a face for every face F.
bool has_cone_point(const SimplicialComplex& C, const std::vector<bool>& bitmap) {
  for (std::size_t v = 0; v < C.vertex_count(); ++v) {
    const FaceMask bit = FaceMask{1} << v;
    if (!bitmap[bit]) continue;
    bool cone = true;
    for (int d = -1; d <= C.top_dimension() && cone; ++d) {
      for (FaceMask f : C.faces_of_dim(d)) {
        if (!bitmap[f | bit]) {
          cone = false;
          break;
        }
      }
    }
    if (cone) return true;
  }
  return false;
}

}  // namespace

HomologyDims reduced_homology_dims(const SimplicialComplex& C, const FieldSpec& field) {
  const std::size_t k = C.vertex_count();
  if (C.is_void() || k == 0 || k > kMaxVertices) return chain_homology_dims(C, field);
  const auto bitmap = face_bitmap(C);
  const int top = C.top_dimension();
  if (has_cone_point(C, bitmap)) {
    return HomologyDims(std::vector<std::size_t>(static_cast<std::size_t>(top + 2), 0));
  }
  const std::size_t subsets = std::size_t{1} << k;
  if (2 * C.face_count() <= subsets) return chain_homology_dims(C, field);

  // Alexander duality on k vertices: H~_i(C) has the dimension of
  // H~_{k-i-3} of the complex of complements of non-faces.
  const auto all = static_cast<FaceMask>(subsets - 1);
  std::vector<FaceMask> dual;
  dual.reserve(subsets - C.face_count());
  for (std::size_t f = subsets; f-- > 0;) {
    if (!bitmap[f]) dual.push_back(all & ~static_cast<FaceMask>(f));
  }
  const HomologyDims h = reduced_homology_dims(SimplicialComplex::from_faces(k, std::move(dual)),
                                               field);
  std::vector<std::size_t> dims(static_cast<std::size_t>(top + 2), 0);
  for (int i = -1; i <= top; ++i) {
    dims[static_cast<std::size_t>(i + 1)] = h[static_cast<int>(k) - i - 3];
  }
  return HomologyDims(std::move(dims));
}

HomologyDims relative_homology_dims(const RelativeComplex& C, const FieldSpec& field) {
  return chain_homology_dims(C, field);
}

}  // namespace arfbetti
