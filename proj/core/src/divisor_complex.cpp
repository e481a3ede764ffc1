#include "arfbetti/divisor_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "arfbetti/error.hpp"

namespace arfbetti {

std::vector<int> face_vertices(FaceMask face) {
  std::vector<int> out;
  while (face) {
    out.push_back(std::countr_zero(face) + 1);
    face &= face - 1;
  }
  return out;
}

FaceFamily::FaceFamily(std::size_t vertex_count, std::vector<FaceMask> faces)
    : vertex_count_(vertex_count) {
  for (FaceMask f : faces) {
    const auto n = static_cast<std::size_t>(std::popcount(f));
    if (by_size_.size() <= n) by_size_.resize(n + 1);
    by_size_[n].push_back(f);
  }
  for (auto& level : by_size_) {
    // Depth-first producers already emit lex order.
    if (!std::is_sorted(level.begin(), level.end(), face_lex_less)) {
      std::sort(level.begin(), level.end(), face_lex_less);
    }
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (!by_size_.empty() && by_size_.back().empty()) by_size_.pop_back();
}

std::span<const FaceMask> FaceFamily::faces_of_dim(int d) const noexcept {
  if (d < -1) return {};
  const auto n = static_cast<std::size_t>(d + 1);
  if (n >= by_size_.size()) return {};
  return by_size_[n];
}

int FaceFamily::top_dimension() const noexcept {
  return static_cast<int>(by_size_.size()) - 2;
}

std::size_t FaceFamily::face_count() const noexcept {
  std::size_t n = 0;
  for (const auto& level : by_size_) n += level.size();
  return n;
}

bool FaceFamily::contains(FaceMask face) const noexcept {
  const auto n = static_cast<std::size_t>(std::popcount(face));
  if (n >= by_size_.size()) return false;
  return std::binary_search(by_size_[n].begin(), by_size_[n].end(), face, face_lex_less);
}

std::vector<bool> face_bitmap(const FaceFamily& faces) {
  if (faces.vertex_count() > kMaxVertices) {
    throw std::invalid_argument("bitmap needs at most " + std::to_string(kMaxVertices) +
                                " vertices");
  }
  std::vector<bool> bitmap(std::size_t{1} << faces.vertex_count(), false);
  for (int d = -1; d <= faces.top_dimension(); ++d) {
    for (FaceMask f : faces.faces_of_dim(d)) bitmap[f] = true;
  }
  return bitmap;
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  return SimplicialComplex(vertex_count, {});
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<FaceMask> faces) {
  if (vertex_count > 32) throw std::invalid_argument("at most 32 vertices are representable");
  const FaceMask allowed = vertex_count == 32 ? ~FaceMask{0}
                                              : static_cast<FaceMask>((1ull << vertex_count) - 1);
  for (FaceMask f : faces) {
    if (f & ~allowed) throw std::invalid_argument("face uses a vertex out of range");
  }
  SimplicialComplex C(vertex_count, std::move(faces));
  std::vector<bool> bitmap;
  if (vertex_count <= kMaxVertices) bitmap = face_bitmap(C);
  auto present = [&](FaceMask f) { return bitmap.empty() ? C.contains(f) : bitmap[f]; };
  for (int d = 0; d <= C.top_dimension(); ++d) {
    for (FaceMask f : C.faces_of_dim(d)) {
      for (FaceMask rest = f; rest; rest &= rest - 1) {
        const FaceMask facet = f & ~(rest & (~rest + 1));
        if (!present(facet)) {
          throw std::invalid_argument("face family is not downward closed");
        }
      }
    }
  }
  return C;
}

RelativeComplex RelativeComplex::from_pair(const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.vertex_count() != L.vertex_count()) {
    throw std::invalid_argument("pair must share its vertex set");
  }
  std::vector<FaceMask> faces;
  for (int d = -1; d <= L.top_dimension(); ++d) {
    for (FaceMask f : L.faces_of_dim(d)) {
      if (!K.contains(f)) throw std::invalid_argument("second complex is not a subcomplex");
    }
  }
  for (int d = -1; d <= K.top_dimension(); ++d) {
    for (FaceMask f : K.faces_of_dim(d)) {
      if (!L.contains(f)) faces.push_back(f);
    }
  }
  return RelativeComplex(K.vertex_count(), std::move(faces));
}

RelativeComplex RelativeComplex::from_faces(std::size_t vertex_count, std::vector<FaceMask> faces) {
  return RelativeComplex(vertex_count, std::move(faces));
}

namespace {

void require_vertex_budget(const NumericalSemigroup& S) {
  if (S.embedding_dimension() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "embedding dimension " + std::to_string(S.embedding_dimension()) +
                    " exceeds the supported " + std::to_string(kMaxVertices) + " vertices");
  }
}

// Visits subsets of gens[first..] (ascending) whose sum added to `base` lies in
// [lo, hi], calling emit(mask, sum).
template <class Emit>
void subsets_in_window(const std::vector<Element>& gens, const std::vector<Element>& suffix,
                       std::size_t from, Element sum, FaceMask mask, Element lo, Element hi,
                       Emit& emit) {
  if (sum >= lo) emit(mask, sum);
  for (std::size_t j = from; j < gens.size(); ++j) {
    if (sum + gens[j] > hi) break;
    if (sum + suffix[j] < lo) break;
    subsets_in_window(gens, suffix, j + 1, sum + gens[j], mask | (FaceMask{1} << j), lo, hi,
                      emit);
  }
}

std::vector<Element> suffix_sums(const std::vector<Element>& gens) {
  std::vector<Element> suffix(gens.size() + 1, 0);
  for (std::size_t j = gens.size(); j-- > 0;) suffix[j] = suffix[j + 1] + gens[j];
  return suffix;
}

}  // namespace

SimplicialComplex squarefree_divisor_complex(const NumericalSemigroup& S, Element s) {
  require_vertex_budget(S);
  const std::size_t k = S.embedding_dimension();
  if (!S.contains(s)) return SimplicialComplex::void_complex(k);
  const auto& gens = S.minimal_generators();
  const auto suffix = suffix_sums(gens);
  std::vector<FaceMask> faces;
  auto emit = [&](FaceMask mask, Element sum) {
    if (S.contains(s - sum)) faces.push_back(mask);
  };
  subsets_in_window(gens, suffix, 0, 0, 0, 0, s, emit);
  return SimplicialComplex::from_faces(k, std::move(faces));
}

RelativeComplex excised_divisor_complex(const NumericalSemigroup& S, Element s) {
  require_vertex_budget(S);
  const std::size_t k = S.embedding_dimension();
  if (!S.contains(s)) return RelativeComplex::from_faces(k, {});
  const auto& gens = S.minimal_generators();
  const Element n1 = gens.front();
  // Members x with x - n_1 not a member all lie in [0, frobenius + n_1].
  const Element widest = S.frobenius() + n1;
  std::vector<bool> apery(static_cast<std::size_t>(widest + 1));
  for (Element x = 0; x <= widest; ++x) {
    apery[static_cast<std::size_t>(x)] = S.contains(x) && !S.contains(x - n1);
  }
  // Vertex 1 is excluded by starting the search at index 1.
  const auto suffix = suffix_sums(gens);
  std::vector<FaceMask> faces;
  auto emit = [&](FaceMask mask, Element sum) {
    const Element rest = s - sum;
    if (rest <= widest && apery[static_cast<std::size_t>(rest)]) faces.push_back(mask);
  };
  subsets_in_window(gens, suffix, 1, 0, 0, s - widest, s, emit);
  return RelativeComplex::from_faces(k, std::move(faces));
}

}  // namespace arfbetti
