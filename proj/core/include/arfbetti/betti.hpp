#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arfbetti/homology.hpp"
#include "arfbetti/semigroup.hpp"

namespace arfbetti {

/// How the homology of each divisor complex is obtained.
enum class HomologyRoute {
  /// Relative complex of the pair (deletion, link) of vertex 1. Default.
  Excision,
  /// Reduced homology of the full divisor complex.
  Direct,
};

struct BettiOptions {
  FieldSpec field;
  HomologyRoute route = HomologyRoute::Excision;
  /// Scan further than the sound bound; ignored unless it exceeds it.
  std::optional<Element> degree_override;
  /// Multiply out consecutive boundary maps while computing (slow).
  bool check_boundaries = false;
};

/// Graded Betti numbers beta_{i,s} of k[S] over the polynomial ring on the
/// minimal generators. Only nonzero entries are stored.
struct BettiTable {
  std::vector<Element> generators;
  FieldSpec field;
  Element degree_bound = 0;
  std::map<std::pair<int, Element>, std::size_t> entries;

  std::size_t at(int i, Element s) const {
    const auto it = entries.find({i, s});
    return it == entries.end() ? 0 : it->second;
  }

  /// Equality of the nonzero entries only.
  bool same_entries(const BettiTable& other) const { return entries == other.entries; }
};

/// frobenius(S) + sum of minimal generators. Beyond it every divisor complex
/// is a full simplex, hence acyclic.
Element betti_degree_bound(const NumericalSemigroup& S);

/// Reduced homology of the divisor complex at s, so that beta_{i,s} is the
/// entry at dimension i - 1; zero when s is not in S.
HomologyDims divisor_homology(const NumericalSemigroup& S, Element s,
                              const BettiOptions& options = {});

BettiTable graded_betti(const NumericalSemigroup& S, const FieldSpec& field = {});
BettiTable graded_betti(const NumericalSemigroup& S, const BettiOptions& options);

/// Sum over s of beta_{i,s}, for each i with a nonzero entry.
std::map<int, std::size_t> total_betti(const BettiTable& table);

}  // namespace arfbetti
