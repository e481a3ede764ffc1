#include "arfbetti/betti.hpp"

#include <numeric>

#include "arfbetti/divisor_complex.hpp"

namespace arfbetti {

Element betti_degree_bound(const NumericalSemigroup& S) {
  const auto& gens = S.minimal_generators();
  return S.frobenius() + std::accumulate(gens.begin(), gens.end(), Element{0});
}

HomologyDims divisor_homology(const NumericalSemigroup& S, Element s,
                              const BettiOptions& options) {
  if (!S.contains(s)) return HomologyDims{};
  if (options.route == HomologyRoute::Direct) {
    const SimplicialComplex C = squarefree_divisor_complex(S, s);
    return options.check_boundaries ? chain_homology_dims(C, options.field, true)
                                    : reduced_homology_dims(C, options.field);
  }
  return chain_homology_dims(excised_divisor_complex(S, s), options.field,
                             options.check_boundaries);
}

BettiTable graded_betti(const NumericalSemigroup& S, const FieldSpec& field) {
  BettiOptions options;
  options.field = field;
  return graded_betti(S, options);
}

BettiTable graded_betti(const NumericalSemigroup& S, const BettiOptions& options) {
  BettiTable table;
  table.generators = S.minimal_generators();
  table.field = options.field;
  table.degree_bound = betti_degree_bound(S);
  if (options.degree_override && *options.degree_override > table.degree_bound) {
    table.degree_bound = *options.degree_override;
  }
  const int k = static_cast<int>(S.embedding_dimension());
  for (Element s = 0; s <= table.degree_bound; ++s) {
    if (!S.contains(s)) continue;
    const HomologyDims h = divisor_homology(S, s, options);
    // beta_{i,s} = dim H~_{i-1}; i never exceeds k.
    for (int i = 0; i <= k; ++i) {
      if (const std::size_t dim = h[i - 1]; dim != 0) table.entries[{i, s}] = dim;
    }
  }
  return table;
}

std::map<int, std::size_t> total_betti(const BettiTable& table) {
  std::map<int, std::size_t> totals;
  for (const auto& [cell, dim] : table.entries) totals[cell.first] += dim;
  return totals;
}

}  // namespace arfbetti
