#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "arfbetti/arf.hpp"
#include "arfbetti/betti.hpp"
#include "arfbetti/divisor_complex.hpp"
#include "arfbetti/semigroup.hpp"
#include "arfbetti/verify.hpp"

namespace arfbetti::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"generators":[...], "conductor":c, "gaps":[...]}
Json semigroup_json(const NumericalSemigroup& S);

Json info_json(const NumericalSemigroup& S);
std::string info_text(const NumericalSemigroup& S);

Json arf_check_json(const NumericalSemigroup& S);
std::string arf_check_text(const NumericalSemigroup& S);

Json arf_closure_json(const NumericalSemigroup& S, const NumericalSemigroup& closure);
std::string arf_closure_text(const NumericalSemigroup& S, const NumericalSemigroup& closure);

Json blowup_json(const NumericalSemigroup& S, const NumericalSemigroup& B);
std::string blowup_text(const NumericalSemigroup& S, const NumericalSemigroup& B);

Json complex_json(const NumericalSemigroup& S, Element s, const SimplicialComplex& C);
std::string complex_text(const NumericalSemigroup& S, Element s, const SimplicialComplex& C);

Json betti_json(const BettiTable& table);
/// Betti diagram: one row per i, one column per degree carrying an entry.
std::string betti_text(const BettiTable& table);

/// Totals over every row i >= 1 and blowup degree scanned.
struct FaceSummary {
  std::size_t classified_cells = 0;
  std::array<std::size_t, 4> by_kind{};
};

Json verify_json(const TheoremReport& report, const std::vector<PropositionResult>& propositions,
                 const FaceSummary& faces);
std::string verify_text(const TheoremReport& report,
                        const std::vector<PropositionResult>& propositions,
                        const FaceSummary& faces);

Json sweep_json(const SweepReport& report);
std::string sweep_text(const SweepReport& report);

Json enumerate_json(Element bound, const std::vector<NumericalSemigroup>& corpus);
std::string enumerate_text(const std::vector<NumericalSemigroup>& corpus);

/// Compact JSON with a trailing newline.
std::string dump(const Json& value);

}  // namespace arfbetti::io
