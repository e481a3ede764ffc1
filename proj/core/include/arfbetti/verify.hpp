#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arfbetti/betti.hpp"
#include "arfbetti/divisor_complex.hpp"
#include "arfbetti/homology.hpp"
#include "arfbetti/semigroup.hpp"

namespace arfbetti {

/// beta_{i,s}(S') against beta_{i,s+(i+1)n_1}(S).
struct CellComparison {
  int i = 0;
  /// Degree in the blowup.
  Element s = 0;
  std::size_t blowup_dim = 0;
  std::size_t semigroup_dim = 0;
  friend bool operator==(const CellComparison&, const CellComparison&) = default;
};

/// The i = 0 instance of the shift relation is not compared: beta_{0,s} lives
/// only at s = 0 on both sides, so it would pit beta_{0,0}(S') = 1 against
/// beta_{0,n_1}(S) = 0. Both values are recorded.
struct InitialRowNote {
  bool excluded = true;
  std::size_t blowup_beta_00 = 0;
  Element shifted_degree = 0;
  std::size_t semigroup_beta = 0;
};

struct TheoremReport {
  NumericalSemigroup semigroup;
  NumericalSemigroup blowup;
  FieldSpec field;
  /// Every cell with i >= 1 that is nonzero on at least one side.
  std::vector<CellComparison> checked;
  std::vector<CellComparison> mismatches;
  InitialRowNote initial_row;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Checks beta_{i,s}(S') = beta_{i,s+(i+1)n_1}(S) for all i >= 1. Throws
/// Error(NotArf) or Error(MultiplicityDrops) when S does not qualify.
TheoremReport check_theorem(const NumericalSemigroup& S, const FieldSpec& field = {});

/// Same comparison from tables computed elsewhere.
TheoremReport compare_shifted_tables(const NumericalSemigroup& S, const NumericalSemigroup& blowup,
                                     const BettiTable& semigroup_table,
                                     const BettiTable& blowup_table);

/// The four kinds of faces left over when the faces of dimensions i-1 and i of
/// the blowup complex at s are matched by vertex set against those of the
/// complex of S at t = s + (i+1) n_1.
enum class UnmatchedKind {
  /// (i-1)-face of the complex at t with t - sum = 0.
  LowerAtZero = 0,
  /// (i-1)-face of the complex at t containing vertex 1 with t - sum a minimal generator.
  LowerAtGenerator = 1,
  /// i-face of the complex at t containing vertex 1 with t - sum = 0.
  UpperAtZero = 2,
  /// i-face of the blowup complex avoiding vertex 1 with t - sum = n_l - n_1, l != 1.
  UpperInBlowup = 3,
};

std::string_view to_string(UnmatchedKind kind) noexcept;

struct UnmatchedFaceReport {
  int i = 0;
  Element s = 0;
  Element t = 0;
  std::array<std::vector<FaceMask>, 4> faces;
  std::size_t matched = 0;
  /// Unmatched faces fitting none of the kinds; nonempty only in reports
  /// returned by classify_unmatched_faces_unchecked.
  std::vector<FaceMask> unclassified;

  const std::vector<FaceMask>& of(UnmatchedKind kind) const {
    return faces[static_cast<std::size_t>(kind)];
  }
  std::size_t unmatched_count() const noexcept;
};

/// Throws Error(PreconditionFailed) unless S is Arf with a same-multiplicity
/// blowup and i >= 1, and Error(ClassificationGap) if an unmatched face fits
/// no kind.
UnmatchedFaceReport classify_unmatched_faces(const NumericalSemigroup& S, int i, Element s);

/// As above but gaps are reported in `unclassified` instead of thrown.
UnmatchedFaceReport classify_unmatched_faces_unchecked(const NumericalSemigroup& S, int i, Element s);

/// Reports for every i in [1, k] at one blowup degree s, from a single pass
/// over the faces. Gaps are left in `unclassified`.
std::vector<UnmatchedFaceReport> classify_all_rows(const NumericalSemigroup& S,
                                                   const NumericalSemigroup& blowup, Element s);

enum class PropositionStatus { Pass, Fail, NotApplicable };

struct PropositionResult {
  std::string name;
  PropositionStatus status = PropositionStatus::Pass;
  std::string witness;
};

std::string_view to_string(PropositionStatus status) noexcept;

/// Finite instances of the structural facts about an Arf semigroup and its
/// blowup. The generator formula and the shift equivalences apply only when
/// the blowup keeps the multiplicity. Throws Error(NotArf).
std::vector<PropositionResult> check_propositions(const NumericalSemigroup& S);

struct SweepOptions {
  Element bound = 0;
  FieldSpec field;
  unsigned jobs = 1;
  /// Also classify unmatched faces for every i in [1, k] and every blowup
  /// degree up to its Betti bound.
  bool classify_faces = true;
};

struct SweepFailure {
  std::vector<Element> generators;
  std::vector<CellComparison> mismatches;
};

struct PropositionFailure {
  std::vector<Element> generators;
  std::string proposition;
  std::string witness;
};

struct SweepReport {
  Element bound = 0;
  FieldSpec field;
  std::size_t total = 0;
  std::size_t eligible = 0;
  std::size_t passes = 0;
  std::vector<SweepFailure> failures;
  std::vector<PropositionFailure> proposition_failures;
  std::size_t compared_cells = 0;
  std::size_t classified_cells = 0;
  std::array<std::size_t, 4> unmatched_by_kind{};
  bool i0_excluded = true;

  bool passed() const noexcept { return failures.empty() && proposition_failures.empty(); }
};

/// Runs check_theorem on every eligible Arf semigroup with conductor <= bound
/// and check_propositions on all of them. Theorem and proposition failures are
/// collected; a classification gap aborts with Error(ClassificationGap).
/// Results do not depend on `jobs`.
SweepReport sweep(const SweepOptions& options);

}  // namespace arfbetti
