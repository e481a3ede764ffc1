#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "arfbetti/semigroup.hpp"

namespace arfbetti {

/// A triple s, t >= u of nonzero members with s + t - u outside S.
struct ArfViolation {
  Element s = 0;
  Element t = 0;
  Element u = 0;
  Element value() const noexcept { return s + t - u; }
  friend bool operator==(const ArfViolation&, const ArfViolation&) = default;
};

/// First violating triple in the order s ascending, t >= s ascending, u
/// ascending; only s, t below the conductor need checking.
std::optional<ArfViolation> find_arf_violation(const NumericalSemigroup& S);
bool is_arf(const NumericalSemigroup& S);

/// The translate S(n) = {s - n : s in S, s >= n}.
struct Quotient {
  Element shift = 0;
  Element conductor = 0;
  /// Membership on [0, conductor).
  std::vector<bool> members;
  bool closed = false;
  /// Set exactly when `closed`.
  std::optional<NumericalSemigroup> semigroup;

  bool contains(Element x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor) return true;
    return members[static_cast<std::size_t>(x)];
  }
};

/// Throws Error(NotMember) if n is not in S.
Quotient quotient(const NumericalSemigroup& S, Element n);

/// Semigroup generated by n_1 and n_i - n_1.
NumericalSemigroup blowup(const NumericalSemigroup& S);

/// Whether the blowup keeps the multiplicity. Computed both from the blowup
/// itself and from the criterion n_2 >= 2 n_1; the two must agree.
bool same_multiplicity_blowup(const NumericalSemigroup& S);

/// Smallest Arf semigroup containing S.
NumericalSemigroup arf_closure(const NumericalSemigroup& S);

/// Multiplicities along S, S', S'', ... until the naturals are reached.
/// The implicit tail of 1s is not stored.
struct MultiplicitySequence {
  std::vector<Element> entries;
  friend bool operator==(const MultiplicitySequence&, const MultiplicitySequence&) = default;
};

/// Throws Error(NotArf).
MultiplicitySequence multiplicity_sequence(const NumericalSemigroup& S);

/// Calls `visit` once per Arf semigroup with conductor <= bound, in depth
/// first order of the blowup tree.
void for_each_arf(Element conductor_bound,
                  const std::function<void(const NumericalSemigroup&)>& visit);

/// Every Arf semigroup with conductor <= bound, sorted by (conductor, generators).
std::vector<NumericalSemigroup> enumerate_arf(Element conductor_bound);

/// Membership relations between an Arf semigroup and a blowup of the same
/// multiplicity n_1.
enum class ShiftClause {
  /// s in S <=> s - n_1 in S', for s != 0.
  ByMultiplicity,
  /// s in S <=> s - 2 n_1 in S', for s != 0 and s not a minimal generator.
  ByTwiceMultiplicity,
  /// s in S <=> s in S', for s not of the form n_l - n_1 with l != 1.
  Unshifted,
};

std::string_view to_string(ShiftClause clause) noexcept;

struct ShiftViolation {
  ShiftClause clause;
  Element s = 0;
  bool in_semigroup = false;
  bool in_blowup = false;
};

/// Scans s in [0, c(S) + c(S') + 3 n_1] for each clause and returns every
/// violation. Throws Error(PreconditionFailed) unless S is Arf with a
/// same-multiplicity blowup.
std::vector<ShiftViolation> check_shift_equivalences(const NumericalSemigroup& S);

}  // namespace arfbetti
