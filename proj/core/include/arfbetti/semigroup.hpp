#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arfbetti {

using Element = std::int64_t;

/// Largest membership table we are willing to allocate. Every value the
/// library handles stays far below 2^31, so sums over at most 32 generators
/// fit comfortably in Element.
inline constexpr Element kMaxTableSize = Element{1} << 26;

/// A numerical semigroup: a cofinite submonoid of the naturals.
///
/// Stored as its minimal generators n_1 < ... < n_k, its conductor c and a
/// membership table covering [0, c + n_k]. Anything past the table is a member.
/// Instances are immutable once built.
class NumericalSemigroup {
 public:
  /// The semigroup of all naturals.
  NumericalSemigroup();

  /// Semigroup generated by `gens`; duplicates and non-minimal entries are
  /// allowed. Throws Error with EmptyGenerators, InvalidEntry, NonCofinite or
  /// TooLarge.
  static NumericalSemigroup from_generators(std::span<const Element> gens);

  /// Semigroup given by its members below the conductor. `below_conductor[x]`
  /// flags x; the vector's length is the conductor. Throws NotClosed when the
  /// set is not closed under addition or misses 0, InvalidEntry when c - 1 is
  /// flagged.
  static NumericalSemigroup from_members(const std::vector<bool>& below_conductor);

  bool contains(Element s) const noexcept {
    if (s < 0) return false;
    if (s >= table_size()) return true;
    return membership_[static_cast<std::size_t>(s)];
  }

  const std::vector<Element>& minimal_generators() const noexcept { return generators_; }
  Element multiplicity() const noexcept { return generators_.front(); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Element conductor() const noexcept { return conductor_; }
  /// Largest gap; -1 for the naturals.
  Element frobenius() const noexcept { return conductor_ - 1; }
  std::vector<Element> gaps() const;
  std::size_t genus() const;
  bool is_naturals() const noexcept { return conductor_ == 0; }

  /// Entry r is the least member congruent to r modulo the multiplicity.
  std::vector<Element> min_elements_mod_multiplicity() const;

  /// Table covers [0, table_size()); equals conductor + n_k + 1.
  Element table_size() const noexcept { return static_cast<Element>(membership_.size()); }

  /// Comma-separated minimal generators, e.g. "3,7,8".
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.generators_ == b.generators_;
  }
  friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.generators_ <=> b.generators_;
  }

 private:
  NumericalSemigroup(std::vector<Element> generators, Element conductor,
                     std::vector<bool> membership);

  std::vector<Element> generators_;
  Element conductor_ = 0;
  std::vector<bool> membership_;
};

/// Parses "3, 7,8" style generator lists. Throws Error(Parse).
std::vector<Element> parse_generators(std::string_view text);

}  // namespace arfbetti
