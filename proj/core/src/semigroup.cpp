#include "arfbetti/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "arfbetti/error.hpp"

namespace arfbetti {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::InvalidEntry: return "InvalidEntry";
    case ErrorCode::NonCofinite: return "NonCofinite";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotArf: return "NotArf";
    case ErrorCode::MultiplicityDrops: return "MultiplicityDrops";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ClassificationGap: return "ClassificationGap";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

// Irreducible nonzero members among `candidates`, for a semigroup described by
// `member` on a range that contains every candidate.
std::vector<Element> irreducibles(const std::vector<bool>& member,
                                  const std::vector<Element>& candidates) {
  std::vector<Element> out;
  for (Element x : candidates) {
    if (x <= 0 || !member[static_cast<std::size_t>(x)]) continue;
    bool reducible = false;
    for (Element a = 1; a <= x / 2 && !reducible; ++a) {
      reducible = member[static_cast<std::size_t>(a)] &&
                  member[static_cast<std::size_t>(x - a)];
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<bool> extend_table(std::vector<bool> member, Element conductor, Element size) {
  member.resize(static_cast<std::size_t>(size), true);
  for (Element x = conductor; x < size; ++x) member[static_cast<std::size_t>(x)] = true;
  return member;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup()
    : generators_{1}, conductor_{0}, membership_(2, true) {}

NumericalSemigroup::NumericalSemigroup(std::vector<Element> generators, Element conductor,
                                       std::vector<bool> membership)
    : generators_(std::move(generators)),
      conductor_(conductor),
      membership_(std::move(membership)) {}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Element> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "generator list is empty");
  Element g = 0;
  for (Element x : gens) {
    if (x < 1) {
      throw Error(ErrorCode::InvalidEntry,
                  "generators must be positive integers, got " + std::to_string(x));
    }
    if (x >= kMaxTableSize / 4) {
      throw Error(ErrorCode::TooLarge, "generator " + std::to_string(x) + " is too large");
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::NonCofinite,
                "generators have gcd " + std::to_string(g) + ", complement is infinite");
  }

  std::vector<Element> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Element smallest = sorted.front();
  const Element largest = sorted.back();

  // Sieve until `smallest` consecutive members appear; from there on every
  // integer is a member. The Frobenius number never exceeds 2 g^2 + g.
  const Element hard_limit = std::min<Element>(2 * largest * largest + largest + smallest + 1,
                                               kMaxTableSize);
  std::vector<bool> member;
  member.reserve(static_cast<std::size_t>(std::min<Element>(hard_limit, 1 << 16)));
  Element run = 0;
  Element conductor = -1;
  for (Element x = 0; x < hard_limit; ++x) {
    bool in = (x == 0);
    for (Element gen : sorted) {
      if (gen > x) break;
      if (member[static_cast<std::size_t>(x - gen)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
    if (run == smallest) {
      conductor = x - smallest + 1;
      break;
    }
  }
  if (conductor < 0) {
    throw Error(ErrorCode::TooLarge, "conductor exceeds the supported table size");
  }
  member.resize(static_cast<std::size_t>(conductor));

  std::vector<bool> wide = extend_table(member, conductor, conductor + largest + 1);
  std::vector<Element> minimal = irreducibles(wide, sorted);
  const Element size = conductor + minimal.back() + 1;
  if (size > kMaxTableSize) throw Error(ErrorCode::TooLarge, "membership table too large");
  return NumericalSemigroup(std::move(minimal), conductor,
                            extend_table(std::move(member), conductor, size));
}

NumericalSemigroup NumericalSemigroup::from_members(const std::vector<bool>& below_conductor) {
  const auto conductor = static_cast<Element>(below_conductor.size());
  if (conductor == 0) return NumericalSemigroup();
  if (conductor + 1 > kMaxTableSize / 2) throw Error(ErrorCode::TooLarge, "conductor too large");
  if (!below_conductor[0]) throw Error(ErrorCode::NotClosed, "0 must be a member");
  if (below_conductor.back()) {
    throw Error(ErrorCode::InvalidEntry, "conductor - 1 must be a gap");
  }
  // Closure only needs checking for sums that stay below the conductor.
  for (Element a = 1; a < conductor; ++a) {
    if (!below_conductor[static_cast<std::size_t>(a)]) continue;
    for (Element b = a; a + b < conductor; ++b) {
      if (below_conductor[static_cast<std::size_t>(b)] &&
          !below_conductor[static_cast<std::size_t>(a + b)]) {
        throw Error(ErrorCode::NotClosed, "set is not closed under addition: " +
                                              std::to_string(a) + " + " + std::to_string(b));
      }
    }
  }
  Element smallest = 1;
  while (smallest < conductor && !below_conductor[static_cast<std::size_t>(smallest)]) ++smallest;
  // Minimal generators are all below conductor + multiplicity.
  std::vector<bool> wide = extend_table(below_conductor, conductor, conductor + smallest + 1);
  std::vector<Element> candidates(static_cast<std::size_t>(conductor + smallest));
  std::iota(candidates.begin(), candidates.end(), Element{0});
  std::vector<Element> minimal = irreducibles(wide, candidates);
  const Element size = conductor + minimal.back() + 1;
  return NumericalSemigroup(std::move(minimal), conductor,
                            extend_table(below_conductor, conductor, size));
}

std::vector<Element> NumericalSemigroup::gaps() const {
  std::vector<Element> out;
  for (Element x = 1; x < conductor_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::size_t NumericalSemigroup::genus() const { return gaps().size(); }

std::vector<Element> NumericalSemigroup::min_elements_mod_multiplicity() const {
  const Element m = multiplicity();
  std::vector<Element> out(static_cast<std::size_t>(m), -1);
  std::size_t found = 0;
  for (Element x = 0; found < out.size(); ++x) {
    auto& slot = out[static_cast<std::size_t>(x % m)];
    if (slot < 0 && contains(x)) {
      slot = x;
      ++found;
    }
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  return os.str();
}

std::vector<Element> parse_generators(std::string_view text) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    if (token.empty()) {
      throw Error(ErrorCode::Parse, "empty entry in generator list \"" + std::string(text) + "\"");
    }
    Element value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "not an integer: \"" + std::string(token) + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace arfbetti
