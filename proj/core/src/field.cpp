#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "arfbetti/error.hpp"
#include "arfbetti/homology.hpp"

namespace arfbetti {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "q") return rationals();
  if (lower.starts_with("gf:")) {
    std::uint32_t p = 0;
    const char* first = lower.data() + 3;
    const char* last = lower.data() + lower.size();
    const auto [end, ec] = std::from_chars(first, last, p);
    if (ec == std::errc{} && end == last && first != last) return prime(p);
  }
  throw Error(ErrorCode::InvalidField,
              "unknown field \"" + std::string(text) + "\" (expected q or gf:<prime>)");
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace arfbetti
