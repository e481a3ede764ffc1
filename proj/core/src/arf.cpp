#include "arfbetti/arf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arfbetti/error.hpp"

namespace arfbetti {

std::optional<ArfViolation> find_arf_violation(const NumericalSemigroup& S) {
  // If max(s, t) >= c then s + t - u >= c, so the tail never fails.
  const Element c = S.conductor();
  for (Element s = 1; s < c; ++s) {
    if (!S.contains(s)) continue;
    for (Element t = s; t < c; ++t) {
      if (!S.contains(t)) continue;
      for (Element u = 1; u <= s; ++u) {
        if (S.contains(u) && !S.contains(s + t - u)) return ArfViolation{s, t, u};
      }
    }
  }
  return std::nullopt;
}

bool is_arf(const NumericalSemigroup& S) { return !find_arf_violation(S).has_value(); }

Quotient quotient(const NumericalSemigroup& S, Element n) {
  if (!S.contains(n)) {
    throw Error(ErrorCode::NotMember, std::to_string(n) + " is not in <" + S.to_string() + ">");
  }
  Quotient q;
  q.shift = n;
  q.conductor = std::max<Element>(S.conductor() - n, 0);
  q.members.resize(static_cast<std::size_t>(q.conductor));
  for (Element x = 0; x < q.conductor; ++x) {
    q.members[static_cast<std::size_t>(x)] = S.contains(x + n);
  }
  q.closed = true;
  for (Element a = 1; a < q.conductor && q.closed; ++a) {
    if (!q.contains(a)) continue;
    for (Element b = a; a + b < q.conductor; ++b) {
      if (q.contains(b) && !q.contains(a + b)) {
        q.closed = false;
        break;
      }
    }
  }
  if (q.closed) q.semigroup = NumericalSemigroup::from_members(q.members);
  return q;
}

NumericalSemigroup blowup(const NumericalSemigroup& S) {
  const auto& gens = S.minimal_generators();
  std::vector<Element> shifted{gens.front()};
  for (std::size_t i = 1; i < gens.size(); ++i) shifted.push_back(gens[i] - gens.front());
  return NumericalSemigroup::from_generators(shifted);
}

bool same_multiplicity_blowup(const NumericalSemigroup& S) {
  const bool by_blowup = blowup(S).multiplicity() == S.multiplicity();
  const auto& gens = S.minimal_generators();
  const bool by_generators = gens.size() < 2 || gens[1] >= 2 * gens[0];
  if (by_blowup != by_generators) {
    throw std::logic_error("multiplicity criteria disagree for <" + S.to_string() + ">");
  }
  return by_blowup;
}

NumericalSemigroup arf_closure(const NumericalSemigroup& S) {
  NumericalSemigroup current = S;
  for (;;) {
    std::vector<Element> inserted;
    const Element c = current.conductor();
    for (Element s = 1; s < c; ++s) {
      if (!current.contains(s)) continue;
      for (Element t = s; t < c; ++t) {
        if (!current.contains(t)) continue;
        for (Element u = 1; u <= s; ++u) {
          if (current.contains(u) && !current.contains(s + t - u)) inserted.push_back(s + t - u);
        }
      }
    }
    if (inserted.empty()) return current;
    std::vector<Element> gens = current.minimal_generators();
    gens.insert(gens.end(), inserted.begin(), inserted.end());
    current = NumericalSemigroup::from_generators(gens);
  }
}

MultiplicitySequence multiplicity_sequence(const NumericalSemigroup& S) {
  if (!is_arf(S)) throw Error(ErrorCode::NotArf, "<" + S.to_string() + "> is not Arf");
  MultiplicitySequence seq;
  NumericalSemigroup current = S;
  while (!current.is_naturals()) {
    seq.entries.push_back(current.multiplicity());
    current = blowup(current);
  }
  return seq;
}

namespace {

// {0} u (m + parent); Arf with multiplicity m and blowup `parent`.
NumericalSemigroup graft(const NumericalSemigroup& parent, Element m) {
  const Element conductor = parent.conductor() + m;
  std::vector<bool> members(static_cast<std::size_t>(conductor), false);
  members[0] = true;
  for (Element x = m; x < conductor; ++x) {
    members[static_cast<std::size_t>(x)] = parent.contains(x - m);
  }
  return NumericalSemigroup::from_members(members);
}

void descend(const NumericalSemigroup& parent, Element bound,
             const std::function<void(const NumericalSemigroup&)>& visit) {
  for (Element m = 2; parent.conductor() + m <= bound; ++m) {
    if (!parent.contains(m)) continue;
    const NumericalSemigroup child = graft(parent, m);
    visit(child);
    descend(child, bound, visit);
  }
}

}  // namespace

void for_each_arf(Element conductor_bound,
                  const std::function<void(const NumericalSemigroup&)>& visit) {
  if (conductor_bound < 0) return;
  // m = 1 only grafts onto the naturals and reproduces them.
  const NumericalSemigroup naturals;
  visit(naturals);
  descend(naturals, conductor_bound, visit);
}

std::vector<NumericalSemigroup> enumerate_arf(Element conductor_bound) {
  std::vector<NumericalSemigroup> out;
  for_each_arf(conductor_bound, [&](const NumericalSemigroup& S) { out.push_back(S); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a < b;
  });
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("Arf enumeration produced a duplicate");
  }
  return out;
}

std::string_view to_string(ShiftClause clause) noexcept {
  switch (clause) {
    case ShiftClause::ByMultiplicity: return "shift_by_multiplicity";
    case ShiftClause::ByTwiceMultiplicity: return "shift_by_twice_multiplicity";
    case ShiftClause::Unshifted: return "unshifted";
  }
  return "unknown";
}

std::vector<ShiftViolation> check_shift_equivalences(const NumericalSemigroup& S) {
  if (!is_arf(S)) {
    throw Error(ErrorCode::PreconditionFailed, "<" + S.to_string() + "> is not Arf");
  }
  if (!same_multiplicity_blowup(S)) {
    throw Error(ErrorCode::PreconditionFailed,
                "blowup of <" + S.to_string() + "> has smaller multiplicity");
  }
  const NumericalSemigroup B = blowup(S);
  const Element n1 = S.multiplicity();
  const auto& gens = S.minimal_generators();
  const auto is_generator = [&](Element s) {
    return std::binary_search(gens.begin(), gens.end(), s);
  };
  const auto is_shifted_generator = [&](Element s) {
    return std::binary_search(gens.begin() + 1, gens.end(), s + n1);
  };

  std::vector<ShiftViolation> out;
  const Element hi = S.conductor() + B.conductor() + 3 * n1;
  for (Element s = 0; s <= hi; ++s) {
    const bool in_s = S.contains(s);
    if (s != 0 && in_s != B.contains(s - n1)) {
      out.push_back({ShiftClause::ByMultiplicity, s, in_s, B.contains(s - n1)});
    }
    if (s != 0 && !is_generator(s) && in_s != B.contains(s - 2 * n1)) {
      out.push_back({ShiftClause::ByTwiceMultiplicity, s, in_s, B.contains(s - 2 * n1)});
    }
    if (!is_shifted_generator(s) && in_s != B.contains(s)) {
      out.push_back({ShiftClause::Unshifted, s, in_s, B.contains(s)});
    }
  }
  return out;
}

}  // namespace arfbetti
