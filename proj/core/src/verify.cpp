#include "arfbetti/verify.hpp"

#include "tally.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "arfbetti/arf.hpp"
#include "arfbetti/error.hpp"

namespace arfbetti {

namespace {

void require_eligible(const NumericalSemigroup& S) {
  if (!is_arf(S)) throw Error(ErrorCode::NotArf, "<" + S.to_string() + "> is not Arf");
  if (!same_multiplicity_blowup(S)) {
    throw Error(ErrorCode::MultiplicityDrops,
                "blowup multiplicity drops for <" + S.to_string() + ">");
  }
}

std::string face_string(FaceMask face) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : face_vertices(face)) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

TheoremReport compare_shifted_tables(const NumericalSemigroup& S, const NumericalSemigroup& blowup,
                                     const BettiTable& semigroup_table,
                                     const BettiTable& blowup_table) {
  const Element n1 = S.multiplicity();
  TheoremReport report{S, blowup, semigroup_table.field, {}, {}, {}};

  std::set<std::pair<int, Element>> cells;
  for (const auto& [cell, dim] : blowup_table.entries) {
    if (cell.first >= 1) cells.insert(cell);
  }
  for (const auto& [cell, dim] : semigroup_table.entries) {
    if (cell.first >= 1) cells.insert({cell.first, cell.second - (cell.first + 1) * n1});
  }
  for (const auto& [i, s] : cells) {
    const CellComparison cmp{i, s, blowup_table.at(i, s), semigroup_table.at(i, s + (i + 1) * n1)};
    report.checked.push_back(cmp);
    if (cmp.blowup_dim != cmp.semigroup_dim) report.mismatches.push_back(cmp);
  }
  report.initial_row.blowup_beta_00 = blowup_table.at(0, 0);
  report.initial_row.shifted_degree = n1;
  report.initial_row.semigroup_beta = semigroup_table.at(0, n1);
  return report;
}

TheoremReport check_theorem(const NumericalSemigroup& S, const FieldSpec& field) {
  require_eligible(S);
  const NumericalSemigroup B = blowup(S);
  return compare_shifted_tables(S, B, graded_betti(S, field), graded_betti(B, field));
}

std::string_view to_string(UnmatchedKind kind) noexcept {
  switch (kind) {
    case UnmatchedKind::LowerAtZero: return "lower_at_zero";
    case UnmatchedKind::LowerAtGenerator: return "lower_at_generator";
    case UnmatchedKind::UpperAtZero: return "upper_at_zero";
    case UnmatchedKind::UpperInBlowup: return "upper_in_blowup";
  }
  return "unknown";
}

std::size_t UnmatchedFaceReport::unmatched_count() const noexcept {
  std::size_t n = unclassified.size();
  for (const auto& list : faces) n += list.size();
  return n;
}

namespace {

struct FaceMatcher {
  const NumericalSemigroup& S;
  const NumericalSemigroup& B;
  Element s;
  int i_lo;
  int i_hi;
  std::vector<UnmatchedFaceReport>& reports;
  // Tally instead of listing faces; unclassified faces are still listed.
  bool count_only = false;
  std::vector<std::array<std::size_t, 4>> tallies;

  // Blowup generators in the same vertex order: n_1, n_2 - n_1, ..., n_k - n_1.
  std::vector<Element> shifted;
  Element n1 = 0;
  std::size_t k = 0;

  void run() {
    const auto& gens = S.minimal_generators();
    n1 = gens.front();
    k = gens.size();
    shifted.assign(gens.begin(), gens.end());
    for (std::size_t j = 1; j < k; ++j) shifted[j] -= n1;
    tallies.assign(reports.size(), {});
    visit(0, 0, 0, 0, 0);
  }

  bool is_generator(Element u) const {
    const auto& gens = S.minimal_generators();
    return std::binary_search(gens.begin(), gens.end(), u);
  }

  // A face of size m serves row i = m as a lower face and row i = m - 1 as an
  // upper face.
  void classify(FaceMask face, int m, Element sum, Element shifted_sum) {
    const bool has_first = (face & 1u) != 0;
    const bool in_blowup = B.contains(s - shifted_sum);
    for (int i : {m, m - 1}) {
      if (i < i_lo || i > i_hi) continue;
      auto& report = reports[static_cast<std::size_t>(i - i_lo)];
      const Element u = report.t - sum;
      const bool in_semigroup = S.contains(u);
      if (in_semigroup == in_blowup) {
        if (in_semigroup) ++report.matched;
        continue;
      }
      const bool lower = (i == m);
      auto bin = [&](UnmatchedKind kind) {
        const auto slot = static_cast<std::size_t>(kind);
        if (count_only) {
          ++tallies[static_cast<std::size_t>(i - i_lo)][slot];
        } else {
          report.faces[slot].push_back(face);
        }
      };
      if (in_semigroup && lower && u == 0) {
        bin(UnmatchedKind::LowerAtZero);
      } else if (in_semigroup && lower && has_first && is_generator(u)) {
        bin(UnmatchedKind::LowerAtGenerator);
      } else if (in_semigroup && !lower && has_first && u == 0) {
        bin(UnmatchedKind::UpperAtZero);
      } else if (in_blowup && !lower && !has_first && u + n1 != n1 && is_generator(u + n1)) {
        bin(UnmatchedKind::UpperInBlowup);
      } else {
        report.unclassified.push_back(face);
      }
    }
  }

  // Faces can belong to either complex only while shifted_sum <= s + 2 n_1.
  void visit(std::size_t from, FaceMask face, int m, Element sum, Element shifted_sum) {
    if (m >= i_lo && m <= i_hi + 1) classify(face, m, sum, shifted_sum);
    if (m > i_hi) return;
    for (std::size_t j = from; j < k; ++j) {
      if (shifted_sum + shifted[j] > s + 2 * n1) continue;
      visit(j + 1, face | (FaceMask{1} << j), m + 1, sum + S.minimal_generators()[j],
            shifted_sum + shifted[j]);
    }
  }
};

std::vector<UnmatchedFaceReport> empty_rows(const NumericalSemigroup& S, Element s, int i_lo,
                                            int i_hi) {
  std::vector<UnmatchedFaceReport> reports;
  for (int i = i_lo; i <= i_hi; ++i) {
    UnmatchedFaceReport r;
    r.i = i;
    r.s = s;
    r.t = s + (i + 1) * S.multiplicity();
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<UnmatchedFaceReport> classify_rows(const NumericalSemigroup& S,
                                               const NumericalSemigroup& B, Element s, int i_lo,
                                               int i_hi) {
  auto reports = empty_rows(S, s, i_lo, i_hi);
  if (i_lo <= i_hi) FaceMatcher{S, B, s, i_lo, i_hi, reports, false, {}, {}, 0, 0}.run();
  return reports;
}

}  // namespace

namespace detail {

std::vector<RowTally> tally_all_rows(const NumericalSemigroup& S, const NumericalSemigroup& blowup,
                                     Element s) {
  const int k = static_cast<int>(S.embedding_dimension());
  auto reports = empty_rows(S, s, 1, k);
  FaceMatcher matcher{S, blowup, s, 1, k, reports, true, {}, {}, 0, 0};
  matcher.run();
  std::vector<RowTally> out;
  for (std::size_t r = 0; r < reports.size(); ++r) {
    out.push_back({reports[r].i, matcher.tallies[r], reports[r].matched,
                   std::move(reports[r].unclassified)});
  }
  return out;
}

}  // namespace detail

std::vector<UnmatchedFaceReport> classify_all_rows(const NumericalSemigroup& S,
                                                   const NumericalSemigroup& blowup, Element s) {
  return classify_rows(S, blowup, s, 1, static_cast<int>(S.embedding_dimension()));
}

UnmatchedFaceReport classify_unmatched_faces_unchecked(const NumericalSemigroup& S, int i,
                                                       Element s) {
  if (!is_arf(S) || !same_multiplicity_blowup(S)) {
    throw Error(ErrorCode::PreconditionFailed,
                "<" + S.to_string() + "> is not Arf with a same-multiplicity blowup");
  }
  if (i < 1) throw Error(ErrorCode::PreconditionFailed, "row index must be at least 1");
  return classify_rows(S, blowup(S), s, i, i).front();
}

UnmatchedFaceReport classify_unmatched_faces(const NumericalSemigroup& S, int i, Element s) {
  UnmatchedFaceReport report = classify_unmatched_faces_unchecked(S, i, s);
  if (!report.unclassified.empty()) {
    throw Error(ErrorCode::ClassificationGap,
                "unclassified unmatched face " + face_string(report.unclassified.front()) +
                    " for <" + S.to_string() + "> at i=" + std::to_string(i) +
                    " s=" + std::to_string(s));
  }
  return report;
}

std::string_view to_string(PropositionStatus status) noexcept {
  switch (status) {
    case PropositionStatus::Pass: return "pass";
    case PropositionStatus::Fail: return "fail";
    case PropositionStatus::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

std::vector<PropositionResult> check_propositions(const NumericalSemigroup& S) {
  if (!is_arf(S)) throw Error(ErrorCode::NotArf, "<" + S.to_string() + "> is not Arf");
  std::vector<PropositionResult> out;
  auto record = [&](std::string name, bool ok, std::string witness) {
    out.push_back({std::move(name), ok ? PropositionStatus::Pass : PropositionStatus::Fail,
                   ok ? std::string() : std::move(witness)});
  };
  auto skip = [&](std::string name) {
    out.push_back({std::move(name), PropositionStatus::NotApplicable, {}});
  };

  const auto& gens = S.minimal_generators();
  const Element n1 = S.multiplicity();
  record("multiplicity_equals_embedding_dimension",
         static_cast<Element>(S.embedding_dimension()) == n1,
         "multiplicity " + std::to_string(n1) + ", embedding dimension " +
             std::to_string(S.embedding_dimension()));

  {
    std::string witness;
    for (Element x : S.min_elements_mod_multiplicity()) {
      if (x != 0 && !std::binary_search(gens.begin(), gens.end(), x)) {
        witness = "least member " + std::to_string(x) + " of its residue class is not a generator";
        break;
      }
    }
    record("residue_minima_are_generators", witness.empty(), witness);
  }

  const NumericalSemigroup B = blowup(S);
  {
    const Quotient q = quotient(S, n1);
    std::string witness;
    const Element hi = std::max(B.table_size(), q.conductor + 1);
    for (Element x = 0; x <= hi && witness.empty(); ++x) {
      if (B.contains(x) != q.contains(x)) {
        witness = "blowup and S(n_1) differ at " + std::to_string(x);
      }
    }
    record("blowup_equals_quotient_by_multiplicity", witness.empty(), witness);
  }

  {
    const auto v = find_arf_violation(B);
    record("blowup_is_arf", !v.has_value(),
           v ? "s=" + std::to_string(v->s) + " t=" + std::to_string(v->t) +
                   " u=" + std::to_string(v->u)
             : std::string());
  }

  if (!same_multiplicity_blowup(S)) {
    skip("blowup_generators_are_shifted");
    for (ShiftClause c : {ShiftClause::ByMultiplicity, ShiftClause::ByTwiceMultiplicity,
                          ShiftClause::Unshifted}) {
      skip(std::string(to_string(c)));
    }
    return out;
  }

  {
    std::vector<Element> expected{n1};
    for (std::size_t j = 1; j < gens.size(); ++j) expected.push_back(gens[j] - n1);
    record("blowup_generators_are_shifted", B.minimal_generators() == expected,
           "blowup generators " + B.to_string());
  }

  const auto violations = check_shift_equivalences(S);
  for (ShiftClause c :
       {ShiftClause::ByMultiplicity, ShiftClause::ByTwiceMultiplicity, ShiftClause::Unshifted}) {
    const auto it = std::find_if(violations.begin(), violations.end(),
                                 [c](const ShiftViolation& v) { return v.clause == c; });
    record(std::string(to_string(c)), it == violations.end(),
           it == violations.end() ? std::string() : "fails at s=" + std::to_string(it->s));
  }
  return out;
}

}  // namespace arfbetti
