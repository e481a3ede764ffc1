#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "arfbetti/arf.hpp"
#include "arfbetti/error.hpp"
#include "arfbetti/verify.hpp"
#include "tally.hpp"

namespace arfbetti {

namespace {

struct Outcome {
  bool eligible = false;
  bool passed = false;
  std::vector<CellComparison> mismatches;
  std::vector<PropositionResult> propositions;
  std::size_t compared_cells = 0;
  std::size_t classified_cells = 0;
  std::array<std::size_t, 4> unmatched_by_kind{};
  std::optional<Error> gap;
};

Outcome examine(const NumericalSemigroup& S, const SweepOptions& options) {
  Outcome out;
  out.propositions = check_propositions(S);
  out.eligible = same_multiplicity_blowup(S);
  if (!out.eligible) return out;

  const NumericalSemigroup B = blowup(S);
  const TheoremReport report =
      compare_shifted_tables(S, B, graded_betti(S, options.field), graded_betti(B, options.field));
  out.passed = report.passed();
  out.mismatches = report.mismatches;
  out.compared_cells = report.checked.size();

  if (!options.classify_faces) return out;
  // Past the Betti bound of S both sides are full simplices in every row.
  const Element last = betti_degree_bound(S);
  for (Element s = 0; s <= last; ++s) {
    if (!B.contains(s)) continue;
    for (const auto& row : detail::tally_all_rows(S, B, s)) {
      if (!row.unclassified.empty() && !out.gap) {
        out.gap = Error(ErrorCode::ClassificationGap,
                        "unclassified unmatched face for <" + S.to_string() +
                            "> at i=" + std::to_string(row.i) + " s=" + std::to_string(s));
      }
      ++out.classified_cells;
      for (std::size_t kind = 0; kind < 4; ++kind) {
        out.unmatched_by_kind[kind] += row.by_kind[kind];
      }
    }
  }
  return out;
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  if (options.bound < 0) throw Error(ErrorCode::InvalidEntry, "conductor bound must be >= 0");
  const std::vector<NumericalSemigroup> corpus = enumerate_arf(options.bound);
  std::vector<Outcome> outcomes(corpus.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t idx = next++; idx < corpus.size(); idx = next++) {
      try {
        outcomes[idx] = examine(corpus[idx], options);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = corpus.size();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport report;
  report.bound = options.bound;
  report.field = options.field;
  report.total = corpus.size();
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const Outcome& o = outcomes[idx];
    // First gap in enumeration order, independent of scheduling.
    if (o.gap) throw *o.gap;
    const auto& gens = corpus[idx].minimal_generators();
    for (const auto& p : o.propositions) {
      if (p.status == PropositionStatus::Fail) {
        report.proposition_failures.push_back({gens, p.name, p.witness});
      }
    }
    if (!o.eligible) continue;
    ++report.eligible;
    if (o.passed) {
      ++report.passes;
    } else {
      report.failures.push_back({gens, o.mismatches});
    }
    report.compared_cells += o.compared_cells;
    report.classified_cells += o.classified_cells;
    for (std::size_t kind = 0; kind < 4; ++kind) {
      report.unmatched_by_kind[kind] += o.unmatched_by_kind[kind];
    }
  }
  return report;
}

}  // namespace arfbetti
