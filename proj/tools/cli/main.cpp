#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "arfbetti/arf.hpp"
#include "arfbetti/betti.hpp"
#include "arfbetti/divisor_complex.hpp"
#include "arfbetti/error.hpp"
#include "arfbetti/semigroup.hpp"
#include "arfbetti/verify.hpp"
#include "render.hpp"

namespace {

using namespace arfbetti;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string generators;
  std::string field = "q";
  Element bound = 0;
  Element degree = 0;
  bool json = false;
  std::optional<Element> degree_override;
  unsigned jobs = 1;
  bool skip_faces = false;
};

NumericalSemigroup parse_semigroup(const std::string& text) {
  const auto gens = parse_generators(text);
  return NumericalSemigroup::from_generators(gens);
}

void emit(const CliConfig& cfg, const io::Json& json, const std::string& text) {
  std::cout << (cfg.json ? io::dump(json) : text);
}

io::FaceSummary classify_faces(const NumericalSemigroup& S, const NumericalSemigroup& B) {
  io::FaceSummary summary;
  const Element last = betti_degree_bound(S);
  for (Element s = 0; s <= last; ++s) {
    if (!B.contains(s)) continue;
    for (const auto& row : classify_all_rows(S, B, s)) {
      if (!row.unclassified.empty()) {
        // Re-run the single row through the checked entry point for its message.
        classify_unmatched_faces(S, row.i, s);
      }
      ++summary.classified_cells;
      for (std::size_t k = 0; k < 4; ++k) summary.by_kind[k] += row.faces[k].size();
    }
  }
  return summary;
}

int run_verify(const CliConfig& cfg) {
  const NumericalSemigroup S = parse_semigroup(cfg.generators);
  const FieldSpec field = FieldSpec::parse(cfg.field);
  const TheoremReport report = check_theorem(S, field);
  const auto propositions = check_propositions(S);
  const io::FaceSummary faces = classify_faces(S, report.blowup);
  emit(cfg, io::verify_json(report, propositions, faces),
       io::verify_text(report, propositions, faces));
  const bool props_ok = std::none_of(propositions.begin(), propositions.end(), [](const auto& p) {
    return p.status == PropositionStatus::Fail;
  });
  return report.passed() && props_ok ? kExitOk : kExitFailure;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::ClassificationGap ? kExitFailure : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Betti numbers of numerical semigroup rings and the Arf blowup shift"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "Emit JSON"); };
  auto add_generators = [&](CLI::App* sub) {
    sub->add_option("generators", cfg.generators, "Comma-separated generators, e.g. 3,7,8")
        ->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Coefficient field: q or gf:p")
        ->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Invariants of a semigroup");
  add_generators(info);
  add_json(info);

  auto* arf_check = app.add_subcommand("arf-check", "Test the Arf property");
  add_generators(arf_check);
  add_json(arf_check);

  auto* arf_closure_cmd = app.add_subcommand("arf-closure", "Smallest Arf semigroup containing S");
  add_generators(arf_closure_cmd);
  add_json(arf_closure_cmd);

  auto* blowup_cmd = app.add_subcommand("blowup", "Blowup of a semigroup");
  add_generators(blowup_cmd);
  add_json(blowup_cmd);

  auto* complex_cmd = app.add_subcommand("complex", "Squarefree divisor complex at degree s");
  add_generators(complex_cmd);
  complex_cmd->add_option("s", cfg.degree, "Degree")->required();
  add_json(complex_cmd);

  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti numbers");
  add_generators(betti_cmd);
  add_field(betti_cmd);
  betti_cmd->add_option("--degree-bound", cfg.degree_override,
                        "Scan degrees up to this value if it exceeds the computed bound");
  add_json(betti_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check the blowup shift of Betti numbers");
  add_generators(verify_cmd);
  add_field(verify_cmd);
  add_json(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every Arf semigroup up to a conductor");
  sweep_cmd->add_option("--bound", cfg.bound, "Conductor bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_field(sweep_cmd);
  sweep_cmd->add_option("--jobs", cfg.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--skip-faces", cfg.skip_faces, "Skip the unmatched face classification");
  add_json(sweep_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List Arf semigroups up to a conductor");
  enumerate_cmd->add_option("--bound", cfg.bound, "Conductor bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_json(enumerate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (info->parsed()) {
      const auto S = parse_semigroup(cfg.generators);
      emit(cfg, io::info_json(S), io::info_text(S));
    } else if (arf_check->parsed()) {
      const auto S = parse_semigroup(cfg.generators);
      emit(cfg, io::arf_check_json(S), io::arf_check_text(S));
    } else if (arf_closure_cmd->parsed()) {
      const auto S = parse_semigroup(cfg.generators);
      const auto C = arf_closure(S);
      emit(cfg, io::arf_closure_json(S, C), io::arf_closure_text(S, C));
    } else if (blowup_cmd->parsed()) {
      const auto S = parse_semigroup(cfg.generators);
      const auto B = blowup(S);
      emit(cfg, io::blowup_json(S, B), io::blowup_text(S, B));
    } else if (complex_cmd->parsed()) {
      const auto S = parse_semigroup(cfg.generators);
      const auto C = squarefree_divisor_complex(S, cfg.degree);
      emit(cfg, io::complex_json(S, cfg.degree, C), io::complex_text(S, cfg.degree, C));
    } else if (betti_cmd->parsed()) {
      const auto S = parse_semigroup(cfg.generators);
      BettiOptions options;
      options.field = FieldSpec::parse(cfg.field);
      options.degree_override = cfg.degree_override;
      const auto table = graded_betti(S, options);
      emit(cfg, io::betti_json(table), io::betti_text(table));
    } else if (verify_cmd->parsed()) {
      return run_verify(cfg);
    } else if (sweep_cmd->parsed()) {
      SweepOptions options;
      options.bound = cfg.bound;
      options.field = FieldSpec::parse(cfg.field);
      options.jobs = cfg.jobs;
      options.classify_faces = !cfg.skip_faces;
      const auto report = sweep(options);
      emit(cfg, io::sweep_json(report), io::sweep_text(report));
      return report.passed() ? kExitOk : kExitFailure;
    } else if (enumerate_cmd->parsed()) {
      const auto corpus = enumerate_arf(cfg.bound);
      emit(cfg, io::enumerate_json(cfg.bound, corpus), io::enumerate_text(corpus));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}
