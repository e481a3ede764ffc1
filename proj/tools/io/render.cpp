#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace arfbetti::io {

namespace {

Json cell_json(const CellComparison& c, Element n1) {
  return Json{{"i", c.i},
              {"s", c.s},
              {"blowup_dim", c.blowup_dim},
              {"semigroup_degree", c.s + (c.i + 1) * n1},
              {"semigroup_dim", c.semigroup_dim}};
}

Json kinds_json(const std::array<std::size_t, 4>& by_kind) {
  Json out = Json::object();
  for (std::size_t k = 0; k < by_kind.size(); ++k) {
    out[std::string(to_string(static_cast<UnmatchedKind>(k)))] = by_kind[k];
  }
  return out;
}

std::string list(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(xs[j]);
  }
  return out;
}

std::string angled(const NumericalSemigroup& S) { return "<" + S.to_string() + ">"; }

}  // namespace

Json semigroup_json(const NumericalSemigroup& S) {
  return Json{{"generators", S.minimal_generators()},
              {"conductor", S.conductor()},
              {"gaps", S.gaps()}};
}

Json info_json(const NumericalSemigroup& S) {
  Json out{{"schema_version", kSchemaVersion}};
  out.update(semigroup_json(S));
  out["multiplicity"] = S.multiplicity();
  out["embedding_dimension"] = S.embedding_dimension();
  out["frobenius"] = S.frobenius();
  out["genus"] = S.genus();
  out["residue_minima"] = S.min_elements_mod_multiplicity();
  const bool arf = is_arf(S);
  out["arf"] = arf;
  out["multiplicity_sequence"] = arf ? Json(multiplicity_sequence(S).entries) : Json(nullptr);
  return out;
}

std::string info_text(const NumericalSemigroup& S) {
  std::ostringstream os;
  os << "generators:          " << S.to_string() << '\n'
     << "multiplicity:        " << S.multiplicity() << '\n'
     << "embedding dimension: " << S.embedding_dimension() << '\n'
     << "conductor:           " << S.conductor() << '\n'
     << "frobenius:           " << S.frobenius() << '\n'
     << "genus:               " << S.genus() << '\n'
     << "gaps:                " << list(S.gaps()) << '\n'
     << "residue minima:      " << list(S.min_elements_mod_multiplicity()) << '\n';
  if (is_arf(S)) {
    os << "arf:                 yes\n"
       << "multiplicities:      " << list(multiplicity_sequence(S).entries) << '\n';
  } else {
    os << "arf:                 no\n";
  }
  return os.str();
}

Json arf_check_json(const NumericalSemigroup& S) {
  Json out{{"schema_version", kSchemaVersion}, {"generators", S.minimal_generators()}};
  const auto v = find_arf_violation(S);
  out["arf"] = !v.has_value();
  out["witness"] =
      v ? Json{{"s", v->s}, {"t", v->t}, {"u", v->u}, {"value", v->value()}} : Json(nullptr);
  return out;
}

std::string arf_check_text(const NumericalSemigroup& S) {
  const auto v = find_arf_violation(S);
  if (!v) return "Arf\n";
  std::ostringstream os;
  os << "not Arf: witness s=" << v->s << " t=" << v->t << " u=" << v->u << " (" << v->value()
     << " ∉ S)\n";
  return os.str();
}

Json arf_closure_json(const NumericalSemigroup& S, const NumericalSemigroup& closure) {
  return Json{{"schema_version", kSchemaVersion},
              {"generators", S.minimal_generators()},
              {"closure", semigroup_json(closure)},
              {"already_arf", S == closure}};
}

std::string arf_closure_text(const NumericalSemigroup& S, const NumericalSemigroup& closure) {
  return "Arf closure of " + angled(S) + ": " + angled(closure) + '\n';
}

Json blowup_json(const NumericalSemigroup& S, const NumericalSemigroup& B) {
  return Json{{"schema_version", kSchemaVersion},
              {"generators", S.minimal_generators()},
              {"blowup", semigroup_json(B)},
              {"same_multiplicity", B.multiplicity() == S.multiplicity()}};
}

std::string blowup_text(const NumericalSemigroup& S, const NumericalSemigroup& B) {
  const bool same = B.multiplicity() == S.multiplicity();
  return "blowup of " + angled(S) + ": " + angled(B) +
         (same ? " (multiplicity kept)\n" : " (multiplicity drops)\n");
}

Json complex_json(const NumericalSemigroup& S, Element s, const SimplicialComplex& C) {
  Json faces = Json::array();
  for (int d = -1; d <= C.top_dimension(); ++d) {
    for (FaceMask f : C.faces_of_dim(d)) faces.push_back(face_vertices(f));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"generators", S.minimal_generators()},
              {"s", s},
              {"faces", std::move(faces)}};
}

std::string complex_text(const NumericalSemigroup& S, Element s, const SimplicialComplex& C) {
  std::ostringstream os;
  os << "divisor complex of " << angled(S) << " at s=" << s << ": " << C.face_count()
     << " faces\n";
  for (int d = -1; d <= C.top_dimension(); ++d) {
    for (FaceMask f : C.faces_of_dim(d)) {
      os << '{';
      const auto vs = face_vertices(f);
      for (std::size_t j = 0; j < vs.size(); ++j) os << (j ? "," : "") << vs[j];
      os << "}\n";
    }
  }
  return os.str();
}

Json betti_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [cell, dim] : table.entries) {
    entries.push_back(Json{{"i", cell.first}, {"s", cell.second}, {"dim", dim}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"generators", table.generators},
              {"field", table.field.name()},
              {"degree_bound", table.degree_bound},
              {"betti", std::move(entries)}};
}

std::string betti_text(const BettiTable& table) {
  std::set<Element> degrees;
  int top = -1;
  for (const auto& [cell, dim] : table.entries) {
    degrees.insert(cell.second);
    top = std::max(top, cell.first);
  }
  std::size_t width = 1;
  for (Element s : degrees) width = std::max(width, std::to_string(s).size());
  for (const auto& [cell, dim] : table.entries) {
    width = std::max(width, std::to_string(dim).size());
  }
  std::ostringstream os;
  os << "Betti numbers of <";
  for (std::size_t j = 0; j < table.generators.size(); ++j) {
    os << (j ? "," : "") << table.generators[j];
  }
  os << "> over " << table.field.name() << '\n';
  os << std::setw(6) << "s";
  for (Element s : degrees) os << ' ' << std::setw(static_cast<int>(width)) << s;
  os << '\n';
  for (int i = 0; i <= top; ++i) {
    os << std::setw(6) << ("i=" + std::to_string(i));
    for (Element s : degrees) {
      const std::size_t dim = table.at(i, s);
      os << ' ' << std::setw(static_cast<int>(width)) << (dim ? std::to_string(dim) : ".");
    }
    os << '\n';
  }
  return os.str();
}

Json verify_json(const TheoremReport& report, const std::vector<PropositionResult>& propositions,
                 const FaceSummary& faces) {
  const Element n1 = report.semigroup.multiplicity();
  Json checked = Json::array();
  for (const auto& c : report.checked) checked.push_back(cell_json(c, n1));
  Json mismatches = Json::array();
  for (const auto& c : report.mismatches) mismatches.push_back(cell_json(c, n1));
  Json props = Json::array();
  for (const auto& p : propositions) {
    props.push_back(Json{{"name", p.name},
                         {"status", std::string(to_string(p.status))},
                         {"witness", p.witness}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"semigroup", semigroup_json(report.semigroup)},
              {"blowup", semigroup_json(report.blowup)},
              {"field", report.field.name()},
              {"verdict", report.passed() ? "pass" : "fail"},
              {"checked", std::move(checked)},
              {"mismatches", std::move(mismatches)},
              {"i0_note",
               Json{{"excluded", report.initial_row.excluded},
                    {"blowup_beta_00", report.initial_row.blowup_beta_00},
                    {"semigroup_degree", report.initial_row.shifted_degree},
                    {"semigroup_beta", report.initial_row.semigroup_beta}}},
              {"propositions", std::move(props)},
              {"unmatched_faces",
               Json{{"classified_cells", faces.classified_cells},
                    {"by_kind", kinds_json(faces.by_kind)}}}};
}

std::string verify_text(const TheoremReport& report,
                        const std::vector<PropositionResult>& propositions,
                        const FaceSummary& faces) {
  const Element n1 = report.semigroup.multiplicity();
  std::ostringstream os;
  os << "semigroup " << angled(report.semigroup) << ", blowup " << angled(report.blowup)
     << ", field " << report.field.name() << '\n';
  for (const auto& c : report.checked) {
    os << "  i=" << c.i << " s=" << c.s << ": " << c.blowup_dim << " vs "
       << c.semigroup_dim << " at " << c.s + (c.i + 1) * n1
       << (c.blowup_dim == c.semigroup_dim ? "" : "  MISMATCH") << '\n';
  }
  os << "i=0 row excluded: beta_0,0 of blowup = " << report.initial_row.blowup_beta_00
     << ", beta_0," << report.initial_row.shifted_degree
     << " of semigroup = " << report.initial_row.semigroup_beta << '\n';
  for (const auto& p : propositions) {
    os << "  " << p.name << ": " << to_string(p.status);
    if (!p.witness.empty()) os << " (" << p.witness << ')';
    os << '\n';
  }
  os << "unmatched faces over " << faces.classified_cells << " cells:";
  for (std::size_t k = 0; k < faces.by_kind.size(); ++k) {
    os << ' ' << to_string(static_cast<UnmatchedKind>(k)) << '=' << faces.by_kind[k];
  }
  os << '\n';
  const bool props_ok = std::none_of(propositions.begin(), propositions.end(), [](const auto& p) {
    return p.status == PropositionStatus::Fail;
  });
  os << "verdict: " << (report.passed() && props_ok ? "pass" : "fail") << '\n';
  return os.str();
}

Json sweep_json(const SweepReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    const Element n1 = f.generators.front();
    Json cells = Json::array();
    for (const auto& c : f.mismatches) cells.push_back(cell_json(c, n1));
    failures.push_back(Json{{"generators", f.generators}, {"mismatches", std::move(cells)}});
  }
  Json prop_failures = Json::array();
  for (const auto& f : report.proposition_failures) {
    prop_failures.push_back(Json{
        {"generators", f.generators}, {"proposition", f.proposition}, {"witness", f.witness}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"bound", report.bound},
              {"field", report.field.name()},
              {"total", report.total},
              {"eligible", report.eligible},
              {"passes", report.passes},
              {"failures", std::move(failures)},
              {"proposition_failures", std::move(prop_failures)},
              {"compared_cells", report.compared_cells},
              {"classified_cells", report.classified_cells},
              {"unmatched_faces", kinds_json(report.unmatched_by_kind)},
              {"i0_excluded", report.i0_excluded}};
}

std::string sweep_text(const SweepReport& report) {
  std::ostringstream os;
  os << "conductor bound " << report.bound << ", field " << report.field.name() << '\n'
     << "Arf semigroups:          " << report.total << '\n'
     << "same-multiplicity:       " << report.eligible << '\n'
     << "theorem passes:          " << report.passes << '\n'
     << "theorem failures:        " << report.failures.size() << '\n'
     << "proposition failures:    " << report.proposition_failures.size() << '\n'
     << "compared cells:          " << report.compared_cells << '\n'
     << "classified (i,s) cells:  " << report.classified_cells << '\n';
  for (std::size_t k = 0; k < report.unmatched_by_kind.size(); ++k) {
    os << "  " << std::left << std::setw(23)
       << (std::string(to_string(static_cast<UnmatchedKind>(k))) + ":") << report.unmatched_by_kind[k]
       << '\n';
  }
  os << "i=0 row excluded\n";
  for (const auto& f : report.failures) os << "FAIL <" << list(f.generators) << ">\n";
  for (const auto& f : report.proposition_failures) {
    os << "FAIL <" << list(f.generators) << "> " << f.proposition << ": " << f.witness << '\n';
  }
  os << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

Json enumerate_json(Element bound, const std::vector<NumericalSemigroup>& corpus) {
  Json list = Json::array();
  for (const auto& S : corpus) list.push_back(semigroup_json(S));
  return Json{{"schema_version", kSchemaVersion},
              {"bound", bound},
              {"count", corpus.size()},
              {"semigroups", std::move(list)}};
}

std::string enumerate_text(const std::vector<NumericalSemigroup>& corpus) {
  std::string out;
  for (const auto& S : corpus) out += S.to_string() + '\n';
  return out;
}

std::string dump(const Json& value) { return value.dump() + '\n'; }

}  // namespace arfbetti::io
