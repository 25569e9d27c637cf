#include "numset/json_io.hpp"

#include "numset/young.hpp"

namespace numset::json_io {

using nlohmann::json;

json scalars_json(const SetScalars& sc) {
  json j = {{"frobenius", sc.frobenius},
            {"genus", sc.genus},
            {"multiplicity", sc.multiplicity}};
  if (sc.base) j["base"] = *sc.base;
  return j;
}

json analyze_json(const NumericalSet& s) {
  bool closed = is_semigroup(s);
  NumericalSet assoc = associated_semigroup(s);
  AtomProfile profile = atom_profile(s);
  YoungDiagram d = diagram_of(s);
  json j = {{"set", format_set(s)},
            {"gaps", s.gaps()},
            {"scalars", scalars_json(scalars(s))},
            {"is_semigroup", closed},
            {"associated", format_set(assoc)},
            {"atom_profile",
             {{"small_elements", profile.small_element_count},
              {"small_atoms", profile.small_atom_count},
              {"shape", atom_shape_name(profile.shape)}}},
            {"rows", d.rows()},
            {"c1", c1(d)}};
  if (closed) j["atoms"] = atoms(s);
  if (s.is_nat()) {
    j["complement"] = nullptr;
  } else {
    ComplementReport report = complement_report(s);
    j["complement"] = format_set(report.comp);
    j["delta_genus"] = report.delta_genus;
    j["base_bound_tight"] = report.base_bound_tight;
  }
  return j;
}

json report_json(const ComplementReport& r) {
  return {{"original", format_set(r.original)},
          {"complement", format_set(r.comp)},
          {"original_scalars", scalars_json(r.original_scalars)},
          {"complement_scalars", scalars_json(r.comp_scalars)},
          {"delta_genus", r.delta_genus},
          {"base_bound_tight", r.base_bound_tight}};
}

json verify_json(const sweeps::VerifyReport& r) {
  return {{"statement", r.statement},
          {"domain_bound", r.domain_bound},
          {"instances_checked", r.instances_checked},
          {"counterexamples", r.counterexamples}};
}

json census_json(const enumerate::SweepResult& r) {
  json by_l = json::object();
  for (auto [l, v] : r.one_element_by_l) by_l[std::to_string(l)] = v;
  json by_m = json::object();
  for (auto [m, v] : r.one_atom_by_m) by_m[std::to_string(m)] = v;
  return {{"frobenius", r.frobenius},
          {"total_sets", r.total_sets},
          {"no_small", r.no_small},
          {"one_element_by_l", by_l},
          {"one_atom_by_m", by_m},
          {"other", r.other}};
}

}  // namespace numset::json_io
