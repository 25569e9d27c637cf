// JSON views of the analysis structures, for the CLI's --format json modes.
//
// Shapes are stable: tests and downstream scripts key on them.  The verify
// report carries exactly four keys (statement, domain_bound,
// instances_checked, counterexamples); timing stays out of the JSON so runs
// diff cleanly.

#pragma once

#include "json.hpp"

#include "numset/analysis.hpp"
#include "numset/enumerate.hpp"
#include "numset/numerical_set.hpp"
#include "numset/sweeps.hpp"

namespace numset::json_io {

// {"frobenius":..,"genus":..,"multiplicity":..[,"base":..]}; base is omitted
// when undefined.
nlohmann::json scalars_json(const SetScalars& sc);

// Everything `analyze` prints, as one object.
nlohmann::json analyze_json(const NumericalSet& s);

// original/complement element texts, both scalar blocks, delta_genus,
// base_bound_tight.
nlohmann::json report_json(const ComplementReport& r);

nlohmann::json verify_json(const sweeps::VerifyReport& r);

// census counts; the keyed maps become string-keyed objects
nlohmann::json census_json(const enumerate::SweepResult& r);

}  // namespace numset::json_io
