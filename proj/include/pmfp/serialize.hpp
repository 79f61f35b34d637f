#pragma once

#include <string>

#include "json.hpp"
#include "pmfp/axioms.hpp"
#include "pmfp/contraction.hpp"
#include "pmfp/sequences.hpp"
#include "pmfp/solver.hpp"

namespace pmfp {

using ordered_json = nlohmann::ordered_json;

// Shortest decimal form that parses back to the same double ("inf",
// "-inf", "nan" for non-finite values). Shared by the CSV renderer and
// anything that needs textual doubles, so JSON and CSV agree bit-for-bit.
std::string format_double(double v);

// A JSON number, or the strings "inf"/"-inf"/"nan" where JSON has no
// numeric representation.
ordered_json json_number(double v);

ordered_json to_json(const AxiomReport& report);
ordered_json to_json(const Certificate& cert);
ordered_json to_json(const AlphaEstimate& est);
ordered_json to_json(const SequenceVerdict& verdict);
ordered_json to_json(const SolveResult& result);  // result fields, no trace
ordered_json to_json(const OrbitTrace& trace);
ordered_json to_json(const XpResult& xp);
ordered_json to_json(const SetDistance& d);
ordered_json to_json(const RateFit& fit);

// Columns: n, x_n, p_step, ps_step, self_dist. One row per iterate; the
// final row leaves the step columns empty.
std::string to_csv(const OrbitTrace& trace);

}  // namespace pmfp
