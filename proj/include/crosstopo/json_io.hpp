// JSON codecs for the input language and the result types. Rationals are
// serialized as "num/den" strings; primitives and verdicts are tagged by
// kind. Parsing reports the offending field path on malformed input, and
// serialization uses ordered objects so reports are byte-stable.

#pragma once

#include "crosstopo/crossmap.hpp"
#include "crosstopo/gammatop.hpp"
#include "crosstopo/lebesgue.hpp"
#include "crosstopo/raster.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace crosstopo {

using Json = nlohmann::ordered_json;

// -- scalars and geometry --

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& path);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j, const std::string& path);

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j, const std::string& path);

Json crossset_to_json(const CrossSet& cs);

// -- set descriptions and sequences --

Json formula_to_json(const CoordFormula& f);
CoordFormula formula_from_json(const Json& j, const std::string& path);

Json seqspec_to_json(const SeqSpec& s);
SeqSpec seqspec_from_json(const Json& j, const std::string& path);

Json setdesc_to_json(const SetDesc& s);
SetDesc setdesc_from_json(const Json& j, const std::string& path = "");

// -- grid functions and candidate sequences --

Json gridfn_to_json(const GridFn& f);
GridFn gridfn_from_json(const Json& j, const std::string& path = "");

Json candidates_to_json(const CandidateSeq& c);
CandidateSeq candidates_from_json(const Json& j, const std::string& path = "");

// -- result payloads --

Json discrete_result_to_json(const DiscreteResult& r);
Json coincidence_to_json(const Coincidence& c);
Json compact_result_to_json(const GammaCompactResult& r);
Json gamma_limit_to_json(const GammaLimitResult& r);
Json classify_to_json(const ClassifyResult& r);
Json refute_witness_to_json(const RefuteWitness& w, const WitnessReplay& replay);
Json convergence_report_to_json(const ConvergenceReport& r, int model_depth);
Json components_to_json(const GridMask& mask, const ComponentLabels& labels);

/// Report envelope: {"schema", "subcommand", "verdict", payload...}.
Json make_report(const std::string& subcommand, const std::string& verdict);

/// Required-field accessor with path diagnostics.
const Json& require_field(const Json& j, const std::string& key,
                          const std::string& path);

}  // namespace crosstopo
