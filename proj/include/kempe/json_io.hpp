#pragma once

#include <json.hpp>

#include "kempe/analyzer.hpp"
#include "kempe/coloring.hpp"
#include "kempe/corpus.hpp"
#include "kempe/solver.hpp"

namespace kempe {

using Json = nlohmann::ordered_json;

// Every *_from_json throws FormatError on a missing field, a wrong type or an
// out-of-range value.

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json move_to_json(const KempeMove& m);
KempeMove move_from_json(const Json& j);

// {"start": colouring, "moves": [{"anchor", "a", "b"}]}
Json sequence_to_json(const KempeSequence& s);
KempeSequence sequence_from_json(const Json& j);

// {"cases": [...], "moves": count, "subproblems": [{"kind", "vertices"}]}
Json trace_to_json(const SolveTrace& t, std::size_t moves);
SolveTrace trace_from_json(const Json& j);

// {"graph6", "n", "colorings", "classes", "sizes", "verdict"} plus "kind" and,
// for skipped graphs, "error".
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json summary_to_json(const VerifySummary& s);
VerifySummary summary_from_json(const Json& j);

Json class_report_to_json(const ClassReport& r);
ClassReport class_report_from_json(const Json& j);

Json structure_to_json(const StructureReport& r);
StructureReport structure_from_json(const Json& j);

// Parses one JSON document, mapping parser errors to FormatError.
Json parse_json(std::string_view text);

}  // namespace kempe
