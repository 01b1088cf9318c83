#pragma once

// The graph text grammar and the JSON report layer.
//
// Grammar (layout-insensitive; tokens are words, integers, '[', ']', ',', '='):
//
//   graph := decl+
//   decl  := "chain" wlist | "cycle" wlist | "star" INT arms | "fork" wlist
//          | "vertex" ID "w=" INT ("g=" INT)? | "edge" ID ID
//   arms  := "[" wlist ("," wlist)* "]"
//   wlist := "[" INT ("," INT)* "]"
//
// chain/cycle/fork/star declarations create vertices v0, v1, ... with a
// counter shared across the whole source; vertex/edge declarations mix in
// freely. "fork [n1,...,ns]" is the forked chain [n1,...,ns;[2]^4] (two
// weight-2 tips at each end of the spine); "star n [[a,...],...]" attaches
// each arm at its first-listed vertex.

#include "resgraph/classify.hpp"
#include "resgraph/del_pezzo.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/hj.hpp"
#include "resgraph/invariants.hpp"
#include "resgraph/lefschetz.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace resgraph {

using Json = nlohmann::ordered_json;

// Throws ParseError (with line/column) for syntax errors and locally
// checkable semantics (reserved or duplicate ids, weight floors, unknown
// edge endpoints); structural failures such as a disconnected result
// surface as GraphError from the DualGraph constructor.
DualGraph parse_graph(const std::string& text);

// vertex/edge declaration form; parse_graph(print_graph(g)) == g.
std::string print_graph(const DualGraph& g);

// Wire formats: rationals are "p/q" strings in lowest terms with the sign
// on the numerator ("p" when integral); integers are JSON numbers while
// they fit 64 bits and decimal strings beyond.
std::string json_rational(const Rational& v);
Json json_int(const Int& v);

// Envelope fields shared by every report: schema_version, tool, command.
Json report_envelope(const std::string& command);

Json invariants_report(const DualGraph& g, const std::string& source);
Json classify_report(const DualGraph& g, const std::string& source);
Json hj_report(const CyclicType& t);
Json table_report(const TableVerification& tv);
Json t_sweep_report(const TSweep& s);
Json classification_sweep_report(const SweepSummary& s);
Json lefschetz_report(int order, const std::vector<TwoPointSolution>& solutions);

// Plain-text rendering of a report document: nested "key: value" lines.
std::string render_text(const Json& j);

} // namespace resgraph
