#pragma once

// JSON and plain-text renderings of analysis results. Vertex sets are lists
// of 0-based indices; component indices in the output are 1-based (t, r,
// alpha), matching the usual Q_1..Q_s numbering.

#include <string>

#include <nlohmann/json.hpp>

#include "mstep/classify.hpp"
#include "mstep/oracle.hpp"
#include "mstep/structure.hpp"

namespace mstep {

nlohmann::json to_json(const VertexSet& s);
/// Adjacency matrix as a list of '0'/'1' row strings.
nlohmann::json to_json(const UndirectedGraph& g);
nlohmann::json to_json(const StructureReport& report);
/// kind, period, case_tag, N, graphs (matrix text per residue) and the rest.
nlohmann::json to_json(const Verdict& verdict);
/// preperiod, period and the cycle matrices in order.
nlohmann::json to_json(const SequenceReport& report);

/// "{0, 3, 5}"
std::string format_set(const VertexSet& s);
std::string describe(const StructureReport& report);
/// First line reads "CONVERGES case=<tag>" or "DIVERGES period=<p> case=<tag>".
std::string describe(const Verdict& verdict);
std::string describe(const SequenceReport& report);

}  // namespace mstep
