#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfreduce/conflict_graph.hpp"
#include "cfreduce/core.hpp"
#include "cfreduce/graph.hpp"
#include "cfreduce/reduction.hpp"
#include "cfreduce/solvers.hpp"

namespace cfreduce::io {

using Json = nlohmann::ordered_json;

// .hg: "n m" header, then m lines "s v1 ... vs" (1-indexed), '#' comment lines.
Hypergraph read_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& h);

// .col.json: {"k": int, "colors": {"<vertex>": int|null}}
Json coloring_to_json(const PartialColoring& f);
/// Vertices missing from "colors" are uncolored; keys outside [1, n] are
/// an InvalidColoring error.
PartialColoring coloring_from_json(const Json& j, std::size_t n);

// multicolor: {"k": int, "phases": int, "colors": {"<vertex>": [[phase, color], ...]}}
Json multicoloring_to_json(const MulticolorAssignment& a);
MulticolorAssignment multicoloring_from_json(const Json& j, std::size_t n);
bool is_multicoloring_json(const Json& j);

// DIMACS edge list: "p edge N M" then "e i j" (1-indexed); 'c' lines are comments.
std::string write_dimacs(const Graph& g, std::string_view comment = {});
Graph read_dimacs(std::string_view text);

/// Sidecar for a conflict-graph DIMACS file: triple index (1-based) to
/// {edge (0-based position in the .hg file), vertex, color}.
Json triple_map_to_json(const ConflictGraph& g);

Json independent_set_to_json(const std::string& solver, const IndependentSet& s);
Json report_to_json(const SolverReport& r, bool include_timing);
Json phase_record_to_json(const PhaseLogRecord& r, bool include_timing);

/// Reads a whole file; throws Error(Parse) if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Parses JSON; syntax errors become Error(Parse).
Json parse_json(std::string_view text);

/// Pretty-printed JSON followed by a newline.
std::string dump(const Json& j);

} // namespace cfreduce::io
