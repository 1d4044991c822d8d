#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfreduce/conflict_graph.hpp"
#include "cfreduce/core.hpp"
#include "cfreduce/solvers.hpp"

namespace cfreduce {

struct ReductionConfig {
    Color k = 1;
    double lambda = 1.0; // promised approximation factor of `solver`
    SolverContract solver;
    std::optional<std::uint32_t> max_phases; // overrides the computed phase count
    // Also drop edges already happy under the cumulative multicoloring.
    bool aggressive_removal = false;
};

/// ceil(lambda * ln m) + 1 for m >= 1, and 0 for m = 0.
std::uint32_t phase_count(std::size_t m, double lambda);

/// What one phase produced.
struct PhaseArtifacts {
    std::uint32_t phase = 0;
    std::vector<EdgeIndex> input_edges; // E_i, original edge indices
    ConflictGraph graph;                // built over E_i only
    IndependentSet independent_set;
    PartialColoring coloring;           // this phase's palette only
    std::vector<EdgeIndex> removed;     // happy under `coloring`, original indices
    double elapsed_ms = 0.0;
};

struct PhaseState {
    std::uint32_t phase = 1;
    std::vector<EdgeIndex> surviving; // E_phase, original edge indices, ascending
    std::optional<PhaseArtifacts> previous;

    static PhaseState initial(const Hypergraph& h);
};

/// One phase: build G_k over the surviving edges, solve MaxIS, color each
/// vertex named by the independent set, remove the edges that became happy.
/// Throws InvalidParameter when no edges survive.
PhaseState run_phase(const Hypergraph& h, const PhaseState& state, const ReductionConfig& cfg);

struct PhaseLogRecord {
    std::uint32_t phase = 0;
    std::size_t edges = 0;             // |E_i|
    std::size_t conflict_vertices = 0; // |V(G_k^i)|
    std::string solver;
    std::size_t independent_set = 0;   // |I^i|
    std::size_t edges_removed = 0;
    double elapsed_ms = 0.0;
};

struct ReductionResult {
    MulticolorAssignment assignment;
    std::vector<PhaseLogRecord> log;
    std::uint32_t rho = 0;
    bool promise_violated = false;
    std::vector<EdgeIndex> surviving; // non-empty only on promise violation
};

/// Runs up to phase_count(m, lambda) phases with a fresh palette each.
/// Surviving edges after the last phase are reported as a promise violation
/// rather than thrown.
ReductionResult conflict_free_multicolor(const Hypergraph& h, const ReductionConfig& cfg);

/// Every edge has a member holding a (phase, color) pair no other member holds.
bool verify_multicoloring(const Hypergraph& h, const MulticolorAssignment& a);

/// Same check for one edge.
bool is_edge_happy(std::span<const VertexId> edge, const MulticolorAssignment& a);

} // namespace cfreduce
