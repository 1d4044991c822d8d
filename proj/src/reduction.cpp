#include "cfreduce/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <numeric>

#include "cfreduce/errors.hpp"

namespace cfreduce {

std::uint32_t phase_count(std::size_t m, double lambda) {
    if (!(lambda >= 1.0)) throw Error(ErrorKind::InvalidParameter, "lambda must be at least 1");
    if (m == 0) return 0;
    return static_cast<std::uint32_t>(std::ceil(lambda * std::log(static_cast<double>(m)))) + 1;
}

PhaseState PhaseState::initial(const Hypergraph& h) {
    PhaseState s;
    s.surviving.resize(h.num_edges());
    std::iota(s.surviving.begin(), s.surviving.end(), EdgeIndex{0});
    return s;
}

PhaseState run_phase(const Hypergraph& h, const PhaseState& state, const ReductionConfig& cfg) {
    if (state.surviving.empty()) {
        throw Error(ErrorKind::InvalidParameter, "phase " + std::to_string(state.phase) + " has no edges to serve");
    }
    auto start = std::chrono::steady_clock::now();

    PhaseArtifacts art;
    art.phase = state.phase;
    art.input_edges = state.surviving;

    const Hypergraph sub = h.restrict_to(state.surviving);
    art.graph = build_conflict_graph(sub, cfg.k);
    art.independent_set = cfg.solver.solve(art.graph.graph());
    if (!verify_independent(art.graph.graph(), art.independent_set.members())) {
        throw Error(ErrorKind::ContractViolation,
                    "solver " + cfg.solver.name + " returned a set that is not independent");
    }
    art.coloring = independent_set_to_coloring(art.graph, art.independent_set);

    for (EdgeIndex local : happy_edges(sub, art.coloring)) {
        art.removed.push_back(state.surviving[local]);
    }
    if (art.removed.size() < art.independent_set.size()) {
        throw Error(ErrorKind::ContractViolation, "fewer happy edges than independent-set members");
    }

    PhaseState next;
    next.phase = state.phase + 1;
    std::set_difference(state.surviving.begin(), state.surviving.end(), art.removed.begin(), art.removed.end(),
                        std::back_inserter(next.surviving));
    art.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    next.previous = std::move(art);
    return next;
}

bool is_edge_happy(std::span<const VertexId> edge, const MulticolorAssignment& a) {
    for (VertexId v : edge) {
        for (const PhaseColor& pc : a.held_by(v)) {
            bool unique = std::none_of(edge.begin(), edge.end(), [&](VertexId u) {
                return u != v && a.held_by(u).contains(pc);
            });
            if (unique) return true;
        }
    }
    return false;
}

bool verify_multicoloring(const Hypergraph& h, const MulticolorAssignment& a) {
    if (a.num_vertices() != h.num_vertices()) {
        throw Error(ErrorKind::InvalidAssignment,
                    "assignment covers " + std::to_string(a.num_vertices()) + " vertices, hypergraph has " +
                        std::to_string(h.num_vertices()));
    }
    for (VertexId v = 1; v <= a.num_vertices(); ++v) {
        for (const PhaseColor& pc : a.held_by(v)) {
            if (pc.phase < 1 || pc.phase > a.phases() || pc.color < 1 || pc.color > a.palette_size()) {
                throw Error(ErrorKind::InvalidAssignment, "vertex " + std::to_string(v) + " holds a color outside every phase palette");
            }
        }
    }
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](const auto& e) { return is_edge_happy(e, a); });
}

ReductionResult conflict_free_multicolor(const Hypergraph& h, const ReductionConfig& cfg) {
    if (cfg.k == 0) throw Error(ErrorKind::InvalidParameter, "palette size k must be at least 1");
    if (!cfg.solver.solve) throw Error(ErrorKind::InvalidParameter, "no solver configured");

    ReductionResult result;
    result.rho = cfg.max_phases ? *cfg.max_phases : phase_count(h.num_edges(), cfg.lambda);
    result.assignment = MulticolorAssignment(h.num_vertices(), cfg.k, 0);

    PhaseState state = PhaseState::initial(h);
    while (!state.surviving.empty() && state.phase <= result.rho) {
        const std::size_t edges_before = state.surviving.size();
        state = run_phase(h, state, cfg);
        const PhaseArtifacts& art = *state.previous;

        result.assignment.set_phases(art.phase);
        for (VertexId v = 1; v <= h.num_vertices(); ++v) {
            if (auto c = art.coloring.color_of(v)) result.assignment.add(v, {art.phase, *c});
        }

        std::size_t removed = art.removed.size();
        if (cfg.aggressive_removal) {
            std::vector<EdgeIndex> keep;
            for (EdgeIndex e : state.surviving) {
                if (!is_edge_happy(h.edge(e), result.assignment)) keep.push_back(e);
            }
            removed += state.surviving.size() - keep.size();
            state.surviving = std::move(keep);
        }

        result.log.push_back({art.phase, edges_before, art.graph.num_vertices(), cfg.solver.name,
                              art.independent_set.size(), removed, art.elapsed_ms});
    }

    if (!state.surviving.empty()) {
        result.promise_violated = true;
        result.surviving = state.surviving;
    }
    return result;
}

} // namespace cfreduce
