#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cfreduce/graph.hpp"

namespace cfreduce::slocal {

/// Persistent record a vertex writes when it is processed.
using NodeState = std::int64_t;

struct Schedule {
    const Graph* graph = nullptr;
    std::vector<std::size_t> order; // permutation of the vertices
    std::size_t radius = 1;

    /// Throws InvalidParameter unless order is a bijection on the vertices.
    Schedule(const Graph& g, std::vector<std::size_t> order, std::size_t radius);
};

/// What a vertex sees when processed: the subgraph induced by its r-ball and
/// the states of the already processed vertices in it. Local index 0 is the
/// processed vertex; the rest follow in BFS order (ties by global id).
struct View {
    std::vector<std::size_t> global_ids;
    std::vector<std::size_t> distance;
    Graph topology;
    std::vector<std::optional<NodeState>> states;

    std::size_t size() const { return global_ids.size(); }
};

using Rule = std::function<NodeState(const View&)>;

/// Builds the radius-r view of `center` given the states written so far.
View make_view(const Graph& g, std::size_t center, std::size_t radius,
               const std::vector<std::optional<NodeState>>& states);

/// Processes vertices in schedule order; each rule call sees only its view.
/// Returns the state written by each vertex, indexed by vertex.
std::vector<NodeState> run(const Schedule& schedule, const Rule& rule);

/// Locality-1 MIS: join (1) unless an already processed neighbor joined.
NodeState mis_rule(const View& view);

/// Radius-0 rule that writes `value` everywhere.
Rule constant_rule(NodeState value);

/// Members of the MIS produced by running mis_rule under `order`.
std::vector<std::size_t> run_mis(const Graph& g, std::vector<std::size_t> order);

std::vector<std::size_t> identity_order(std::size_t n);
std::vector<std::size_t> random_order(std::size_t n, std::uint64_t seed);

} // namespace cfreduce::slocal
