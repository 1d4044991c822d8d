#include "cfreduce/slocal.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "cfreduce/errors.hpp"

namespace cfreduce::slocal {

Schedule::Schedule(const Graph& g, std::vector<std::size_t> ord, std::size_t r)
    : graph(&g), order(std::move(ord)), radius(r) {
    if (order.size() != g.num_vertices()) {
        throw Error(ErrorKind::InvalidParameter, "order has " + std::to_string(order.size()) +
                                                     " entries, graph has " + std::to_string(g.num_vertices()));
    }
    std::vector<bool> seen(order.size(), false);
    for (auto v : order) {
        if (v >= order.size() || seen[v]) {
            throw Error(ErrorKind::InvalidParameter, "order is not a permutation of the vertices");
        }
        seen[v] = true;
    }
}

View make_view(const Graph& g, std::size_t center, std::size_t radius,
               const std::vector<std::optional<NodeState>>& states) {
    View view;
    constexpr std::size_t kOutside = SIZE_MAX;
    std::vector<std::size_t> local(g.num_vertices(), kOutside);
    std::vector<bool> reached(g.num_vertices(), false);
    local[center] = 0;
    reached[center] = true;
    view.global_ids.push_back(center);
    view.distance.push_back(0);

    // BFS layer by layer so that each layer can be sorted by global id
    std::vector<std::size_t> frontier{center};
    for (std::size_t d = 1; d <= radius && !frontier.empty(); ++d) {
        std::vector<std::size_t> next;
        for (auto u : frontier) {
            for (auto w : g.neighbors(u)) {
                if (!reached[w]) {
                    reached[w] = true;
                    next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (auto w : next) {
            local[w] = view.global_ids.size();
            view.global_ids.push_back(w);
            view.distance.push_back(d);
        }
        frontier = std::move(next);
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < view.global_ids.size(); ++a) {
        for (auto w : g.neighbors(view.global_ids[a])) {
            if (local[w] != kOutside && a < local[w]) {
                edges.emplace_back(a, local[w]);
            }
        }
    }
    view.topology = Graph(view.global_ids.size(), edges);

    view.states.reserve(view.global_ids.size());
    for (auto v : view.global_ids) view.states.push_back(states[v]);
    return view;
}

std::vector<NodeState> run(const Schedule& schedule, const Rule& rule) {
    const Graph& g = *schedule.graph;
    std::vector<std::optional<NodeState>> states(g.num_vertices());
    for (auto v : schedule.order) {
        View view = make_view(g, v, schedule.radius, states);
        states[v] = rule(view);
    }
    std::vector<NodeState> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(*s);
    return out;
}

NodeState mis_rule(const View& view) {
    for (auto w : view.topology.neighbors(0)) {
        if (view.states[w] == NodeState{1}) return 0;
    }
    return 1;
}

Rule constant_rule(NodeState value) {
    return [value](const View&) { return value; };
}

std::vector<std::size_t> run_mis(const Graph& g, std::vector<std::size_t> order) {
    Schedule schedule(g, std::move(order), 1);
    auto states = run(schedule, mis_rule);
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < states.size(); ++v) {
        if (states[v] == 1) members.push_back(v);
    }
    return members;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

std::vector<std::size_t> random_order(std::size_t n, std::uint64_t seed) {
    auto order = identity_order(n);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

} // namespace cfreduce::slocal
