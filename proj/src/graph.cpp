#include "cfreduce/graph.hpp"

#include <algorithm>
#include <string>

#include "cfreduce/errors.hpp"

namespace cfreduce {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)), adj_(n) {}

Graph::Graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorKind::InvalidParameter,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside graph");
        }
        if (u == v) {
            throw Error(ErrorKind::InvalidParameter, "self-loop at " + std::to_string(u));
        }
        if (rows_[u].test(v)) continue;
        rows_[u].set(v);
        rows_[v].set(u);
        ++num_edges_;
    }
    for (std::size_t v = 0; v < n; ++v) {
        adj_[v].reserve(rows_[v].count());
        for (auto u = rows_[v].find_first(); u != Bitset::npos; u = rows_[v].find_next(u)) {
            adj_[v].push_back(static_cast<std::uint32_t>(u));
        }
    }
}

Graph Graph::from_adjacency(std::vector<std::vector<std::uint32_t>> adjacency) {
    const std::size_t n = adjacency.size();
    Graph g(n);
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (auto u : list) {
            if (u >= n || u == v) {
                throw Error(ErrorKind::InvalidParameter, "bad neighbor " + std::to_string(u) +
                                                             " of vertex " + std::to_string(v));
            }
            g.rows_[v].set(u);
        }
        degree_sum += adjacency[v].size();
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (auto u : adjacency[v]) {
            if (!g.rows_[u].test(v)) {
                throw Error(ErrorKind::InvalidParameter, "adjacency is not symmetric");
            }
        }
    }
    g.adj_ = std::move(adjacency);
    g.num_edges_ = degree_sum / 2;
    return g;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (auto v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
    if (perm.size() != num_vertices()) {
        throw Error(ErrorKind::InvalidParameter, "permutation size mismatch");
    }
    auto edges = edge_list();
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return Graph(num_vertices(), edges);
}

} // namespace cfreduce
