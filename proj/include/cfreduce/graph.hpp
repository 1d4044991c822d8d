#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cfreduce {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph on vertices 0..n-1. Keeps both a bit row per
// vertex (O(1) adjacency tests, set algebra for the exact solver) and sorted
// neighbor lists for iteration.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Self-loops are rejected, duplicate edges collapse to one.
    Graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

    /// Builds from per-vertex neighbor lists; the lists must be symmetric.
    static Graph from_adjacency(std::vector<std::vector<std::uint32_t>> adjacency);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& row(std::size_t v) const { return rows_[v]; }
    const std::vector<std::uint32_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;

    /// The graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const std::size_t> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  private:
    std::vector<Bitset> rows_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::size_t num_edges_ = 0;
};

} // namespace cfreduce
