#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cfreduce/core.hpp"
#include "cfreduce/graph.hpp"

namespace cfreduce {

/// A vertex of the conflict graph: edge e, a member v of e, and a color c.
struct Triple {
    EdgeIndex edge = 0;
    VertexId vertex = 0;
    Color color = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Subset of the three edge families that justify a conflict-graph edge.
class FamilySet {
  public:
    static constexpr std::uint8_t kVertex = 1;
    static constexpr std::uint8_t kEdge = 2;
    static constexpr std::uint8_t kColor = 4;

    constexpr FamilySet() = default;
    constexpr explicit FamilySet(std::uint8_t bits) : bits_(bits) {}

    constexpr bool vertex() const { return bits_ & kVertex; }
    constexpr bool edge() const { return bits_ & kEdge; }
    constexpr bool color() const { return bits_ & kColor; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr bool operator==(FamilySet, FamilySet) = default;

  private:
    std::uint8_t bits_ = 0;
};

/// Family predicates for two distinct triples of the same hypergraph:
///   VERTEX  same hypergraph vertex, different colors
///   EDGE    same hyperedge
///   COLOR   same color, different vertices, both vertices in one of the two edges
FamilySet families_of(const Hypergraph& h, const Triple& a, const Triple& b);

class ConflictGraph {
  public:
    ConflictGraph() = default;

    const Hypergraph& source() const { return source_; }
    Color palette_size() const { return k_; }
    std::size_t num_vertices() const { return triples_.size(); }
    std::size_t num_edges() const { return graph_.num_edges(); }

    const Triple& triple(std::size_t index) const { return triples_.at(index); }
    const std::vector<Triple>& triples() const { return triples_; }
    const Graph& graph() const { return graph_; }

    /// Position of a triple, or nullopt if it is not a vertex of this graph.
    std::optional<std::size_t> index_of(const Triple& t) const;

    /// Tags stored on the edge {i, j}; empty when i and j are not adjacent.
    FamilySet tags(std::size_t i, std::size_t j) const;

    friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;

  private:
    friend ConflictGraph build_conflict_graph(const Hypergraph&, Color);
    friend ConflictGraph build_conflict_graph_serial(const Hypergraph&, Color);

    ConflictGraph(const Hypergraph& h, Color k);
    void finish(std::vector<std::vector<std::uint32_t>> adjacency,
                std::vector<std::vector<FamilySet>> tags);

    Hypergraph source_;
    Color k_ = 0;
    std::vector<Triple> triples_;
    std::vector<std::size_t> edge_offset_; // first triple index of each hyperedge
    Graph graph_;
    std::vector<std::vector<FamilySet>> tags_; // aligned with graph_.neighbors(i)
};

/// Builds G_k. Rows of the adjacency are computed in parallel; the result
/// does not depend on the thread count.
ConflictGraph build_conflict_graph(const Hypergraph& h, Color k);

/// Single-threaded pairwise reference for build_conflict_graph.
ConflictGraph build_conflict_graph_serial(const Hypergraph& h, Color k);

/// Families justifying the pair; throws InvalidPair when t1 == t2 or either
/// triple is not a vertex of g.
FamilySet classify_pair(const ConflictGraph& g, const Triple& t1, const Triple& t2);

/// Sorted vertex indices of some graph, checked pairwise non-adjacent.
class IndependentSet {
  public:
    IndependentSet() = default;

    /// Throws InvalidSet for out-of-range members, ContractViolation if two
    /// members are adjacent. Duplicates collapse.
    static IndependentSet checked(const Graph& g, std::vector<std::size_t> members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::size_t>& members() const { return members_; }
    bool contains(std::size_t v) const;

    friend bool operator==(const IndependentSet&, const IndependentSet&) = default;

  private:
    explicit IndependentSet(std::vector<std::size_t> members) : members_(std::move(members)) {}
    std::vector<std::size_t> members_;
};

/// One triple (e, v, f(v)) per happy edge e, v the smallest happy witness.
IndependentSet coloring_to_independent_set(const ConflictGraph& g, const PartialColoring& f);

/// f(v) = c if some (., v, c) is in s, uncolored otherwise.
PartialColoring independent_set_to_coloring(const ConflictGraph& g, const IndependentSet& s);

} // namespace cfreduce
