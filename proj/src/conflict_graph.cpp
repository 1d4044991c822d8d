#include "cfreduce/conflict_graph.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "cfreduce/errors.hpp"

namespace cfreduce {

namespace {

bool edge_contains(const Hypergraph& h, EdgeIndex e, VertexId v) {
    const auto& members = h.edge(e);
    return std::find(members.begin(), members.end(), v) != members.end();
}

// Bit row per hyperedge over vertex ids, for O(1) membership in the hot loop.
class Membership {
  public:
    explicit Membership(const Hypergraph& h) : rows_(h.num_edges(), Bitset(h.num_vertices() + 1)) {
        for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
            for (VertexId v : h.edge(e)) rows_[e].set(v);
        }
    }

    bool contains(EdgeIndex e, VertexId v) const { return rows_[e].test(v); }

  private:
    std::vector<Bitset> rows_;
};

FamilySet classify_fast(const Membership& in, const Triple& a, const Triple& b) {
    std::uint8_t bits = 0;
    if (a.vertex == b.vertex && a.color != b.color) bits |= FamilySet::kVertex;
    if (a.edge == b.edge) bits |= FamilySet::kEdge;
    if (a.color == b.color && a.vertex != b.vertex) {
        // a.vertex is in a.edge and b.vertex in b.edge by construction
        if (in.contains(a.edge, b.vertex) || in.contains(b.edge, a.vertex)) bits |= FamilySet::kColor;
    }
    return FamilySet(bits);
}

void require_palette(Color k) {
    if (k == 0) throw Error(ErrorKind::InvalidParameter, "palette size k must be at least 1");
}

} // namespace

FamilySet families_of(const Hypergraph& h, const Triple& a, const Triple& b) {
    std::uint8_t bits = 0;
    if (a.vertex == b.vertex && a.color != b.color) bits |= FamilySet::kVertex;
    if (a.edge == b.edge) bits |= FamilySet::kEdge;
    if (a.color == b.color && a.vertex != b.vertex) {
        bool in_a = edge_contains(h, a.edge, a.vertex) && edge_contains(h, a.edge, b.vertex);
        bool in_b = edge_contains(h, b.edge, a.vertex) && edge_contains(h, b.edge, b.vertex);
        if (in_a || in_b) bits |= FamilySet::kColor;
    }
    return FamilySet(bits);
}

ConflictGraph::ConflictGraph(const Hypergraph& h, Color k) : source_(h), k_(k) {
    triples_.reserve(h.total_incidences() * k);
    edge_offset_.reserve(h.num_edges());
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        edge_offset_.push_back(triples_.size());
        for (VertexId v : h.edge(e)) {
            for (Color c = 1; c <= k; ++c) triples_.push_back({e, v, c});
        }
    }
}

void ConflictGraph::finish(std::vector<std::vector<std::uint32_t>> adjacency,
                           std::vector<std::vector<FamilySet>> tags) {
    graph_ = Graph::from_adjacency(std::move(adjacency));
    tags_ = std::move(tags);
}

std::optional<std::size_t> ConflictGraph::index_of(const Triple& t) const {
    if (t.edge >= source_.num_edges() || t.color < 1 || t.color > k_) return std::nullopt;
    const auto& members = source_.edge(t.edge);
    auto it = std::find(members.begin(), members.end(), t.vertex);
    if (it == members.end()) return std::nullopt;
    auto pos = static_cast<std::size_t>(it - members.begin());
    return edge_offset_[t.edge] + pos * k_ + (t.color - 1);
}

FamilySet ConflictGraph::tags(std::size_t i, std::size_t j) const {
    const auto& nb = graph_.neighbors(i);
    auto it = std::lower_bound(nb.begin(), nb.end(), static_cast<std::uint32_t>(j));
    if (it == nb.end() || *it != j) return FamilySet{};
    return tags_[i][static_cast<std::size_t>(it - nb.begin())];
}

ConflictGraph build_conflict_graph(const Hypergraph& h, Color k) {
    require_palette(k);
    ConflictGraph g(h, k);
    const Membership in(h);
    const auto n = static_cast<std::int64_t>(g.triples_.size());
    std::vector<std::vector<std::uint32_t>> adjacency(g.triples_.size());
    std::vector<std::vector<FamilySet>> tags(g.triples_.size());

    // Each row is owned by one iteration, so rows can be filled without locks.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        const Triple& a = g.triples_[i];
        for (std::int64_t j = 0; j < n; ++j) {
            if (i == j) continue;
            FamilySet fam = classify_fast(in, a, g.triples_[j]);
            if (!fam.empty()) {
                adjacency[i].push_back(static_cast<std::uint32_t>(j));
                tags[i].push_back(fam);
            }
        }
    }
    g.finish(std::move(adjacency), std::move(tags));
    return g;
}

ConflictGraph build_conflict_graph_serial(const Hypergraph& h, Color k) {
    require_palette(k);
    ConflictGraph g(h, k);
    const std::size_t n = g.triples_.size();
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    std::vector<std::vector<FamilySet>> tags(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            FamilySet fam = families_of(h, g.triples_[i], g.triples_[j]);
            if (fam.empty()) continue;
            adjacency[i].push_back(static_cast<std::uint32_t>(j));
            tags[i].push_back(fam);
            adjacency[j].push_back(static_cast<std::uint32_t>(i));
            tags[j].push_back(fam);
        }
    }
    // rows of j received their entries in ascending i, so every row is sorted
    g.finish(std::move(adjacency), std::move(tags));
    return g;
}

FamilySet classify_pair(const ConflictGraph& g, const Triple& t1, const Triple& t2) {
    if (t1 == t2) throw Error(ErrorKind::InvalidPair, "a triple cannot be paired with itself");
    if (!g.index_of(t1) || !g.index_of(t2)) {
        throw Error(ErrorKind::InvalidPair, "triple is not a vertex of the conflict graph");
    }
    return families_of(g.source(), t1, t2);
}

IndependentSet IndependentSet::checked(const Graph& g, std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto v : members) {
        if (v >= g.num_vertices()) {
            throw Error(ErrorKind::InvalidSet, "vertex " + std::to_string(v) + " not in graph");
        }
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (g.adjacent(members[a], members[b])) {
                throw Error(ErrorKind::ContractViolation,
                            "vertices " + std::to_string(members[a]) + " and " +
                                std::to_string(members[b]) + " are adjacent");
            }
        }
    }
    return IndependentSet(std::move(members));
}

bool IndependentSet::contains(std::size_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

IndependentSet coloring_to_independent_set(const ConflictGraph& g, const PartialColoring& f) {
    if (f.palette_size() != g.palette_size()) {
        throw Error(ErrorKind::InvalidParameter,
                    "coloring palette " + std::to_string(f.palette_size()) + " does not match k = " +
                        std::to_string(g.palette_size()));
    }
    const Hypergraph& h = g.source();
    check_coloring_matches(h, f);
    std::vector<std::size_t> members;
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        auto witness = happy_witness(h.edge(e), f);
        if (!witness) continue;
        members.push_back(*g.index_of({e, *witness, *f.color_of(*witness)}));
    }
    return IndependentSet::checked(g.graph(), std::move(members));
}

PartialColoring independent_set_to_coloring(const ConflictGraph& g, const IndependentSet& s) {
    // re-check: the set may have been verified against a different graph
    IndependentSet::checked(g.graph(), s.members());
    PartialColoring f(g.source().num_vertices(), g.palette_size());
    for (auto idx : s.members()) {
        const Triple& t = g.triple(idx);
        auto current = f.color_of(t.vertex);
        if (current && *current != t.color) {
            throw Error(ErrorKind::ContractViolation,
                        "vertex " + std::to_string(t.vertex) + " would receive two colors");
        }
        f.assign(t.vertex, t.color);
    }
    return f;
}

} // namespace cfreduce
