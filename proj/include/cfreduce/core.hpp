#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace cfreduce {

// Hypergraph vertices are 1-indexed throughout the public API, matching the
// on-disk formats. Edges are identified by their position in the edge list.
using VertexId = std::uint32_t;
using EdgeIndex = std::size_t;
using Color = std::uint32_t;

// Slack used whenever an edge size is compared against (1 + eps) * k.
inline constexpr double kRatioTolerance = 1e-9;

class Hypergraph {
  public:
    Hypergraph() = default;

    /// Validates ids against [1, n], rejects empty edges and repeated ids
    /// within an edge. Edge order and the vertex order inside each edge are kept.
    Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<VertexId>& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

    /// Sum of edge sizes.
    std::size_t total_incidences() const;

    /// Same vertex set, only the listed edges (in the listed order).
    Hypergraph restrict_to(std::span<const EdgeIndex> keep) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::vector<VertexId>> edges_;
};

/// f : V -> {1..k} or uncolored. Index 0 of the storage is vertex 1.
class PartialColoring {
  public:
    PartialColoring() = default;
    PartialColoring(std::size_t n, Color k);
    PartialColoring(Color k, std::vector<std::optional<Color>> colors);

    Color palette_size() const { return k_; }
    std::size_t num_vertices() const { return colors_.size(); }

    std::optional<Color> color_of(VertexId v) const;
    void assign(VertexId v, std::optional<Color> c);

    bool is_total() const;
    const std::vector<std::optional<Color>>& raw() const { return colors_; }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

  private:
    Color k_ = 0;
    std::vector<std::optional<Color>> colors_;
};

struct PhaseColor {
    std::uint32_t phase = 0;
    Color color = 0;

    friend auto operator<=>(const PhaseColor&, const PhaseColor&) = default;
};

/// Each vertex holds a set of (phase, color) pairs, at most one per phase.
class MulticolorAssignment {
  public:
    MulticolorAssignment() = default;
    MulticolorAssignment(std::size_t n, Color k, std::uint32_t phases);

    Color palette_size() const { return k_; }
    std::uint32_t phases() const { return phases_; }
    std::size_t num_vertices() const { return held_.size(); }

    void add(VertexId v, PhaseColor pc);
    const std::set<PhaseColor>& held_by(VertexId v) const;

    /// Number of distinct (phase, color) pairs in use.
    std::size_t colors_used() const;

    /// Canonical integer form: k * (phase - 1) + color.
    std::uint64_t flatten(PhaseColor pc) const;

    /// Raises the phase count; used by the reduction as phases complete.
    void set_phases(std::uint32_t phases);

    friend bool operator==(const MulticolorAssignment&, const MulticolorAssignment&) = default;

  private:
    Color k_ = 0;
    std::uint32_t phases_ = 0;
    std::vector<std::set<PhaseColor>> held_;
};

struct GeneratorSpec {
    std::size_t n = 1;
    std::size_t m = 1;
    Color k = 1;
    double eps = 1.0;
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    Hypergraph hypergraph;
    PartialColoring coloring;
};

/// True if some colored vertex of the edge holds a color no other member holds.
bool is_edge_happy(std::span<const VertexId> edge, const PartialColoring& f);

/// Smallest vertex id that witnesses happiness of the edge, if any.
std::optional<VertexId> happy_witness(std::span<const VertexId> edge, const PartialColoring& f);

/// Indices of happy edges, ascending. Edges are checked in parallel.
std::vector<EdgeIndex> happy_edges(const Hypergraph& h, const PartialColoring& f);

/// Single-threaded reference for happy_edges.
std::vector<EdgeIndex> happy_edges_serial(const Hypergraph& h, const PartialColoring& f);

bool is_conflict_free(const Hypergraph& h, const PartialColoring& f);

/// Largest k >= 1 with k <= |e| <= (1 + eps) k for every edge (the smallest
/// edge size), if any k works. 1 for a hypergraph without edges.
std::optional<std::size_t> is_almost_uniform(const Hypergraph& h, double eps);

/// Random almost-uniform hypergraph together with the total conflict-free
/// coloring it was planted around. Deterministic in spec.seed.
PlantedInstance generate_planted(const GeneratorSpec& spec);

/// Largest edge size the generator may draw for the spec.
std::size_t max_planted_edge_size(const GeneratorSpec& spec);

/// Throws InvalidColoring unless f assigns exactly the vertices of h.
void check_coloring_matches(const Hypergraph& h, const PartialColoring& f);

} // namespace cfreduce
