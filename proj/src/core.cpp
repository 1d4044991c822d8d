#include "cfreduce/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <omp.h>

#include "cfreduce/errors.hpp"

namespace cfreduce {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidColoring: return "invalid-coloring";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::InvalidSet: return "invalid-set";
    case ErrorKind::InvalidAssignment: return "invalid-assignment";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::Generation: return "generation";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges)
    : n_(n), edges_(std::move(edges)) {
    std::vector<std::size_t> seen(n_ + 1, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].empty()) {
            throw Error(ErrorKind::InvalidParameter, "edge " + std::to_string(e) + " is empty");
        }
        for (VertexId v : edges_[e]) {
            if (v < 1 || v > n_) {
                throw Error(ErrorKind::InvalidParameter,
                            "edge " + std::to_string(e) + " has vertex " + std::to_string(v) +
                                " outside [1, " + std::to_string(n_) + "]");
            }
            // seen[] stores e + 1 so a fresh vector needs no reset between edges
            if (seen[v] == e + 1) {
                throw Error(ErrorKind::InvalidParameter,
                            "edge " + std::to_string(e) + " repeats vertex " + std::to_string(v));
            }
            seen[v] = e + 1;
        }
    }
}

std::size_t Hypergraph::total_incidences() const {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.size();
    return total;
}

Hypergraph Hypergraph::restrict_to(std::span<const EdgeIndex> keep) const {
    std::vector<std::vector<VertexId>> kept;
    kept.reserve(keep.size());
    for (EdgeIndex e : keep) kept.push_back(edges_.at(e));
    return Hypergraph(n_, std::move(kept));
}

PartialColoring::PartialColoring(std::size_t n, Color k) : k_(k), colors_(n) {}

PartialColoring::PartialColoring(Color k, std::vector<std::optional<Color>> colors)
    : k_(k), colors_(std::move(colors)) {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] && (*colors_[i] < 1 || *colors_[i] > k_)) {
            throw Error(ErrorKind::InvalidColoring,
                        "vertex " + std::to_string(i + 1) + " has color " +
                            std::to_string(*colors_[i]) + " outside [1, " + std::to_string(k_) + "]");
        }
    }
}

std::optional<Color> PartialColoring::color_of(VertexId v) const {
    if (v < 1 || v > colors_.size()) {
        throw Error(ErrorKind::InvalidColoring, "vertex " + std::to_string(v) + " not covered by coloring");
    }
    return colors_[v - 1];
}

void PartialColoring::assign(VertexId v, std::optional<Color> c) {
    if (v < 1 || v > colors_.size()) {
        throw Error(ErrorKind::InvalidColoring, "vertex " + std::to_string(v) + " not covered by coloring");
    }
    if (c && (*c < 1 || *c > k_)) {
        throw Error(ErrorKind::InvalidColoring, "color " + std::to_string(*c) + " outside palette");
    }
    colors_[v - 1] = c;
}

bool PartialColoring::is_total() const {
    return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

MulticolorAssignment::MulticolorAssignment(std::size_t n, Color k, std::uint32_t phases)
    : k_(k), phases_(phases), held_(n) {}

void MulticolorAssignment::add(VertexId v, PhaseColor pc) {
    if (v < 1 || v > held_.size()) {
        throw Error(ErrorKind::InvalidAssignment, "vertex " + std::to_string(v) + " not covered");
    }
    if (pc.phase < 1 || pc.phase > phases_ || pc.color < 1 || pc.color > k_) {
        throw Error(ErrorKind::InvalidAssignment,
                    "pair (" + std::to_string(pc.phase) + ", " + std::to_string(pc.color) +
                        ") outside phase palettes");
    }
    auto& held = held_[v - 1];
    auto same_phase = std::find_if(held.begin(), held.end(),
                                   [&](const PhaseColor& x) { return x.phase == pc.phase; });
    if (same_phase != held.end()) {
        if (*same_phase == pc) return;
        throw Error(ErrorKind::InvalidAssignment,
                    "vertex " + std::to_string(v) + " already colored in phase " + std::to_string(pc.phase));
    }
    held.insert(pc);
}

const std::set<PhaseColor>& MulticolorAssignment::held_by(VertexId v) const {
    if (v < 1 || v > held_.size()) {
        throw Error(ErrorKind::InvalidAssignment, "vertex " + std::to_string(v) + " not covered");
    }
    return held_[v - 1];
}

std::size_t MulticolorAssignment::colors_used() const {
    std::set<PhaseColor> all;
    for (const auto& h : held_) all.insert(h.begin(), h.end());
    return all.size();
}

std::uint64_t MulticolorAssignment::flatten(PhaseColor pc) const {
    return static_cast<std::uint64_t>(k_) * (pc.phase - 1) + pc.color;
}

void MulticolorAssignment::set_phases(std::uint32_t phases) {
    if (phases < phases_) {
        throw Error(ErrorKind::InvalidAssignment, "phase count may only grow");
    }
    phases_ = phases;
}

void check_coloring_matches(const Hypergraph& h, const PartialColoring& f) {
    if (f.num_vertices() != h.num_vertices()) {
        throw Error(ErrorKind::InvalidColoring,
                    "coloring covers " + std::to_string(f.num_vertices()) + " vertices, hypergraph has " +
                        std::to_string(h.num_vertices()));
    }
}

std::optional<VertexId> happy_witness(std::span<const VertexId> edge, const PartialColoring& f) {
    std::optional<VertexId> best;
    for (VertexId v : edge) {
        auto c = f.color_of(v);
        if (!c) continue;
        bool unique = std::none_of(edge.begin(), edge.end(), [&](VertexId u) {
            return u != v && f.color_of(u) == c;
        });
        if (unique && (!best || v < *best)) best = v;
    }
    return best;
}

bool is_edge_happy(std::span<const VertexId> edge, const PartialColoring& f) {
    for (VertexId v : edge) {
        auto c = f.color_of(v);
        if (!c) continue;
        bool unique = std::none_of(edge.begin(), edge.end(), [&](VertexId u) {
            return u != v && f.color_of(u) == c;
        });
        if (unique) return true;
    }
    return false;
}

std::vector<EdgeIndex> happy_edges_serial(const Hypergraph& h, const PartialColoring& f) {
    check_coloring_matches(h, f);
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        if (is_edge_happy(h.edge(e), f)) out.push_back(e);
    }
    return out;
}

std::vector<EdgeIndex> happy_edges(const Hypergraph& h, const PartialColoring& f) {
    check_coloring_matches(h, f);
    const auto m = static_cast<std::int64_t>(h.num_edges());
    std::vector<std::uint8_t> flag(h.num_edges(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < m; ++e) {
        flag[e] = is_edge_happy(h.edge(static_cast<EdgeIndex>(e)), f) ? 1 : 0;
    }
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < flag.size(); ++e) {
        if (flag[e]) out.push_back(e);
    }
    return out;
}

bool is_conflict_free(const Hypergraph& h, const PartialColoring& f) {
    return happy_edges(h, f).size() == h.num_edges();
}

std::optional<std::size_t> is_almost_uniform(const Hypergraph& h, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw Error(ErrorKind::InvalidParameter, "eps must lie in (0, 1]");
    }
    if (h.num_edges() == 0) return 1;
    std::size_t lo = h.edge(0).size();
    std::size_t hi = lo;
    for (const auto& e : h.edges()) {
        lo = std::min(lo, e.size());
        hi = std::max(hi, e.size());
    }
    // k <= |e| forces k <= lo and the upper bound only loosens as k grows,
    // so a witness exists iff lo itself works
    if (static_cast<double>(hi) > (1.0 + eps) * static_cast<double>(lo) + kRatioTolerance) return std::nullopt;
    return lo;
}

std::size_t max_planted_edge_size(const GeneratorSpec& spec) {
    auto upper = static_cast<std::size_t>(
        std::floor((1.0 + spec.eps) * static_cast<double>(spec.k) + kRatioTolerance));
    return std::min(upper, spec.n);
}

namespace {

constexpr int kEdgeRetryBudget = 1000;

void validate(const GeneratorSpec& spec) {
    if (spec.n < 1 || spec.m < 1 || spec.k < 1) {
        throw Error(ErrorKind::Generation, "n, m and k must all be at least 1");
    }
    if (!(spec.eps > 0.0 && spec.eps <= 1.0)) {
        throw Error(ErrorKind::Generation, "eps must lie in (0, 1]");
    }
    if (spec.n < spec.k) {
        throw Error(ErrorKind::Generation,
                    "n = " + std::to_string(spec.n) + " is smaller than k = " + std::to_string(spec.k));
    }
}

} // namespace

PlantedInstance generate_planted(const GeneratorSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);

    std::vector<std::optional<Color>> colors(spec.n);
    std::uniform_int_distribution<Color> pick_color(1, spec.k);
    for (auto& c : colors) c = pick_color(rng);
    PartialColoring f(spec.k, std::move(colors));

    const std::size_t smin = spec.k;
    const std::size_t smax = max_planted_edge_size(spec);
    std::uniform_int_distribution<std::size_t> pick_size(smin, smax);

    std::vector<VertexId> pool(spec.n);
    std::iota(pool.begin(), pool.end(), VertexId{1});

    std::vector<std::vector<VertexId>> edges;
    edges.reserve(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kEdgeRetryBudget && !placed; ++attempt) {
            const std::size_t s = pick_size(rng);
            // partial Fisher-Yates: the first s slots become a uniform s-subset
            for (std::size_t j = 0; j < s; ++j) {
                std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
                std::swap(pool[j], pool[pick(rng)]);
            }
            std::vector<VertexId> edge(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
            std::sort(edge.begin(), edge.end());
            if (is_edge_happy(edge, f)) {
                edges.push_back(std::move(edge));
                placed = true;
            }
        }
        if (!placed) {
            throw Error(ErrorKind::Generation,
                        "could not sample edge " + std::to_string(i) + " with a unique color after " +
                            std::to_string(kEdgeRetryBudget) + " attempts");
        }
    }
    return {Hypergraph(spec.n, std::move(edges)), std::move(f)};
}

} // namespace cfreduce
