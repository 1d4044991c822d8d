#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "cfreduce/conflict_graph.hpp"
#include "cfreduce/graph.hpp"

namespace cfreduce {

inline constexpr std::size_t kDefaultExactCap = 64;

/// CFREDUCE_CAP if set to a positive integer, kDefaultExactCap otherwise.
std::size_t exact_cap_from_env();

struct SolveStats {
    std::uint64_t branches = 0;
};

/// Maximum independent set by branch and bound (branch on a max-degree
/// vertex, bound by a greedy clique cover). Returns the lexicographically
/// smallest optimum in vertex-index order. Throws SizeLimit above `cap`.
IndependentSet exact_maxis(const Graph& g, std::size_t cap = kDefaultExactCap, SolveStats* stats = nullptr);

/// Maximal independent set: repeatedly take a minimum residual-degree vertex
/// and drop its closed neighborhood. Ties go to the lowest index, or to the
/// lowest position of a seed-shuffled order when a seed is given.
IndependentSet greedy_maxis(const Graph& g, std::optional<std::uint64_t> seed = std::nullopt);

bool verify_independent(const Graph& g, std::span<const std::size_t> s);
bool verify_maximal(const Graph& g, std::span<const std::size_t> s);

struct SolverContract {
    std::string name;
    std::function<IndependentSet(const Graph&)> solve;
    std::optional<double> guarantee; // declared lambda, if any
    bool deterministic = true;
    std::optional<std::uint64_t> seed;
};

SolverContract exact_solver(std::size_t cap = kDefaultExactCap);
SolverContract greedy_solver(std::optional<std::uint64_t> seed = std::nullopt);

/// Throws InvalidParameter for names other than "exact" and "greedy".
SolverContract solver_by_name(const std::string& name, std::size_t cap, std::optional<std::uint64_t> seed);

struct SolverReport {
    std::string instance;
    std::string solver;
    std::size_t size = 0;
    std::optional<std::size_t> alpha;
    std::optional<double> ratio; // alpha / size
    double elapsed_ms = 0.0;
    std::uint64_t branches = 0; // exact oracle branch count
};

/// Runs the exact oracle and `solver` on g and reports alpha / |solver output|.
SolverReport measure_lambda(const Graph& g, const SolverContract& solver, std::size_t cap = kDefaultExactCap,
                            std::string instance = {});

} // namespace cfreduce
