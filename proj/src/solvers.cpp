#include "cfreduce/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>

#include "cfreduce/errors.hpp"

namespace cfreduce {

std::size_t exact_cap_from_env() {
    if (const char* raw = std::getenv("CFREDUCE_CAP")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    return kDefaultExactCap;
}

namespace {

class BranchAndBound {
  public:
    explicit BranchAndBound(const Graph& g) : g_(g) {}

    /// Size of a maximum independent set of G[candidates], or some value
    /// >= goal as soon as one is found.
    std::size_t solve(const Bitset& candidates, std::size_t goal) {
        best_ = 0;
        goal_ = goal;
        expand(candidates, 0);
        return best_;
    }

    std::uint64_t branches() const { return branches_; }

  private:
    void expand(Bitset candidates, std::size_t size) {
        ++branches_;
        if (best_ >= goal_) return;
        if (candidates.none()) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + clique_cover(candidates) <= best_) return;

        std::size_t pivot = Bitset::npos;
        std::size_t pivot_degree = 0;
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            std::size_t d = (g_.row(v) & candidates).count();
            if (pivot == Bitset::npos || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot_degree == 0) {
            best_ = std::max(best_, size + candidates.count());
            return;
        }

        Bitset with = candidates - g_.row(pivot);
        with.reset(pivot);
        expand(std::move(with), size + 1);

        candidates.reset(pivot);
        expand(std::move(candidates), size);
    }

    // Greedy partition of the candidates into cliques; any independent set
    // takes at most one vertex per clique.
    std::size_t clique_cover(const Bitset& candidates) {
        common_.clear();
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            bool placed = false;
            for (auto& c : common_) {
                if (c.test(v)) {
                    c &= g_.row(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) common_.push_back(g_.row(v) & candidates);
        }
        return common_.size();
    }

    const Graph& g_;
    std::size_t best_ = 0;
    std::size_t goal_ = 0;
    std::uint64_t branches_ = 0;
    std::vector<Bitset> common_;
};

std::vector<std::size_t> to_indices(const Bitset& bits) {
    std::vector<std::size_t> out;
    for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) out.push_back(v);
    return out;
}

} // namespace

IndependentSet exact_maxis(const Graph& g, std::size_t cap, SolveStats* stats) {
    const std::size_t n = g.num_vertices();
    if (n > cap) {
        throw Error(ErrorKind::SizeLimit, "exact solver cap is " + std::to_string(cap) + " vertices, graph has " +
                                              std::to_string(n) + "; use the greedy solver");
    }
    BranchAndBound bnb(g);
    Bitset candidates(n);
    candidates.set();
    const std::size_t alpha = bnb.solve(candidates, std::numeric_limits<std::size_t>::max());

    // Walk vertices in index order, keeping v whenever an optimum still
    // extends the chosen prefix; this yields the lexicographically smallest optimum.
    Bitset chosen(n);
    std::size_t remaining = alpha;
    for (std::size_t v = 0; v < n && remaining > 0; ++v) {
        if (!candidates.test(v)) continue;
        Bitset with = candidates - g.row(v);
        with.reset(v);
        if (remaining == 1 || bnb.solve(with, remaining - 1) >= remaining - 1) {
            chosen.set(v);
            candidates = std::move(with);
            --remaining;
        } else {
            candidates.reset(v);
        }
    }
    if (stats) stats->branches = bnb.branches();
    return IndependentSet::checked(g, to_indices(chosen));
}

IndependentSet greedy_maxis(const Graph& g, std::optional<std::uint64_t> seed) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    if (seed) {
        std::vector<std::size_t> order(rank);
        std::mt19937_64 rng(*seed);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    }

    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> alive(n, true);
    std::size_t alive_count = n;

    auto remove = [&](std::size_t u) {
        alive[u] = false;
        --alive_count;
        for (auto w : g.neighbors(u)) {
            if (alive[w]) --degree[w];
        }
    };

    std::vector<std::size_t> members;
    while (alive_count > 0) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (pick == n || degree[v] < degree[pick] || (degree[v] == degree[pick] && rank[v] < rank[pick])) {
                pick = v;
            }
        }
        members.push_back(pick);
        remove(pick);
        for (auto w : g.neighbors(pick)) {
            if (alive[w]) remove(w);
        }
    }
    return IndependentSet::checked(g, std::move(members));
}

namespace {

void check_members(const Graph& g, std::span<const std::size_t> s) {
    for (auto v : s) {
        if (v >= g.num_vertices()) {
            throw Error(ErrorKind::InvalidSet, "vertex " + std::to_string(v) + " not in graph");
        }
    }
}

} // namespace

bool verify_independent(const Graph& g, std::span<const std::size_t> s) {
    check_members(g, s);
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (g.adjacent(s[a], s[b])) return false;
        }
    }
    return true;
}

bool verify_maximal(const Graph& g, std::span<const std::size_t> s) {
    if (!verify_independent(g, s)) return false;
    Bitset dominated(g.num_vertices());
    for (auto v : s) {
        dominated.set(v);
        dominated |= g.row(v);
    }
    return dominated.all();
}

SolverContract exact_solver(std::size_t cap) {
    return {"exact", [cap](const Graph& g) { return exact_maxis(g, cap); }, 1.0, true, std::nullopt};
}

SolverContract greedy_solver(std::optional<std::uint64_t> seed) {
    return {"greedy", [seed](const Graph& g) { return greedy_maxis(g, seed); }, std::nullopt, true, seed};
}

SolverContract solver_by_name(const std::string& name, std::size_t cap, std::optional<std::uint64_t> seed) {
    if (name == "exact") return exact_solver(cap);
    if (name == "greedy") return greedy_solver(seed);
    throw Error(ErrorKind::InvalidParameter, "unknown solver '" + name + "' (expected exact or greedy)");
}

SolverReport measure_lambda(const Graph& g, const SolverContract& solver, std::size_t cap, std::string instance) {
    SolveStats stats;
    const std::size_t alpha = exact_maxis(g, cap, &stats).size();

    auto start = std::chrono::steady_clock::now();
    IndependentSet out = solver.solve(g);
    auto stop = std::chrono::steady_clock::now();
    if (!verify_independent(g, out.members())) {
        throw Error(ErrorKind::ContractViolation, "solver " + solver.name + " returned a dependent set");
    }

    SolverReport report;
    report.instance = std::move(instance);
    report.solver = solver.name;
    report.size = out.size();
    report.alpha = alpha;
    report.ratio = out.size() == 0 ? 1.0 : static_cast<double>(alpha) / static_cast<double>(out.size());
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.branches = stats.branches;
    return report;
}

} // namespace cfreduce
