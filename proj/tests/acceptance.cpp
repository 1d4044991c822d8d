// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "cfreduce/conflict_graph.hpp"
#include "cfreduce/core.hpp"
#include "cfreduce/errors.hpp"
#include "cfreduce/io.hpp"
#include "cfreduce/reduction.hpp"
#include "cfreduce/slocal.hpp"
#include "cfreduce/solvers.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace cfreduce;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Exact oracle cap used for the planted corpora; conflict graphs there stay
// well below it and the clique-cover bound is tight on them.
constexpr std::size_t kCorpusCap = 1024;

std::vector<PlantedInstance> planted_corpus() {
    std::vector<PlantedInstance> out;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const double eps[] = {0.25, 0.5, 1.0};
        GeneratorSpec spec{10 + i % 7, 1 + i % 5, static_cast<Color>(1 + i % 3), eps[(i / 3) % 3], 1000 + i};
        out.push_back(generate_planted(spec));
    }
    return out;
}

std::vector<PlantedInstance> reduction_corpus() {
    std::vector<PlantedInstance> out;
    for (std::uint64_t j = 0; j < 50; ++j) {
        GeneratorSpec spec{12 + j % 8, 3 + j % 8, static_cast<Color>(2 + j % 3), 0.5, 5000 + j};
        out.push_back(generate_planted(spec));
    }
    return out;
}

std::size_t ceil_ln_plus_one(double lambda, std::size_t m) {
    return static_cast<std::size_t>(std::ceil(lambda * std::log(static_cast<double>(m)))) + 1;
}

// 1. |V(G_k)| = k * sum |e| on 200 random hypergraphs, under 5 s.
Outcome conflict_graph_cardinality() {
    Outcome o;
    std::mt19937_64 rng(1);
    auto start = Clock::now();
    for (int i = 0; i < 200; ++i) {
        Hypergraph h = oracle::random_hypergraph(rng, 15, 10, 15);
        const Color k = static_cast<Color>(1 + i % 4);
        ConflictGraph g = build_conflict_graph(h, k);
        std::size_t incidences = 0;
        for (const auto& e : h.edges()) incidences += e.size();
        o.require(g.num_vertices() == k * incidences, "instance " + std::to_string(i) + " vertex count");
    }
    const double t = seconds_since(start);
    o.require(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
    o.detail = "200 instances, " + std::to_string(t) + " s (limit 5 s)";
    return o;
}

// 2. Planted colorings map to independent sets of size m; alpha(G_k) = m.
Outcome planted_maximum_independent_set() {
    Outcome o;
    auto start = Clock::now();
    std::size_t small = 0;
    std::size_t exact_checked = 0;
    auto corpus = planted_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        const std::size_t m = inst.hypergraph.num_edges();
        ConflictGraph g = build_conflict_graph(inst.hypergraph, inst.coloring.palette_size());
        IndependentSet s = coloring_to_independent_set(g, inst.coloring);
        o.require(s.size() == m, "instance " + std::to_string(i) + ": |I_f| != m");
        o.require(verify_independent(g.graph(), s.members()), "instance " + std::to_string(i) + ": I_f dependent");
        if (g.num_vertices() <= kDefaultExactCap) {
            ++exact_checked;
            o.require(exact_maxis(g.graph()).size() == m, "instance " + std::to_string(i) + ": exact alpha != m");
        }
        if (g.num_vertices() <= 20) {
            ++small;
            o.require(oracle::SubsetTable(g.graph()).alpha() == m,
                      "instance " + std::to_string(i) + ": enumerated alpha != m");
        }
    }
    const double t = seconds_since(start);
    o.require(small > 0, "no instance with |V(G_k)| <= 20");
    o.require(t < 60.0, "runtime " + std::to_string(t) + " s >= 60 s");
    o.detail = "100 planted, " + std::to_string(exact_checked) + " exact-checked, " + std::to_string(small) +
               " enumerated, " + std::to_string(t) + " s (limit 60 s)";
    return o;
}

// 3. Every independent set of every small conflict graph induces a
// well-defined coloring with at least |I| happy edges.
Outcome independent_sets_give_happy_edges() {
    Outcome o;
    auto start = Clock::now();
    std::vector<std::pair<Hypergraph, Color>> instances;
    for (const auto& inst : planted_corpus()) instances.emplace_back(inst.hypergraph, inst.coloring.palette_size());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 150; ++i) {
        instances.emplace_back(oracle::random_hypergraph(rng, 8, 5, 4), static_cast<Color>(1 + i % 3));
    }

    std::size_t graphs = 0;
    std::size_t sets = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& [h, k] = instances[i];
        if (k * h.total_incidences() > 16) continue;
        ++graphs;
        ConflictGraph g = build_conflict_graph(h, k);
        oracle::SubsetTable table(g.graph());
        table.for_each_independent([&](std::uint32_t mask) {
            ++sets;
            auto members = oracle::SubsetTable::members(mask);
            // well-definedness, checked directly on the triples
            std::vector<std::optional<Color>> seen(h.num_vertices());
            bool well_defined = true;
            for (auto idx : members) {
                const Triple& t = g.triple(idx);
                if (seen[t.vertex - 1] && *seen[t.vertex - 1] != t.color) well_defined = false;
                seen[t.vertex - 1] = t.color;
            }
            o.require(well_defined, "instance " + std::to_string(i) + ": two colors on one vertex");
            PartialColoring f = independent_set_to_coloring(g, IndependentSet::checked(g.graph(), members));
            o.require(f.raw() == seen, "instance " + std::to_string(i) + ": induced coloring mismatch");
            o.require(oracle::happy_count(h, f.raw()) >= members.size(),
                      "instance " + std::to_string(i) + ": fewer happy edges than |I|");
        });
    }
    const double t = seconds_since(start);
    o.require(graphs > 0, "no instance with |V(G_k)| <= 16");
    o.require(t < 120.0, "runtime " + std::to_string(t) + " s >= 120 s");
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(sets) + " independent sets, " +
               std::to_string(t) + " s (limit 120 s)";
    return o;
}

// 4. Exact solver (lambda = 1): one phase, verified, at most k colors.
Outcome reduction_exact() {
    Outcome o;
    auto corpus = reduction_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        ReductionConfig cfg;
        cfg.k = inst.coloring.palette_size();
        cfg.lambda = 1.0;
        cfg.solver = exact_solver(kCorpusCap);
        ReductionResult r = conflict_free_multicolor(inst.hypergraph, cfg);
        const std::string id = "instance " + std::to_string(i);
        o.require(!r.promise_violated, id + ": promise violation");
        o.require(r.log.size() == 1, id + ": " + std::to_string(r.log.size()) + " phases");
        o.require(verify_multicoloring(inst.hypergraph, r.assignment), id + ": multicoloring not conflict-free");
        o.require(r.assignment.colors_used() <= cfg.k, id + ": more than k colors");
    }
    o.detail = "50 planted instances";
    return o;
}

// 5. Greedy solver with lambda = ceil(max measured alpha / |greedy|).
Outcome reduction_greedy() {
    Outcome o;
    auto corpus = reduction_corpus();
    double worst = 1.0;
    for (const auto& inst : corpus) {
        ConflictGraph g = build_conflict_graph(inst.hypergraph, inst.coloring.palette_size());
        SolverReport rep = measure_lambda(g.graph(), greedy_solver(), kCorpusCap);
        worst = std::max(worst, *rep.ratio);
    }
    const double lambda = std::ceil(worst - 1e-12);

    std::size_t max_phases = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        const std::string id = "instance " + std::to_string(i);
        const std::size_t m = inst.hypergraph.num_edges();
        ReductionConfig cfg;
        cfg.k = inst.coloring.palette_size();
        cfg.lambda = lambda;
        cfg.solver = greedy_solver();
        cfg.solver.guarantee = lambda;
        ReductionResult r = conflict_free_multicolor(inst.hypergraph, cfg);
        const std::size_t rho = ceil_ln_plus_one(lambda, m);
        o.require(!r.promise_violated, id + ": promise violation");
        o.require(r.log.size() <= rho, id + ": " + std::to_string(r.log.size()) + " phases > rho");
        for (const auto& rec : r.log) {
            const double after = static_cast<double>(rec.edges - rec.edges_removed);
            o.require(after <= (1.0 - 1.0 / lambda) * static_cast<double>(rec.edges) + 1e-9,
                      id + ": phase " + std::to_string(rec.phase) + " decay bound");
        }
        o.require(verify_multicoloring(inst.hypergraph, r.assignment), id + ": multicoloring not conflict-free");
        o.require(r.assignment.colors_used() <= cfg.k * rho, id + ": more than k * rho colors");
        max_phases = std::max(max_phases, r.log.size());
    }
    std::ostringstream d;
    d << "measured max ratio " << worst << ", lambda " << lambda << ", max phases used " << max_phases;
    o.detail = d.str();
    return o;
}

// 6. Branch and bound agrees with subset enumeration.
Outcome solver_oracle_agreement() {
    Outcome o;
    auto start = Clock::now();
    std::mt19937_64 rng(6);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + i % 18;
        const double p = 0.05 + 0.9 * std::uniform_real_distribution<double>(0, 1)(rng);
        Graph g = oracle::random_graph(rng, n, p);
        o.require(exact_maxis(g).size() == oracle::SubsetTable(g).alpha(), "graph " + std::to_string(i));
    }
    const double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + std::to_string(t) + " s >= 60 s");
    o.detail = "500 graphs, " + std::to_string(t) + " s (limit 60 s)";
    return o;
}

// 7. SLOCAL MIS is independent and maximal for every order.
Outcome slocal_mis() {
    Outcome o;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 40;
        Graph g = oracle::random_graph(rng, n, 0.05 + 0.01 * (i % 30));
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto members = slocal::run_mis(g, slocal::random_order(n, 100 * i + s));
            o.require(verify_independent(g, members) && verify_maximal(g, members),
                      "graph " + std::to_string(i) + " order " + std::to_string(s));
        }
    }
    o.detail = "100 graphs x 20 orders";
    return o;
}

// 8. gen / color / solve are byte-identical across reruns.
Outcome cli_determinism() {
    Outcome o;
    const fs::path root = fs::temp_directory_path() / ("cfreduce_acceptance_" + std::to_string(::getpid()));
    const fs::path runs[2] = {root / "a", root / "b"};
    const std::vector<std::string> steps = {
        "gen --n 14 --m 9 --k 3 --eps 0.34 --seed 11 -o inst",
        "color inst.hg --k 3 --solver greedy --lambda 3 --seed 5 -o greedy",
        "color inst.hg --k 3 --solver exact --cap 1024 -o exact",
        "build inst.hg --k 1 -o g1",
        "solve g1.dimacs --solver exact -o g1.exact.json",
        "solve g1.dimacs --solver greedy --seed 2 -o g1.greedy.json",
    };
    for (const auto& dir : runs) {
        fs::create_directories(dir);
        for (const auto& step : steps) {
            std::string cmd = "cd '" + dir.string() + "' && '" CFREDUCE_CLI_PATH "' " + step + " > /dev/null 2>&1";
            int status = std::system(cmd.c_str());
            o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "'" + step + "' failed");
        }
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(runs[0])) {
        const auto name = entry.path().filename();
        const fs::path other = runs[1] / name;
        o.require(fs::exists(other), name.string() + " missing in rerun");
        if (!fs::exists(other)) continue;
        o.require(io::read_file(entry.path().string()) == io::read_file(other.string()), name.string() + " differs");
        ++compared;
    }
    std::error_code ec;
    fs::remove_all(root, ec);
    o.require(compared >= 12, "only " + std::to_string(compared) + " files compared");
    o.detail = std::to_string(compared) + " output files byte-identical";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "conflict-graph cardinality", conflict_graph_cardinality},
        {"AC2", "planted coloring gives a maximum independent set of size m", planted_maximum_independent_set},
        {"AC3", "every independent set gives >= |I| happy edges", independent_sets_give_happy_edges},
        {"AC4", "reduction with exact solver finishes in one phase", reduction_exact},
        {"AC5", "reduction with greedy solver meets the decay and phase bounds", reduction_greedy},
        {"AC6", "exact solver agrees with subset enumeration", solver_oracle_agreement},
        {"AC7", "SLOCAL MIS independent and maximal", slocal_mis},
        {"AC8", "CLI determinism", cli_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name;
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << "\n";
        for (const auto& f : o.failures) std::cout << "     " << f << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
