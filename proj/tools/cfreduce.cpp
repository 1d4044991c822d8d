// cfreduce: command-line driver for the conflict-graph reduction toolkit.
//
// Exit codes: 0 ok, 1 verification false, 2 parse / input error,
// 3 promise violation (edges survive all phases), 4 exact-solver cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "cfreduce/conflict_graph.hpp"
#include "cfreduce/core.hpp"
#include "cfreduce/errors.hpp"
#include "cfreduce/io.hpp"
#include "cfreduce/reduction.hpp"
#include "cfreduce/slocal.hpp"
#include "cfreduce/solvers.hpp"

namespace {

using namespace cfreduce;
using io::Json;

constexpr const char* kVersion = "0.1.0";

enum Exit : int { kOk = 0, kFalse = 1, kInput = 2, kPromise = 3, kCap = 4 };

Json manifest(const std::string& sub, Json inputs, Json config, Json outputs) {
    return Json{{"tool", "cfreduce"},
                {"version", kVersion},
                {"subcommand", sub},
                {"inputs", std::move(inputs)},
                {"config", std::move(config)},
                {"outputs", std::move(outputs)}};
}

std::size_t resolve_cap(std::optional<std::size_t> flag) { return flag ? *flag : exact_cap_from_env(); }

Hypergraph load_hypergraph(const std::string& path) { return io::read_hypergraph(io::read_file(path)); }

struct GenArgs {
    GeneratorSpec spec;
    std::string output;
};

int cmd_gen(const GenArgs& a) {
    PlantedInstance inst = generate_planted(a.spec);
    const std::string hg = a.output + ".hg";
    const std::string col = a.output + ".col.json";
    const std::string man = a.output + ".manifest.json";
    io::write_file(hg, io::write_hypergraph(inst.hypergraph));
    io::write_file(col, io::dump(io::coloring_to_json(inst.coloring)));
    Json config{{"n", a.spec.n}, {"m", a.spec.m}, {"k", a.spec.k}, {"eps", a.spec.eps}, {"seed", a.spec.seed}};
    io::write_file(man, io::dump(manifest("gen", Json::object(), config, Json{{"hypergraph", hg}, {"coloring", col}})));
    return kOk;
}

struct BuildArgs {
    std::string input;
    Color k = 1;
    std::string output;
};

int cmd_build(const BuildArgs& a) {
    Hypergraph h = load_hypergraph(a.input);
    ConflictGraph g = build_conflict_graph(h, a.k);
    const std::string dimacs = a.output + ".dimacs";
    const std::string triples = a.output + ".triples.json";
    const std::string man = a.output + ".manifest.json";
    io::write_file(dimacs, io::write_dimacs(g.graph(), "conflict graph, k = " + std::to_string(a.k)));
    io::write_file(triples, io::dump(io::triple_map_to_json(g)));
    io::write_file(man, io::dump(manifest("build", Json{{"hypergraph", a.input}}, Json{{"k", a.k}},
                                          Json{{"dimacs", dimacs}, {"triples", triples}})));
    std::cout << "conflict graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
    return kOk;
}

struct ColorArgs {
    std::string input;
    Color k = 1;
    double lambda = 1.0;
    std::string solver = "exact";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> cap;
    std::optional<std::uint32_t> max_phases;
    bool aggressive = false;
    bool timing = false;
    std::string output;
};

int cmd_color(const ColorArgs& a) {
    Hypergraph h = load_hypergraph(a.input);
    const std::size_t cap = resolve_cap(a.cap);
    ReductionConfig cfg;
    cfg.k = a.k;
    cfg.lambda = a.lambda;
    cfg.solver = solver_by_name(a.solver, cap, a.seed);
    cfg.max_phases = a.max_phases;
    cfg.aggressive_removal = a.aggressive;

    ReductionResult r = conflict_free_multicolor(h, cfg);

    const std::string col = a.output + ".col.json";
    const std::string log = a.output + ".phases.jsonl";
    const std::string man = a.output + ".manifest.json";
    io::write_file(col, io::dump(io::multicoloring_to_json(r.assignment)));
    std::string lines;
    for (const auto& rec : r.log) lines += io::phase_record_to_json(rec, a.timing).dump() + "\n";
    io::write_file(log, lines);

    Json config{{"k", a.k},           {"lambda", a.lambda},         {"solver", a.solver},
                {"seed", a.seed ? Json(*a.seed) : Json(nullptr)},   {"cap", cap},
                {"max_phases", a.max_phases ? Json(*a.max_phases) : Json(nullptr)},
                {"aggressive", a.aggressive}, {"rho", r.rho}};
    io::write_file(man, io::dump(manifest("color", Json{{"hypergraph", a.input}}, config,
                                          Json{{"coloring", col}, {"phase_log", log}})));

    if (r.promise_violated) {
        std::cout << Json{{"status", "promise-violation"}, {"phases", r.log.size()}, {"surviving", r.surviving}}.dump()
                  << "\n";
        return kPromise;
    }
    const bool ok = verify_multicoloring(h, r.assignment);
    std::cout << Json{{"status", ok ? "ok" : "verification-failed"},
                      {"phases", r.log.size()},
                      {"rho", r.rho},
                      {"colors_used", r.assignment.colors_used()}}
                     .dump()
              << "\n";
    return ok ? kOk : kFalse;
}

struct SolveArgs {
    std::string input;
    std::string solver = "exact";
    std::optional<std::size_t> cap;
    std::optional<std::uint64_t> seed;
    bool timing = false;
    std::string output;
};

int cmd_solve(const SolveArgs& a) {
    Graph g = io::read_dimacs(io::read_file(a.input));
    const std::size_t cap = resolve_cap(a.cap);
    SolverContract solver = solver_by_name(a.solver, cap, a.seed);

    SolverReport report;
    if (a.solver == "exact" || g.num_vertices() <= cap) {
        report = measure_lambda(g, solver, cap, a.input);
    } else {
        // no oracle available above the cap; report the greedy size alone
        report.instance = a.input;
        report.solver = solver.name;
        report.size = solver.solve(g).size();
    }
    IndependentSet s = solver.solve(g);
    Json out = io::independent_set_to_json(solver.name, s);
    out["report"] = io::report_to_json(report, a.timing);
    if (a.output.empty()) {
        std::cout << io::dump(out);
    } else {
        io::write_file(a.output, io::dump(out));
        Json config{{"solver", a.solver}, {"cap", cap}, {"seed", a.seed ? Json(*a.seed) : Json(nullptr)}};
        io::write_file(a.output + ".manifest.json",
                       io::dump(manifest("solve", Json{{"graph", a.input}}, config, Json{{"result", a.output}})));
    }
    return kOk;
}

struct VerifyArgs {
    std::string hypergraph;
    std::string coloring;
};

int cmd_verify(const VerifyArgs& a) {
    Hypergraph h = load_hypergraph(a.hypergraph);
    Json j = io::parse_json(io::read_file(a.coloring));
    bool ok = false;
    std::size_t happy = 0;
    if (io::is_multicoloring_json(j)) {
        MulticolorAssignment m = io::multicoloring_from_json(j, h.num_vertices());
        ok = verify_multicoloring(h, m);
        for (const auto& e : h.edges()) happy += is_edge_happy(e, m) ? 1 : 0;
    } else {
        PartialColoring f = io::coloring_from_json(j, h.num_vertices());
        happy = happy_edges(h, f).size();
        ok = happy == h.num_edges();
    }
    std::cout << Json{{"conflict_free", ok}, {"happy_edges", happy}, {"edges", h.num_edges()}}.dump() << "\n";
    return ok ? kOk : kFalse;
}

struct SlocalArgs {
    std::string input;
    std::string order = "identity";
    std::uint64_t seed = 0;
    std::vector<std::size_t> list;
    std::string output;
};

int cmd_slocal(const SlocalArgs& a) {
    Graph g = io::read_dimacs(io::read_file(a.input));
    std::vector<std::size_t> order;
    if (a.order == "identity") {
        order = slocal::identity_order(g.num_vertices());
    } else if (a.order == "random") {
        order = slocal::random_order(g.num_vertices(), a.seed);
    } else if (a.order == "list") {
        for (auto v : a.list) {
            if (v == 0) throw Error(ErrorKind::InvalidParameter, "order list is 1-indexed");
            order.push_back(v - 1);
        }
    } else {
        throw Error(ErrorKind::InvalidParameter, "order must be identity, random or list");
    }
    auto members = slocal::run_mis(g, order);
    Json jm = Json::array();
    for (auto v : members) jm.push_back(v + 1);
    Json jo = Json::array();
    for (auto v : order) jo.push_back(v + 1);
    Json out{{"radius", 1}, {"order", std::move(jo)}, {"members", std::move(jm)}};
    if (a.output.empty()) {
        std::cout << io::dump(out);
    } else {
        io::write_file(a.output, io::dump(out));
    }
    return kOk;
}

struct BenchArgs {
    GeneratorSpec spec;
    std::size_t count = 10;
    std::optional<std::size_t> cap;
    std::string solver = "greedy";
    int jobs = 1;
    bool timing = true;
};

int cmd_bench(const BenchArgs& a) {
    const std::size_t cap = resolve_cap(a.cap);
    std::vector<std::string> lines(a.count);
    std::vector<int> failed(a.count, 0);
    const auto count = static_cast<std::int64_t>(a.count);
    // instances are independent; each writes only its own slot
#pragma omp parallel for schedule(dynamic) num_threads(a.jobs)
    for (std::int64_t i = 0; i < count; ++i) {
        GeneratorSpec spec = a.spec;
        spec.seed = a.spec.seed + static_cast<std::uint64_t>(i);
        const std::string id = "planted-seed-" + std::to_string(spec.seed);
        try {
            PlantedInstance inst = generate_planted(spec);
            ConflictGraph g = build_conflict_graph(inst.hypergraph, spec.k);
            SolverContract solver = solver_by_name(a.solver, cap, std::nullopt);
            SolverReport r;
            if (g.num_vertices() <= cap) {
                r = measure_lambda(g.graph(), solver, cap, id);
            } else {
                r.instance = id;
                r.solver = solver.name;
                r.size = solver.solve(g.graph()).size();
            }
            Json j = io::report_to_json(r, a.timing);
            j["edges"] = inst.hypergraph.num_edges();
            j["conflict_vertices"] = g.num_vertices();
            lines[i] = j.dump();
        } catch (const Error& e) {
            lines[i] = Json{{"instance", id}, {"error", e.what()}}.dump();
            failed[i] = 1;
        }
    }
    for (const auto& l : lines) std::cout << l << "\n";
    for (int f : failed) {
        if (f) return kInput;
    }
    return kOk;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::SizeLimit: return kCap;
    default: return kInput;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conflict-free multicoloring via maximum independent set on conflict graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    GenArgs gen;
    auto* sub_gen = app.add_subcommand("gen", "Generate a planted almost-uniform hypergraph and its coloring");
    sub_gen->add_option("--n", gen.spec.n, "Vertices")->required();
    sub_gen->add_option("--m", gen.spec.m, "Edges")->required();
    sub_gen->add_option("--k", gen.spec.k, "Palette size")->required();
    sub_gen->add_option("--eps", gen.spec.eps, "Uniformity slack in (0, 1]")->default_val(1.0);
    sub_gen->add_option("--seed", gen.spec.seed, "Random seed")->default_val(0);
    sub_gen->add_option("-o,--output", gen.output, "Output path prefix")->required();

    BuildArgs build;
    auto* sub_build = app.add_subcommand("build", "Export the conflict graph G_k as DIMACS plus a triple map");
    sub_build->add_option("hypergraph", build.input, ".hg file")->required();
    sub_build->add_option("--k", build.k, "Palette size")->required();
    sub_build->add_option("-o,--output", build.output, "Output path prefix")->required();

    ColorArgs color;
    auto* sub_color = app.add_subcommand("color", "Conflict-free multicoloring by phased MaxIS reduction");
    sub_color->add_option("hypergraph", color.input, ".hg file")->required();
    sub_color->add_option("--k", color.k, "Per-phase palette size")->required();
    sub_color->add_option("--lambda", color.lambda, "Promised approximation factor")->default_val(1.0);
    sub_color->add_option("--solver", color.solver, "exact or greedy")->default_val("exact");
    sub_color->add_option("--seed", color.seed, "Greedy tie-break seed");
    sub_color->add_option("--cap", color.cap, "Exact solver vertex cap");
    sub_color->add_option("--max-phases", color.max_phases, "Override the phase count");
    sub_color->add_flag("--aggressive", color.aggressive, "Also remove edges happy under earlier palettes");
    sub_color->add_flag("--timing", color.timing, "Record elapsed_ms in the phase log");
    sub_color->add_option("-o,--output", color.output, "Output path prefix")->required();

    SolveArgs solve;
    auto* sub_solve = app.add_subcommand("solve", "Maximum independent set of a DIMACS graph");
    sub_solve->add_option("graph", solve.input, "DIMACS file")->required();
    sub_solve->add_option("--solver", solve.solver, "exact or greedy")->default_val("exact");
    sub_solve->add_option("--cap", solve.cap, "Exact solver vertex cap");
    sub_solve->add_option("--seed", solve.seed, "Greedy tie-break seed");
    sub_solve->add_flag("--timing", solve.timing, "Record elapsed_ms in the report");
    sub_solve->add_option("-o,--output", solve.output, "Result JSON path (default stdout)");

    VerifyArgs verify;
    auto* sub_verify = app.add_subcommand("verify", "Check that a (multi)coloring is conflict-free");
    sub_verify->add_option("hypergraph", verify.hypergraph, ".hg file")->required();
    sub_verify->add_option("coloring", verify.coloring, ".col.json file")->required();

    SlocalArgs sl;
    auto* sub_slocal = app.add_subcommand("slocal", "Locality-1 SLOCAL MIS on a DIMACS graph");
    sub_slocal->add_option("graph", sl.input, "DIMACS file")->required();
    sub_slocal->add_option("--order", sl.order, "identity, random or list")->default_val("identity");
    sub_slocal->add_option("--seed", sl.seed, "Seed for --order random")->default_val(0);
    sub_slocal->add_option("--list", sl.list, "1-indexed processing order for --order list")->delimiter(',');
    sub_slocal->add_option("-o,--output", sl.output, "Membership JSON path (default stdout)");

    BenchArgs bench;
    auto* sub_bench = app.add_subcommand("bench", "Solver reports over a planted corpus (JSON lines)");
    sub_bench->add_option("--count", bench.count, "Instances")->default_val(10);
    sub_bench->add_option("--n", bench.spec.n, "Vertices")->default_val(12);
    sub_bench->add_option("--m", bench.spec.m, "Edges")->default_val(6);
    sub_bench->add_option("--k", bench.spec.k, "Palette size")->default_val(2);
    sub_bench->add_option("--eps", bench.spec.eps, "Uniformity slack")->default_val(0.5);
    sub_bench->add_option("--seed", bench.spec.seed, "First seed")->default_val(0);
    sub_bench->add_option("--solver", bench.solver, "exact or greedy")->default_val("greedy");
    sub_bench->add_option("--cap", bench.cap, "Exact oracle vertex cap");
    sub_bench->add_option("--jobs", bench.jobs, "Parallel instances")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*sub_gen) return cmd_gen(gen);
        if (*sub_build) return cmd_build(build);
        if (*sub_color) return cmd_color(color);
        if (*sub_solve) return cmd_solve(solve);
        if (*sub_verify) return cmd_verify(verify);
        if (*sub_slocal) return cmd_slocal(sl);
        if (*sub_bench) return cmd_bench(bench);
    } catch (const Error& e) {
        std::cerr << "cfreduce: " << to_string(e.kind()) << " error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::SizeLimit) std::cerr << "hint: rerun with --solver greedy\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "cfreduce: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
