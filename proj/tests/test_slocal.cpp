#include <doctest.h>

#include <random>

#include "cfreduce/errors.hpp"
#include "cfreduce/slocal.hpp"
#include "cfreduce/solvers.hpp"
#include "oracles.hpp"

using namespace cfreduce;

namespace {

Graph path3() {
    std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 2}};
    return Graph(3, e);
}

} // namespace

TEST_SUITE("slocal") {

TEST_CASE("radius 0 constant rule") {
    Graph g = path3();
    slocal::Schedule s(g, slocal::identity_order(3), 0);
    CHECK(slocal::run(s, slocal::constant_rule(7)) == std::vector<slocal::NodeState>{7, 7, 7});
}

TEST_CASE("MIS rule hand traces") {
    Graph g = path3();
    CHECK(slocal::run_mis(g, {0, 1, 2}) == std::vector<std::size_t>{0, 2});
    CHECK(slocal::run_mis(g, {1, 0, 2}) == std::vector<std::size_t>{1});
    CHECK(slocal::run_mis(Graph(1), {0}) == std::vector<std::size_t>{0});
    CHECK(slocal::run_mis(Graph(4), slocal::random_order(4, 9)) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("views contain exactly the r-ball and only processed states") {
    // path 0-1-2-3-4
    std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    Graph g(5, e);
    std::vector<std::size_t> seen_sizes;
    std::vector<std::size_t> seen_processed;
    auto spy = [&](const slocal::View& view) {
        seen_sizes.push_back(view.size());
        std::size_t processed = 0;
        for (const auto& s : view.states) processed += s.has_value() ? 1 : 0;
        seen_processed.push_back(processed);
        CHECK(view.global_ids[0] != SIZE_MAX);
        CHECK_FALSE(view.states[0].has_value());
        return slocal::NodeState{1};
    };
    slocal::run(slocal::Schedule(g, {2, 0, 4, 1, 3}, 1), spy);
    CHECK(seen_sizes == std::vector<std::size_t>{3, 2, 2, 3, 3});
    CHECK(seen_processed == std::vector<std::size_t>{0, 0, 0, 2, 2});

    auto view = slocal::make_view(g, 2, 2, std::vector<std::optional<slocal::NodeState>>(5));
    CHECK(view.global_ids == std::vector<std::size_t>{2, 1, 3, 0, 4});
    CHECK(view.distance == std::vector<std::size_t>{0, 1, 1, 2, 2});
    CHECK(view.topology.num_edges() == 4);
}

TEST_CASE("schedule must be a permutation") {
    Graph g = path3();
    CHECK_THROWS_AS(slocal::Schedule(g, {0, 1}, 1), Error);
    CHECK_THROWS_AS(slocal::Schedule(g, {0, 1, 1}, 1), Error);
    CHECK_THROWS_AS(slocal::Schedule(g, {0, 1, 3}, 1), Error);
}

TEST_CASE("MIS output is independent and maximal under fuzzed orders") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 30, 0.2);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto members = slocal::run_mis(g, slocal::random_order(g.num_vertices(), seed));
            CHECK(verify_independent(g, members));
            CHECK(verify_maximal(g, members));
        }
    }
}

TEST_CASE("MIS output commutes with relabeling") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 20;
        Graph g = oracle::random_graph(rng, n, 0.25);
        auto perm = slocal::random_order(n, 1000 + trial);
        auto order = slocal::random_order(n, trial);
        std::vector<std::size_t> mapped_order;
        for (auto v : order) mapped_order.push_back(perm[v]);

        auto base = slocal::run_mis(g, order);
        auto moved = slocal::run_mis(g.relabeled(perm), mapped_order);
        std::vector<std::size_t> expect;
        for (auto v : base) expect.push_back(perm[v]);
        std::sort(expect.begin(), expect.end());
        CHECK(moved == expect);
    }
}

}
