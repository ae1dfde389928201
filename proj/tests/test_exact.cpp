#include <doctest.h>

#include "rmas/exact.hpp"
#include "rmas/generators.hpp"
#include "rmas/simple_approx.hpp"
#include "support/oracles.hpp"

using namespace rmas;

namespace {

// Direct enumeration of all 2^n source sets.
double dicut_by_enumeration(const Digraph& g) {
    double best = 0.0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.node_count); ++s) {
        double cut = 0.0;
        for (const Edge& e : g.edges) {
            if (((s >> e.tail) & 1) && !((s >> e.head) & 1)) cut += e.weight;
        }
        best = std::max(best, cut);
    }
    return best;
}

}  // namespace

TEST_CASE("brute force on the fixtures") {
    const OptResult i1 = brute_force_opt(fixture("two-cycle"));
    CHECK(i1.value == oracle::opt(fixture("two-cycle")));
    CHECK(i1.value == 1.0);
    // (1,2) and (2,1) both score 1; the lexicographically smaller one wins.
    CHECK(i1.labeling == Labeling({1, 2}));
    CHECK(i1.enumerated_count == 4);

    CHECK(brute_force_opt(fixture("single-edge")).value == 3.0);

    const OptResult i4 = brute_force_opt(fixture("triangle"));
    CHECK(i4.value == oracle::opt(fixture("triangle")));
    CHECK(i4.value == 2.0);
    CHECK(i4.enumerated_count == 27);
    CHECK(evaluate(fixture("triangle"), i4.labeling) == i4.value);
}

TEST_CASE("cap is enforced with the computed product") {
    const Instance big(std::vector<std::vector<Label>>(8, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), {});
    try {
        brute_force_opt(big, 1000);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.required() == 100'000'000);
        CHECK(e.cap() == 1000);
    }
    CHECK_THROWS_AS(brute_force_opt(big), CapExceeded);
}

TEST_CASE("max_dicut small graphs") {
    CHECK(max_dicut({2, {{0, 1, 1.0}}}) == 1.0);
    CHECK(max_dicut({2, {{0, 1, 1.0}, {1, 0, 1.0}}}) == 1.0);
    const Digraph path{3, {{0, 1, 1.0}, {1, 2, 1.0}}};
    CHECK(max_dicut(path) == dicut_by_enumeration(path));
    CHECK(max_dicut(path) == 1.0);
    const Digraph complete{3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}};
    CHECK(max_dicut(complete) == 2.0);
    CHECK(max_dicut({0, {}}) == 0.0);
    CHECK_THROWS_AS(max_dicut({25, {}}), CapExceeded);
}

TEST_CASE("property: Gray-code dicut matches plain enumeration") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Digraph g = gen_random_digraph(3 + seed % 8, 4 + seed % 17, seed);
        for (std::size_t i = 0; i < g.edges.size(); ++i) g.edges[i].weight = 0.25 * static_cast<double>(1 + (i * 7 + seed) % 9);
        CHECK(max_dicut(g) == dicut_by_enumeration(g));
    }
}

TEST_CASE("property: brute force agrees with the recursive oracle and is a maximizer") {
    GenSpec spec;
    spec.nodes = 4;
    spec.edges = 6;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        spec.seed = seed;
        const Instance inst = gen_random(spec);
        const OptResult r = brute_force_opt(inst);
        CHECK(r.value == oracle::opt(inst));
        CHECK(evaluate(inst, r.labeling) == r.value);
    }
}

TEST_CASE("property: opt is invariant under order-preserving relabeling") {
    GenSpec spec;
    spec.nodes = 4;
    spec.edges = 8;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        spec.seed = seed;
        const Instance inst = gen_random(spec);
        auto lists = inst.label_lists();
        for (auto& list : lists) {
            for (Label& l : list) l = 3 * l * l * l - 1000;  // strictly increasing map
        }
        CHECK(brute_force_opt(Instance(lists, inst.edges())).value == brute_force_opt(inst).value);
    }
}

TEST_CASE("property: min/max restriction of a two-label MAS embedding realizes the max dicut") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 3 + seed % 6;
        const Digraph g = gen_random_digraph(n, 2 + seed % 13, seed);
        const Instance ends(std::vector<std::vector<Label>>(n, {1, static_cast<Label>(n)}), g.edges);
        const double dicut = max_dicut(g);
        CHECK(brute_force_opt(ends).value == dicut);

        const Instance mas = gen_mas(g);
        const double value = derandomize_minmax(mas).value;
        const double w = total_weight(filter_edges(mas).kept);
        CHECK(value >= w / 4.0);
        CHECK(value <= dicut);
    }
}
