#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmas/digraph.hpp"
#include "rmas/instance.hpp"

namespace rmas {

enum class GenKind { random, mas, khandekar, dag, fixture };

std::string_view to_string(GenKind kind);
GenKind parse_gen_kind(std::string_view name);

/// Parameters for every generator. Fields irrelevant to a kind are ignored.
struct GenSpec {
    GenKind kind = GenKind::random;
    std::size_t nodes = 4;
    std::size_t edges = 6;
    Label label_min = 0;         // label pool, inclusive
    Label label_max = 9;
    std::size_t max_list_size = 4;
    std::int64_t weight_min = 1;  // integer weights, inclusive
    std::int64_t weight_max = 10;
    double edge_probability = 0.5;  // dag
    std::size_t list_size = 3;      // khandekar: labels per node including 0
    std::uint64_t seed = 0;
    std::string fixture_name;
};

/// Throws Error when the spec is inconsistent for its kind.
void validate(const GenSpec& spec);

/// Random lists drawn without replacement from [label_min, label_max] with
/// sizes in [1, max_list_size]; `edges` random edges between distinct nodes
/// with integer weights in [weight_min, weight_max].
Instance gen_random(const GenSpec& spec);

/// Maximum acyclic subgraph as a restricted instance: every list is {1..n}.
Instance gen_mas(const Digraph& g);

/// Lists that all contain 0 and otherwise share nothing: the positive labels
/// 1..n(k-1) are shuffled and cut into consecutive blocks of k-1.
Instance gen_khandekar(std::size_t nodes, std::size_t list_size, std::size_t edges, std::uint64_t seed,
                       std::int64_t weight_min = 1, std::int64_t weight_max = 10);

/// Unit-weight DAG with each forward pair i < j present with probability p.
Digraph gen_random_dag(std::size_t nodes, double p, std::uint64_t seed);

/// Unit-weight digraph with `edges` random edges between distinct nodes.
Digraph gen_random_digraph(std::size_t nodes, std::size_t edges, std::uint64_t seed);

/// Named instances: "two-cycle", "single-edge", "blocked", "triangle".
Instance fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Dispatch on spec.kind. `mas` embeds a random digraph, `dag` a random DAG.
Instance generate(const GenSpec& spec);

/// Topological order check used to certify generated DAGs.
bool is_acyclic(const Digraph& g);

/// Family of small random instances for experiments: instance i draws its
/// size from [min_nodes, max_nodes], its edge count from [1, max_edges(n)]
/// and its remaining parameters from `base`, seeded by mix_seed(seed, i).
struct SuiteSpec {
    std::size_t count = 100;
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 6;
    GenSpec base;
};

std::vector<Instance> generate_suite(const SuiteSpec& suite, std::uint64_t seed);

}  // namespace rmas
