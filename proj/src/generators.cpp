#include "rmas/generators.hpp"

#include <algorithm>
#include <deque>

#include "rmas/rng.hpp"

namespace rmas {

std::string_view to_string(GenKind kind) {
    switch (kind) {
        case GenKind::random: return "random";
        case GenKind::mas: return "mas";
        case GenKind::khandekar: return "khandekar";
        case GenKind::dag: return "dag";
        case GenKind::fixture: return "fixture";
    }
    return "unknown";
}

GenKind parse_gen_kind(std::string_view name) {
    for (GenKind k : {GenKind::random, GenKind::mas, GenKind::khandekar, GenKind::dag, GenKind::fixture}) {
        if (to_string(k) == name) return k;
    }
    throw Error("unknown generator kind '" + std::string(name) + "'");
}

void validate(const GenSpec& spec) {
    if (spec.kind == GenKind::fixture) return;
    if (spec.nodes == 0) throw Error("generator needs at least one node");
    if (spec.weight_min < 0 || spec.weight_min > spec.weight_max) throw Error("invalid weight range");
    switch (spec.kind) {
        case GenKind::random:
            if (spec.label_min > spec.label_max) throw Error("invalid label range");
            if (spec.max_list_size == 0) throw Error("list size must be positive");
            [[fallthrough]];
        case GenKind::mas:
            if (spec.nodes == 1 && spec.edges > 0) throw Error("edges need two distinct nodes");
            break;
        case GenKind::khandekar:
            if (spec.list_size == 0) throw Error("list size must be positive");
            if (spec.nodes == 1 && spec.edges > 0) throw Error("edges need two distinct nodes");
            break;
        case GenKind::dag:
            if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
                throw Error("edge probability must lie in [0, 1]");
            }
            break;
        case GenKind::fixture: break;
    }
}

namespace {

Edge random_edge(Rng& rng, std::size_t nodes, std::int64_t wmin, std::int64_t wmax) {
    Edge e;
    e.tail = rng.below(nodes);
    e.head = rng.below(nodes - 1);
    if (e.head >= e.tail) ++e.head;
    e.weight = static_cast<double>(rng.between(wmin, wmax));
    return e;
}

}  // namespace

Instance gen_random(const GenSpec& spec) {
    GenSpec checked = spec;
    checked.kind = GenKind::random;
    validate(checked);
    Rng rng(spec.seed);

    const auto pool = static_cast<std::uint64_t>(spec.label_max - spec.label_min) + 1;
    const auto max_size = static_cast<std::int64_t>(std::min<std::uint64_t>(spec.max_list_size, pool));
    std::vector<std::vector<Label>> lists(spec.nodes);
    for (auto& list : lists) {
        const auto size = static_cast<std::size_t>(rng.between(1, max_size));
        while (list.size() < size) {
            const Label l = rng.between(spec.label_min, spec.label_max);
            if (std::find(list.begin(), list.end(), l) == list.end()) list.push_back(l);
        }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < spec.edges; ++i) {
        edges.push_back(random_edge(rng, spec.nodes, spec.weight_min, spec.weight_max));
    }
    return Instance(std::move(lists), std::move(edges));
}

Instance gen_mas(const Digraph& g) {
    std::vector<Label> all(g.node_count);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Label>(i + 1);
    return Instance(std::vector<std::vector<Label>>(g.node_count, all), g.edges);
}

Instance gen_khandekar(std::size_t nodes, std::size_t list_size, std::size_t edges, std::uint64_t seed,
                       std::int64_t weight_min, std::int64_t weight_max) {
    GenSpec spec;
    spec.kind = GenKind::khandekar;
    spec.nodes = nodes;
    spec.list_size = list_size;
    spec.edges = edges;
    spec.weight_min = weight_min;
    spec.weight_max = weight_max;
    validate(spec);

    Rng rng(seed);
    const std::size_t block = list_size - 1;
    std::vector<Label> positive(nodes * block);
    for (std::size_t i = 0; i < positive.size(); ++i) positive[i] = static_cast<Label>(i + 1);
    rng.shuffle(positive);

    std::vector<std::vector<Label>> lists(nodes);
    for (std::size_t v = 0; v < nodes; ++v) {
        lists[v].push_back(0);
        lists[v].insert(lists[v].end(), positive.begin() + v * block, positive.begin() + (v + 1) * block);
    }
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges; ++i) out.push_back(random_edge(rng, nodes, weight_min, weight_max));
    return Instance(std::move(lists), std::move(out));
}

Digraph gen_random_dag(std::size_t nodes, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
    Rng rng(seed);
    Digraph g{nodes, {}};
    for (NodeId u = 0; u < nodes; ++u) {
        for (NodeId v = u + 1; v < nodes; ++v) {
            if (rng.unit() < p) g.edges.push_back({u, v, 1.0});
        }
    }
    return g;
}

Digraph gen_random_digraph(std::size_t nodes, std::size_t edges, std::uint64_t seed) {
    if (edges > 0 && nodes < 2) throw Error("edges need two distinct nodes");
    Rng rng(seed);
    Digraph g{nodes, {}};
    for (std::size_t i = 0; i < edges; ++i) g.edges.push_back(random_edge(rng, nodes, 1, 1));
    return g;
}

Instance fixture(std::string_view name) {
    if (name == "two-cycle") return Instance({{1, 2}, {1, 2}}, {{0, 1, 1.0}, {1, 0, 1.0}});
    if (name == "single-edge") return Instance({{1}, {2}}, {{0, 1, 3.0}});
    if (name == "blocked") return Instance({{5}, {1, 3}}, {{0, 1, 2.0}});
    if (name == "triangle") {
        return Instance({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}});
    }
    throw Error("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"two-cycle", "single-edge", "blocked", "triangle"}; }

Instance generate(const GenSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case GenKind::random: return gen_random(spec);
        case GenKind::mas: return gen_mas(gen_random_digraph(spec.nodes, spec.edges, spec.seed));
        case GenKind::khandekar:
            return gen_khandekar(spec.nodes, spec.list_size, spec.edges, spec.seed, spec.weight_min,
                                 spec.weight_max);
        case GenKind::dag: return gen_mas(gen_random_dag(spec.nodes, spec.edge_probability, spec.seed));
        case GenKind::fixture: return fixture(spec.fixture_name);
    }
    throw Error("unknown generator kind");
}

bool is_acyclic(const Digraph& g) {
    std::vector<std::size_t> indegree(g.node_count, 0);
    std::vector<std::vector<NodeId>> out(g.node_count);
    for (const Edge& e : g.edges) {
        out[e.tail].push_back(e.head);
        ++indegree[e.head];
    }
    std::deque<NodeId> ready;
    for (NodeId v = 0; v < g.node_count; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
        const NodeId v = ready.front();
        ready.pop_front();
        ++visited;
        for (NodeId w : out[v]) {
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    return visited == g.node_count;
}

std::vector<Instance> generate_suite(const SuiteSpec& suite, std::uint64_t seed) {
    if (suite.min_nodes < 2 || suite.min_nodes > suite.max_nodes) throw Error("invalid suite node range");
    std::vector<Instance> out;
    out.reserve(suite.count);
    for (std::size_t i = 0; i < suite.count; ++i) {
        Rng rng(mix_seed(seed, i));
        GenSpec spec = suite.base;
        spec.kind = GenKind::random;
        spec.nodes = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(suite.min_nodes),
                                                          static_cast<std::int64_t>(suite.max_nodes)));
        spec.edges = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(spec.nodes * (spec.nodes - 1))));
        spec.seed = rng.next();
        out.push_back(gen_random(spec));
    }
    return out;
}

}  // namespace rmas
