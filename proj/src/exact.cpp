#include "rmas/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace rmas {

CapExceeded::CapExceeded(std::size_t required, std::size_t cap)
    : Error("search space of " + std::to_string(required) + " exceeds the cap of " +
            std::to_string(cap)),
      required_(required),
      cap_(cap) {}

OptResult brute_force_opt(const Instance& inst, std::size_t cap) {
    const std::size_t total = inst.labeling_count();
    if (total > cap) throw CapExceeded(total, cap);

    const std::size_t n = inst.node_count();
    std::vector<std::size_t> digit(n, 0);
    std::vector<Label> current(n);
    for (NodeId v = 0; v < n; ++v) current[v] = inst.labels(v).front();

    OptResult best;
    best.labeling = Labeling(current);
    best.value = -1.0;
    const auto& edges = inst.edges();

    for (std::size_t count = 0; count < total; ++count) {
        double value = 0.0;
        for (const Edge& e : edges) {
            if (current[e.tail] < current[e.head]) value += e.weight;
        }
        // Strict improvement keeps the first maximizer in lexicographic order.
        if (value > best.value) {
            best.value = value;
            best.labeling = Labeling(current);
        }
        // Mixed-radix increment, last node fastest.
        for (std::size_t k = n; k-- > 0;) {
            auto list = inst.labels(k);
            if (++digit[k] < list.size()) {
                current[k] = list[digit[k]];
                break;
            }
            digit[k] = 0;
            current[k] = list.front();
        }
    }
    best.enumerated_count = total;
    return best;
}

namespace {

double cut_weight(const Digraph& g, std::uint32_t in_source) {
    double w = 0.0;
    for (const Edge& e : g.edges) {
        const bool tail_in = (in_source >> e.tail) & 1u;
        const bool head_in = (in_source >> e.head) & 1u;
        if (tail_in && !head_in) w += e.weight;
    }
    return w;
}

}  // namespace

double max_dicut(const Digraph& g) {
    const std::size_t n = g.node_count;
    if (n > kMaxDicutNodes) throw CapExceeded(std::size_t{1} << std::min<std::size_t>(n, 63), std::size_t{1} << kMaxDicutNodes);
    if (n == 0) return 0.0;

    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.tail >= n || e.head >= n) throw InvalidInstance("edge endpoint out of range");
        if (e.tail == e.head) continue;
        incident[e.tail].push_back(i);
        incident[e.head].push_back(i);
    }

    // Gray-code walk over all subsets, updating the cut by the flipped node's
    // incident edges. The winner is re-evaluated from scratch at the end.
    std::uint32_t mask = 0;
    double cut = 0.0;
    double best = 0.0;
    std::uint32_t best_mask = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < subsets; ++step) {
        const auto v = static_cast<std::size_t>(std::countr_zero(step));
        const std::uint32_t next = mask ^ (std::uint32_t{1} << v);
        for (std::size_t i : incident[v]) {
            const Edge& e = g.edges[i];
            const bool before = ((mask >> e.tail) & 1u) && !((mask >> e.head) & 1u);
            const bool after = ((next >> e.tail) & 1u) && !((next >> e.head) & 1u);
            if (before != after) cut += after ? e.weight : -e.weight;
        }
        mask = next;
        if (cut > best) {
            best = cut;
            best_mask = mask;
        }
    }
    return cut_weight(g, best_mask);
}

}  // namespace rmas
