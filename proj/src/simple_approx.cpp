#include "rmas/simple_approx.hpp"

#include "rmas/rng.hpp"

namespace rmas {

MinMaxDistribution all_coin(const Instance& inst) {
    MinMaxDistribution state;
    state.reserve(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        state.push_back(MinMaxNode::coin(inst.min_label(v), inst.max_label(v)));
    }
    return state;
}

Labeling sample_minmax(const Instance& inst, std::uint64_t seed) {
    // Filtering only removes edges, and the draw depends on the lists alone,
    // so the labeling is the same on the filtered instance.
    Rng rng(seed);
    std::vector<Label> labels(inst.node_count());
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        labels[v] = rng.coin() ? inst.max_label(v) : inst.min_label(v);
    }
    return Labeling(std::move(labels));
}

namespace {

// P[label(a) < label(b)] by enumerating the at most four outcome pairs.
double forward_probability(const MinMaxNode& a, const MinMaxNode& b) {
    const double pa = a.is_fixed() ? 1.0 : 0.5;
    const double pb = b.is_fixed() ? 1.0 : 0.5;
    const Label as[2] = {a.low, a.high};
    const Label bs[2] = {b.low, b.high};
    const int na = a.is_fixed() ? 1 : 2;
    const int nb = b.is_fixed() ? 1 : 2;
    double p = 0.0;
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            if (as[i] < bs[j]) p += pa * pb;
        }
    }
    return p;
}

}  // namespace

double expected_minmax(const Instance& inst, const MinMaxDistribution& state) {
    double expected = 0.0;
    for (const Edge& e : inst.edges()) {
        expected += e.weight * forward_probability(state[e.tail], state[e.head]);
    }
    return expected;
}

DerandomizedResult derandomize_minmax(const Instance& inst) {
    const Instance filtered = filter_edges(inst).kept;
    MinMaxDistribution state = all_coin(filtered);

    DerandomizedResult result;
    result.trace.push_back(expected_minmax(filtered, state));
    for (NodeId v = 0; v < filtered.node_count(); ++v) {
        const MinMaxNode original = state[v];
        if (original.is_fixed()) {
            result.trace.push_back(result.trace.back());
            continue;
        }
        state[v] = MinMaxNode::fixed(original.low);
        const double with_low = expected_minmax(filtered, state);
        state[v] = MinMaxNode::fixed(original.high);
        const double with_high = expected_minmax(filtered, state);
        if (with_high > with_low) {
            result.trace.push_back(with_high);
        } else {
            state[v] = MinMaxNode::fixed(original.low);
            result.trace.push_back(with_low);
        }
    }

    std::vector<Label> labels(state.size());
    for (NodeId v = 0; v < state.size(); ++v) labels[v] = state[v].low;
    result.labeling = Labeling(std::move(labels));
    result.value = evaluate(inst, result.labeling);
    return result;
}

}  // namespace rmas
