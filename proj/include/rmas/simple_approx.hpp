#pragma once

#include <cstdint>
#include <vector>

#include "rmas/instance.hpp"

namespace rmas {

/// State of one node under the min/max coin algorithm: either pinned to a
/// single label, or a fair coin between the ends of its list.
struct MinMaxNode {
    Label low = 0;
    Label high = 0;

    static MinMaxNode fixed(Label l) { return {l, l}; }
    static MinMaxNode coin(Label lo, Label hi) { return {lo, hi}; }
    bool is_fixed() const { return low == high; }

    friend bool operator==(const MinMaxNode&, const MinMaxNode&) = default;
};

using MinMaxDistribution = std::vector<MinMaxNode>;

/// Every node flips between min L_v and max L_v; singleton lists are fixed.
MinMaxDistribution all_coin(const Instance& inst);

/// One draw of the randomized algorithm: each node takes its minimum or
/// maximum label on a fair coin from Rng(seed).
Labeling sample_minmax(const Instance& inst, std::uint64_t seed);

/// Exact E[value] when nodes draw independently from `state`.
double expected_minmax(const Instance& inst, const MinMaxDistribution& state);

struct DerandomizedResult {
    Labeling labeling;
    double value = 0.0;
    /// Conditional expectation before any node is fixed, then after each node.
    std::vector<double> trace;
};

/// Conditional-expectation derandomization of the coin algorithm. Nodes are
/// fixed in index order; a tie keeps the minimum label. The result is at
/// least W/4 of the filtered instance.
DerandomizedResult derandomize_minmax(const Instance& inst);

}  // namespace rmas
