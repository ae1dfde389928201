#pragma once

#include <cstddef>
#include <vector>

#include "rmas/instance.hpp"

namespace rmas {

/// Plain weighted directed graph, the input of maximum acyclic subgraph.
struct Digraph {
    std::size_t node_count = 0;
    std::vector<Edge> edges;

    double total_weight() const {
        double w = 0.0;
        for (const Edge& e : edges) w += e.weight;
        return w;
    }
};

}  // namespace rmas
