#pragma once

#include <cstddef>

#include "rmas/digraph.hpp"
#include "rmas/instance.hpp"

namespace rmas {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::size_t kMaxDicutNodes = 24;

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t required, std::size_t cap);
    std::size_t required() const { return required_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t required_;
    std::size_t cap_;
};

struct OptResult {
    Labeling labeling;
    double value = 0.0;
    std::size_t enumerated_count = 0;
};

/// Exhaustive search over every feasible labeling. Among maximizers the
/// lexicographically smallest labeling vector is returned. Throws CapExceeded
/// when the product of list sizes exceeds `cap`.
OptResult brute_force_opt(const Instance& inst, std::size_t cap = kDefaultEnumerationCap);

/// Maximum weight of edges leaving S, over all S ⊆ V. Throws CapExceeded for
/// graphs with more than kMaxDicutNodes nodes.
double max_dicut(const Digraph& g);

}  // namespace rmas
