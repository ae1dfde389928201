#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rmas {

using Label = std::int64_t;
using NodeId = std::size_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInstance : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InfeasibleLabeling : public Error {
public:
    using Error::Error;
};

struct Edge {
    NodeId tail = 0;
    NodeId head = 0;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One label per node, in node-index order.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

    std::size_t size() const { return labels_.size(); }
    Label operator[](NodeId v) const { return labels_[v]; }
    Label& operator[](NodeId v) { return labels_[v]; }
    std::span<const Label> labels() const { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;
    friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
    std::vector<Label> labels_;
};

/// A restricted maximum acyclic subgraph instance: a directed multigraph whose
/// nodes each carry an explicit list of admissible integer labels.
///
/// Label lists are kept sorted ascending without duplicates. Self-loops are
/// accepted here and dropped by filter_edges().
class Instance {
public:
    Instance() = default;

    /// Sorts and deduplicates every list, then validates. Throws
    /// InvalidInstance on an empty list, a bad endpoint or a negative weight.
    Instance(std::vector<std::vector<Label>> label_lists, std::vector<Edge> edges);

    std::size_t node_count() const { return lists_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Label> labels(NodeId v) const { return lists_[v]; }
    const std::vector<std::vector<Label>>& label_lists() const { return lists_; }
    const std::vector<Edge>& edges() const { return edges_; }

    Label min_label(NodeId v) const { return lists_[v].front(); }
    Label max_label(NodeId v) const { return lists_[v].back(); }
    bool allows(NodeId v, Label l) const;

    /// Product of list sizes, saturating at SIZE_MAX.
    std::size_t labeling_count() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<std::vector<Label>> lists_;
    std::vector<Edge> edges_;
};

enum class RemovalReason { blocked, self_loop };

struct RemovedEdge {
    std::size_t index = 0;  // position in the original edge list
    Edge edge;
    RemovalReason reason = RemovalReason::blocked;
};

struct FilterReport {
    Instance kept;
    std::vector<RemovedEdge> removed;
    double removed_weight = 0.0;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

/// Drops every edge that can never point forward: self-loops and edges with
/// min L_tail >= max L_head. The optimum is unchanged.
FilterReport filter_edges(const Instance& inst);

/// Total weight of edges whose head label strictly exceeds the tail label.
double evaluate(const Instance& inst, const Labeling& labeling);

/// Throws InfeasibleLabeling unless every node carries a label from its list.
void check_labeling(const Instance& inst, const Labeling& labeling);

double total_weight(const Instance& inst);

std::string_view to_string(RemovalReason reason);

}  // namespace rmas
