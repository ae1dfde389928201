#include "rmas/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

namespace rmas {

Instance::Instance(std::vector<std::vector<Label>> label_lists, std::vector<Edge> edges)
    : lists_(std::move(label_lists)), edges_(std::move(edges)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        auto& list = lists_[v];
        if (list.empty()) {
            throw InvalidInstance("node " + std::to_string(v) + " has an empty label list");
        }
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.tail >= lists_.size() || e.head >= lists_.size()) {
            throw InvalidInstance("edge " + std::to_string(i) + " references a missing node");
        }
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
            throw InvalidInstance("edge " + std::to_string(i) +
                                  " has a negative or non-finite weight");
        }
    }
}

bool Instance::allows(NodeId v, Label l) const {
    return std::binary_search(lists_[v].begin(), lists_[v].end(), l);
}

std::size_t Instance::labeling_count() const {
    constexpr auto limit = std::numeric_limits<std::size_t>::max();
    std::size_t product = 1;
    for (const auto& list : lists_) {
        if (product > limit / list.size()) return limit;
        product *= list.size();
    }
    return product;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

template <class T>
std::optional<T> parse_number(std::string_view token) {
    T value{};
    const char* first = token.data();
    const char* last = first + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

template <class T>
T expect_number(std::string_view token, std::size_t line, const char* what) {
    auto v = parse_number<T>(token);
    if (!v) throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    return *v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::optional<std::size_t> node_count;
    std::vector<std::vector<Label>> lists;
    std::vector<bool> seen;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;

        const std::string_view directive = tokens.front();
        if (!node_count) {
            if (directive != "nodes" || tokens.size() != 2) {
                throw ParseError(line_no, "first directive must be 'nodes <n>'");
            }
            node_count = expect_number<std::size_t>(tokens[1], line_no, "node count");
            lists.resize(*node_count);
            seen.assign(*node_count, false);
        } else if (directive == "labels") {
            if (tokens.size() < 3) throw ParseError(line_no, "'labels' needs a node and at least one label");
            auto v = expect_number<std::size_t>(tokens[1], line_no, "node index");
            if (v >= *node_count) throw ParseError(line_no, "node index " + std::to_string(v) + " out of range");
            if (seen[v]) throw ParseError(line_no, "duplicate 'labels' line for node " + std::to_string(v));
            seen[v] = true;
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                lists[v].push_back(expect_number<Label>(tokens[t], line_no, "integer label"));
            }
        } else if (directive == "edge") {
            if (tokens.size() != 4) throw ParseError(line_no, "'edge' needs tail, head and weight");
            Edge e;
            e.tail = expect_number<std::size_t>(tokens[1], line_no, "tail index");
            e.head = expect_number<std::size_t>(tokens[2], line_no, "head index");
            if (e.tail >= *node_count || e.head >= *node_count) {
                throw ParseError(line_no, "edge endpoint out of range");
            }
            e.weight = expect_number<double>(tokens[3], line_no, "weight");
            if (!std::isfinite(e.weight)) throw ParseError(line_no, "weight must be finite");
            if (e.weight < 0.0) throw ParseError(line_no, "negative weight");
            edges.push_back(e);
        } else if (directive == "nodes") {
            throw ParseError(line_no, "duplicate 'nodes' directive");
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
        }
    }

    if (!node_count) throw ParseError(line_no, "missing 'nodes' directive");
    for (std::size_t v = 0; v < *node_count; ++v) {
        if (!seen[v]) throw ParseError(line_no, "missing 'labels' line for node " + std::to_string(v));
    }
    return Instance(std::move(lists), std::move(edges));
}

namespace {

void append_double(std::string& out, double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, ptr);
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::string out = "nodes " + std::to_string(inst.node_count()) + "\n";
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        out += "labels " + std::to_string(v);
        for (Label l : inst.labels(v)) out += " " + std::to_string(l);
        out += "\n";
    }
    for (const Edge& e : inst.edges()) {
        out += "edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + " ";
        append_double(out, e.weight);
        out += "\n";
    }
    return out;
}

FilterReport filter_edges(const Instance& inst) {
    FilterReport report;
    std::vector<Edge> kept;
    kept.reserve(inst.edge_count());
    const auto& edges = inst.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.tail == e.head) {
            report.removed.push_back({i, e, RemovalReason::self_loop});
            report.removed_weight += e.weight;
        } else if (inst.min_label(e.tail) >= inst.max_label(e.head)) {
            report.removed.push_back({i, e, RemovalReason::blocked});
            report.removed_weight += e.weight;
        } else {
            kept.push_back(e);
        }
    }
    report.kept = Instance(inst.label_lists(), std::move(kept));
    return report;
}

void check_labeling(const Instance& inst, const Labeling& labeling) {
    if (labeling.size() != inst.node_count()) {
        throw InfeasibleLabeling("labeling has " + std::to_string(labeling.size()) +
                                 " entries for " + std::to_string(inst.node_count()) + " nodes");
    }
    for (NodeId v = 0; v < inst.node_count(); ++v) {
        if (!inst.allows(v, labeling[v])) {
            throw InfeasibleLabeling("label " + std::to_string(labeling[v]) +
                                     " is not in the list of node " + std::to_string(v));
        }
    }
}

double evaluate(const Instance& inst, const Labeling& labeling) {
    check_labeling(inst, labeling);
    double value = 0.0;
    for (const Edge& e : inst.edges()) {
        if (labeling[e.tail] < labeling[e.head]) value += e.weight;
    }
    return value;
}

double total_weight(const Instance& inst) {
    double w = 0.0;
    for (const Edge& e : inst.edges()) w += e.weight;
    return w;
}

std::string_view to_string(RemovalReason reason) {
    switch (reason) {
        case RemovalReason::blocked: return "blocked";
        case RemovalReason::self_loop: return "self-loop";
    }
    return "unknown";
}

}  // namespace rmas
