#include "liftcut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "liftcut/errors.hpp"
#include "liftcut/log.hpp"
#include "liftcut/rng.hpp"

namespace liftcut {

Graph::Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count) {
    if (node_count == 0) throw ValidationError("graph must have at least one node");
    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw ValidationError("edge endpoint out of range: (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ") with n=" +
                                  std::to_string(node_count));
        if (u == v)
            throw ValidationError("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edge_count_ = static_cast<std::int64_t>(edges.size());

    offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

    adjacency_.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        adjacency_[static_cast<std::size_t>(cursor[u]++)] = v;
        adjacency_[static_cast<std::size_t>(cursor[v]++)] = u;
    }
    for (NodeId v = 0; v < node_count; ++v) {
        auto nbrs = neighbors(v);
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
        max_degree_ = std::max(max_degree_, degree(v));
    }
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId u = 0; u < node_count_; ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeStats Graph::degree_stats() const {
    DegreeStats s;
    const double n = static_cast<double>(node_count_);
    s.mean = 2.0 * static_cast<double>(edge_count_) / n;
    double acc = 0.0;
    for (NodeId v = 0; v < node_count_; ++v) {
        const double d = static_cast<double>(degree(v)) - s.mean;
        acc += d * d;
    }
    s.variance = acc / n;
    s.std_dev = std::sqrt(s.variance);
    return s;
}

std::vector<std::vector<NodeId>> Graph::connected_components() const {
    std::vector<std::vector<NodeId>> components;
    std::vector<bool> seen(node_count_, false);
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < node_count_; ++root) {
        if (seen[root]) continue;
        std::vector<NodeId> comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (NodeId u : neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
    std::vector<NodeId> local(node_count_, node_count_);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v : nodes)
        for (NodeId u : neighbors(v))
            if (v < u && local[u] != node_count_)
                edges.emplace_back(local[v], local[u]);
    return Graph(static_cast<NodeId>(nodes.size()), std::move(edges));
}

void Graph::laplacian_apply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != node_count_ || y.size() != node_count_)
        throw ShapeError("laplacian_apply: expected vectors of length " +
                         std::to_string(node_count_));
    for (NodeId v = 0; v < node_count_; ++v) {
        double acc = 0.0;
        for (std::int64_t k = offsets_[v]; k < offsets_[v + 1]; ++k)
            acc += x[adjacency_[static_cast<std::size_t>(k)]];
        y[v] = static_cast<double>(degree(v)) * x[v] - acc;
    }
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '%' || c == '#';
    }
    return true;  // blank
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    bool saw_weights = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header \"n m\"");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected edge \"u v [w]\"");
        double w;
        if (ls >> w) saw_weights = true;
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("line " + std::to_string(line_no) + ": node id out of range [1, " +
                             std::to_string(n) + "]");
        if (u == v)
            throw ValidationError("line " + std::to_string(line_no) + ": self-loop at node " +
                                  std::to_string(u));
        edges.emplace_back(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
    }
    if (n < 0) throw ParseError("empty input: missing \"n m\" header");
    if (saw_weights)
        warn("edge weights present in input are ignored (unweighted MaxCut)");
    return Graph(static_cast<NodeId>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << serialize_edge_list(g);
}

Graph generate_er(NodeId n, double p, std::uint64_t seed) {
    if (n < 1) throw ValidationError("generate_er: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("generate_er: p must lie in [0, 1]");
    const RngStream stream = RngStream(seed).split({0x4552u});  // "ER"
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (p > 0.0) edges.reserve(static_cast<std::size_t>(p * n * (n - 1.0) / 2.0 * 1.05) + 16);
    std::uint64_t pair_index = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v, ++pair_index) {
            if (stream.unit_at(pair_index) < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

} // namespace liftcut
