#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace liftcut {

using NodeId = std::uint32_t;

struct DegreeStats {
    double mean = 0.0;
    double variance = 0.0;
    double std_dev = 0.0;
};

/// Immutable undirected simple graph in CSR form. Neighbor lists are sorted,
/// self-loops and duplicate edges are rejected/collapsed at build time.
class Graph {
public:
    /// Builds from an edge list (0-based endpoints). Duplicates are collapsed;
    /// self-loops throw ValidationError; endpoints out of [0, n) throw.
    Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return node_count_; }
    std::int64_t edge_count() const { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }

    std::int64_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::int64_t max_degree() const { return max_degree_; }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    DegreeStats degree_stats() const;

    /// Maximal connected node sets, ordered by smallest member.
    std::vector<std::vector<NodeId>> connected_components() const;

    /// Induced subgraph on `nodes` with ids relabeled to 0..k-1 in the given order.
    Graph induced_subgraph(std::span<const NodeId> nodes) const;

    /// y = Lx = Dx - Ax for one n-vector. Fixed per-node summation order.
    void laplacian_apply(std::span<const double> x, std::span<double> y) const;

private:
    NodeId node_count_;
    std::int64_t edge_count_ = 0;
    std::int64_t max_degree_ = 0;
    std::vector<std::int64_t> offsets_;  // size n+1
    std::vector<NodeId> adjacency_;      // size 2m, sorted per node
};

/// Parses Gset-style text: "n m" header, then 1-based "u v [w]" lines.
/// Lines starting with '%' or '#' are comments. Weights are ignored with a
/// warning (see log.hpp for the warning sink).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Canonical serialization: "n m" header then sorted 1-based "u v" lines.
std::string serialize_edge_list(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

/// Erdos-Renyi G(n, p): each unordered pair drawn independently under a
/// counter-based stream keyed by `seed`, in fixed (u < v) row-major order.
Graph generate_er(NodeId n, double p, std::uint64_t seed);

} // namespace liftcut
