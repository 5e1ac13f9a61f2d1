#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromabounds/errors.hpp"

namespace chromabounds {

using Edge = std::pair<int, int>;

/// Simple undirected labeled graph on vertices 0..n-1, n <= 62 (the graph6
/// short-form ceiling, adopted library-wide). Edges are stored sorted with
/// u < v; adjacency is mirrored into per-vertex 64-bit masks.
class Graph {
public:
    /// Validates vertex range, rejects loops and duplicate edges; error
    /// messages name the offending edge.
    Graph(int n, std::vector<Edge> edges);
    Graph() : Graph(0, {}) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::uint64_t adjacency_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const;
    /// Index of (u,v) in edges(); throws std::invalid_argument if absent.
    int edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

enum class GraphFamily { empty, path, cycle, complete, star };

/// Canonical family member of the given order. Cycles need n >= 3, the rest
/// n >= 1 (a star of order n is one center joined to n-1 leaves).
Graph generate(GraphFamily family, int n);

/// All 2^C(n,2) labeled graphs of order n (1 <= n <= 7), optionally filtered
/// to connected ones, in ascending edge-bitmask order. The callback may
/// return void, or bool where false stops the sweep early.
void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<bool(const Graph&)>& visit);
std::uint64_t count_labeled_graphs(int n, bool connected_only);

/// The graph of the given upper-triangle edge bitmask; bit t(v)+u with
/// t(v) = v(v-1)/2 encodes edge (u,v), u < v. Inverse of the enumeration order.
Graph graph_from_edge_bits(int n, std::uint64_t bits);

struct StructuralSummary {
    int max_degree = 0;
    int edge_count = 0;
    long long triangle_count = 0;
    int component_count = 0;
    bool is_connected = false;
    bool is_tree = false;
    std::optional<int> girth;  // empty for forests
    bool is_claw_free = false;
};

StructuralSummary structural_queries(const Graph& g);

int max_degree(const Graph& g);
long long triangle_count(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::optional<int> girth(const Graph& g);
/// True when no vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by minimum
/// vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// G - e. The edge must exist.
Graph delete_edge(const Graph& g, const Edge& e);

/// G / e: endpoints merged (keeping the smaller label), parallel edges
/// collapsed, vertices above the removed one shifted down. The edge must exist.
Graph contract_edge(const Graph& g, const Edge& e);

/// Bijection edges -> {1..m}, stored as rank[i] = position of edges()[i].
class EdgeOrdering {
public:
    /// Validates that ranks form a permutation of 1..m.
    explicit EdgeOrdering(std::vector<int> ranks);

    int rank(int edge_index) const { return ranks_[static_cast<std::size_t>(edge_index)]; }
    int size() const { return static_cast<int>(ranks_.size()); }
    const std::vector<int>& ranks() const { return ranks_; }

    static EdgeOrdering identity(const Graph& g);
    static EdgeOrdering random(const Graph& g, std::uint64_t seed);

private:
    std::vector<int> ranks_;
};

}  // namespace chromabounds
