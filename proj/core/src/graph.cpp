#include "chromabounds/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace chromabounds {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    if (n > 62)
        throw ResourceLimitError("vertex count " + std::to_string(n) + " exceeds the cap of 62");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("edge " + edge_str(u, v) + " is a loop");
        if (u < 0 || v >= n)
            throw std::invalid_argument("edge " + edge_str(u, v) +
                                        " out of range for order " + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("duplicate edge " + edge_str(dup->first, dup->second));
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)] |= 1ull << v;
        adj_[static_cast<std::size_t>(v)] |= 1ull << u;
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1ull;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        throw std::invalid_argument("edge " + edge_str(u, v) + " is not in the graph");
    return static_cast<int>(it - edges_.begin());
}

Graph generate(GraphFamily family, int n) {
    if (n < 1) throw std::invalid_argument("family graphs need order >= 1");
    std::vector<Edge> edges;
    switch (family) {
        case GraphFamily::empty:
            break;
        case GraphFamily::path:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case GraphFamily::cycle:
            if (n < 3) throw std::invalid_argument("cycles need order >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({0, n - 1});
            break;
        case GraphFamily::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            break;
        case GraphFamily::star:
            for (int v = 1; v < n; ++v) edges.push_back({0, v});
            break;
    }
    return Graph(n, std::move(edges));
}

Graph graph_from_edge_bits(int n, std::uint64_t bits) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::popcount(bits)));
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((bits >> idx) & 1ull) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

namespace {

// Connectivity straight off the bitmask, cheap enough for the 2^21 sweep.
bool mask_connected(int n, std::uint64_t bits) {
    if (n <= 1) return true;
    std::uint64_t adj[7] = {};
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((bits >> idx) & 1ull) {
                adj[u] |= 1ull << v;
                adj[v] |= 1ull << u;
            }
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        while (frontier != 0) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1ull << n) - 1;
}

}  // namespace

void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<bool(const Graph&)>& visit) {
    if (n < 1)
        throw std::invalid_argument("labeled enumeration needs n >= 1, got " + std::to_string(n));
    if (n > 7)
        throw ResourceLimitError("labeled enumeration supports 1 <= n <= 7, got " +
                                 std::to_string(n));
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (1ull << pairs); ++bits) {
        if (connected_only && !mask_connected(n, bits)) continue;
        if (!visit(graph_from_edge_bits(n, bits))) return;
    }
}

std::uint64_t count_labeled_graphs(int n, bool connected_only) {
    if (n < 1)
        throw std::invalid_argument("labeled enumeration needs n >= 1, got " + std::to_string(n));
    if (n > 7)
        throw ResourceLimitError("labeled enumeration supports 1 <= n <= 7, got " +
                                 std::to_string(n));
    const int pairs = n * (n - 1) / 2;
    if (!connected_only) return 1ull << pairs;
    std::uint64_t count = 0;
    for (std::uint64_t bits = 0; bits < (1ull << pairs); ++bits)
        if (mask_connected(n, bits)) ++count;
    return count;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, std::popcount(g.adjacency_mask(v)));
    return best;
}

long long triangle_count(const Graph& g) {
    long long total = 0;
    for (const auto& [u, v] : g.edges())
        total += std::popcount(g.adjacency_mask(u) & g.adjacency_mask(v));
    return total / 3;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> result;
    std::uint64_t unvisited = n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
    while (unvisited != 0) {
        int start = std::countr_zero(unvisited);
        std::uint64_t comp = 1ull << start, frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            while (frontier != 0) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.adjacency_mask(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        std::vector<int> vertices;
        for (std::uint64_t rest = comp; rest != 0; rest &= rest - 1)
            vertices.push_back(std::countr_zero(rest));
        result.push_back(std::move(vertices));
        unvisited &= ~comp;
    }
    return result;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1;
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through edge (u,v) = 1 + dist(u,v) in G - e.
    const int n = g.vertex_count();
    int best = -1;
    for (const auto& [u, v] : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(u)] = 0;
        std::vector<int> queue{u};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int w = queue[head];
            if (w == v) break;
            std::uint64_t nbrs = g.adjacency_mask(w);
            for (; nbrs != 0; nbrs &= nbrs - 1) {
                int x = std::countr_zero(nbrs);
                if (w == u && x == v) continue;  // skip the deleted edge
                if (dist[static_cast<std::size_t>(x)] < 0) {
                    dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(w)] + 1;
                    queue.push_back(x);
                }
            }
        }
        if (int d = dist[static_cast<std::size_t>(v)]; d >= 0 && (best < 0 || d + 1 < best))
            best = d + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nbrs;
        for (std::uint64_t rest = g.adjacency_mask(v); rest != 0; rest &= rest - 1)
            nbrs.push_back(std::countr_zero(rest));
        const std::size_t d = nbrs.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) continue;
                for (std::size_t k = j + 1; k < d; ++k)
                    if (!g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]))
                        return false;
            }
    }
    return true;
}

StructuralSummary structural_queries(const Graph& g) {
    StructuralSummary s;
    s.max_degree = max_degree(g);
    s.edge_count = g.edge_count();
    s.triangle_count = triangle_count(g);
    s.component_count = component_count(g);
    s.is_connected = s.component_count <= 1;
    s.is_tree = is_tree(g);
    s.girth = girth(g);
    s.is_claw_free = is_claw_free(g);
    return s;
}

Graph delete_edge(const Graph& g, const Edge& e) {
    int idx = g.edge_index(e.first, e.second);
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + idx);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph& g, const Edge& e) {
    int u = std::min(e.first, e.second);
    int v = std::max(e.first, e.second);
    g.edge_index(u, v);  // existence check
    std::vector<Edge> edges;
    auto remap = [u, v](int w) {
        if (w == v) return u;
        return w > v ? w - 1 : w;
    };
    for (const auto& [a, b] : g.edges()) {
        int x = remap(a), y = remap(b);
        if (x == y) continue;
        edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.vertex_count() - 1, std::move(edges));
}

EdgeOrdering::EdgeOrdering(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    std::vector<bool> seen(ranks_.size() + 1, false);
    for (int r : ranks_) {
        if (r < 1 || r > static_cast<int>(ranks_.size()) || seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("edge ordering is not a bijection onto 1.." +
                                        std::to_string(ranks_.size()));
        seen[static_cast<std::size_t>(r)] = true;
    }
}

EdgeOrdering EdgeOrdering::identity(const Graph& g) {
    std::vector<int> ranks(static_cast<std::size_t>(g.edge_count()));
    std::iota(ranks.begin(), ranks.end(), 1);
    return EdgeOrdering(std::move(ranks));
}

EdgeOrdering EdgeOrdering::random(const Graph& g, std::uint64_t seed) {
    std::vector<int> ranks(static_cast<std::size_t>(g.edge_count()));
    std::iota(ranks.begin(), ranks.end(), 1);
    std::mt19937_64 rng(seed);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    return EdgeOrdering(std::move(ranks));
}

}  // namespace chromabounds
