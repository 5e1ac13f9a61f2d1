#include "chromabounds/chromatic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace chromabounds {

namespace {

struct Compact {
    int n = 0;
    std::array<std::uint16_t, kMaxRecursionVertices> adj{};
};

Compact to_compact(const Graph& g) {
    Compact c;
    c.n = g.vertex_count();
    for (int v = 0; v < c.n; ++v)
        c.adj[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(g.adjacency_mask(v));
    return c;
}

using Poly64 = std::vector<std::int64_t>;

Poly64 multiply(const Poly64& a, const Poly64& b) {
    Poly64 c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace

std::size_t DeletionContractionEngine::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ull;
    h ^= k.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
}

struct DcRecursion {
    DeletionContractionEngine& engine;

    static DeletionContractionEngine::Key key_of(const Compact& g) {
        std::uint64_t lo = 0, hi = 0;
        int bit = 0;
        for (int v = 1; v < g.n; ++v) {
            std::uint16_t row = static_cast<std::uint16_t>(
                g.adj[static_cast<std::size_t>(v)] & ((1u << v) - 1u));
            // edge (u,v) for u < v lands at bit t(v)+u, t(v) = v(v-1)/2
            for (; row != 0; row &= static_cast<std::uint16_t>(row - 1)) {
                int idx = bit + std::countr_zero(row);
                if (idx < 64)
                    lo |= 1ull << idx;
                else
                    hi |= 1ull << (idx - 64);
            }
            bit += v;
        }
        hi |= static_cast<std::uint64_t>(g.n) << 32;
        return {lo, hi};
    }

    Poly64 run(const Compact& g) {
        // edgeless: P = x^n
        bool has_edges = false;
        for (int v = 0; v < g.n && !has_edges; ++v)
            has_edges = g.adj[static_cast<std::size_t>(v)] != 0;
        if (!has_edges) {
            Poly64 p(static_cast<std::size_t>(g.n) + 1, 0);
            p.back() = 1;
            return p;
        }

        auto key = key_of(g);
        if (auto it = engine.memo_.find(key); it != engine.memo_.end()) return it->second;

        Poly64 result;
        std::uint16_t comp = component_mask(g, 0);
        const std::uint16_t full = static_cast<std::uint16_t>((1u << g.n) - 1u);
        if (comp != full) {
            result = multiply(run(induced(g, comp)), run(induced(g, full & ~comp)));
        } else {
            // lexicographically smallest edge (u,v)
            int u = 0;
            std::uint16_t above = 0;
            for (; u < g.n; ++u) {
                above = static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(u)] &
                                                   ~((1u << (u + 1)) - 1u));
                if (above != 0) break;
            }
            const int v = std::countr_zero(above);

            Compact del = g;
            del.adj[static_cast<std::size_t>(u)] &= static_cast<std::uint16_t>(~(1u << v));
            del.adj[static_cast<std::size_t>(v)] &= static_cast<std::uint16_t>(~(1u << u));
            result = run(del);

            Poly64 con = run(contract(g, u, v));
            for (std::size_t i = 0; i < con.size(); ++i) result[i] -= con[i];
        }
        engine.memo_.emplace(key, result);
        return result;
    }

    static std::uint16_t component_mask(const Compact& g, int start) {
        std::uint16_t seen = static_cast<std::uint16_t>(1u << start), frontier = seen;
        while (frontier != 0) {
            std::uint16_t next = 0;
            for (std::uint16_t rest = frontier; rest != 0;
                 rest &= static_cast<std::uint16_t>(rest - 1))
                next |= g.adj[static_cast<std::size_t>(std::countr_zero(rest))];
            frontier = static_cast<std::uint16_t>(next & ~seen);
            seen |= next;
        }
        return seen;
    }

    static Compact induced(const Compact& g, std::uint16_t mask) {
        Compact out;
        std::array<int, kMaxRecursionVertices> newindex{};
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1u) newindex[static_cast<std::size_t>(v)] = out.n++;
        for (int v = 0; v < g.n; ++v) {
            if (!((mask >> v) & 1u)) continue;
            std::uint16_t row = static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(v)] & mask);
            std::uint16_t packed = 0;
            for (; row != 0; row &= static_cast<std::uint16_t>(row - 1))
                packed |= static_cast<std::uint16_t>(
                    1u << newindex[static_cast<std::size_t>(std::countr_zero(row))]);
            out.adj[static_cast<std::size_t>(newindex[static_cast<std::size_t>(v)])] = packed;
        }
        return out;
    }

    // Merge v into u (u < v), drop index v, collapse parallel edges.
    static Compact contract(const Compact& g, int u, int v) {
        Compact out;
        out.n = g.n - 1;
        const std::uint16_t below_v = static_cast<std::uint16_t>((1u << v) - 1u);
        for (int w = 0, t = 0; w < g.n; ++w) {
            if (w == v) continue;
            std::uint16_t row = g.adj[static_cast<std::size_t>(w)];
            if (w == u)
                row |= g.adj[static_cast<std::size_t>(v)];
            else if ((row >> v) & 1u)
                row |= static_cast<std::uint16_t>(1u << u);
            row &= static_cast<std::uint16_t>(~(1u << v));
            row = static_cast<std::uint16_t>((row & below_v) | ((row >> 1) & ~below_v));
            if (w == u) row &= static_cast<std::uint16_t>(~(1u << u));
            out.adj[static_cast<std::size_t>(t++)] = row;
        }
        return out;
    }
};

IntPolynomial DeletionContractionEngine::compute(const Graph& g) {
    auto raw = compute_small(g);
    std::vector<BigInt> coeffs(raw.begin(), raw.end());
    return IntPolynomial(std::move(coeffs));
}

std::vector<std::int64_t> DeletionContractionEngine::compute_small(const Graph& g) {
    if (g.vertex_count() > kMaxRecursionVertices)
        throw ResourceLimitError("deletion-contraction supports order <= " +
                                 std::to_string(kMaxRecursionVertices) + ", got " +
                                 std::to_string(g.vertex_count()));
    return DcRecursion{*this}.run(to_compact(g));
}

IntPolynomial chromatic_deletion_contraction(const Graph& g) {
    DeletionContractionEngine engine;
    return engine.compute(g);
}

IntPolynomial chromatic_inclusion_exclusion(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > kMaxSubsetEdges)
        throw ResourceLimitError("inclusion-exclusion supports |E| <= " +
                                 std::to_string(kMaxSubsetEdges) + ", got " + std::to_string(m));
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
    std::array<std::int8_t, 62> parent{};
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(v);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        int kappa = n;
        for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
            const auto& [a, b] = g.edges()[static_cast<std::size_t>(std::countr_zero(rest))];
            int ra = find(a), rb = find(b);
            if (ra != rb) {
                parent[static_cast<std::size_t>(ra)] = static_cast<std::int8_t>(rb);
                --kappa;
            }
        }
        coeffs[static_cast<std::size_t>(kappa)] += std::popcount(subset) % 2 == 0 ? 1 : -1;
    }
    return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

std::vector<std::uint32_t> enumerate_cycle_edge_masks(const Graph& g) {
    const int m = g.edge_count();
    if (m > kMaxSubsetEdges)
        throw ResourceLimitError("cycle enumeration supports |E| <= " +
                                 std::to_string(kMaxSubsetEdges) + ", got " + std::to_string(m));
    std::vector<std::uint32_t> cycles;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::uint64_t on_path = 0;

    // Simple paths from s through vertices > s; closing back to s, with the
    // direction fixed by path[1] < path.back(), yields each cycle once.
    auto dfs = [&](auto&& self, int s, int v, std::uint32_t edge_mask) -> void {
        for (std::uint64_t rest = g.adjacency_mask(v); rest != 0; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                cycles.push_back(edge_mask |
                                 (1u << static_cast<std::uint32_t>(g.edge_index(v, s))));
                continue;
            }
            if (w <= s || ((on_path >> w) & 1ull)) continue;
            path.push_back(w);
            on_path |= 1ull << w;
            self(self, s, w, edge_mask | (1u << static_cast<std::uint32_t>(g.edge_index(v, w))));
            on_path &= ~(1ull << w);
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path = 1ull << s;
        dfs(dfs, s, s, 0);
    }
    return cycles;
}

IntPolynomial chromatic_broken_cycle(const Graph& g, const EdgeOrdering& eta) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (eta.size() != m)
        throw std::invalid_argument("edge ordering size " + std::to_string(eta.size()) +
                                    " does not match |E| = " + std::to_string(m));
    if (m > kMaxSubsetEdges)
        throw ResourceLimitError("broken-cycle expansion supports |E| <= " +
                                 std::to_string(kMaxSubsetEdges) + ", got " + std::to_string(m));

    // Broken cycle: cycle minus its eta-minimal edge.
    std::vector<std::uint32_t> broken;
    for (std::uint32_t cycle : enumerate_cycle_edge_masks(g)) {
        int best = -1, best_rank = m + 1;
        for (std::uint32_t rest = cycle; rest != 0; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            if (eta.rank(e) < best_rank) {
                best_rank = eta.rank(e);
                best = e;
            }
        }
        broken.push_back(cycle & ~(1u << static_cast<std::uint32_t>(best)));
    }

    // Keep only inclusion-minimal masks; supersets test positive anyway.
    std::sort(broken.begin(), broken.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    broken.erase(std::unique(broken.begin(), broken.end()), broken.end());
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t mask : broken) {
        bool contains_smaller = false;
        for (std::uint32_t small : minimal)
            if ((mask & small) == small) {
                contains_smaller = true;
                break;
            }
        if (!contains_smaller) minimal.push_back(mask);
    }

    std::vector<std::int64_t> free_count(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        bool ok = true;
        for (std::uint32_t mask : minimal)
            if ((subset & mask) == mask) {
                ok = false;
                break;
            }
        if (!ok) continue;
        int edges = std::popcount(subset);
        if (edges <= n) ++free_count[static_cast<std::size_t>(edges)];
    }

    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        std::int64_t a = free_count[static_cast<std::size_t>(n - i)];
        coeffs[static_cast<std::size_t>(i)] = (n - i) % 2 == 0 ? a : -a;
    }
    return IntPolynomial(std::move(coeffs));
}

long long count_colorings_bruteforce(const Graph& g, long long q) {
    if (q < 0) throw std::invalid_argument("color count must be >= 0");
    const int n = g.vertex_count();
    double budget = std::pow(static_cast<double>(std::max<long long>(q, 1)), n);
    if (budget > static_cast<double>(kBruteForceBudget))
        throw ResourceLimitError("coloring enumeration budget exceeded: q^n = " +
                                 std::to_string(budget) + " > 1e8");
    if (n == 0) return 1;
    if (q == 0) return 0;

    std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) earlier[static_cast<std::size_t>(v)].push_back(u);

    std::vector<long long> color(static_cast<std::size_t>(n), 0);
    long long count = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (long long c = 1; c <= q; ++c) {
            bool ok = true;
            for (int u : earlier[static_cast<std::size_t>(v)])
                if (color[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            self(self, v + 1);
        }
    };
    dfs(dfs, 0);
    return count;
}

int chromatic_number(const Graph& g) {
    DeletionContractionEngine engine;
    IntPolynomial p = engine.compute(g);
    for (int q = 0;; ++q)
        if (p.eval(BigInt(q)) > 0) return q;
}

BigRational mean_color_number_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    double budget = std::pow(static_cast<double>(n), n);
    if (budget > static_cast<double>(kBruteForceBudget))
        throw ResourceLimitError("coloring enumeration budget exceeded: n^n = " +
                                 std::to_string(budget) + " > 1e8");

    std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) earlier[static_cast<std::size_t>(v)].push_back(u);

    std::vector<int> color(static_cast<std::size_t>(n), 0);
    long long colorings = 0, colors_used_total = 0;
    auto dfs = [&](auto&& self, int v, std::uint64_t used) -> void {
        if (v == n) {
            ++colorings;
            colors_used_total += std::popcount(used);
            return;
        }
        for (int c = 1; c <= n; ++c) {
            bool ok = true;
            for (int u : earlier[static_cast<std::size_t>(v)])
                if (color[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            self(self, v + 1, used | (1ull << c));
        }
    };
    dfs(dfs, 0, 0);
    return BigRational(colors_used_total, colorings);
}

}  // namespace chromabounds
