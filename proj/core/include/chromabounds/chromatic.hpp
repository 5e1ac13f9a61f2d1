#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chromabounds/graph.hpp"
#include "chromabounds/polynomial.hpp"

namespace chromabounds {

inline constexpr int kMaxRecursionVertices = 14;
inline constexpr int kMaxSubsetEdges = 24;
inline constexpr long long kBruteForceBudget = 100'000'000;

/// Deletion-contraction with a persistent memo keyed on the exact relabeled
/// edge set, so repeated calls (e.g. a whole catalog sweep) share subproblems.
/// Always recurses on the lexicographically smallest edge and factors over
/// connected components. Intermediate coefficients live in int64: chromatic
/// coefficients count acyclic spanning subgraphs, and forest counts on <= 14
/// labeled vertices stay far below 2^63. Not thread-safe; use one engine per
/// thread.
class DeletionContractionEngine {
public:
    /// P(G, x). Requires vertex_count <= 14 (ResourceLimitError beyond).
    IntPolynomial compute(const Graph& g);

    /// Same result as raw int64 coefficients, ascending degree, size n+1.
    std::vector<std::int64_t> compute_small(const Graph& g);

    std::size_t memo_size() const { return memo_.size(); }
    void clear() { memo_.clear(); }

private:
    struct Key {
        std::uint64_t lo, hi;  // 91 edge bits and the order, packed
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    std::unordered_map<Key, std::vector<std::int64_t>, KeyHash> memo_;

    friend struct DcRecursion;
};

/// One-shot deletion-contraction (fresh memo per call).
IntPolynomial chromatic_deletion_contraction(const Graph& g);

/// Subset inclusion-exclusion over edge subsets: sum of (-1)^|S| x^k(S) with
/// k(S) the component count of (V, S). Requires |E| <= 24.
IntPolynomial chromatic_inclusion_exclusion(const Graph& g);

/// Whitney's broken-cycle expansion under the given edge ordering: the
/// coefficient of x^i is (-1)^(n-i) times the number of spanning subgraphs
/// with n-i edges containing no broken cycle. Requires |E| <= 24.
IntPolynomial chromatic_broken_cycle(const Graph& g, const EdgeOrdering& eta);

/// Edge-index bitmasks of all simple cycles. Requires |E| <= 24.
std::vector<std::uint32_t> enumerate_cycle_edge_masks(const Graph& g);

/// Number of proper colorings with colors {1..q} by direct enumeration with
/// pruning. Requires q^n within the 1e8 budget.
long long count_colorings_bruteforce(const Graph& g, long long q);

/// Least q >= 0 with P(G, q) > 0.
int chromatic_number(const Graph& g);

/// Average number of distinct colors over all proper colorings with n = |V|
/// colors, by direct enumeration. Requires n^n within the 1e8 budget.
BigRational mean_color_number_bruteforce(const Graph& g);

}  // namespace chromabounds
