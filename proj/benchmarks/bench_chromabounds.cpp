// Microbenchmarks for the computational kernels. Sizes are picked so every
// benchmark settles in well under a second per iteration batch on one core:
// oracle comparisons use orders where all three algorithms are feasible, and
// the catalog sweeps use order 5 (728 connected graphs) so the persistent-memo
// effect is visible without drowning the run.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "chromabounds/chromatic.hpp"
#include "chromabounds/graph.hpp"
#include "chromabounds/log_derivative.hpp"
#include "chromabounds/monotonicity.hpp"
#include "chromabounds/polynomial.hpp"
#include "chromabounds/rational.hpp"
#include "chromabounds/roots.hpp"

namespace cb = chromabounds;

namespace {

// Mildly dense non-planar test graph: complete graph minus a perfect matching
// (cocktail-party graph), order n (even); plenty of shared subproblems.
cb::Graph cocktail_party(int n) {
    std::vector<cb::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
    return cb::Graph(n, std::move(edges));
}

// Chromatic polynomial of the cycle of order n, (x-1)^n + (-1)^n (x-1),
// built directly so root finding can be benchmarked past the recursion cap.
cb::IntPolynomial cycle_polynomial(int n) {
    cb::IntPolynomial xm1({-1, 1});
    cb::IntPolynomial q = xm1.pow(static_cast<unsigned>(n));
    return (n % 2 == 0) ? q + xm1 : q - xm1;
}

std::vector<cb::Graph> connected_catalog(int n) {
    std::vector<cb::Graph> out;
    cb::enumerate_labeled_graphs(n, true, [&](const cb::Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace

// --------------------------------------------------------------- oracles

static void BM_DeletionContraction_Fresh(benchmark::State& state) {
    const cb::Graph g = cocktail_party(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::chromatic_deletion_contraction(g));
}
BENCHMARK(BM_DeletionContraction_Fresh)->Arg(8)->Arg(10)->Arg(12);

// Whole-catalog sweep with one engine: after the first batch the memo holds
// every subproblem, so steady-state iterations measure lookup, not recursion.
static void BM_DeletionContraction_SharedMemo(benchmark::State& state) {
    const std::vector<cb::Graph> graphs = connected_catalog(static_cast<int>(state.range(0)));
    cb::DeletionContractionEngine engine;
    for (auto _ : state)
        for (const cb::Graph& g : graphs) benchmark::DoNotOptimize(engine.compute(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_DeletionContraction_SharedMemo)->Arg(5)->Arg(6);

// Same sweep with a fresh memo per polynomial, for the amortization contrast.
static void BM_DeletionContraction_FreshPerGraph(benchmark::State& state) {
    const std::vector<cb::Graph> graphs = connected_catalog(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const cb::Graph& g : graphs)
            benchmark::DoNotOptimize(cb::chromatic_deletion_contraction(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_DeletionContraction_FreshPerGraph)->Arg(5)->Arg(6);

static void BM_InclusionExclusion(benchmark::State& state) {
    const cb::Graph g = cb::generate(cb::GraphFamily::complete, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::chromatic_inclusion_exclusion(g));
}
BENCHMARK(BM_InclusionExclusion)->Arg(5)->Arg(6)->Arg(7);

static void BM_BrokenCycle(benchmark::State& state) {
    const cb::Graph g = cb::generate(cb::GraphFamily::complete, static_cast<int>(state.range(0)));
    const cb::EdgeOrdering eta = cb::EdgeOrdering::identity(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::chromatic_broken_cycle(g, eta));
}
BENCHMARK(BM_BrokenCycle)->Arg(5)->Arg(6)->Arg(7);

static void BM_BruteForceColorings(benchmark::State& state) {
    const cb::Graph g = cb::generate(cb::GraphFamily::cycle, static_cast<int>(state.range(0)));
    const long long q = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::count_colorings_bruteforce(g, q));
}
BENCHMARK(BM_BruteForceColorings)->Arg(6)->Arg(7)->Arg(8);

// ---------------------------------------------------------- numerics

static void BM_FindRoots(benchmark::State& state) {
    const cb::IntPolynomial p = cycle_polynomial(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

static void BM_LogDerivNumerator(benchmark::State& state) {
    const cb::IntPolynomial p = cycle_polynomial(12);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::log_deriv_numerator(p, k));
}
BENCHMARK(BM_LogDerivNumerator)->Arg(2)->Arg(4)->Arg(8);

static void BM_LogDerivExact(benchmark::State& state) {
    const cb::IntPolynomial p = cycle_polynomial(12);
    const cb::BigRational x(-7251, 100);  // just past the order-12, k = 4 window edge
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::log_deriv_exact(p, k, x));
}
BENCHMARK(BM_LogDerivExact)->Arg(2)->Arg(4)->Arg(8);

static void BM_RatioCheck(benchmark::State& state) {
    const cb::Graph g = cocktail_party(10);
    const cb::IntPolynomial p = cb::chromatic_deletion_contraction(g);
    const cb::BigRational x = cb::monotonic_threshold(cb::max_degree(g)) + cb::BigRational(1, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::check_ratio_inequality(p, g.vertex_count(), x));
}
BENCHMARK(BM_RatioCheck);

static void BM_ThresholdScan(benchmark::State& state) {
    const cb::Graph g = cb::generate(cb::GraphFamily::cycle, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::threshold_scan(g));
}
BENCHMARK(BM_ThresholdScan);

static void BM_Thm15Window(benchmark::State& state) {
    const cb::Graph g = cocktail_party(8);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::verify_thm15(g, 3));
}
BENCHMARK(BM_Thm15Window);

// ---------------------------------------------------------- enumeration

static void BM_EnumerateConnected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t seen = 0;
        cb::enumerate_labeled_graphs(n, true, [&](const cb::Graph&) {
            ++seen;
            return true;
        });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
