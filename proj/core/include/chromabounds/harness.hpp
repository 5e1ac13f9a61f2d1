#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromabounds/graph.hpp"

namespace chromabounds {

struct CheckInfo {
    std::string id;
    std::string description;
};

/// The fixed set of runnable check ids with behavior descriptions.
const std::vector<CheckInfo>& check_registry();
bool is_registered_check(const std::string& id);

struct CheckParams {
    int k_min = 2;
    int k_max = 4;
    int window_points = 50;
    int orderings = 20;
    std::uint64_t seed = 0xc0ffee11;
};

/// One (graph, check) outcome. Verdicts: "pass", "fail", "skip" (a skip names
/// its reason in the witness). params/witness are JSON object texts; failing
/// records carry exact decimal-string numerators/denominators sufficient to
/// re-verify by hand. wall_ms is informational and excluded from determinism.
struct VerificationReport {
    std::string check;
    std::string graph6;
    std::string verdict;
    std::string params_json;
    std::string witness_json;
    double wall_ms = 0;
};

/// A graph stream: either every labeled graph of an order (optionally
/// connected-only, in ascending edge-bitmask order) or the records of a
/// graph6 file (in line order). Identity = position in the stream.
class Catalog {
public:
    static Catalog generated(int n, bool connected_only);
    static Catalog from_file(const std::string& path);
    static Catalog from_strings(const std::vector<std::string>& graph6_lines);

    std::size_t size() const;
    Graph graph(std::size_t i) const;
    std::string graph6_string(std::size_t i) const;
    const std::string& description() const { return description_; }

private:
    Catalog() = default;
    int n_ = 0;
    std::vector<std::uint32_t> masks_;   // generated form
    std::vector<std::string> records_;   // file form
    std::string description_;
};

/// Runs every requested check on every catalog graph: exactly one report per
/// (graph, check) pair, in catalog-row-major order regardless of worker
/// count. Unknown check ids raise std::invalid_argument before any work.
/// Failures never abort the run; capped graphs yield skip records.
std::vector<VerificationReport> run_suite(const Catalog& catalog,
                                          const std::vector<std::string>& checks, int workers,
                                          const CheckParams& params = {});

struct CheckSummary {
    std::string check;
    long long pass = 0;
    long long fail = 0;
    long long skip = 0;
    std::string extremal_kind;    // empty when the check has no tracked extremal
    std::string extremal_value;   // decimal string
    std::string extremal_graph6;
    std::string note;  // reference comparisons (e.g. minimal ratio vs 685/252 and e)
};

struct Summary {
    std::vector<CheckSummary> checks;
    long long total_reports = 0;
};

/// Per-check totals plus extremal witnesses (minimal shameful ratio, minimal
/// ratio-inequality margin, tightest negative-derivative sample, ...).
Summary summarize(const std::vector<VerificationReport>& reports);

void write_reports_jsonl(const std::string& path, const std::vector<VerificationReport>& reports);
void write_summary_csv(const std::string& path, const Summary& summary);
std::string summary_to_csv(const Summary& summary);

/// 0 when no verdict is "fail", else 1.
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace chromabounds
