// chromabounds: exact chromatic-polynomial computations and inequality
// verification from the command line.
//
// Exit codes: 0 = success / all verdicts pass, 1 = a verification failed or a
// computation could not be completed, 2 = usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chromabounds/chromatic.hpp"
#include "chromabounds/errors.hpp"
#include "chromabounds/graph.hpp"
#include "chromabounds/graph6.hpp"
#include "chromabounds/harness.hpp"
#include "chromabounds/log_derivative.hpp"
#include "chromabounds/monotonicity.hpp"
#include "chromabounds/roots.hpp"

namespace cb = chromabounds;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------- graph input

struct GraphSource {
    std::string family;
    int n = 0;
    std::string graph6;
    std::string file;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--family", src.family,
                    "graph family: empty|path|cycle|complete|star (needs --n)");
    cmd->add_option("--n", src.n, "vertex count for --family");
    cmd->add_option("--graph6", src.graph6, "graph6 literal");
    cmd->add_option("--file", src.file, "graph6 file, one graph per line");
}

cb::GraphFamily parse_family(const std::string& name) {
    if (name == "empty") return cb::GraphFamily::empty;
    if (name == "path") return cb::GraphFamily::path;
    if (name == "cycle") return cb::GraphFamily::cycle;
    if (name == "complete") return cb::GraphFamily::complete;
    if (name == "star") return cb::GraphFamily::star;
    throw std::invalid_argument("unknown graph family: '" + name +
                                "' (expected empty|path|cycle|complete|star)");
}

// Each entry pairs a graph with its graph6 form (the report key).
std::vector<std::pair<cb::Graph, std::string>> resolve_graphs(const GraphSource& src) {
    const int sources = static_cast<int>(!src.family.empty()) +
                        static_cast<int>(!src.graph6.empty()) +
                        static_cast<int>(!src.file.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one graph source required: --family/--n, --graph6, or --file");

    std::vector<std::pair<cb::Graph, std::string>> out;
    if (!src.family.empty()) {
        cb::Graph g = cb::generate(parse_family(src.family), src.n);
        out.emplace_back(g, cb::to_graph6(g));
    } else if (!src.graph6.empty()) {
        cb::Graph g = cb::parse_graph6(src.graph6);
        out.emplace_back(g, src.graph6);
    } else {
        for (cb::Graph& g : cb::read_graph6_lines(src.file)) {
            std::string g6 = cb::to_graph6(g);
            out.emplace_back(std::move(g), std::move(g6));
        }
    }
    return out;
}

// ---------------------------------------------------------------- rationals

cb::BigRational parse_cli_rational(const std::string& text) {
    try {
        return cb::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) +
                                    " (expected an integer, decimal, or \"p/q\")");
    }
}

std::uint64_t effective_seed(bool seed_given, std::uint64_t cli_seed) {
    if (seed_given) return cli_seed;
    if (const char* env = std::getenv("CHROMABOUNDS_SEED")) {
        std::string s(env);
        try {
            std::size_t pos = 0;
            std::uint64_t v = std::stoull(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("CHROMABOUNDS_SEED must be an unsigned integer, got '" +
                                        s + "'");
        }
    }
    return cb::CheckParams{}.seed;
}

// ---------------------------------------------------------------- subcommands

struct PolyOptions {
    GraphSource src;
    std::vector<std::string> at;
    std::string format = "text";
};

int run_poly(const PolyOptions& opt) {
    std::vector<cb::BigRational> points;
    points.reserve(opt.at.size());
    for (const auto& s : opt.at) points.push_back(parse_cli_rational(s));

    cb::DeletionContractionEngine engine;
    for (const auto& [g, g6] : resolve_graphs(opt.src)) {
        cb::IntPolynomial p = engine.compute(g);
        if (opt.format == "json") {
            json j;
            j["graph6"] = g6;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["coeffs"] = json::array();
            for (const auto& c : p.coeffs()) j["coeffs"].push_back(c.str());
            if (!points.empty()) {
                j["evaluations"] = json::array();
                for (const auto& x : points)
                    j["evaluations"].push_back({{"x", cb::to_fraction_string(x)},
                                                {"value", cb::to_fraction_string(p.eval(x))}});
            }
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "graph6: " << g6 << "  (n=" << g.vertex_count()
                      << ", m=" << g.edge_count() << ")\n";
            std::cout << "coeffs (ascending): " << p.to_string() << '\n';
            for (const auto& x : points)
                std::cout << "P(" << cb::to_fraction_string(x)
                          << ") = " << cb::to_fraction_string(p.eval(x)) << '\n';
        }
    }
    return 0;
}

struct RootsOptions {
    GraphSource src;
    double tol = 1e-10;
    std::string format = "text";
};

int run_roots(const RootsOptions& opt) {
    cb::DeletionContractionEngine engine;
    for (const auto& [g, g6] : resolve_graphs(opt.src)) {
        cb::RootSet rs = cb::find_roots(engine.compute(g), opt.tol);
        if (opt.format == "json") {
            json j = json::parse(cb::to_json_string(rs));
            j["graph6"] = g6;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "graph6: " << g6 << '\n' << std::setprecision(17);
            for (std::size_t i = 0; i < rs.roots.size(); ++i)
                std::cout << "  root " << rs.roots[i].real() << " + " << rs.roots[i].imag()
                          << "i  (residual " << rs.residuals[i] << ")\n";
            std::cout << "  rho = " << rs.rho << '\n';
        }
    }
    return 0;
}

struct CoeffsOptions {
    GraphSource src;
    int count = 8;
    std::string format = "text";
};

int run_coeffs(const CoeffsOptions& opt) {
    cb::DeletionContractionEngine engine;
    for (const auto& [g, g6] : resolve_graphs(opt.src)) {
        cb::IntPolynomial p = engine.compute(g);
        std::vector<cb::BigRational> c = cb::laurent_coeffs(p, opt.count);
        const long long m = g.edge_count();
        const long long t = cb::triangle_count(g);
        cb::BigRational c1_delta = (c.size() >= 1 ? c[0] : cb::BigRational(0)) + m;
        cb::BigRational c2_delta = (c.size() >= 2 ? c[1] : cb::BigRational(0)) +
                                   (cb::BigRational(t) + cb::BigRational(m, 2));
        if (opt.format == "json") {
            json j;
            j["graph6"] = g6;
            j["coeffs"] = json::array();
            for (std::size_t i = 0; i < c.size(); ++i)
                j["coeffs"].push_back(
                    {{"i", i + 1}, {"value", cb::to_fraction_string(c[i])}});
            j["c1_delta"] = cb::to_fraction_string(c1_delta);
            j["c2_delta"] = cb::to_fraction_string(c2_delta);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "graph6: " << g6 << '\n';
            for (std::size_t i = 0; i < c.size(); ++i)
                std::cout << "  c" << i + 1 << " = " << cb::to_fraction_string(c[i]) << '\n';
            std::cout << "  c1 - (-m) = " << cb::to_fraction_string(c1_delta)
                      << "\n  c2 - (-(t + m/2)) = " << cb::to_fraction_string(c2_delta) << '\n';
        }
    }
    return 0;
}

struct EpsilonOptions {
    GraphSource src;
    std::string format = "text";
};

int run_epsilon(const EpsilonOptions& opt) {
    int worst = 0;
    cb::DeletionContractionEngine engine;
    for (const auto& [g, g6] : resolve_graphs(opt.src)) {
        const int n = g.vertex_count();
        cb::IntPolynomial p = engine.compute(g);
        cb::BigRational via_formula =
            cb::BigRational(n) + p.derivative().eval(cb::BigRational(-1)) /
                                     p.eval(cb::BigRational(-1));
        bool subgraph_route = g.edge_count() <= cb::kMaxSubsetEdges;
        cb::BigRational via_subgraphs;
        bool agree = true;
        if (subgraph_route) {
            via_subgraphs = cb::epsilon_mean_subgraph(g);
            agree = via_formula == via_subgraphs;
        }
        if (!agree) worst = 1;
        if (opt.format == "json") {
            json j;
            j["graph6"] = g6;
            j["epsilon"] = cb::to_fraction_string(via_formula);
            j["epsilon_decimal"] = cb::to_decimal_string(via_formula, 12);
            if (subgraph_route) {
                j["epsilon_mean_subgraph"] = cb::to_fraction_string(via_subgraphs);
                j["agree"] = agree;
            }
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "graph6: " << g6 << '\n';
            std::cout << "  epsilon (n + P'(-1)/P(-1)) = " << cb::to_fraction_string(via_formula)
                      << " = " << cb::to_decimal_string(via_formula, 12) << '\n';
            if (subgraph_route)
                std::cout << "  epsilon (mean subgraph)    = "
                          << cb::to_fraction_string(via_subgraphs)
                          << (agree ? "  [agree]" : "  [DISAGREE]") << '\n';
            else
                std::cout << "  epsilon (mean subgraph)    = skipped (|E| > "
                          << cb::kMaxSubsetEdges << ")\n";
        }
    }
    return worst;
}

struct VerifyOptions {
    GraphSource src;
    std::string checks;
    bool ratio_scan = false;
    std::string step = "1/100";
    cb::CheckParams params;
    bool seed_given = false;
    std::string format = "text";
};

std::vector<std::string> split_checks(const std::string& spec) {
    std::vector<std::string> out;
    if (spec == "all") {
        for (const auto& info : cb::check_registry()) out.push_back(info.id);
        return out;
    }
    std::stringstream ss(spec);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (id.empty()) continue;
        if (!cb::is_registered_check(id))
            throw std::invalid_argument("unknown check id: '" + id + "' (see --help for the list)");
        out.push_back(id);
    }
    if (out.empty()) throw std::invalid_argument("no checks requested");
    return out;
}

void print_reports(const std::vector<cb::VerificationReport>& reports,
                   const std::string& format) {
    for (const auto& rep : reports) {
        if (format == "json") {
            json j;
            j["check"] = rep.check;
            j["graph6"] = rep.graph6;
            j["verdict"] = rep.verdict;
            j["params"] = json::parse(rep.params_json);
            j["witness"] = json::parse(rep.witness_json);
            j["wall_ms"] = rep.wall_ms;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << rep.check << "  " << rep.graph6 << "  " << rep.verdict;
            if (rep.verdict == "fail") std::cout << "  witness: " << rep.witness_json;
            if (rep.verdict == "skip") std::cout << "  " << rep.witness_json;
            std::cout << '\n';
        }
    }
}

int run_verify(const VerifyOptions& opt) {
    if (opt.ratio_scan) {
        int exit_code = 0;
        for (const auto& [g, g6] : resolve_graphs(opt.src)) {
            cb::ThresholdScan scan = cb::threshold_scan(g, parse_cli_rational(opt.step));
            json j;
            j["graph6"] = g6;
            j["threshold"] = cb::to_fraction_string(scan.threshold);
            j["threshold_decimal"] = cb::to_decimal_string(scan.threshold, 6);
            j["settle_point"] = scan.settle_point
                                    ? json(cb::to_fraction_string(*scan.settle_point))
                                    : json(nullptr);
            j["points"] = scan.points;
            j["failures"] = scan.failures;
            j["failures_above_threshold"] = scan.failures_above_threshold;
            if (opt.format == "json") {
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "graph6: " << g6 << '\n'
                          << "  guaranteed threshold: " << j["threshold_decimal"].get<std::string>()
                          << " (" << j["threshold"].get<std::string>() << ")\n"
                          << "  observed settle point: "
                          << (scan.settle_point ? cb::to_fraction_string(*scan.settle_point)
                                                : std::string("none"))
                          << '\n'
                          << "  grid points: " << scan.points
                          << ", failures: " << scan.failures
                          << ", failures at/above threshold: "
                          << scan.failures_above_threshold << '\n';
            }
            if (scan.failures_above_threshold > 0) exit_code = 1;
        }
        return exit_code;
    }

    if (opt.checks.empty())
        throw std::invalid_argument("verify needs --check <ids> or --ratio-scan");
    std::vector<std::string> checks = split_checks(opt.checks);

    std::vector<std::string> lines;
    for (const auto& [g, g6] : resolve_graphs(opt.src)) lines.push_back(g6);
    cb::Catalog catalog = cb::Catalog::from_strings(lines);

    cb::CheckParams params = opt.params;
    params.seed = effective_seed(opt.seed_given, opt.params.seed);
    std::vector<cb::VerificationReport> reports = cb::run_suite(catalog, checks, 1, params);
    print_reports(reports, opt.format);
    return cb::exit_code_for(reports);
}

struct ScanOptions {
    int generated_n = 0;
    bool connected = false;
    std::string file;
    std::string checks = "all";
    int workers = 1;
    std::string out_path;
    std::string summary_path;
    cb::CheckParams params;
    bool seed_given = false;
    std::string format = "text";
};

int run_scan(const ScanOptions& opt) {
    if ((opt.generated_n > 0) == !opt.file.empty())
        throw std::invalid_argument("exactly one catalog source required: --generated or --file");
    cb::Catalog catalog = opt.generated_n > 0
                              ? cb::Catalog::generated(opt.generated_n, opt.connected)
                              : cb::Catalog::from_file(opt.file);

    std::vector<std::string> checks = split_checks(opt.checks);
    cb::CheckParams params = opt.params;
    params.seed = effective_seed(opt.seed_given, opt.params.seed);

    std::vector<cb::VerificationReport> reports =
        cb::run_suite(catalog, checks, opt.workers, params);
    if (!opt.out_path.empty()) cb::write_reports_jsonl(opt.out_path, reports);

    cb::Summary summary = cb::summarize(reports);
    if (!opt.summary_path.empty()) cb::write_summary_csv(opt.summary_path, summary);

    if (opt.format == "csv") {
        std::cout << cb::summary_to_csv(summary);
    } else if (opt.format == "json") {
        json j;
        j["catalog"] = catalog.description();
        j["total_reports"] = summary.total_reports;
        j["checks"] = json::array();
        for (const auto& cs : summary.checks) {
            json c = {{"check", cs.check}, {"pass", cs.pass}, {"fail", cs.fail},
                      {"skip", cs.skip}};
            if (!cs.extremal_kind.empty()) {
                c["extremal_kind"] = cs.extremal_kind;
                c["extremal_value"] = cs.extremal_value;
                c["extremal_graph6"] = cs.extremal_graph6;
            }
            if (!cs.note.empty()) c["note"] = cs.note;
            j["checks"].push_back(c);
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "catalog: " << catalog.description() << "  (" << catalog.size()
                  << " graphs, " << summary.total_reports << " reports)\n";
        for (const auto& cs : summary.checks) {
            std::cout << "  " << cs.check << ": pass=" << cs.pass << " fail=" << cs.fail
                      << " skip=" << cs.skip;
            if (!cs.extremal_kind.empty())
                std::cout << "  " << cs.extremal_kind << "=" << cs.extremal_value << " at "
                          << cs.extremal_graph6;
            if (!cs.note.empty()) std::cout << "  [" << cs.note << "]";
            std::cout << '\n';
        }
    }
    return cb::exit_code_for(reports);
}

struct CatalogOptions {
    int generated_n = 0;
    bool connected = false;
    std::string file;
    std::string family;
    int n = 0;
    bool stats = false;
};

int run_catalog(const CatalogOptions& opt) {
    const int sources = static_cast<int>(opt.generated_n > 0) +
                        static_cast<int>(!opt.file.empty()) +
                        static_cast<int>(!opt.family.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one source required: --generated, --file, or --family/--n");

    auto emit = [&](const cb::Graph& g) {
        std::cout << cb::to_graph6(g);
        if (opt.stats) {
            auto girth = cb::girth(g);
            std::cout << "  n=" << g.vertex_count() << " m=" << g.edge_count()
                      << " maxdeg=" << cb::max_degree(g) << " triangles=" << cb::triangle_count(g)
                      << " girth=" << (girth ? std::to_string(*girth) : std::string("inf"))
                      << " connected=" << (cb::is_connected(g) ? "yes" : "no")
                      << " claw_free=" << (cb::is_claw_free(g) ? "yes" : "no");
        }
        std::cout << '\n';
    };

    if (opt.generated_n > 0) {
        cb::enumerate_labeled_graphs(opt.generated_n, opt.connected, [&](const cb::Graph& g) {
            emit(g);
            return true;
        });
    } else if (!opt.file.empty()) {
        for (const cb::Graph& g : cb::read_graph6_lines(opt.file)) emit(g);
    } else {
        emit(cb::generate(parse_family(opt.family), opt.n));
    }
    return 0;
}

std::string registry_footer() {
    std::string footer = "Registered checks (for verify --check / scan --checks):\n";
    for (const auto& info : cb::check_registry())
        footer += "  " + info.id + "  -  " + info.description + "\n";
    footer +=
        "\nEnvironment: CHROMABOUNDS_SEED overrides the default seed when --seed is absent.";
    return footer;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromabounds: exact chromatic-polynomial bounds toolkit"};
    app.require_subcommand(1);
    app.footer(registry_footer());

    PolyOptions poly;
    CLI::App* poly_cmd = app.add_subcommand("poly", "print P(G,x) coefficients");
    add_graph_source(poly_cmd, poly.src);
    poly_cmd->add_option("--at", poly.at, "evaluate P at exact rational x (repeatable)");
    poly_cmd->add_option("--format", poly.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    RootsOptions roots;
    CLI::App* roots_cmd = app.add_subcommand("roots", "numeric chromatic roots with residuals");
    add_graph_source(roots_cmd, roots.src);
    roots_cmd->add_option("--tol", roots.tol, "backward-error tolerance (default 1e-10)");
    roots_cmd->add_option("--format", roots.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CoeffsOptions coeffs;
    CLI::App* coeffs_cmd =
        app.add_subcommand("coeffs", "exact log-expansion coefficients c1..cN with deltas");
    add_graph_source(coeffs_cmd, coeffs.src);
    coeffs_cmd->add_option("--count", coeffs.count, "how many coefficients (default 8)")
        ->check(CLI::PositiveNumber);
    coeffs_cmd->add_option("--format", coeffs.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    EpsilonOptions epsilon;
    CLI::App* epsilon_cmd =
        app.add_subcommand("epsilon", "mean size of broken-cycle-free subgraphs, both routes");
    add_graph_source(epsilon_cmd, epsilon.src);
    epsilon_cmd->add_option("--format", epsilon.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run registered checks on given graphs");
    add_graph_source(verify_cmd, verify.src);
    verify_cmd->add_option("--check", verify.checks, "comma-separated check ids, or 'all'");
    verify_cmd->add_flag("--ratio-scan", verify.ratio_scan,
                         "scan the ratio inequality on a fine grid instead of running checks");
    verify_cmd->add_option("--step", verify.step, "grid step for --ratio-scan (default 1/100)");
    verify_cmd->add_option("--k-min", verify.params.k_min, "lowest derivative order (default 2)");
    verify_cmd->add_option("--k-max", verify.params.k_max, "highest derivative order (default 4)");
    verify_cmd->add_option("--points", verify.params.window_points,
                           "window grid points for conj14_scan (default 50)");
    verify_cmd->add_option("--orderings", verify.params.orderings,
                           "random edge orderings for lemma22 (default 20)");
    verify_cmd->add_option("--seed", verify.params.seed, "RNG seed");
    verify_cmd->add_option("--format", verify.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    ScanOptions scan;
    CLI::App* scan_cmd = app.add_subcommand("scan", "run the full suite over a graph catalog");
    scan_cmd->add_option("--generated", scan.generated_n,
                         "enumerate all labeled graphs on N vertices (N <= 7)");
    scan_cmd->add_flag("--connected", scan.connected, "restrict --generated to connected graphs");
    scan_cmd->add_option("--file", scan.file, "graph6 catalog file");
    scan_cmd->add_option("--checks", scan.checks,
                         "comma-separated check ids, or 'all' (default all)");
    scan_cmd->add_option("--workers", scan.workers, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--out", scan.out_path, "write JSON-lines reports to this path");
    scan_cmd->add_option("--summary", scan.summary_path, "write CSV summary to this path");
    scan_cmd->add_option("--k-min", scan.params.k_min, "lowest derivative order (default 2)");
    scan_cmd->add_option("--k-max", scan.params.k_max, "highest derivative order (default 4)");
    scan_cmd->add_option("--points", scan.params.window_points,
                         "window grid points for conj14_scan (default 50)");
    scan_cmd->add_option("--orderings", scan.params.orderings,
                         "random edge orderings for lemma22 (default 20)");
    scan_cmd->add_option("--seed", scan.params.seed, "RNG seed");
    scan_cmd->add_option("--format", scan.format, "text|json|csv (stdout summary format)")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CatalogOptions cat;
    CLI::App* cat_cmd = app.add_subcommand("catalog", "enumerate or convert graph6 catalogs");
    cat_cmd->add_option("--generated", cat.generated_n,
                        "enumerate all labeled graphs on N vertices (N <= 7)");
    cat_cmd->add_flag("--connected", cat.connected, "restrict --generated to connected graphs");
    cat_cmd->add_option("--file", cat.file, "re-encode a graph6 file canonically");
    cat_cmd->add_option("--family", cat.family, "graph family: empty|path|cycle|complete|star");
    cat_cmd->add_option("--n", cat.n, "vertex count for --family");
    cat_cmd->add_flag("--stats", cat.stats, "append structural stats to each line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    verify.seed_given = verify_cmd->count("--seed") > 0;
    scan.seed_given = scan_cmd->count("--seed") > 0;

    try {
        if (*poly_cmd) return run_poly(poly);
        if (*roots_cmd) return run_roots(roots);
        if (*coeffs_cmd) return run_coeffs(coeffs);
        if (*epsilon_cmd) return run_epsilon(epsilon);
        if (*verify_cmd) return run_verify(verify);
        if (*scan_cmd) return run_scan(scan);
        if (*cat_cmd) return run_catalog(cat);
    } catch (const cb::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cb::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
