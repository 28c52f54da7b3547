// Command-line bench for vector-circulant matrices over finite fields and
// additive codes over F_4.
//
// Subcommands: shift, circulant, ring-check, distance, verify-table, search.
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
// parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "veccirc/additive_code.hpp"
#include "veccirc/ring_check.hpp"
#include "veccirc/search.hpp"
#include "veccirc/text.hpp"

namespace {

using namespace veccirc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct ShiftArgs {
    std::string lambda, v, format = "text";
    unsigned count = 1;
};

int cmd_shift(const ShiftArgs& args) {
    const FieldRef f = Field::gf4();
    const ShiftVector lambda(parse_vector(f, args.lambda));
    FieldVector v = parse_vector(f, args.v);
    if (lambda.size() != v.size())
        throw std::invalid_argument("length mismatch: lambda has " + std::to_string(lambda.size()) +
                                    " coordinates, v has " + std::to_string(v.size()));
    std::vector<std::string> lines;
    for (unsigned i = 0; i < args.count; ++i) {
        v = vector_cyclic_shift(lambda, v);
        lines.push_back(format_vector(v));
    }
    if (args.format == "json") {
        nlohmann::json j;
        j["lambda"] = args.lambda;
        j["v"] = args.v;
        j["count"] = args.count;
        j["shifts"] = lines;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& line : lines) std::cout << line << "\n";
    }
    return kExitOk;
}

struct CirculantArgs {
    std::string lambda, v, format = "text";
};

int cmd_circulant(const CirculantArgs& args) {
    const FieldRef f = Field::gf4();
    const ShiftVector lambda(parse_vector(f, args.lambda));
    const FieldVector v = parse_vector(f, args.v);
    const FieldMatrix m = vec_circulant(lambda, v);
    if (args.format == "json") {
        nlohmann::json j;
        j["lambda"] = format_vector(lambda.coords());
        j["v"] = format_vector(v);
        j["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) j["rows"].push_back(format_vector(m.row(i)));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << format_matrix(m);
    }
    return kExitOk;
}

struct RingCheckArgs {
    std::size_t n = 0;
    unsigned q = 0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string format = "text";
};

// Factors q as p^m with p prime, or rejects it.
std::pair<unsigned, unsigned> prime_power(unsigned q) {
    if (q < 2) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    unsigned p = q;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned m = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, m};
}

int cmd_ring_check(const RingCheckArgs& args) {
    const auto [p, m] = prime_power(args.q);
    const FieldRef f = Field::create(p, m);
    const RingCheckReport report = run_ring_check(f, args.n, args.trials, args.seed);
    if (args.format == "json")
        std::cout << ring_check_to_json(report) << "\n";
    else
        std::cout << ring_check_to_text(report);
    return report.pass() ? kExitOk : kExitVerifyFail;
}

struct DistanceArgs {
    std::string lambda, v, format = "text";
};

int cmd_distance(const DistanceArgs& args) {
    const FieldRef f = Field::gf4();
    const ShiftVector lambda(parse_vector(f, args.lambda));
    const FieldVector v = parse_vector(f, args.v);
    const AdditiveCode code = vc_code(lambda, v);
    if (code.dimension() == 0)
        throw std::invalid_argument("the code generated by this pair has k = 0 (only the zero "
                                    "codeword); minimum distance is undefined");
    const CodeReport report = make_report(code);
    if (args.format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else if (args.format == "csv") {
        std::cout << report_csv_header() << "\n" << report_to_csv(report) << "\n";
    } else {
        std::cout << "n: " << report.n << "\n";
        std::cout << "lambda: " << report.lambda.value_or("") << "\n";
        std::cout << "v: " << report.v.value_or("") << "\n";
        std::cout << "k: " << report.k << "\n";
        std::cout << "d: " << report.d << "\n";
        std::cout << "classification: " << classification_name(report.classification);
        if (report.k != report.n) std::cout << " (Singleton classification applies to half-rate codes only)";
        std::cout << "\n";
        std::cout << "weight_distribution:";
        for (const auto w : report.weight_distribution) std::cout << " " << w;
        std::cout << "\n";
    }
    return kExitOk;
}

struct VerifyTableArgs {
    std::string file, format = "text";
};

int cmd_verify_table(const VerifyTableArgs& args) {
    std::vector<TableEntry> entries;
    if (args.file.empty()) {
        entries = builtin_code_table();
    } else {
        std::ifstream in(args.file);
        if (!in) throw std::invalid_argument("cannot open table file '" + args.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        entries = parse_code_table(buf.str());
    }
    const TableVerification result = verify_table(entries);
    if (args.format == "json") {
        std::cout << table_verification_to_json(result) << "\n";
    } else if (args.format == "csv") {
        std::cout << table_verification_to_csv(result);
    } else {
        std::size_t passed = 0;
        for (const TableRowVerification& r : result.rows) {
            if (r.pass) {
                ++passed;
                std::cout << "row n=" << r.entry.n << ": PASS (k=" << r.got_k << ", d=" << r.got_d
                          << ", " << classification_name(r.got_classification) << ")\n";
            } else {
                std::cout << "row n=" << r.entry.n << ": FAIL (expected d=" << r.entry.expected_d
                          << " " << classification_name(r.expected_classification) << ", got k="
                          << r.got_k << ", d=" << r.got_d << ", "
                          << classification_name(r.got_classification) << ")\n";
            }
        }
        std::cout << passed << "/" << result.rows.size() << " rows pass\n";
    }
    return result.all_pass() ? kExitOk : kExitVerifyFail;
}

struct SearchArgs {
    std::size_t n = 0;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    std::uint64_t budget = 100000;
    unsigned workers = 1;
    std::size_t max_exhaustive_n = 6;
    bool lambda0_nonzero = false;
    std::size_t witnesses = 8;
    std::string format = "text";
};

int cmd_search(const SearchArgs& args) {
    SearchConfig cfg;
    cfg.n = args.n;
    cfg.mode = args.mode == "random" ? SearchMode::random : SearchMode::exhaustive;
    cfg.seed = args.seed;
    cfg.budget = args.budget;
    cfg.workers = args.workers;
    cfg.require_lambda0_nonzero = args.lambda0_nonzero;
    cfg.max_witnesses = args.witnesses;
    cfg.exhaustive_guard_n = args.max_exhaustive_n;
    const SearchResult result =
        cfg.mode == SearchMode::random ? random_search(cfg) : exhaustive_search(cfg);
    if (args.format == "json")
        std::cout << search_result_to_json(result) << "\n";
    else
        std::cout << search_result_to_text(result);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vector-circulant matrices over finite fields and additive codes over GF(4)"};
    app.require_subcommand(1);

    ShiftArgs shift_args;
    auto* shift = app.add_subcommand("shift", "apply the vector-cyclic shift repeatedly");
    shift->add_option("--lambda", shift_args.lambda, "shift vector, e.g. 1,0,1")->required();
    shift->add_option("--v", shift_args.v, "vector to shift, e.g. 1,a,0")->required();
    shift->add_option("--count", shift_args.count, "number of shifts to print")
        ->check(CLI::Range(1u, 1000000u));
    shift->add_option("--format", shift_args.format)->check(CLI::IsMember({"text", "json"}));

    CirculantArgs circ_args;
    auto* circ = app.add_subcommand("circulant", "print the vector-circulant matrix of v");
    circ->add_option("--lambda", circ_args.lambda)->required();
    circ->add_option("--v", circ_args.v)->required();
    circ->add_option("--format", circ_args.format)->check(CLI::IsMember({"text", "json"}));

    RingCheckArgs ring_args;
    auto* ring = app.add_subcommand("ring-check", "run the randomized circulant-algebra property suite");
    ring->add_option("--n", ring_args.n, "vector length")->required()->check(CLI::Range(1, 64));
    ring->add_option("--q", ring_args.q, "field order (prime power up to 256)")->required();
    ring->add_option("--trials", ring_args.trials, "random instances per property");
    ring->add_option("--seed", ring_args.seed);
    ring->add_option("--format", ring_args.format)->check(CLI::IsMember({"text", "json"}));

    DistanceArgs dist_args;
    auto* dist = app.add_subcommand("distance", "parameters of the code generated by cir(v)");
    dist->add_option("--lambda", dist_args.lambda)->required();
    dist->add_option("--v", dist_args.v)->required();
    dist->add_option("--format", dist_args.format)->check(CLI::IsMember({"text", "json", "csv"}));

    VerifyTableArgs table_args;
    auto* table = app.add_subcommand("verify-table", "re-verify a table of best-known codes");
    table->add_option("--file", table_args.file, "tab-separated rows: n, lambda, v, d (default: bundled table)");
    table->add_option("--format", table_args.format)->check(CLI::IsMember({"text", "json", "csv"}));

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "search for half-rate codes with high distance");
    search->add_option("--n", search_args.n, "code length")->required()->check(CLI::Range(1, 30));
    search->add_option("--mode", search_args.mode)->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--seed", search_args.seed, "random-mode seed");
    search->add_option("--budget", search_args.budget, "random-mode candidate draws");
    search->add_option("--workers", search_args.workers)->check(CLI::Range(1u, 256u));
    search->add_option("--max-exhaustive-n", search_args.max_exhaustive_n,
                       "guard for exhaustive runs; raise deliberately for long runs");
    search->add_flag("--lambda0-nonzero", search_args.lambda0_nonzero,
                     "only consider shift vectors with an invertible companion matrix");
    search->add_option("--witnesses", search_args.witnesses, "max reported best pairs");
    search->add_option("--format", search_args.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (shift->parsed()) return cmd_shift(shift_args);
        if (circ->parsed()) return cmd_circulant(circ_args);
        if (ring->parsed()) return cmd_ring_check(ring_args);
        if (dist->parsed()) return cmd_distance(dist_args);
        if (table->parsed()) return cmd_verify_table(table_args);
        if (search->parsed()) return cmd_search(search_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        // Remaining logic_errors flag broken internal invariants.
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
