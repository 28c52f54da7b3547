// Search for half-rate vector-circulant additive codes over F_4 with high
// minimum distance, plus verification of the bundled best-known codes.
//
// Exhaustive mode walks all 16^n (lambda, v) pairs; random mode draws a
// seeded budget of pairs from a counter-mode generator. Both modes are
// deterministic: the merge (max d, then lexicographically smallest pairs) is
// associative and commutative, so results do not depend on worker count or
// chunking, and random results are a pure function of (seed, budget).

#ifndef VECCIRC_SEARCH_HPP
#define VECCIRC_SEARCH_HPP

#include <span>

#include "veccirc/additive_code.hpp"

namespace veccirc {

enum class SearchMode { exhaustive, random };

struct SearchConfig {
    std::size_t n = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;      // random mode
    std::uint64_t budget = 0;    // random mode: number of candidate draws
    unsigned workers = 1;
    bool require_lambda0_nonzero = false;  // optional pruning predicate, off by default
    std::size_t max_witnesses = 8;
    /// Exhaustive mode refuses n above this; raise deliberately for long runs.
    std::size_t exhaustive_guard_n = 6;
};

struct CandidateEval {
    enum class Kind { rank_deficient, exact, below_threshold };
    Kind kind;
    std::size_t k;
    /// Exact d for `exact`; a witnessed weight below the threshold for
    /// `below_threshold`; meaningless for `rank_deficient`.
    std::size_t d = 0;
};

/// Builds vc_code(lambda, v) and measures it. k < n yields a rank-deficient
/// verdict; with a threshold, enumeration may stop early once the code is
/// certifiably below it.
CandidateEval evaluate_candidate(const ShiftVector& lambda, const FieldVector& v,
                                 std::optional<std::size_t> threshold = std::nullopt);

struct SearchResult {
    SearchMode mode = SearchMode::exhaustive;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t candidates_examined = 0;
    /// Schedule-independent nominal cost: one unit per candidate examined
    /// plus 2^n per full-rank candidate. Never measures wall time.
    std::uint64_t work_units = 0;
    /// Unset when no full-rank candidate was seen (e.g. zero budget).
    std::optional<std::size_t> best_distance;
    /// Reports for the best (lambda, v) pairs, lexicographically smallest
    /// first (lambda compared before v, element indices 0 < 1 < 2 < 3),
    /// capped at max_witnesses.
    std::vector<CodeReport> witnesses;
};

/// All 16^n pairs. Refuses n above the configured guard and n > 15 always
/// (candidate indices are 64-bit). Result is independent of workers.
SearchResult exhaustive_search(const SearchConfig& cfg);

/// `budget` seeded draws (algorithm: splitmix64-ctr-v1). Same seed and
/// budget give an identical result for any worker count.
SearchResult random_search(const SearchConfig& cfg);

std::string search_result_to_json(const SearchResult& r);
std::string search_result_to_text(const SearchResult& r);

/// One row of a best-known-codes table.
struct TableEntry {
    std::size_t n;
    ShiftVector lambda;
    FieldVector v;
    std::size_t expected_d;
};

/// The 12 bundled best-known half-rate codes, n = 2..13.
const std::vector<TableEntry>& builtin_code_table();

/// Parses the tab-separated table format: n<TAB>lambda<TAB>v<TAB>d per line,
/// vectors in the shared comma format. Blank lines and lines starting with
/// '#' are skipped. Malformed rows throw std::invalid_argument.
std::vector<TableEntry> parse_code_table(std::string_view text);

struct TableRowVerification {
    TableEntry entry;
    std::size_t got_k = 0;
    std::size_t got_d = 0;
    Classification got_classification = Classification::ordinary;
    Classification expected_classification = Classification::ordinary;
    bool pass = false;
};

struct TableVerification {
    std::vector<TableRowVerification> rows;
    bool all_pass() const;
};

/// Recomputes k, d and the Singleton classification for every row. A row
/// passes when k = n, d matches, and the classification matches the one
/// implied by (n, expected d).
TableVerification verify_table(std::span<const TableEntry> entries);

std::string table_verification_to_json(const TableVerification& v);
std::string table_verification_to_csv(const TableVerification& v);

}  // namespace veccirc

#endif
