#include "veccirc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "veccirc/rng.hpp"
#include "veccirc/text.hpp"

namespace veccirc {

namespace {

constexpr std::uint64_t kEvenColumns = 0x5555555555555555ULL;

// ---------------------------------------------------------------------------
// Packed candidate evaluation (n <= 32).
//
// An F_4 vector is held as two bit planes: bit j of `lo` is the b0 bit of
// coordinate j (element index b0 + 2*b1). The shift, scalar multiplication
// by an F_4 element, GF(2) elimination of the binary expansion and Gray-code
// weight enumeration all run on machine words. Agreement with the generic
// vc_code / min_distance path is enforced by re-verifying every witness and
// covered by randomized tests.

struct PlanePair {
    std::uint64_t lo = 0, hi = 0;
};

// e * (lo, hi) for e in F_4, using a^2 = 1 + a.
inline PlanePair scale(unsigned e, PlanePair x) {
    switch (e & 3) {
        case 0: return {0, 0};
        case 1: return x;
        case 2: return {x.hi, x.lo ^ x.hi};
        default: return {x.lo ^ x.hi, x.lo};
    }
}

inline PlanePair shift_step(std::size_t n, PlanePair lambda, PlanePair row) {
    const unsigned t0 = static_cast<unsigned>((row.lo >> (n - 1)) & 1);
    const unsigned t1 = static_cast<unsigned>((row.hi >> (n - 1)) & 1);
    const std::uint64_t mask = n == 64 ? ~0ULL : ((std::uint64_t{1} << n) - 1);
    PlanePair out{(row.lo << 1) & mask, (row.hi << 1) & mask};
    const PlanePair add = scale(t0 | (t1 << 1), lambda);
    out.lo ^= add.lo;
    out.hi ^= add.hi;
    return out;
}

// Interleaves the planes of one row into a single word: coordinate j becomes
// bits 2j (b0) and 2j+1 (b1). Matches PackedWord's column convention.
constexpr std::uint64_t spread_bits(std::uint64_t x) {
    x &= 0xFFFFFFFFULL;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & kEvenColumns;
    return x;
}

inline std::uint64_t interleave(PlanePair x) {
    return spread_bits(x.lo) | (spread_bits(x.hi) << 1);
}

struct KernelOutcome {
    std::size_t k;
    bool exact;        // false: aborted, value certifies d < threshold
    std::size_t value; // exact d, or the witnessed weight
};

KernelOutcome kernel_eval(std::size_t n, PlanePair lambda, PlanePair v, std::size_t threshold) {
    std::uint64_t by_pivot[64] = {};
    std::size_t k = 0;
    PlanePair row = v;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) row = shift_step(n, lambda, row);
        std::uint64_t r = interleave(row);
        while (r != 0) {
            const unsigned p = static_cast<unsigned>(std::countr_zero(r));
            if (by_pivot[p] != 0) {
                r ^= by_pivot[p];
            } else {
                by_pivot[p] = r;
                ++k;
                break;
            }
        }
    }
    KernelOutcome out{k, true, 0};
    if (k == 0) return out;

    std::uint64_t basis[64];
    std::size_t bn = 0;
    for (unsigned p = 0; p < 64; ++p)
        if (by_pivot[p] != 0) basis[bn++] = by_pivot[p];

    std::size_t best = n + 1;
    std::uint64_t cur = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t j = 1; j < total; ++j) {
        cur ^= basis[std::countr_zero(j)];
        const auto w = static_cast<std::size_t>(std::popcount((cur | (cur >> 1)) & kEvenColumns));
        if (w < best) {
            best = w;
            if (best < threshold) {
                out.exact = false;
                out.value = best;
                return out;
            }
        }
    }
    out.value = best;
    return out;
}

// ---------------------------------------------------------------------------
// Candidate streams.
//
// A candidate is keyed by the pair (L, V) of base-4 encodings with the first
// coordinate most significant, so numeric order on keys is exactly the
// lexicographic order on (lambda, v) with element indices 0 < 1 < 2 < 3.

using CandidateKey = std::pair<std::uint64_t, std::uint64_t>;

inline PlanePair planes_from_key(std::uint64_t key, std::size_t n) {
    PlanePair out;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned digit = static_cast<unsigned>((key >> (2 * (n - 1 - i))) & 3);
        out.lo |= static_cast<std::uint64_t>(digit & 1) << i;
        out.hi |= static_cast<std::uint64_t>((digit >> 1) & 1) << i;
    }
    return out;
}

std::vector<FieldElement> digits_from_key(std::uint64_t key, std::size_t n) {
    std::vector<FieldElement> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<FieldElement>((key >> (2 * (n - 1 - i))) & 3);
    return out;
}

// Per-worker accumulator. Keys are kept ascending; exhaustive streams arrive
// already ascending, random ones are insertion-sorted.
struct LocalBest {
    bool any = false;
    std::size_t d = 0;
    std::vector<CandidateKey> keys;
    std::uint64_t examined = 0;
    std::uint64_t full_rank = 0;

    void consider(std::size_t dist, CandidateKey key, std::size_t cap, bool stream_ordered) {
        if (!any || dist > d) {
            any = true;
            d = dist;
            keys.assign(1, key);
            return;
        }
        if (dist < d) return;
        if (stream_ordered) {
            if (keys.size() < cap) keys.push_back(key);
            return;
        }
        const auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it != keys.end() && *it == key) return;
        if (keys.size() == cap && it == keys.end()) return;
        keys.insert(it, key);
        if (keys.size() > cap) keys.pop_back();
    }
};

void validate_common(const SearchConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("search requires n >= 1");
    if (cfg.n > kEnumerationGuard)
        throw std::invalid_argument("search refused: a rank-n candidate at n = " + std::to_string(cfg.n) +
                                    " cannot be enumerated (guard k <= " +
                                    std::to_string(kEnumerationGuard) + ")");
}

SearchResult run_search(const SearchConfig& cfg) {
    validate_common(cfg);
    const std::size_t n = cfg.n;
    const bool exhaustive = cfg.mode == SearchMode::exhaustive;

    std::uint64_t total = 0;
    if (exhaustive) {
        if (n > 15)
            throw std::invalid_argument("exhaustive search needs n <= 15 (16^n candidate indices)");
        if (n > cfg.exhaustive_guard_n)
            throw std::invalid_argument(
                "exhaustive search for n = " + std::to_string(n) + " exceeds the guard n <= " +
                std::to_string(cfg.exhaustive_guard_n) + "; raise the guard to run it deliberately");
        total = std::uint64_t{1} << (4 * n);
    } else {
        total = cfg.budget;
    }

    const unsigned workers = std::max(1u, cfg.workers);
    const std::size_t cap = std::max<std::size_t>(1, cfg.max_witnesses);
    const std::uint64_t words_per_candidate = (n + 15) / 16;  // 32 base-4 digits per word

    std::vector<LocalBest> locals(workers);
    std::atomic<std::size_t> shared_best{0};

    auto worker_body = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        LocalBest lb;
        for (std::uint64_t c = begin; c < end; ++c) {
            CandidateKey key;
            PlanePair lambda, v;
            if (exhaustive) {
                key = {c >> (2 * n), c & ((std::uint64_t{1} << (2 * n)) - 1)};
                lambda = planes_from_key(key.first, n);
                v = planes_from_key(key.second, n);
            } else {
                // splitmix64-ctr-v1: word t of candidate c is
                // mix(seed + (c*W + t + 1) * golden); 32 little-endian base-4
                // digits per word, lambda digits first.
                std::uint64_t L = 0, V = 0;
                std::uint64_t word = 0;
                for (std::size_t t = 0; t < 2 * n; ++t) {
                    if (t % 32 == 0) word = splitmix64_at(cfg.seed, c * words_per_candidate + t / 32);
                    const unsigned digit = static_cast<unsigned>((word >> (2 * (t % 32))) & 3);
                    if (t < n) {
                        L = (L << 2) | digit;
                        lambda.lo |= static_cast<std::uint64_t>(digit & 1) << t;
                        lambda.hi |= static_cast<std::uint64_t>((digit >> 1) & 1) << t;
                    } else {
                        V = (V << 2) | digit;
                        v.lo |= static_cast<std::uint64_t>(digit & 1) << (t - n);
                        v.hi |= static_cast<std::uint64_t>((digit >> 1) & 1) << (t - n);
                    }
                }
                key = {L, V};
            }
            if (cfg.require_lambda0_nonzero && (key.first >> (2 * (n - 1))) == 0) continue;
            ++lb.examined;
            // Abort threshold: the best distance seen anywhere so far. A
            // candidate tying the final best can never trip it, so exact
            // values are computed for every candidate that matters.
            const std::size_t threshold = std::max(lb.d, shared_best.load(std::memory_order_relaxed));
            const KernelOutcome res = kernel_eval(n, lambda, v, threshold);
            if (res.k == n) ++lb.full_rank;
            if (res.k == n && res.exact) {
                lb.consider(res.value, key, cap, exhaustive);
                if (res.value > shared_best.load(std::memory_order_relaxed)) {
                    std::size_t prev = shared_best.load(std::memory_order_relaxed);
                    while (prev < res.value &&
                           !shared_best.compare_exchange_weak(prev, res.value,
                                                              std::memory_order_relaxed)) {
                    }
                }
            }
        }
        locals[w] = std::move(lb);
    };

    if (total > 0) {
        const std::uint64_t chunk = total / workers;
        const std::uint64_t rem = total % workers;
        std::vector<std::thread> threads;
        std::uint64_t begin = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t size = chunk + (w < rem ? 1 : 0);
            const std::uint64_t end = begin + size;
            threads.emplace_back(worker_body, w, begin, end);
            begin = end;
        }
        for (auto& t : threads) t.join();
    }

    // Merge: max distance, then the lexicographically smallest keys. The
    // merge is associative and commutative, so the outcome is independent of
    // worker count and chunking.
    SearchResult result;
    result.mode = cfg.mode;
    result.n = n;
    result.seed = exhaustive ? 0 : cfg.seed;
    result.budget = exhaustive ? 0 : cfg.budget;

    LocalBest merged;
    for (auto& lb : locals) {
        result.candidates_examined += lb.examined;
        result.work_units += lb.examined + (lb.full_rank << n);
        if (!lb.any) continue;
        if (!merged.any || lb.d > merged.d) {
            merged.any = true;
            merged.d = lb.d;
            merged.keys = std::move(lb.keys);
        } else if (lb.d == merged.d) {
            // Exhaustive blocks are ascending and disjoint, so appending
            // keeps the order; random keys need a real merge.
            std::vector<CandidateKey> joined;
            joined.reserve(merged.keys.size() + lb.keys.size());
            std::merge(merged.keys.begin(), merged.keys.end(), lb.keys.begin(), lb.keys.end(),
                       std::back_inserter(joined));
            joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
            if (joined.size() > cap) joined.resize(cap);
            merged.keys = std::move(joined);
        }
    }

    if (merged.any) {
        result.best_distance = merged.d;
        const std::size_t bound = n / 2 + 1;
        for (const CandidateKey& key : merged.keys) {
            const ShiftVector lambda(Field::gf4(), digits_from_key(key.first, n));
            const FieldVector v(Field::gf4(), digits_from_key(key.second, n));
            const AdditiveCode code = vc_code(lambda, v);
            const CodeReport report = make_report(code);
            if (report.k != n || report.d != merged.d)
                throw std::logic_error("internal error: witness re-verification mismatch (k=" +
                                       std::to_string(report.k) + ", d=" + std::to_string(report.d) +
                                       " vs " + std::to_string(merged.d) + ")");
            if (report.d > bound)
                throw std::logic_error("internal error: rank-n code exceeds the Singleton bound d <= " +
                                       std::to_string(bound));
            result.witnesses.push_back(report);
        }
    }
    return result;
}

std::string mode_name(SearchMode m) {
    return m == SearchMode::exhaustive ? "exhaustive" : "random";
}

nlohmann::json report_json_obj(const CodeReport& r) {
    return nlohmann::json::parse(report_to_json(r));
}

}  // namespace

CandidateEval evaluate_candidate(const ShiftVector& lambda, const FieldVector& v,
                                 std::optional<std::size_t> threshold) {
    const AdditiveCode code = vc_code(lambda, v);
    CandidateEval out{CandidateEval::Kind::rank_deficient, code.dimension(), 0};
    if (code.dimension() < code.length()) return out;
    if (threshold) {
        const DistanceOutcome d = min_distance(code, *threshold);
        out.kind = d.kind == DistanceOutcome::Kind::exact ? CandidateEval::Kind::exact
                                                          : CandidateEval::Kind::below_threshold;
        out.d = d.value;
    } else {
        out.kind = CandidateEval::Kind::exact;
        out.d = min_distance(code);
    }
    return out;
}

SearchResult exhaustive_search(const SearchConfig& cfg) {
    SearchConfig c = cfg;
    c.mode = SearchMode::exhaustive;
    return run_search(c);
}

SearchResult random_search(const SearchConfig& cfg) {
    SearchConfig c = cfg;
    c.mode = SearchMode::random;
    return run_search(c);
}

std::string search_result_to_json(const SearchResult& r) {
    nlohmann::json j;
    j["mode"] = mode_name(r.mode);
    j["n"] = r.n;
    j["candidates_examined"] = r.candidates_examined;
    j["work_units"] = r.work_units;
    if (r.mode == SearchMode::random) {
        j["seed"] = r.seed;
        j["budget"] = r.budget;
        j["algorithm"] = kRngAlgorithm;
    }
    if (r.best_distance)
        j["best_distance"] = *r.best_distance;
    else
        j["best_distance"] = nullptr;
    j["witnesses"] = nlohmann::json::array();
    for (const CodeReport& w : r.witnesses) j["witnesses"].push_back(report_json_obj(w));
    return j.dump();
}

std::string search_result_to_text(const SearchResult& r) {
    std::ostringstream out;
    out << "mode: " << mode_name(r.mode) << "\n";
    out << "n: " << r.n << "\n";
    if (r.mode == SearchMode::random) {
        out << "seed: " << r.seed << "\n";
        out << "budget: " << r.budget << "\n";
        out << "algorithm: " << kRngAlgorithm << "\n";
    }
    out << "candidates_examined: " << r.candidates_examined << "\n";
    out << "work_units: " << r.work_units << "\n";
    if (!r.best_distance) {
        out << "best_distance: none\n";
        return out.str();
    }
    out << "best_distance: " << *r.best_distance << "\n";
    out << "witnesses:\n";
    for (const CodeReport& w : r.witnesses) {
        out << "  lambda=" << w.lambda.value_or("?") << " v=" << w.v.value_or("?") << " k=" << w.k
            << " d=" << w.d << " " << classification_name(w.classification) << "\n";
    }
    return out.str();
}

namespace {

// Best-known half-rate codes bundled with the tool, n = 2..13.
constexpr const char* kBuiltinTable =
    "2\t1,1\ta,1\t2\n"
    "3\t1,0,a\ta,1,1\t2\n"
    "4\t1,0,0,1\t1,a,1,1\t3\n"
    "5\t1,0,0,0,a\t1,0,a,1,1\t3\n"
    "6\t1,0,0,0,0,0\ta,a2,a,1,1,1\t4\n"
    "7\t1,0,1,0,0,0,0\t0,1,a,1,1,1,1\t4\n"
    "8\t1,0,0,0,0,0,0,a\t0,a,a2,a2,1,1,1,1\t4\n"
    "9\t1,0,0,0,0,0,0,0,1\ta2,a,1,1,1,1,1,1,1\t4\n"
    "10\t1,0,0,0,0,0,0,0,0,0\t0,a,a,1,a,1,1,1,1,1\t5\n"
    "11\t1,0,0,0,1,0,0,0,0,0,0\t0,a,a2,a,1,1,1,1,1,1,1\t5\n"
    "12\t1,0,0,0,0,0,0,0,0,0,0,0\t0,1,a2,a2,1,a,1,1,1,1,1,1\t6\n"
    "13\t1,0,0,0,0,0,0,0,0,0,0,0,0\t0,a,a2,1,1,a,1,1,1,1,1,1,1\t6\n";

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const std::size_t pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

}  // namespace

const std::vector<TableEntry>& builtin_code_table() {
    static const std::vector<TableEntry> table = parse_code_table(kBuiltinTable);
    return table;
}

std::vector<TableEntry> parse_code_table(std::string_view text) {
    std::vector<TableEntry> entries;
    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split(line, '\t');
        const auto fail = [&](const std::string& why) {
            throw std::invalid_argument("table line " + std::to_string(line_no) + ": " + why);
        };
        if (fields.size() != 4) fail("expected 4 tab-separated fields, got " + std::to_string(fields.size()));
        std::size_t n = 0, d = 0;
        try {
            n = std::stoul(std::string(fields[0]));
            d = std::stoul(std::string(fields[3]));
        } catch (const std::exception&) {
            fail("n and d must be non-negative integers");
        }
        if (n < 1 || n > kEnumerationGuard) fail("n out of range");
        if (d > n) fail("expected distance exceeds the length");
        FieldVector lambda = parse_vector(Field::gf4(), fields[1]);
        FieldVector v = parse_vector(Field::gf4(), fields[2]);
        if (lambda.size() != n || v.size() != n) fail("vector lengths do not match n");
        entries.push_back(TableEntry{n, ShiftVector(std::move(lambda)), std::move(v), d});
    }
    return entries;
}

bool TableVerification::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

TableVerification verify_table(std::span<const TableEntry> entries) {
    TableVerification out;
    for (const TableEntry& e : entries) {
        TableRowVerification row{e, 0, 0, Classification::ordinary, Classification::ordinary, false};
        const CandidateEval eval = evaluate_candidate(e.lambda, e.v);
        row.got_k = eval.k;
        row.expected_classification = classify(e.n, e.n, e.expected_d);
        if (eval.kind == CandidateEval::Kind::exact) {
            row.got_d = eval.d;
            row.got_classification = classify(e.n, eval.k, eval.d);
            row.pass = eval.k == e.n && eval.d == e.expected_d &&
                       row.got_classification == row.expected_classification;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string table_verification_to_json(const TableVerification& v) {
    nlohmann::json j;
    j["all_pass"] = v.all_pass();
    j["rows"] = nlohmann::json::array();
    for (const TableRowVerification& r : v.rows) {
        nlohmann::json row;
        row["n"] = r.entry.n;
        row["lambda"] = format_vector(r.entry.lambda.coords());
        row["v"] = format_vector(r.entry.v);
        row["expected_d"] = r.entry.expected_d;
        row["k"] = r.got_k;
        row["d"] = r.got_d;
        row["classification"] = classification_name(r.got_classification);
        row["expected_classification"] = classification_name(r.expected_classification);
        row["pass"] = r.pass;
        j["rows"].push_back(std::move(row));
    }
    return j.dump();
}

std::string table_verification_to_csv(const TableVerification& v) {
    std::string out = "n,lambda,v,expected_d,k,d,classification,pass\n";
    for (const TableRowVerification& r : v.rows) {
        out += std::to_string(r.entry.n);
        out += ",\"" + format_vector(r.entry.lambda.coords()) + "\"";
        out += ",\"" + format_vector(r.entry.v) + "\"";
        out += "," + std::to_string(r.entry.expected_d);
        out += "," + std::to_string(r.got_k);
        out += "," + std::to_string(r.got_d);
        out += "," + classification_name(r.got_classification);
        out += r.pass ? ",pass" : ",FAIL";
        out += "\n";
    }
    return out;
}

}  // namespace veccirc
