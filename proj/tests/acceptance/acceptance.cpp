// Acceptance suite. Runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion; exits nonzero if any fails.
//
//   1. bundled-table reproduction: all 12 rows give k = n and the exact d
//   2. classification split: n = 2..7 extremal, n = 8..13 near-extremal
//   3. exhaustive optimality at n = 2, 3, 4 (complete enumeration: 2, 2, 3)
//   4. ring / quotient-algebra property suite, 1000 instances per (n, q)
//   5. distance oracle equivalence + weight-distribution consistency
//   6. Singleton envelope over every search run here
//   7. determinism: random reruns byte-identical; exhaustive worker-invariant

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "veccirc/additive_code.hpp"
#include "veccirc/ring_check.hpp"
#include "veccirc/rng.hpp"
#include "veccirc/search.hpp"
#include "veccirc/text.hpp"

using namespace veccirc;

namespace {

int g_failures = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", pass ? "PASS" : "FAIL", criterion, title,
                detail.c_str(), seconds);
    if (!pass) ++g_failures;
}

class Timer {
public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// expected minimum distances for n = 2..13, in order
const std::size_t kExpectedDistances[] = {2, 2, 3, 3, 4, 4, 4, 4, 5, 5, 6, 6};

void criterion_1_table_reproduction() {
    Timer timer;
    const auto& table = builtin_code_table();
    bool pass = table.size() == 12;
    std::string detail;
    std::size_t checked = 0;
    for (std::size_t i = 0; pass && i < table.size(); ++i) {
        const TableEntry& e = table[i];
        const AdditiveCode code = vc_code(e.lambda, e.v);
        const std::size_t expected = kExpectedDistances[i];
        if (e.n != i + 2 || e.expected_d != expected || code.dimension() != e.n ||
            min_distance(code) != expected) {
            pass = false;
            detail = "row n=" + std::to_string(e.n) + " gave k=" + std::to_string(code.dimension()) +
                     " d=" + std::to_string(min_distance(code));
            break;
        }
        ++checked;
    }
    if (pass) detail = std::to_string(checked) + "/12 rows exact";
    report(1, "bundled-table reproduction", pass, detail, timer.elapsed());
}

void criterion_2_classification() {
    Timer timer;
    bool pass = true;
    std::string detail = "extremal for n=2..7, near-extremal for n=8..13";
    for (const TableEntry& e : builtin_code_table()) {
        const AdditiveCode code = vc_code(e.lambda, e.v);
        const Classification got = classify(e.n, code.dimension(), min_distance(code));
        const Classification expected =
            e.n <= 7 ? Classification::extremal : Classification::near_extremal;
        if (got != expected) {
            pass = false;
            detail = "row n=" + std::to_string(e.n) + " classified " + classification_name(got);
            break;
        }
    }
    report(2, "classification split", pass, detail, timer.elapsed());
}

std::vector<SearchResult> g_search_runs;  // collected for the envelope check

void criterion_3_exhaustive_optimality() {
    Timer timer;
    const std::size_t expected_best[] = {2, 2, 3};
    bool pass = true;
    std::string detail;
    for (std::size_t n = 2; n <= 4; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.workers = 1;
        const SearchResult r = exhaustive_search(cfg);
        g_search_runs.push_back(r);
        const std::uint64_t total = std::uint64_t{1} << (4 * n);
        if (r.candidates_examined != total || !r.best_distance ||
            *r.best_distance != expected_best[n - 2]) {
            pass = false;
            detail = "n=" + std::to_string(n) + " returned best=" +
                     (r.best_distance ? std::to_string(*r.best_distance) : "none");
            break;
        }
    }
    if (pass) detail = "complete enumeration: best d = 2, 2, 3 for n = 2, 3, 4";
    report(3, "exhaustive optimality at small n", pass, detail, timer.elapsed());
}

void criterion_4_ring_properties() {
    Timer timer;
    const std::pair<unsigned, unsigned> fields[] = {{2, 1}, {3, 1}, {2, 2},
                                                    {5, 1}, {2, 3}, {3, 2}};
    bool pass = true;
    std::string detail;
    std::uint64_t instances = 0;
    for (const auto& [p, m] : fields) {
        const FieldRef f = Field::create(p, m);
        for (std::size_t n = 1; n <= 8 && pass; ++n) {
            const RingCheckReport r = run_ring_check(f, n, 1000, 0xACCE57ULL + n);
            instances += r.trials;
            if (!r.pass()) {
                pass = false;
                for (const PropertyResult& prop : r.properties)
                    if (prop.failures > 0) {
                        detail = "q=" + std::to_string(f->order()) + " n=" + std::to_string(n) +
                                 " " + prop.name + " failed " + std::to_string(prop.failures) +
                                 "x, e.g. " + prop.first_failure;
                        break;
                    }
            }
        }
        if (!pass) break;
    }
    if (pass)
        detail = std::to_string(instances) + " instances over q in {2,3,4,5,8,9}, n in 1..8, zero failures";
    report(4, "ring-theory property suite", pass, detail, timer.elapsed());
}

void criterion_5_distance_oracle() {
    Timer timer;
    SplitMix64 rng(0x0DDC0DE);
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    while (checked < 200 && pass) {
        const std::size_t rows = 1 + rng.below(8);
        const std::size_t cols = 1 + rng.below(10);
        std::vector<FieldElement> entries(rows * cols);
        for (auto& e : entries) e = static_cast<FieldElement>(rng.below(4));
        const FieldMatrix g(Field::gf4(), rows, cols, entries);
        const AdditiveCode code = additive_code_from_generator(g);
        if (code.dimension() < 1 || code.dimension() > 8) continue;
        ++checked;

        std::vector<oracles::Word> oracle_rows;
        for (std::size_t i = 0; i < rows; ++i) oracle_rows.push_back(g.row(i).coords());
        const auto words = oracles::span_of_rows(oracle_rows);
        const std::size_t naive = oracles::min_pairwise_distance(words);
        const std::size_t gray = min_distance(code);

        const auto w = weight_distribution(code);
        std::uint64_t total = 0;
        std::size_t first_positive = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            total += w[i];
            if (first_positive == 0 && i > 0 && w[i] > 0) first_positive = i;
        }
        if (gray != naive || total != code.codeword_count() || first_positive != gray ||
            words.size() != code.codeword_count()) {
            pass = false;
            detail = "generator " + std::to_string(rows) + "x" + std::to_string(cols) +
                     ": gray=" + std::to_string(gray) + " naive=" + std::to_string(naive);
        }
    }
    if (pass) detail = "200 random generators with k <= 8, all-pairs oracle agrees";
    report(5, "distance oracle equivalence", pass, detail, timer.elapsed());
}

void criterion_6_singleton_envelope() {
    Timer timer;
    // Add random-mode runs to the pool, then check every full-rank result.
    for (const std::uint64_t seed : {1ULL, 2ULL}) {
        SearchConfig cfg;
        cfg.n = 9;
        cfg.mode = SearchMode::random;
        cfg.seed = seed;
        cfg.budget = 20000;
        cfg.workers = 2;
        g_search_runs.push_back(random_search(cfg));
    }
    bool pass = true;
    std::string detail;
    std::size_t inspected = 0;
    for (const SearchResult& r : g_search_runs) {
        if (!r.best_distance) continue;
        const std::size_t bound = r.n / 2 + 1;
        ++inspected;
        if (*r.best_distance > bound) {
            pass = false;
            detail = "n=" + std::to_string(r.n) + " recorded d=" + std::to_string(*r.best_distance) +
                     " > " + std::to_string(bound);
            break;
        }
        for (const CodeReport& w : r.witnesses) {
            if (w.k == w.n && w.d > bound) {
                pass = false;
                detail = "witness exceeds bound";
                break;
            }
        }
    }
    if (pass)
        detail = std::to_string(inspected) + " search results, all within d <= floor(n/2)+1";
    report(6, "Singleton-bound envelope", pass, detail, timer.elapsed());
}

void criterion_7_determinism() {
    Timer timer;
    bool pass = true;
    std::string detail;

    SearchConfig rnd;
    rnd.n = 8;
    rnd.mode = SearchMode::random;
    rnd.seed = 424242;
    rnd.budget = 30000;
    rnd.workers = 2;
    const std::string first = search_result_to_json(random_search(rnd));
    const std::string second = search_result_to_json(random_search(rnd));
    if (first != second) {
        pass = false;
        detail = "random rerun differed";
    }

    if (pass) {
        SearchConfig ex;
        ex.n = 3;
        ex.workers = 1;
        const std::string one = search_result_to_json(exhaustive_search(ex));
        ex.workers = 4;
        const std::string four = search_result_to_json(exhaustive_search(ex));
        if (one != four) {
            pass = false;
            detail = "exhaustive n=3 differs between 1 and 4 workers";
        }
    }
    if (pass) detail = "random rerun byte-identical; exhaustive invariant across workers 1 and 4";
    report(7, "determinism", pass, detail, timer.elapsed());
}

}  // namespace

int main() {
    criterion_1_table_reproduction();
    criterion_2_classification();
    criterion_3_exhaustive_optimality();
    criterion_4_ring_properties();
    criterion_5_distance_oracle();
    criterion_6_singleton_envelope();
    criterion_7_determinism();
    if (g_failures == 0) {
        std::printf("all 7 criteria pass\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
