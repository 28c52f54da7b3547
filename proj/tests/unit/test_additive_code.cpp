#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "veccirc/additive_code.hpp"
#include "veccirc/rng.hpp"

using namespace veccirc;

namespace {

const FieldRef& F4() { return Field::gf4(); }

FieldVector fv(std::vector<FieldElement> c) { return FieldVector(F4(), std::move(c)); }
ShiftVector sv(std::vector<FieldElement> c) { return ShiftVector(F4(), std::move(c)); }

FieldMatrix gen(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries) {
    return FieldMatrix(F4(), rows, cols, std::move(entries));
}

std::vector<oracles::Word> generator_rows(const FieldMatrix& g) {
    std::vector<oracles::Word> rows;
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(g.row(i).coords());
    return rows;
}

FieldMatrix random_generator(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    std::vector<FieldElement> entries(rows * cols);
    for (auto& e : entries) e = static_cast<FieldElement>(rng.below(4));
    return gen(rows, cols, std::move(entries));
}

}  // namespace

TEST_CASE("hamming weight counts nonzero coordinates") {
    CHECK(hamming_weight(fv({0, 2, 0, 1})) == 2);
    CHECK(hamming_weight(fv({0, 0, 0})) == 0);
    CHECK(hamming_weight(fv({2, 1})) == 2);
}

TEST_CASE("binary dimension of simple generators") {
    CHECK(additive_code_from_generator(FieldMatrix::identity(F4(), 5)).dimension() == 5);
    // (a^2, 0) = (1, 0) + (a, 0) over GF(2)
    CHECK(additive_code_from_generator(gen(3, 2, {1, 0, 2, 0, 3, 0})).dimension() == 2);
    // zero rows add nothing
    CHECK(additive_code_from_generator(gen(3, 2, {1, 0, 0, 0, 0, 2})).dimension() == 2);
}

TEST_CASE("dimension matches the oracle rank on random generators") {
    SplitMix64 rng(101);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + rng.below(8);
        const std::size_t cols = 1 + rng.below(10);
        const FieldMatrix g = random_generator(rng, rows, cols);
        const AdditiveCode code = additive_code_from_generator(g);
        CHECK(code.dimension() == oracles::gf2_rank(generator_rows(g)));
        CHECK(code.dimension() <= 2 * cols);
    }
}

TEST_CASE("codeword enumeration of the 2-coordinate best-known code") {
    const AdditiveCode code = vc_code(sv({1, 1}), fv({2, 1}));
    REQUIRE(code.dimension() == 2);
    std::set<std::vector<FieldElement>> seen;
    for (const FieldVector& w : enumerate_codewords(code)) seen.insert(w.coords());
    const std::set<std::vector<FieldElement>> expected = {
        {0, 0}, {2, 1}, {1, 3}, {3, 2}};
    CHECK(seen == expected);
}

TEST_CASE("enumeration starts at zero and visits 2^k codewords once") {
    const AdditiveCode code = vc_code(sv({1, 0, 0, 1}), fv({1, 2, 1, 1}));
    auto range = enumerate_codewords(code);
    auto it = range.begin();
    CHECK(*it == FieldVector::zero(F4(), 4));
    std::set<std::vector<FieldElement>> seen;
    std::size_t count = 0;
    for (const FieldVector& w : range) {
        seen.insert(w.coords());
        ++count;
    }
    CHECK(count == 16);
    CHECK(seen.size() == 16);
}

TEST_CASE("a k = 13 code enumerates 8192 codewords") {
    const AdditiveCode code = vc_code(sv({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                                      fv({0, 2, 3, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1}));
    REQUIRE(code.dimension() == 13);
    CHECK(enumerate_codewords(code).size() == 8192);
    std::uint64_t total = 0;
    for (const auto x : weight_distribution(code)) total += x;
    CHECK(total == 8192);
}

TEST_CASE("k = 0 code has exactly one codeword") {
    const AdditiveCode code = vc_code(sv({1, 1}), fv({0, 0}));
    CHECK(code.dimension() == 0);
    std::size_t count = 0;
    for (const FieldVector& w : enumerate_codewords(code)) {
        CHECK(hamming_weight(w) == 0);
        ++count;
    }
    CHECK(count == 1);
}

TEST_CASE("gray enumeration equals naive subset-sum enumeration") {
    SplitMix64 rng(202);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng.below(6);
        const std::size_t cols = 1 + rng.below(8);
        const FieldMatrix g = random_generator(rng, rows, cols);
        const AdditiveCode code = additive_code_from_generator(g);
        if (code.dimension() > 10) continue;
        std::set<oracles::Word> gray;
        for (const FieldVector& w : enumerate_codewords(code)) gray.insert(w.coords());
        CHECK(gray == oracles::span_of_rows(generator_rows(g)));
    }
}

TEST_CASE("minimum distance of known codes") {
    CHECK(min_distance(vc_code(sv({1, 1}), fv({2, 1}))) == 2);
    CHECK(min_distance(vc_code(sv({1, 0, 0, 0, 0, 0}), fv({2, 3, 2, 1, 1, 1}))) == 4);
    CHECK(min_distance(additive_code_from_generator(FieldMatrix::identity(F4(), 4))) == 1);
}

TEST_CASE("distance of the k = 0 code is an explicit error") {
    const AdditiveCode code = vc_code(sv({1, 1}), fv({0, 0}));
    CHECK_THROWS_AS(min_distance(code), std::domain_error);
    CHECK_THROWS_AS(weight_distribution(code), std::domain_error);
}

TEST_CASE("distance equals the naive pairwise oracle") {
    SplitMix64 rng(303);
    int checked = 0;
    for (int t = 0; checked < 60; ++t) {
        const std::size_t rows = 1 + rng.below(7);
        const std::size_t cols = 1 + rng.below(9);
        const FieldMatrix g = random_generator(rng, rows, cols);
        const AdditiveCode code = additive_code_from_generator(g);
        if (code.dimension() < 1 || code.dimension() > 8) continue;
        ++checked;
        const auto words = oracles::span_of_rows(generator_rows(g));
        CHECK(min_distance(code) == oracles::min_pairwise_distance(words));
    }
}

TEST_CASE("weight distribution shapes") {
    SUBCASE("the 2-coordinate best-known code") {
        const auto w = weight_distribution(vc_code(sv({1, 1}), fv({2, 1})));
        CHECK(w == std::vector<std::uint64_t>{1, 0, 3});
    }
    SUBCASE("single full-weight generator row") {
        const auto w =
            weight_distribution(additive_code_from_generator(gen(1, 4, {1, 2, 3, 1})));
        CHECK(w == std::vector<std::uint64_t>{1, 0, 0, 0, 1});
    }
    SUBCASE("identity generator of length 2") {
        const auto w = weight_distribution(additive_code_from_generator(FieldMatrix::identity(F4(), 2)));
        CHECK(w == std::vector<std::uint64_t>{1, 2, 1});
    }
}

TEST_CASE("weight distribution sums to 2^k and pins the distance") {
    SplitMix64 rng(404);
    for (int t = 0; t < 40; ++t) {
        const FieldMatrix g = random_generator(rng, 1 + rng.below(6), 1 + rng.below(8));
        const AdditiveCode code = additive_code_from_generator(g);
        if (code.dimension() < 1) continue;
        const auto w = weight_distribution(code);
        std::uint64_t total = 0;
        for (const auto x : w) total += x;
        CHECK(total == code.codeword_count());
        CHECK(w[0] == 1);
        std::size_t first = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] > 0) {
                first = i;
                break;
            }
        CHECK(first == min_distance(code));
    }
}

TEST_CASE("codes are closed under addition") {
    SplitMix64 rng(505);
    const AdditiveCode code = vc_code(sv({1, 0, 1, 0, 0, 0, 0}), fv({0, 1, 2, 1, 1, 1, 1}));
    std::vector<FieldVector> words;
    for (const FieldVector& w : enumerate_codewords(code)) words.push_back(w);
    for (int t = 0; t < 200; ++t) {
        const auto& u = words[rng.below(words.size())];
        const auto& w = words[rng.below(words.size())];
        CHECK(code.contains(vec_add(u, w)));
    }
    CHECK_FALSE(code.contains(fv({1, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("singleton-bound classification") {
    CHECK(classify(6, 6, 4) == Classification::extremal);
    CHECK(classify(13, 13, 6) == Classification::near_extremal);
    CHECK(classify(4, 4, 1) == Classification::ordinary);
    CHECK(classify(4, 4, 4) == Classification::bound_violating);
    CHECK(classify(6, 5, 4) == Classification::ordinary);  // not half-rate
    CHECK(classification_name(Classification::near_extremal) == "near-extremal");
}

TEST_CASE("vc_code on best-known rows gives half-rate codes") {
    SUBCASE("n = 4 gives a (4, 2^4, 3) code") {
        const AdditiveCode code = vc_code(sv({1, 0, 0, 1}), fv({1, 2, 1, 1}));
        CHECK(code.dimension() == 4);
        CHECK(min_distance(code) == 3);
    }
    SUBCASE("n = 9 gives a (9, 2^9, 4) code") {
        const AdditiveCode code =
            vc_code(sv({1, 0, 0, 0, 0, 0, 0, 0, 1}), fv({3, 2, 1, 1, 1, 1, 1, 1, 1}));
        CHECK(code.dimension() == 9);
        CHECK(min_distance(code) == 4);
    }
    SUBCASE("zero v gives the trivial code") {
        CHECK(vc_code(sv({1, 0, 1}), fv({0, 0, 0})).dimension() == 0);
    }
}

TEST_CASE("provenance is recorded by vc_code only") {
    const AdditiveCode with = vc_code(sv({1, 1}), fv({2, 1}));
    REQUIRE(with.provenance().has_value());
    CHECK(with.provenance()->first == sv({1, 1}));
    const AdditiveCode without = additive_code_from_generator(FieldMatrix::identity(F4(), 2));
    CHECK_FALSE(without.provenance().has_value());
}

TEST_CASE("threshold variant certifies below-threshold codes") {
    const AdditiveCode code = vc_code(sv({1, 0, 0, 1}), fv({1, 2, 1, 1}));  // d = 3
    SUBCASE("threshold above d aborts with a witness") {
        const DistanceOutcome out = min_distance(code, 4);
        CHECK(out.kind == DistanceOutcome::Kind::below_threshold);
        CHECK(out.value < 4);
        // certified claim: true distance is below the threshold
        CHECK(min_distance(code) < 4);
    }
    SUBCASE("threshold at or below d stays exact") {
        const DistanceOutcome out = min_distance(code, 3);
        CHECK(out.kind == DistanceOutcome::Kind::exact);
        CHECK(out.value == 3);
    }
}

TEST_CASE("below-threshold verdicts imply the true distance is below") {
    SplitMix64 rng(606);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.below(7);
        std::vector<FieldElement> lam(n), v(n);
        for (auto& x : lam) x = static_cast<FieldElement>(rng.below(4));
        for (auto& x : v) x = static_cast<FieldElement>(rng.below(4));
        const AdditiveCode code = vc_code(ShiftVector(F4(), lam), FieldVector(F4(), v));
        if (code.dimension() == 0) continue;
        const std::size_t threshold = 1 + rng.below(n + 1);
        // fresh copy so the threshold run cannot see a cached exact value
        const AdditiveCode fresh = vc_code(ShiftVector(F4(), lam), FieldVector(F4(), v));
        const DistanceOutcome out = min_distance(fresh, threshold);
        const std::size_t exact = min_distance(code);
        if (out.kind == DistanceOutcome::Kind::below_threshold) {
            CHECK(out.value < threshold);
            CHECK(exact < threshold);
            CHECK(exact <= out.value);
        } else {
            CHECK(out.value == exact);
        }
    }
}

TEST_CASE("enumeration guard names the required dimension") {
    // 2n unit rows over GF(2)-expansion: k = 2n > 30 for n = 16
    std::vector<FieldElement> entries;
    const std::size_t n = 16;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries.push_back(i == j ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries.push_back(i == j ? 2 : 0);
    const AdditiveCode code = additive_code_from_generator(gen(2 * n, n, std::move(entries)));
    REQUIRE(code.dimension() == 32);
    CHECK_THROWS_WITH_AS(min_distance(code), doctest::Contains("32"), std::length_error);
    CHECK_THROWS_AS(enumerate_codewords(code), std::length_error);
}

TEST_CASE("report record carries the full parameter set") {
    const CodeReport r = make_report(vc_code(sv({1, 1}), fv({2, 1})));
    CHECK(r.n == 2);
    CHECK(r.k == 2);
    CHECK(r.d == 2);
    CHECK(r.classification == Classification::extremal);
    CHECK(r.lambda == "1,1");
    CHECK(r.v == "a,1");
    CHECK(r.weight_distribution == std::vector<std::uint64_t>{1, 0, 3});
    const std::string json = report_to_json(r);
    CHECK(json.find("\"classification\":\"extremal\"") != std::string::npos);
    CHECK(json.find("\"lambda\":\"1,1\"") != std::string::npos);
}
