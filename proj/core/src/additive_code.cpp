#include "veccirc/additive_code.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "veccirc/text.hpp"

namespace veccirc {

namespace {

constexpr std::uint64_t kEvenColumns = 0x5555555555555555ULL;

void require_gf4(const FieldRef& f, const char* what) {
    if (f->order() != 4)
        throw std::invalid_argument(std::string(what) + " requires entries in GF(4)");
}

std::size_t word_weight(std::uint64_t w) {
    return static_cast<std::size_t>(std::popcount((w | (w >> 1)) & kEvenColumns));
}

}  // namespace

std::size_t hamming_weight(const FieldVector& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) ++w;
    return w;
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::extremal: return "extremal";
        case Classification::near_extremal: return "near-extremal";
        case Classification::ordinary: return "ordinary";
        case Classification::bound_violating: return "bound-violating";
    }
    return "?";
}

Classification classify(std::size_t n, std::size_t k, std::size_t d) {
    if (k != n) return Classification::ordinary;
    const std::size_t bound = n / 2 + 1;
    if (d > bound) return Classification::bound_violating;
    if (d == bound) return Classification::extremal;
    if (d + 1 == bound) return Classification::near_extremal;
    return Classification::ordinary;
}

unsigned PackedWord::lowest_column() const {
    if (w0 != 0) return static_cast<unsigned>(std::countr_zero(w0));
    if (w1 != 0) return 64 + static_cast<unsigned>(std::countr_zero(w1));
    return 128;
}

std::size_t PackedWord::weight() const { return word_weight(w0) + word_weight(w1); }

PackedWord PackedWord::from_vector(const FieldVector& v) {
    if (v.size() > 64) throw std::invalid_argument("packed words hold at most 64 coordinates");
    PackedWord out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const FieldElement e = v[j];
        const std::size_t col = 2 * j;
        std::uint64_t& w = col < 64 ? out.w0 : out.w1;
        const std::size_t bit = col & 63;
        w |= static_cast<std::uint64_t>(e & 1) << bit;
        w |= static_cast<std::uint64_t>((e >> 1) & 1) << (bit + 1);
    }
    return out;
}

FieldVector PackedWord::to_vector(const FieldRef& field, std::size_t n) const {
    if (n > 64) throw std::invalid_argument("packed words hold at most 64 coordinates");
    std::vector<FieldElement> coords(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t col = 2 * j;
        const std::uint64_t w = col < 64 ? w0 : w1;
        const std::size_t bit = col & 63;
        coords[j] = static_cast<FieldElement>(((w >> bit) & 1) | (((w >> (bit + 1)) & 1) << 1));
    }
    return FieldVector(field, std::move(coords));
}

struct AdditiveCode::Caches {
    std::mutex mu;
    std::optional<std::size_t> d;
    std::optional<std::vector<std::uint64_t>> wdist;
};

AdditiveCode::AdditiveCode(FieldRef field, FieldMatrix generator)
    : field_(std::move(field)),
      n_(generator.cols()),
      generator_(std::move(generator)),
      caches_(std::make_shared<Caches>()) {
    if (n_ > 64) throw std::invalid_argument("code length above 64 is not supported");
    // Reduced row echelon basis of the binary expansion, pivot order on
    // columns 2j (b0 of coordinate j) then 2j+1 (b1).
    std::array<PackedWord, 128> by_pivot{};
    std::array<bool, 128> used{};
    for (std::size_t i = 0; i < generator_.rows(); ++i) {
        PackedWord row = PackedWord::from_vector(generator_.row(i));
        while (!row.is_zero()) {
            const unsigned p = row.lowest_column();
            if (used[p]) {
                row ^= by_pivot[p];
            } else {
                by_pivot[p] = row;
                used[p] = true;
                break;
            }
        }
    }
    // Back-substitute so each pivot column appears in exactly one basis row,
    // then collect the rows in pivot order.
    for (unsigned p = 0; p < 128; ++p) {
        if (!used[p]) continue;
        for (unsigned r = 0; r < p; ++r) {
            if (!used[r]) continue;
            const std::uint64_t w = p < 64 ? by_pivot[r].w0 : by_pivot[r].w1;
            if ((w >> (p & 63)) & 1) by_pivot[r] ^= by_pivot[p];
        }
    }
    for (unsigned p = 0; p < 128; ++p)
        if (used[p]) basis_.push_back(by_pivot[p]);
    k_ = basis_.size();
}

bool AdditiveCode::contains(const FieldVector& word) const {
    if (word.size() != n_ || !same_field(word.field(), field_)) return false;
    PackedWord w = PackedWord::from_vector(word);
    for (const PackedWord& b : basis_) {
        const unsigned p = b.lowest_column();
        const std::uint64_t bits = p < 64 ? w.w0 : w.w1;
        if ((bits >> (p & 63)) & 1) w ^= b;
    }
    return w.is_zero();
}

AdditiveCode additive_code_from_generator(const FieldMatrix& g) {
    require_gf4(g.field(), "additive_code_from_generator");
    return AdditiveCode(g.field(), g);
}

AdditiveCode vc_code(const ShiftVector& lambda, const FieldVector& v) {
    require_gf4(lambda.field(), "vc_code");
    AdditiveCode code(lambda.field(), vec_circulant(lambda, v));
    code.provenance_ = std::make_pair(lambda, v);
    return code;
}

CodewordIterator::CodewordIterator(const AdditiveCode* code, std::uint64_t index)
    : code_(code), index_(index) {}

FieldVector CodewordIterator::operator*() const {
    return current_.to_vector(code_->field(), code_->length());
}

CodewordIterator& CodewordIterator::operator++() {
    ++index_;
    if (index_ < code_->codeword_count())
        current_ ^= code_->basis()[static_cast<std::size_t>(std::countr_zero(index_))];
    return *this;
}

CodewordRange::CodewordRange(const AdditiveCode& code) : code_(&code) {}

CodewordIterator CodewordRange::begin() const { return CodewordIterator(code_, 0); }

CodewordIterator CodewordRange::end() const {
    return CodewordIterator(code_, code_->codeword_count());
}

std::uint64_t CodewordRange::size() const { return code_->codeword_count(); }

CodewordRange enumerate_codewords(const AdditiveCode& code) {
    if (code.dimension() > kEnumerationGuard)
        throw std::length_error("enumeration refused: k = " + std::to_string(code.dimension()) +
                                " exceeds the guard of " + std::to_string(kEnumerationGuard));
    return CodewordRange(code);
}

namespace {

// Gray-order walk over the packed basis; calls visit(weight) for every
// nonzero codeword until it returns false.
template <typename Visit>
void walk_weights(const std::vector<PackedWord>& basis, Visit&& visit) {
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    PackedWord cur;
    for (std::uint64_t j = 1; j < total; ++j) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(j))];
        if (!visit(cur.weight())) return;
    }
}

void require_enumerable_distance(const AdditiveCode& code) {
    if (code.dimension() == 0)
        throw std::domain_error("minimum distance is undefined for the k = 0 code");
    if (code.dimension() > kEnumerationGuard)
        throw std::length_error("distance refused: k = " + std::to_string(code.dimension()) +
                                " exceeds the guard of " + std::to_string(kEnumerationGuard));
}

}  // namespace

std::size_t min_distance(const AdditiveCode& code) {
    require_enumerable_distance(code);
    auto& caches = *code.caches_;
    std::lock_guard lock(caches.mu);
    if (caches.d) return *caches.d;
    std::size_t best = code.length() + 1;
    walk_weights(code.basis_, [&](std::size_t w) {
        best = std::min(best, w);
        return true;
    });
    caches.d = best;
    return best;
}

DistanceOutcome min_distance(const AdditiveCode& code, std::size_t threshold) {
    require_enumerable_distance(code);
    {
        auto& caches = *code.caches_;
        std::lock_guard lock(caches.mu);
        if (caches.d) {
            if (*caches.d < threshold)
                return {DistanceOutcome::Kind::below_threshold, *caches.d};
            return {DistanceOutcome::Kind::exact, *caches.d};
        }
    }
    std::size_t best = code.length() + 1;
    bool aborted = false;
    walk_weights(code.basis_, [&](std::size_t w) {
        best = std::min(best, w);
        if (best < threshold) {
            aborted = true;
            return false;
        }
        return true;
    });
    if (aborted) return {DistanceOutcome::Kind::below_threshold, best};
    auto& caches = *code.caches_;
    std::lock_guard lock(caches.mu);
    if (!caches.d) caches.d = best;
    return {DistanceOutcome::Kind::exact, best};
}

std::vector<std::uint64_t> weight_distribution(const AdditiveCode& code) {
    require_enumerable_distance(code);
    auto& caches = *code.caches_;
    std::lock_guard lock(caches.mu);
    if (caches.wdist) return *caches.wdist;
    std::vector<std::uint64_t> w(code.length() + 1, 0);
    w[0] = 1;
    std::size_t best = code.length() + 1;
    walk_weights(code.basis_, [&](std::size_t wt) {
        ++w[wt];
        best = std::min(best, wt);
        return true;
    });
    caches.wdist = w;
    if (!caches.d) caches.d = best;
    return w;
}

CodeReport make_report(const AdditiveCode& code) {
    CodeReport r;
    r.n = code.length();
    r.k = code.dimension();
    r.weight_distribution = weight_distribution(code);
    r.d = min_distance(code);
    r.classification = classify(r.n, r.k, r.d);
    if (code.provenance()) {
        r.lambda = format_vector(code.provenance()->first.coords());
        r.v = format_vector(code.provenance()->second);
    }
    return r;
}

std::string report_to_json(const CodeReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    if (r.lambda) j["lambda"] = *r.lambda;
    if (r.v) j["v"] = *r.v;
    j["k"] = r.k;
    j["d"] = r.d;
    j["classification"] = classification_name(r.classification);
    j["weight_distribution"] = r.weight_distribution;
    return j.dump();
}

std::string report_csv_header() { return "n,lambda,v,k,d,classification,weight_distribution"; }

std::string report_to_csv(const CodeReport& r) {
    std::string out = std::to_string(r.n);
    out += ",\"" + r.lambda.value_or("") + "\"";
    out += ",\"" + r.v.value_or("") + "\"";
    out += "," + std::to_string(r.k);
    out += "," + std::to_string(r.d);
    out += "," + classification_name(r.classification);
    std::string w;
    for (std::size_t i = 0; i < r.weight_distribution.size(); ++i) {
        if (i > 0) w += ' ';
        w += std::to_string(r.weight_distribution[i]);
    }
    out += ",\"" + w + "\"";
    return out;
}

}  // namespace veccirc
