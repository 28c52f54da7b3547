// Additive codes over F_4: GF(2)-linear subspaces of F_4^n.
//
// A code is presented by a generator matrix whose rows span it additively;
// its binary dimension k is the GF(2) rank of the binary expansion of the
// generator (each F_4 entry b0 + b1*a expands to the bit pair (b0, b1)), so
// the code holds 2^k codewords, 0 <= k <= 2n. Minimum distance and the weight
// distribution come from Gray-code enumeration over a reduced row basis.
//
// The half-rate (k = n) Singleton bound is d <= floor(n/2) + 1; a half-rate
// code meeting it is extremal, one missing it by exactly one is near-extremal.

#ifndef VECCIRC_ADDITIVE_CODE_HPP
#define VECCIRC_ADDITIVE_CODE_HPP

#include <array>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include "veccirc/linalg.hpp"

namespace veccirc {

/// Count of nonzero coordinates.
std::size_t hamming_weight(const FieldVector& v);

enum class Classification { extremal, near_extremal, ordinary, bound_violating };

std::string classification_name(Classification c);

/// Singleton-bound classification. Applies only to half-rate codes (k = n);
/// anything else is ordinary. bound_violating signals an upstream bug: no
/// correct half-rate additive code over F_4 exceeds floor(n/2) + 1.
Classification classify(std::size_t n, std::size_t k, std::size_t d);

/// Largest k accepted by enumeration-based operations (2^k codewords).
inline constexpr std::size_t kEnumerationGuard = 30;

/// n-bit-per-plane packed F_4 vector: coordinate j holds its b0 bit at
/// column 2j and its b1 bit at column 2j+1 of a 128-bit row. This fixes the
/// bit order of the binary expansion used for rank computation.
struct PackedWord {
    std::uint64_t w0 = 0, w1 = 0;

    friend PackedWord operator^(PackedWord a, PackedWord b) {
        return {a.w0 ^ b.w0, a.w1 ^ b.w1};
    }
    void operator^=(PackedWord b) { w0 ^= b.w0; w1 ^= b.w1; }
    bool operator==(const PackedWord&) const = default;
    bool is_zero() const { return w0 == 0 && w1 == 0; }

    /// Index of the lowest set column, or 128 when zero.
    unsigned lowest_column() const;
    /// Number of nonzero F_4 coordinates.
    std::size_t weight() const;

    static PackedWord from_vector(const FieldVector& v);
    FieldVector to_vector(const FieldRef& field, std::size_t n) const;
};

struct DistanceOutcome {
    enum class Kind { exact, below_threshold };
    Kind kind;
    /// Exact minimum distance, or a witnessed nonzero weight < threshold.
    std::size_t value;
};

class AdditiveCode;

/// Forward iteration over all 2^k codewords in binary-reflected Gray order:
/// codeword j is the XOR of the basis rows selected by j ^ (j >> 1), so each
/// step adds exactly one basis row. Starts at the zero codeword.
class CodewordIterator {
public:
    using value_type = FieldVector;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    FieldVector operator*() const;
    CodewordIterator& operator++();
    bool operator!=(const CodewordIterator& other) const { return index_ != other.index_; }
    bool operator==(const CodewordIterator& other) const { return index_ == other.index_; }

private:
    friend class CodewordRange;
    CodewordIterator(const AdditiveCode* code, std::uint64_t index);

    const AdditiveCode* code_;
    std::uint64_t index_;
    PackedWord current_;
};

class CodewordRange {
public:
    explicit CodewordRange(const AdditiveCode& code);
    CodewordIterator begin() const;
    CodewordIterator end() const;
    std::uint64_t size() const;

private:
    const AdditiveCode* code_;
};

class AdditiveCode {
public:
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::uint64_t codeword_count() const { return std::uint64_t{1} << k_; }
    const FieldRef& field() const { return field_; }
    const FieldMatrix& generator() const { return generator_; }
    /// Reduced GF(2) row basis (k rows, sorted by pivot column).
    const std::vector<PackedWord>& basis() const { return basis_; }

    /// (lambda, v) when the code came from a vector-circulant generator.
    const std::optional<std::pair<ShiftVector, FieldVector>>& provenance() const {
        return provenance_;
    }

    /// Membership in the GF(2) span of the generator rows.
    bool contains(const FieldVector& word) const;

private:
    friend AdditiveCode additive_code_from_generator(const FieldMatrix&);
    friend AdditiveCode vc_code(const ShiftVector&, const FieldVector&);
    friend std::size_t min_distance(const AdditiveCode&);
    friend DistanceOutcome min_distance(const AdditiveCode&, std::size_t);
    friend std::vector<std::uint64_t> weight_distribution(const AdditiveCode&);

    struct Caches;

    AdditiveCode(FieldRef field, FieldMatrix generator);

    FieldRef field_;
    std::size_t n_;
    FieldMatrix generator_;
    std::size_t k_ = 0;
    std::vector<PackedWord> basis_;
    std::optional<std::pair<ShiftVector, FieldVector>> provenance_;
    std::shared_ptr<Caches> caches_;  // shared between copies; compute-then-publish
};

/// The GF(2)-span of the rows of G (entries in F_4). Rank-deficient G is
/// accepted; k always reflects the true rank.
AdditiveCode additive_code_from_generator(const FieldMatrix& g);

/// The additive code generated by the lambda-vector-circulant matrix of v;
/// records (lambda, v) provenance. k <= n always holds here.
AdditiveCode vc_code(const ShiftVector& lambda, const FieldVector& v);

/// All 2^k codewords, zero first, Gray order. Refuses k above the
/// enumeration guard.
CodewordRange enumerate_codewords(const AdditiveCode& code);

/// Smallest nonzero codeword weight. Requires 1 <= k <= guard; the k = 0
/// code has no two distinct codewords, so its distance is an error. The
/// exact result is cached on the code.
std::size_t min_distance(const AdditiveCode& code);

/// Early-abort variant: stops as soon as a nonzero weight < threshold is
/// found and returns it as a certified below-threshold verdict; otherwise
/// returns the exact distance.
DistanceOutcome min_distance(const AdditiveCode& code, std::size_t threshold);

/// W[w] = number of codewords of weight w, length n+1, sum 2^k.
std::vector<std::uint64_t> weight_distribution(const AdditiveCode& code);

/// Report record shared by the CLI and the search output.
struct CodeReport {
    std::size_t n = 0;
    std::optional<std::string> lambda;  // shared vector text format
    std::optional<std::string> v;
    std::size_t k = 0;
    std::size_t d = 0;
    Classification classification = Classification::ordinary;
    std::vector<std::uint64_t> weight_distribution;

    bool operator==(const CodeReport&) const = default;
};

/// Full evaluation of a code with k >= 1 (distance + weight distribution).
CodeReport make_report(const AdditiveCode& code);

std::string report_to_json(const CodeReport& r);
/// CSV row matching report_csv_header(); lambda/v are quoted.
std::string report_to_csv(const CodeReport& r);
std::string report_csv_header();

}  // namespace veccirc

#endif
