// Exact arithmetic in small finite fields GF(p^m), q = p^m <= 256.
//
// Elements are stored as integer indices in the polynomial basis: the base-p
// digits of an index are the coefficients of 1, x, x^2, ... modulo the
// reduction polynomial. Index 0 is the additive identity, index 1 the
// multiplicative identity. For F_4 = {0, 1, a, a^2 = 1 + a} under the default
// polynomial x^2 + x + 1 this gives 0 -> 0, 1 -> 1, a -> 2, a^2 -> 3.
//
// Addition is a table-free digit operation (XOR when p = 2); multiplication
// and inversion go through exp/log tables over a primitive element found at
// construction. A Field is immutable after construction and safe to use from
// any number of threads.

#ifndef VECCIRC_FIELD_HPP
#define VECCIRC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace veccirc {

/// Element of a Field, as an index in the polynomial basis.
using FieldElement = std::uint8_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
public:
    /// Builds GF(p^m) with the built-in default reduction polynomial.
    /// Defaults exist for every p^m <= 256 with p in {2, 3, 5, 7}; the
    /// degree-1 default is x for any prime p.
    static FieldRef create(unsigned p, unsigned m);

    /// Builds GF(p^m) with an explicit monic reduction polynomial, given as
    /// coefficients c0..cm of c0 + c1 x + ... + cm x^m. Irreducibility over
    /// GF(p) is verified by trial division against all monic polynomials of
    /// degree <= m/2; a reducible polynomial is rejected.
    static FieldRef create(unsigned p, unsigned m, std::span<const unsigned> reduction_poly);

    /// Shared GF(2) instance.
    static const FieldRef& gf2();
    /// Shared F_4 instance (x^2 + x + 1, so a^2 = 1 + a).
    static const FieldRef& gf4();

    /// The default reduction polynomial for (p, m), coefficients c0..cm.
    /// Throws if no default is baked in.
    static std::vector<unsigned> default_reduction_poly(unsigned p, unsigned m);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    unsigned order() const { return q_; }
    /// Reduction polynomial coefficients c0..cm (monic, length m+1).
    const std::vector<std::uint8_t>& reduction_poly() const { return poly_; }
    /// Smallest element index generating the multiplicative group.
    FieldElement primitive_element() const { return generator_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Multiplicative inverse; a = 0 is a domain error.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    bool is_element(unsigned a) const { return a < q_; }

    /// Structural identity: same (p, m, reduction polynomial).
    bool operator==(const Field& other) const;

    /// Short description, e.g. "GF(4)".
    std::string name() const;

private:
    Field(unsigned p, unsigned m, std::vector<std::uint8_t> poly);

    void check(FieldElement a) const;
    FieldElement mul_slow(FieldElement a, FieldElement b) const;  // polynomial-basis product
    void build_tables();
    void verify_tables() const;

    unsigned p_, m_, q_;
    std::vector<std::uint8_t> poly_;   // c0..cm, monic
    FieldElement generator_ = 0;
    std::vector<std::uint8_t> exp_;    // exp_[i] = g^i, doubled so i < 2(q-1) needs no mod
    std::vector<std::uint8_t> log_;    // log_[exp_[i]] = i; log_[0] unused
};

/// True when both refer to structurally identical fields.
bool same_field(const FieldRef& a, const FieldRef& b);

}  // namespace veccirc

#endif
