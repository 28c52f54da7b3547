// Polynomials over a Field and the quotient ring F_q[x] / <x^n - lambda(x)>.
//
// The set of n x n lambda-vector-circulant matrices is a commutative algebra,
// and the map sending cir(a_0, ..., a_{n-1}) to the coset of
// a_0 + a_1 x + ... + a_{n-1} x^{n-1} is an algebra isomorphism onto this
// quotient ring. quotient_map / quotient_map_inverse realize both directions.

#ifndef VECCIRC_POLYRING_HPP
#define VECCIRC_POLYRING_HPP

#include <utility>

#include "veccirc/linalg.hpp"

namespace veccirc {

/// Coefficient sequence c_0 + c_1 x + ...; stores no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial(FieldRef field, std::vector<FieldElement> coeffs);

    static Polynomial zero(FieldRef field);
    static Polynomial constant(FieldRef field, FieldElement c);
    static Polynomial monomial(FieldRef field, std::size_t degree, FieldElement coeff = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i, 0 beyond the stored degree.
    FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldRef& field() const { return field_; }

    /// Coefficients padded or truncated to exactly n entries.
    std::vector<FieldElement> coeffs_padded(std::size_t n) const;

    bool operator==(const Polynomial& other) const;

private:
    FieldRef field_;
    std::vector<FieldElement> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scalar(FieldElement c, const Polynomial& a);

/// Quotient and remainder of a by a monic divisor d: a = q*d + r, deg r < deg d.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& d);

/// The polynomial sum_i v_i x^i.
Polynomial poly_from_vector(const FieldVector& v);

/// The modulus x^n - lambda(x) for n = lambda.size(); always monic of degree n.
Polynomial modulus_polynomial(const ShiftVector& lambda);

/// Residue of f modulo x^n - lambda(x), degree < n.
Polynomial poly_mod_reduce(const Polynomial& f, const ShiftVector& lambda);

/// Element of F_q[x] / <x^n - lambda(x)>. Two elements interoperate exactly
/// when their (n, lambda) contexts are structurally equal.
class QuotientElement {
public:
    /// Reduces f into the residue of degree < lambda.size().
    QuotientElement(ShiftVector lambda, const Polynomial& f);

    const ShiftVector& modulus_shift() const { return lambda_; }
    std::size_t modulus_degree() const { return lambda_.size(); }
    const Polynomial& residue() const { return residue_; }
    const FieldRef& field() const { return lambda_.field(); }

    bool same_context(const QuotientElement& other) const { return lambda_ == other.lambda_; }
    bool operator==(const QuotientElement& other) const;

private:
    ShiftVector lambda_;
    Polynomial residue_;
};

QuotientElement quotient_add(const QuotientElement& a, const QuotientElement& b);
QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b);
QuotientElement quotient_scalar(FieldElement c, const QuotientElement& a);

/// The algebra isomorphism: first row of a lambda-vector-circulant matrix,
/// read as a residue. Rejects matrices outside the circulant algebra.
QuotientElement quotient_map(const ShiftVector& lambda, const FieldMatrix& m);

/// Inverse direction: the circulant matrix of the residue's coefficient
/// vector, zero-padded to length n.
FieldMatrix quotient_map_inverse(const QuotientElement& q);

}  // namespace veccirc

#endif
