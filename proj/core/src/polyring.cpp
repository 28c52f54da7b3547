#include "veccirc/polyring.hpp"

#include <stdexcept>

namespace veccirc {

namespace {

void strip_trailing_zeros(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const FieldRef& a, const FieldRef& b, const char* what) {
    if (!same_field(a, b)) throw std::invalid_argument(std::string("field mismatch in ") + what);
}

}  // namespace

Polynomial::Polynomial(FieldRef field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("null field");
    for (const FieldElement c : coeffs_)
        if (!field_->is_element(c))
            throw std::out_of_range("polynomial coefficient out of range for " + field_->name());
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::zero(FieldRef field) { return Polynomial(std::move(field), {}); }

Polynomial Polynomial::constant(FieldRef field, FieldElement c) {
    return Polynomial(std::move(field), {c});
}

Polynomial Polynomial::monomial(FieldRef field, std::size_t degree, FieldElement coeff) {
    std::vector<FieldElement> c(degree + 1, 0);
    c[degree] = coeff;
    return Polynomial(std::move(field), std::move(c));
}

std::vector<FieldElement> Polynomial::coeffs_padded(std::size_t n) const {
    std::vector<FieldElement> out(n, 0);
    for (std::size_t i = 0; i < n && i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_field(field_, other.field_) && coeffs_ == other.coeffs_;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field(), "poly_add");
    const Field& f = *a.field();
    std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field(), "poly_sub");
    const Field& f = *a.field();
    std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field(), "poly_mul");
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
    const Field& f = *a.field();
    std::vector<FieldElement> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
    return Polynomial(a.field(), std::move(c));
}

Polynomial poly_scalar(FieldElement s, const Polynomial& a) {
    const Field& f = *a.field();
    std::vector<FieldElement> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(s, a.coeff(i));
    return Polynomial(a.field(), std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& d) {
    require_same_field(a.field(), d.field(), "poly_divmod");
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (d.coeffs().back() != 1) throw std::invalid_argument("poly_divmod requires a monic divisor");
    const Field& f = *a.field();
    const int dd = d.degree();
    std::vector<FieldElement> rem = a.coeffs();
    if (a.degree() < dd) return {Polynomial::zero(a.field()), a};
    std::vector<FieldElement> quot(a.coeffs().size() - static_cast<std::size_t>(dd), 0);
    for (int i = a.degree(); i >= dd; --i) {
        const FieldElement c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dd + j)];
            r = f.sub(r, f.mul(c, d.coeff(static_cast<std::size_t>(j))));
        }
    }
    return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial poly_from_vector(const FieldVector& v) {
    return Polynomial(v.field(), v.coords());
}

Polynomial modulus_polynomial(const ShiftVector& lambda) {
    const Field& f = *lambda.field();
    const std::size_t n = lambda.size();
    std::vector<FieldElement> c(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) c[i] = f.neg(lambda[i]);
    c[n] = 1;
    return Polynomial(lambda.field(), std::move(c));
}

Polynomial poly_mod_reduce(const Polynomial& f, const ShiftVector& lambda) {
    require_same_field(f.field(), lambda.field(), "poly_mod_reduce");
    return poly_divmod(f, modulus_polynomial(lambda)).second;
}

QuotientElement::QuotientElement(ShiftVector lambda, const Polynomial& f)
    : lambda_(std::move(lambda)), residue_(poly_mod_reduce(f, lambda_)) {}

bool QuotientElement::operator==(const QuotientElement& other) const {
    return same_context(other) && residue_ == other.residue_;
}

namespace {

void require_same_context(const QuotientElement& a, const QuotientElement& b, const char* what) {
    if (!a.same_context(b))
        throw std::invalid_argument(std::string("quotient ring context mismatch in ") + what);
}

}  // namespace

QuotientElement quotient_add(const QuotientElement& a, const QuotientElement& b) {
    require_same_context(a, b, "quotient_add");
    return QuotientElement(a.modulus_shift(), poly_add(a.residue(), b.residue()));
}

QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b) {
    require_same_context(a, b, "quotient_mul");
    return QuotientElement(a.modulus_shift(), poly_mul(a.residue(), b.residue()));
}

QuotientElement quotient_scalar(FieldElement c, const QuotientElement& a) {
    return QuotientElement(a.modulus_shift(), poly_scalar(c, a.residue()));
}

QuotientElement quotient_map(const ShiftVector& lambda, const FieldMatrix& m) {
    return QuotientElement(lambda, poly_from_vector(basis_decomposition(lambda, m)));
}

FieldMatrix quotient_map_inverse(const QuotientElement& q) {
    const std::size_t n = q.modulus_degree();
    FieldVector first_row(q.field(), q.residue().coeffs_padded(n));
    return vec_circulant(q.modulus_shift(), first_row);
}

}  // namespace veccirc
