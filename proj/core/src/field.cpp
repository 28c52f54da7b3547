#include "veccirc/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace veccirc {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Remainder of num by a monic divisor, both as coefficient vectors over GF(p).
std::vector<std::uint8_t> poly_rem(std::vector<std::uint8_t> num,
                                   const std::vector<std::uint8_t>& den, unsigned p) {
    const std::size_t dn = den.size() - 1;
    while (!num.empty() && num.back() == 0) num.pop_back();
    while (num.size() > dn) {
        const unsigned c = num.back();
        const std::size_t shift = num.size() - 1 - dn;
        for (std::size_t i = 0; i <= dn; ++i) {
            unsigned v = num[shift + i] + p - (c * den[i]) % p;
            num[shift + i] = static_cast<std::uint8_t>(v % p);
        }
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    return num;
}

bool is_irreducible(const std::vector<std::uint8_t>& poly, unsigned p) {
    const std::size_t m = poly.size() - 1;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (std::size_t d = 1; d <= m / 2; ++d) {
        unsigned count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned enc = 0; enc < count; ++enc) {
            std::vector<std::uint8_t> den(d + 1);
            unsigned e = enc;
            for (std::size_t i = 0; i < d; ++i) {
                den[i] = static_cast<std::uint8_t>(e % p);
                e /= p;
            }
            den[d] = 1;
            if (poly_rem(poly, den, p).empty()) return false;
        }
    }
    return true;
}

struct DefaultPoly {
    unsigned p, m;
    std::initializer_list<unsigned> coeffs;
};

// Monic irreducible polynomial of degree m over GF(p) whose non-leading
// coefficient vector, read as a base-p integer (c0 least significant), is
// minimal. Degree 1 uses x. Verified irreducible at construction regardless.
constexpr unsigned kMaxOrder = 256;
const DefaultPoly kDefaultPolys[] = {
    {2, 1, {0, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {3, 1, {0, 1}},
    {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {5, 1, {0, 1}},
    {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {7, 1, {0, 1}},
    {7, 2, {1, 0, 1}},
};

}  // namespace

std::vector<unsigned> Field::default_reduction_poly(unsigned p, unsigned m) {
    if (m == 1) return {0, 1};
    for (const auto& d : kDefaultPolys)
        if (d.p == p && d.m == m) return std::vector<unsigned>(d.coeffs);
    throw std::invalid_argument("no default reduction polynomial for p=" + std::to_string(p) +
                                ", m=" + std::to_string(m) + "; supply one explicitly");
}

FieldRef Field::create(unsigned p, unsigned m) {
    const auto poly = default_reduction_poly(p, m);
    return create(p, m, std::span<const unsigned>(poly));
}

FieldRef Field::create(unsigned p, unsigned m, std::span<const unsigned> reduction_poly) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
    unsigned q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds the supported maximum of 256");
    }
    if (reduction_poly.size() != m + 1)
        throw std::invalid_argument("reduction polynomial must have degree exactly m");
    std::vector<std::uint8_t> poly(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        if (reduction_poly[i] >= p)
            throw std::invalid_argument("reduction polynomial coefficient out of range for GF(p)");
        poly[i] = static_cast<std::uint8_t>(reduction_poly[i]);
    }
    if (poly[m] != 1) throw std::invalid_argument("reduction polynomial must be monic");
    if (!is_irreducible(poly, p))
        throw std::invalid_argument("reduction polynomial is reducible over GF(" + std::to_string(p) + ")");
    return FieldRef(new Field(p, m, std::move(poly)));
}

const FieldRef& Field::gf2() {
    static const FieldRef f = create(2, 1);
    return f;
}

const FieldRef& Field::gf4() {
    static const FieldRef f = create(2, 2);
    return f;
}

Field::Field(unsigned p, unsigned m, std::vector<std::uint8_t> poly)
    : p_(p), m_(m), poly_(std::move(poly)) {
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) q_ *= p_;
    build_tables();
    verify_tables();
}

void Field::check(FieldElement a) const {
    if (a >= q_) throw std::out_of_range("element index " + std::to_string(a) + " out of range for " + name());
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (p_ == 2) return a ^ b;
    unsigned r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a = static_cast<FieldElement>(a / p_);
        b = static_cast<FieldElement>(b / p_);
        scale *= p_;
    }
    return static_cast<FieldElement>(r);
}

FieldElement Field::neg(FieldElement a) const {
    check(a);
    if (p_ == 2) return a;
    unsigned r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a = static_cast<FieldElement>(a / p_);
        scale *= p_;
    }
    return static_cast<FieldElement>(r);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    return exp_[(q_ - 1) - log_[a]];
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    check(a);
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
    // School multiplication in the polynomial basis, then reduction.
    std::vector<std::uint8_t> va(m_), vb(m_), prod(2 * m_, 0);
    unsigned ta = a, tb = b;
    for (unsigned i = 0; i < m_; ++i) {
        va[i] = static_cast<std::uint8_t>(ta % p_);
        vb[i] = static_cast<std::uint8_t>(tb % p_);
        ta /= p_;
        tb /= p_;
    }
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint8_t>((prod[i + j] + va[i] * vb[j]) % p_);
    const auto rem = poly_rem(std::move(prod), poly_, p_);
    unsigned r = 0, scale = 1;
    for (std::size_t i = 0; i < m_; ++i) {
        if (i < rem.size()) r += rem[i] * scale;
        scale *= p_;
    }
    return static_cast<FieldElement>(r);
}

void Field::build_tables() {
    // Find the smallest element of multiplicative order q - 1, then tabulate.
    generator_ = 0;
    for (unsigned g = 1; g < q_; ++g) {
        unsigned x = g, order = 1;
        while (x != 1) {
            x = mul_slow(static_cast<FieldElement>(x), static_cast<FieldElement>(g));
            if (++order > q_) break;
        }
        if (order == q_ - 1) {
            generator_ = static_cast<FieldElement>(g);
            break;
        }
    }
    if (generator_ == 0) throw std::logic_error("no primitive element found (broken reduction polynomial?)");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<std::uint8_t>(x);
        exp_[i + (q_ - 1)] = static_cast<std::uint8_t>(x);
        log_[x] = static_cast<std::uint8_t>(i);
        x = mul_slow(static_cast<FieldElement>(x), generator_);
    }
    if (x != 1) throw std::logic_error("primitive element order mismatch");
}

void Field::verify_tables() const {
    // exp and log must be mutually inverse on the nonzero elements, and the
    // group generated by the primitive element must have order q - 1.
    std::vector<bool> seen(q_, false);
    for (unsigned i = 0; i < q_ - 1; ++i) {
        const std::uint8_t v = exp_[i];
        if (v == 0 || seen[v]) throw std::logic_error("exp table is not a bijection onto nonzero elements");
        seen[v] = true;
        if (log_[v] != i) throw std::logic_error("exp/log tables are not mutually inverse");
    }
}

bool Field::operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool same_field(const FieldRef& a, const FieldRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace veccirc
