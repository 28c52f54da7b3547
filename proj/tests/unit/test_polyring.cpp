#include <doctest.h>

#include "veccirc/polyring.hpp"
#include "veccirc/rng.hpp"

using namespace veccirc;

namespace {

const FieldRef& F4() { return Field::gf4(); }

FieldVector fv(std::vector<FieldElement> c) { return FieldVector(F4(), std::move(c)); }
ShiftVector sv(std::vector<FieldElement> c) { return ShiftVector(F4(), std::move(c)); }
Polynomial poly(std::vector<FieldElement> c) { return Polynomial(F4(), std::move(c)); }

FieldVector random_vec(const FieldRef& f, std::size_t n, SplitMix64& rng) {
    std::vector<FieldElement> c(n);
    for (auto& x : c) x = static_cast<FieldElement>(rng.below(f->order()));
    return FieldVector(f, std::move(c));
}

}  // namespace

TEST_CASE("poly_from_vector transcribes and normalizes") {
    CHECK(poly_from_vector(fv({1, 0, 1})) == poly({1, 0, 1}));
    CHECK(poly_from_vector(fv({0, 0, 0})).is_zero());
    CHECK(poly_from_vector(fv({2, 0, 0, 1})) == poly({2, 0, 0, 1}));
    CHECK(poly_from_vector(fv({1, 2, 0})).degree() == 1);
}

TEST_CASE("modulus polynomial is monic of degree n") {
    const Polynomial m = modulus_polynomial(sv({1, 0, 1}));
    CHECK(m.degree() == 3);
    CHECK(m.coeff(3) == 1);
    // char 2: x^3 - (1 + x^2) = x^3 + x^2 + 1
    CHECK(m == poly({1, 0, 1, 1}));

    // over GF(3), negation is real: x^2 - (1 + 2x) = x^2 + x + 2
    const auto f3 = Field::create(3, 1);
    CHECK(modulus_polynomial(ShiftVector(f3, {1, 2})) == Polynomial(f3, {2, 1, 1}));
}

TEST_CASE("reduction by x^n - lambda(x)") {
    const ShiftVector lambda = sv({1, 0, 1});
    SUBCASE("x^3 reduces to lambda(x) itself") {
        CHECK(poly_mod_reduce(Polynomial::monomial(F4(), 3), lambda) == poly({1, 0, 1}));
    }
    SUBCASE("low degrees are untouched") {
        const Polynomial f = poly({3, 2});
        CHECK(poly_mod_reduce(f, lambda) == f);
    }
    SUBCASE("x^4 needs two steps") {
        CHECK(poly_mod_reduce(Polynomial::monomial(F4(), 4), lambda) == poly({1, 1, 1}));
    }
}

TEST_CASE("quotient multiplication examples") {
    const ShiftVector lambda = sv({1, 0, 1});
    SUBCASE("(1 + ax)^2 = 1 + a^2 x^2, no reduction needed") {
        const QuotientElement f(lambda, poly({1, 2}));
        CHECK(quotient_mul(f, f) == QuotientElement(lambda, poly({1, 0, 3})));
    }
    SUBCASE("multiplying by 1 is the identity") {
        const QuotientElement f(lambda, poly({3, 1, 2}));
        const QuotientElement one(lambda, poly({1}));
        CHECK(quotient_mul(f, one) == f);
    }
    SUBCASE("x^2 * x wraps to 1 + x^2") {
        const QuotientElement x2(lambda, Polynomial::monomial(F4(), 2));
        const QuotientElement x(lambda, Polynomial::monomial(F4(), 1));
        CHECK(quotient_mul(x2, x) == QuotientElement(lambda, poly({1, 0, 1})));
    }
}

TEST_CASE("quotient elements from different contexts do not mix") {
    const QuotientElement a(sv({1, 0, 1}), poly({1}));
    const QuotientElement b(sv({1, 1, 1}), poly({1}));
    CHECK_THROWS_AS(quotient_mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(quotient_add(a, b), std::invalid_argument);
}

TEST_CASE("contexts compare structurally, not by identity") {
    const QuotientElement a(sv({1, 0, 1}), poly({0, 2}));
    const QuotientElement b(sv({1, 0, 1}), poly({0, 2}));
    CHECK(a == b);
    CHECK(a.same_context(b));
}

TEST_CASE("quotient map on the worked examples") {
    const ShiftVector lambda = sv({1, 0, 1});
    CHECK(quotient_map(lambda, vec_circulant(lambda, fv({1, 2, 0}))) ==
          QuotientElement(lambda, poly({1, 2})));
    CHECK(quotient_map(lambda, FieldMatrix::identity(F4(), 3)) ==
          QuotientElement(lambda, poly({1})));
    CHECK(quotient_map(lambda, companion_matrix(lambda)) ==
          QuotientElement(lambda, Polynomial::monomial(F4(), 1)));

    FieldMatrix bad(F4(), 3, 3);
    bad.set(0, 0, 1);
    bad.set(1, 0, 1);
    CHECK_THROWS_AS(quotient_map(lambda, bad), std::domain_error);
}

TEST_CASE("quotient map inverse on the worked examples") {
    const ShiftVector lambda = sv({1, 0, 1});
    CHECK(quotient_map_inverse(QuotientElement(lambda, poly({1, 2}))) ==
          vec_circulant(lambda, fv({1, 2, 0})));
    CHECK(quotient_map_inverse(QuotientElement(lambda, Polynomial::zero(F4()))) ==
          FieldMatrix(F4(), 3, 3));
    CHECK(quotient_map_inverse(QuotientElement(lambda, Polynomial::monomial(F4(), 2))) ==
          mat_pow(companion_matrix(lambda), 2));
}

TEST_CASE("divmod reconstructs the dividend") {
    SplitMix64 rng(17);
    for (const auto& f : {Field::gf4(), Field::create(3, 1)}) {
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + rng.below(5);
            const ShiftVector lambda(random_vec(f, n, rng));
            const Polynomial a = poly_from_vector(random_vec(f, n + 4, rng));
            const Polynomial b = poly_from_vector(random_vec(f, n + 2, rng));
            const Polynomial prod = poly_mul(a, b);
            const Polynomial modulus = modulus_polynomial(lambda);
            const auto [quot, rem] = poly_divmod(prod, modulus);
            CHECK(rem.degree() < static_cast<int>(n));
            CHECK(poly_add(poly_mul(quot, modulus), rem) == prod);
            CHECK(rem == poly_mod_reduce(prod, lambda));
        }
    }
}

TEST_CASE("the map is an algebra isomorphism on random instances") {
    SplitMix64 rng(23);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(6);
        const ShiftVector lambda(random_vec(F4(), n, rng));
        const FieldVector a = random_vec(F4(), n, rng);
        const FieldVector b = random_vec(F4(), n, rng);
        const auto c = static_cast<FieldElement>(rng.below(4));
        const FieldMatrix ca = vec_circulant(lambda, a);
        const FieldMatrix cb = vec_circulant(lambda, b);

        CHECK(quotient_map(lambda, mat_mul(ca, cb)) ==
              quotient_mul(quotient_map(lambda, ca), quotient_map(lambda, cb)));
        CHECK(quotient_map(lambda, mat_add(ca, cb)) ==
              quotient_add(quotient_map(lambda, ca), quotient_map(lambda, cb)));
        CHECK(quotient_map(lambda, mat_scalar(c, ca)) ==
              quotient_scalar(c, quotient_map(lambda, ca)));
        CHECK(quotient_map_inverse(quotient_map(lambda, ca)) == ca);
    }
}

TEST_CASE("powers of the companion matrix map to monomials") {
    SplitMix64 rng(29);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng.below(5);
        const ShiftVector lambda(random_vec(F4(), n, rng));
        const FieldMatrix comp = companion_matrix(lambda);
        for (std::size_t m = 0; m <= 3 * n; ++m) {
            CHECK(quotient_map(lambda, mat_pow(comp, m)) ==
                  QuotientElement(lambda, Polynomial::monomial(F4(), m)));
        }
    }
}
