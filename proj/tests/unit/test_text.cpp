#include <doctest.h>

#include "veccirc/text.hpp"

using namespace veccirc;

TEST_CASE("F_4 element encoding round trip") {
    const auto& f = Field::gf4();
    CHECK(format_element(*f, 0) == "0");
    CHECK(format_element(*f, 1) == "1");
    CHECK(format_element(*f, 2) == "a");
    CHECK(format_element(*f, 3) == "a2");
    CHECK(parse_element(*f, "a") == 2);
    CHECK(parse_element(*f, "A2") == 3);  // case-insensitive
    CHECK(parse_element(*f, " 1 ") == 1);
    CHECK(parse_element(*f, "3") == 3);   // decimal index also accepted
}

TEST_CASE("other fields use decimal indices") {
    const auto f9 = Field::create(3, 2);
    CHECK(format_element(*f9, 7) == "7");
    CHECK(parse_element(*f9, "8") == 8);
    CHECK_THROWS_WITH_AS(parse_element(*f9, "a"), doctest::Contains("'a'"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(*f9, "9"), std::invalid_argument);
}

TEST_CASE("bad tokens are named in the error") {
    const auto& f = Field::gf4();
    CHECK_THROWS_WITH_AS(parse_element(*f, "x2"), doctest::Contains("'x2'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_element(*f, "7"), doctest::Contains("'7'"), std::invalid_argument);
}

TEST_CASE("vector format") {
    const auto& f = Field::gf4();
    const FieldVector v = parse_vector(f, "1,a,0");
    CHECK(v == FieldVector(f, {1, 2, 0}));
    CHECK(format_vector(v) == "1,a,0");
    CHECK(parse_vector(f, " a2 , 0 ,1") == FieldVector(f, {3, 0, 1}));
    CHECK_THROWS_AS(parse_vector(f, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector(f, "1,,0"), std::invalid_argument);
}

TEST_CASE("matrix format prints one row per line") {
    const auto& f = Field::gf4();
    const FieldMatrix m = vec_circulant(ShiftVector(f, {1, 0, 1}), FieldVector(f, {1, 2, 0}));
    CHECK(format_matrix(m) == "1,a,0\n0,1,a\na,0,a2\n");
}

TEST_CASE("polynomial format is the padded coefficient vector") {
    const auto& f = Field::gf4();
    CHECK(format_polynomial(Polynomial(f, {1, 2}), 3) == "1,a,0");
    CHECK(format_polynomial(Polynomial::zero(f), 2) == "0,0");
}
