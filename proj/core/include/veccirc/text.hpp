// Text encodings shared by the CLI and the file formats.
//
// F_4 elements read and print as 0, 1, a, a2 (parse is case-insensitive,
// output lowercase); every other field uses the decimal element index.
// Vectors are comma-separated, matrices one row per line, polynomials the
// coefficient vector of x^0, x^1, ...

#ifndef VECCIRC_TEXT_HPP
#define VECCIRC_TEXT_HPP

#include <string>
#include <string_view>

#include "veccirc/linalg.hpp"
#include "veccirc/polyring.hpp"

namespace veccirc {

std::string format_element(const Field& f, FieldElement e);
/// Parse failures throw std::invalid_argument naming the offending token.
FieldElement parse_element(const Field& f, std::string_view token);

std::string format_vector(const FieldVector& v);
FieldVector parse_vector(const FieldRef& f, std::string_view text);

std::string format_matrix(const FieldMatrix& m);

std::string format_polynomial(const Polynomial& p, std::size_t min_len = 1);

}  // namespace veccirc

#endif
