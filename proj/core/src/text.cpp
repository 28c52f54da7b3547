#include "veccirc/text.hpp"

#include <cctype>
#include <stdexcept>

namespace veccirc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::string format_element(const Field& f, FieldElement e) {
    if (f.order() == 4) {
        switch (e) {
            case 0: return "0";
            case 1: return "1";
            case 2: return "a";
            case 3: return "a2";
        }
    }
    return std::to_string(e);
}

FieldElement parse_element(const Field& f, std::string_view token) {
    const std::string t = lower(trim(token));
    if (t.empty()) throw std::invalid_argument("empty element token");
    if (f.order() == 4) {
        if (t == "a") return 2;
        if (t == "a2") return 3;
    }
    unsigned value = 0;
    for (const char c : t) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid element token '" + std::string(token) + "' for " + f.name());
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > 255) break;
    }
    if (!f.is_element(value))
        throw std::invalid_argument("element token '" + std::string(token) + "' out of range for " + f.name());
    return static_cast<FieldElement>(value);
}

std::string format_vector(const FieldVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += format_element(*v.field(), v[i]);
    }
    return out;
}

FieldVector parse_vector(const FieldRef& f, std::string_view text) {
    std::vector<FieldElement> coords;
    std::string_view rest = text;
    if (trim(rest).empty()) throw std::invalid_argument("empty vector");
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view token = comma == std::string_view::npos ? rest : rest.substr(0, comma);
        coords.push_back(parse_element(*f, token));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return FieldVector(f, std::move(coords));
}

std::string format_matrix(const FieldMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += format_vector(m.row(i));
        out += '\n';
    }
    return out;
}

std::string format_polynomial(const Polynomial& p, std::size_t min_len) {
    const std::size_t len = std::max<std::size_t>(min_len, p.coeffs().size());
    return format_vector(FieldVector(p.field(), p.coeffs_padded(len)));
}

}  // namespace veccirc
