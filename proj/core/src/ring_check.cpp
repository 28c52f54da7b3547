#include "veccirc/ring_check.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "veccirc/polyring.hpp"
#include "veccirc/rng.hpp"
#include "veccirc/text.hpp"

namespace veccirc {

namespace {

struct Instance {
    ShiftVector lambda;
    FieldVector a, b;
    FieldElement scalar;
};

FieldVector random_vector(const FieldRef& f, std::size_t n, SplitMix64& rng) {
    std::vector<FieldElement> c(n);
    for (auto& x : c) x = static_cast<FieldElement>(rng.below(f->order()));
    return FieldVector(f, std::move(c));
}

// Half of the sampled shift vectors get lambda_0 forced to zero so the
// singular-companion branch is always exercised.
Instance random_instance(const FieldRef& f, std::size_t n, SplitMix64& rng, bool force_lambda0_zero) {
    FieldVector lam = random_vector(f, n, rng);
    if (force_lambda0_zero) {
        auto coords = lam.coords();
        coords[0] = 0;
        lam = FieldVector(f, std::move(coords));
    }
    return Instance{ShiftVector(std::move(lam)), random_vector(f, n, rng), random_vector(f, n, rng),
                    static_cast<FieldElement>(rng.below(f->order()))};
}

struct Check {
    std::string name;
    std::function<bool(const Instance&)> run;
};

std::string describe(const Instance& in) {
    return "lambda=" + format_vector(in.lambda.coords()) + " a=" + format_vector(in.a) +
           " b=" + format_vector(in.b) + " c=" + format_element(*in.a.field(), in.scalar);
}

}  // namespace

bool RingCheckReport::pass() const { return total_failures() == 0; }

std::uint64_t RingCheckReport::total_failures() const {
    return std::accumulate(properties.begin(), properties.end(), std::uint64_t{0},
                           [](std::uint64_t s, const PropertyResult& p) { return s + p.failures; });
}

RingCheckReport run_ring_check(const FieldRef& field, std::size_t n, std::uint64_t trials,
                               std::uint64_t seed) {
    const FieldRef& f = field;

    const std::vector<Check> checks = {
        {"shift-linear-additive",
         [](const Instance& in) {
             return vector_cyclic_shift(in.lambda, vec_add(in.a, in.b)) ==
                    vec_add(vector_cyclic_shift(in.lambda, in.a), vector_cyclic_shift(in.lambda, in.b));
         }},
        {"shift-linear-scalar",
         [](const Instance& in) {
             return vector_cyclic_shift(in.lambda, vec_scalar(in.scalar, in.a)) ==
                    vec_scalar(in.scalar, vector_cyclic_shift(in.lambda, in.a));
         }},
        {"shift-is-companion-product",
         [](const Instance& in) {
             return vector_cyclic_shift(in.lambda, in.a) ==
                    vec_mat_mul(in.a, companion_matrix(in.lambda));
         }},
        {"companion-power-is-shifted-unit-circulant",
         [n, f](const Instance& in) {
             // T^m = cir(shift^m(E_1)) for 0 <= m <= 3n.
             const FieldMatrix t = companion_matrix(in.lambda);
             FieldMatrix power = FieldMatrix::identity(f, n);
             FieldVector e1 = FieldVector::unit(f, n, 0);
             for (std::size_t m = 0; m <= 3 * n; ++m) {
                 if (!(power == vec_circulant(in.lambda, e1))) return false;
                 power = mat_mul(power, t);
                 e1 = vector_cyclic_shift(in.lambda, e1);
             }
             return true;
         }},
        {"companion-power-is-unit-circulant",
         [n, f](const Instance& in) {
             // T^i = cir(E_{i+1}) for 0 <= i < n.
             const FieldMatrix t = companion_matrix(in.lambda);
             for (std::size_t i = 0; i < n; ++i)
                 if (!(mat_pow(t, i) == vec_circulant(in.lambda, FieldVector::unit(f, n, i))))
                     return false;
             return true;
         }},
        {"circulant-product-closed",
         [](const Instance& in) {
             return is_vector_circulant(
                 in.lambda, mat_mul(vec_circulant(in.lambda, in.a), vec_circulant(in.lambda, in.b)));
         }},
        {"circulant-product-commutes",
         [](const Instance& in) {
             const FieldMatrix ca = vec_circulant(in.lambda, in.a);
             const FieldMatrix cb = vec_circulant(in.lambda, in.b);
             return mat_mul(ca, cb) == mat_mul(cb, ca);
         }},
        {"circulant-addition-subspace",
         [](const Instance& in) {
             return mat_add(vec_circulant(in.lambda, in.a), vec_circulant(in.lambda, in.b)) ==
                    vec_circulant(in.lambda, vec_add(in.a, in.b));
         }},
        {"circulant-scaling-subspace",
         [](const Instance& in) {
             return mat_scalar(in.scalar, vec_circulant(in.lambda, in.a)) ==
                    vec_circulant(in.lambda, vec_scalar(in.scalar, in.a));
         }},
        {"companion-invertible-iff-rank-full",
         [n](const Instance& in) {
             return is_companion_invertible(in.lambda) ==
                    (mat_rank(companion_matrix(in.lambda)) == n);
         }},
        {"quotient-map-additive",
         [](const Instance& in) {
             const FieldMatrix ca = vec_circulant(in.lambda, in.a);
             const FieldMatrix cb = vec_circulant(in.lambda, in.b);
             return quotient_map(in.lambda, mat_add(ca, cb)) ==
                    quotient_add(quotient_map(in.lambda, ca), quotient_map(in.lambda, cb));
         }},
        {"quotient-map-multiplicative",
         [](const Instance& in) {
             const FieldMatrix ca = vec_circulant(in.lambda, in.a);
             const FieldMatrix cb = vec_circulant(in.lambda, in.b);
             return quotient_map(in.lambda, mat_mul(ca, cb)) ==
                    quotient_mul(quotient_map(in.lambda, ca), quotient_map(in.lambda, cb));
         }},
        {"quotient-map-scalar",
         [](const Instance& in) {
             const FieldMatrix ca = vec_circulant(in.lambda, in.a);
             return quotient_map(in.lambda, mat_scalar(in.scalar, ca)) ==
                    quotient_scalar(in.scalar, quotient_map(in.lambda, ca));
         }},
        {"quotient-map-bijective",
         [](const Instance& in) {
             const FieldMatrix ca = vec_circulant(in.lambda, in.a);
             if (!(quotient_map_inverse(quotient_map(in.lambda, ca)) == ca)) return false;
             const QuotientElement e(in.lambda, poly_from_vector(in.b));
             return quotient_map(in.lambda, quotient_map_inverse(e)) == e;
         }},
        {"reduction-is-division-remainder",
         [n](const Instance& in) {
             // f = q * (x^n - lambda(x)) + r with deg r < n, re-multiplied.
             const Polynomial f_poly =
                 poly_mul(poly_from_vector(in.a), poly_mul(poly_from_vector(in.b),
                                                           poly_from_vector(in.lambda.coords())));
             const Polynomial modulus = modulus_polynomial(in.lambda);
             const auto [quot, rem] = poly_divmod(f_poly, modulus);
             if (rem.degree() >= static_cast<int>(n)) return false;
             if (!(poly_add(poly_mul(quot, modulus), rem) == f_poly)) return false;
             return rem == poly_mod_reduce(f_poly, in.lambda);
         }},
        {"companion-power-residue-is-monomial",
         [n, f](const Instance& in) {
             // quotient_map(T^m) = x^m mod (x^n - lambda(x)) for 0 <= m <= 3n.
             const FieldMatrix t = companion_matrix(in.lambda);
             FieldMatrix power = FieldMatrix::identity(f, n);
             for (std::size_t m = 0; m <= 3 * n; ++m) {
                 const QuotientElement expected(in.lambda, Polynomial::monomial(f, m));
                 if (!(quotient_map(in.lambda, power) == expected)) return false;
                 power = mat_mul(power, t);
             }
             return true;
         }},
        {"unit-shift-is-rotation",
         [n, f](const Instance& in) {
             // lambda = (1, 0, ..., 0) rotates right; lambda = (c, 0, ..., 0)
             // additionally scales the wrapped coordinate by c.
             std::vector<FieldElement> lam(n, 0);
             const FieldElement c = in.scalar == 0 ? FieldElement{1} : in.scalar;
             lam[0] = c;
             const FieldVector shifted = vector_cyclic_shift(ShiftVector(f, lam), in.a);
             if (shifted[0] != f->mul(c, in.a[n - 1])) return false;
             for (std::size_t i = 1; i < n; ++i)
                 if (shifted[i] != in.a[i - 1]) return false;
             return true;
         }},
    };

    RingCheckReport report;
    report.n = n;
    report.q = f->order();
    report.trials = trials;
    report.seed = seed;
    for (const Check& c : checks) report.properties.push_back({c.name, trials, 0, ""});

    SplitMix64 rng(splitmix64_at(seed, n * 1000003 + f->order()));
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Instance in = random_instance(f, n, rng, t % 2 == 1);
        for (std::size_t i = 0; i < checks.size(); ++i) {
            if (!checks[i].run(in)) {
                auto& p = report.properties[i];
                ++p.failures;
                if (p.first_failure.empty()) p.first_failure = describe(in);
            }
        }
    }
    return report;
}

std::string ring_check_to_json(const RingCheckReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    j["properties"] = nlohmann::json::array();
    for (const PropertyResult& p : r.properties) {
        nlohmann::json pj;
        pj["name"] = p.name;
        pj["trials"] = p.trials;
        pj["failures"] = p.failures;
        if (!p.first_failure.empty()) pj["first_failure"] = p.first_failure;
        j["properties"].push_back(std::move(pj));
    }
    return j.dump();
}

std::string ring_check_to_text(const RingCheckReport& r) {
    std::ostringstream out;
    out << "ring check: n=" << r.n << " q=" << r.q << " trials=" << r.trials << " seed=" << r.seed
        << "\n";
    for (const PropertyResult& p : r.properties) {
        out << "  " << (p.failures == 0 ? "ok  " : "FAIL") << " " << p.name << " (" << p.trials
            << " trials";
        if (p.failures > 0) out << ", " << p.failures << " failures, e.g. " << p.first_failure;
        out << ")\n";
    }
    if (r.trials == 0) out << "warning: 0 trials requested; pass is vacuous\n";
    out << (r.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace veccirc
