// Randomized property suite for the circulant algebra and the quotient-ring
// isomorphism: shift linearity, the companion-matrix realization, the power
// identities, closure/commutativity of the circulant set, the subspace laws,
// the bijective algebra homomorphism onto F_q[x]/<x^n - lambda(x)>, the
// invertibility criterion against Gaussian rank, and polynomial reduction
// correctness. Any failure is an implementation bug.

#ifndef VECCIRC_RING_CHECK_HPP
#define VECCIRC_RING_CHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "veccirc/field.hpp"

namespace veccirc {

struct PropertyResult {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    /// First counterexample in text form, for diagnostics.
    std::string first_failure;
};

struct RingCheckReport {
    std::size_t n = 0;
    unsigned q = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool pass() const;
    std::uint64_t total_failures() const;
};

/// Runs every property `trials` times with seeded random instances over the
/// given field and length. trials = 0 is a vacuous pass.
RingCheckReport run_ring_check(const FieldRef& field, std::size_t n, std::uint64_t trials,
                               std::uint64_t seed);

std::string ring_check_to_json(const RingCheckReport& r);
std::string ring_check_to_text(const RingCheckReport& r);

}  // namespace veccirc

#endif
