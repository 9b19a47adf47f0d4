#pragma once

#include <cstdint>
#include <ostream>

namespace radloc {

struct VerifyOptions {
    std::uint64_t seed = 2025;
    // Self-test of the suite: flips a sign inside radical_foot so the power
    // equality check must fail.
    bool inject_fault = false;
};

// Runs the built-in oracle suite (geometry invariants, candidate optimality,
// determinism, equivariance), printing one PASS/FAIL line per check.
// Returns true iff every check passed.
bool run_verify(std::ostream& out, const VerifyOptions& options);

} // namespace radloc
