#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod {

struct VerifyOptions {
    int max_vertices = 6;
    int trials = 100;
    std::uint64_t seed = 0;
};

struct VerifyOutcome {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs one randomized suite. Trial t uses seed `seed + t` and prints
/// `TRIAL <seed> <suite> PASS|FAIL`; a failure is followed by a minimized
/// counterexample, and a closing SUMMARY line reports the counts.
/// Throws InputError for an unknown suite or bad options.
VerifyOutcome run_suite(std::string_view name, const VerifyOptions& options, std::ostream& out);

/// Greedily drops facets and vertices while `still_fails` keeps returning
/// true. Candidates that make `still_fails` throw count as passing.
SimplicialComplex minimize_complex(const SimplicialComplex& k,
                                   const std::function<bool(const SimplicialComplex&)>& still_fails);

}  // namespace polyprod
