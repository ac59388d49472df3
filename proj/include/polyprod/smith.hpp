#pragma once

#include <vector>

#include "polyprod/matrix.hpp"

namespace polyprod {

/// Invariant factors d_1 | d_2 | ... of m (all positive, one per unit of rank).
/// Exact: entries are processed in checked 64-bit arithmetic and the whole
/// reduction restarts over GMP integers on overflow.
std::vector<BigInt> smith_normal_form(const IntegerMatrix& m);
std::vector<BigInt> smith_normal_form(const BigIntMatrix& m);

struct SmithSummary {
    std::size_t rank = 0;
    /// Invariant factors greater than one.
    std::vector<BigInt> torsion;
};

SmithSummary smith_summary(const IntegerMatrix& m);

}  // namespace polyprod
