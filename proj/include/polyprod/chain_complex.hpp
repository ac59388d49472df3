#pragma once

#include <cstdint>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/matrix.hpp"

namespace polyprod {

/**
 * A finite chain complex of free groups whose basis elements are vertex sets.
 *
 * Degree of a basis set η is |η| - 1, so degrees start at -1. Within a degree
 * the basis is ordered lexicographically by sorted label lists, and the
 * boundary of η = {v_0 < ... < v_k} is sum_i (-1)^i (η - v_i), with terms that
 * are not basis elements dropped.
 */
struct ChainComplex {
    int min_degree = -1;
    /// bases[i] holds degree min_degree + i.
    std::vector<std::vector<std::uint64_t>> bases;
    /// boundaries[i]: degree min_degree + i -> min_degree + i - 1.
    std::vector<IntegerMatrix> boundaries;

    bool empty() const { return bases.empty(); }
    int max_degree() const { return min_degree + static_cast<int>(bases.size()) - 1; }
    std::size_t dim(int degree) const;
    /// Empty for degrees outside the complex.
    const std::vector<std::uint64_t>& basis(int degree) const;
    /// nullptr when either end of the map is outside the complex (a zero map).
    const IntegerMatrix* boundary(int degree) const;
    /// Index of `face` in its degree's basis, or -1.
    long index_of(std::uint64_t face) const;

    // Face -> basis position: a dense table over the compressed support when
    // it is small, a sorted list otherwise.
    std::uint64_t lookup_support_ = 0;
    std::vector<long> lookup_;
    std::vector<std::pair<std::uint64_t, long>> sorted_index_;
};

/// Chain complex on the given family of sets (any order, no duplicates).
ChainComplex chain_complex_on(std::vector<std::uint64_t> family);

/// Augmented simplicial chains of k; degree -1 is spanned by the empty face.
/// The void complex gives the zero complex.
ChainComplex augmented_chain_complex(const SimplicialComplex& k);

/// Chains of (Δ^ω, L) on the non-faces η ⊆ ω of L, degree |η| - 1.
ChainComplex relative_chain_complex(VertexSet omega, const SimplicialComplex& l);

/// True when every composite d_{k-1} d_k vanishes.
bool boundary_squares_to_zero(const ChainComplex& c);

}  // namespace polyprod
