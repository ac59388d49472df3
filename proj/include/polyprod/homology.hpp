#pragma once

#include <span>
#include <vector>

#include "polyprod/abelian_group.hpp"
#include "polyprod/chain_complex.hpp"
#include "polyprod/coefficients.hpp"
#include "polyprod/field_linalg.hpp"

namespace polyprod {

/// Homology of a chain complex. Over a field the groups are free of rank
/// equal to the dimension.
GradedGroup homology_of(const ChainComplex& c, const Coefficients& coeff = Coefficients::integers());
/// Cohomology computed from the explicitly transposed coboundaries.
GradedGroup cohomology_of(const ChainComplex& c, const Coefficients& coeff = Coefficients::integers());

/// Reduced homology H̃_n, n >= -1; {∅} has Z in degree -1, void is zero.
GradedGroup reduced_homology(const SimplicialComplex& k, const Coefficients& coeff = Coefficients::integers());
GradedGroup reduced_cohomology(const SimplicialComplex& k, const Coefficients& coeff = Coefficients::integers());

struct RelativeHomology {
    GradedGroup groups;
    /// groups equals reduced_homology(L) shifted up one degree.
    bool boundary_iso = false;
};

/// H_*(Δ^ω, L) on the non-face basis of L. Zero when L = Δ^ω.
RelativeHomology relative_homology(VertexSet omega, const SimplicialComplex& l,
                                   const Coefficients& coeff = Coefficients::integers());

struct InducedMapDegree {
    int degree = 0;
    /// target_dim x source_dim matrix in the chosen homology bases.
    FieldMatrix matrix;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t kernel = 0;
    std::size_t image = 0;
    std::size_t cokernel = 0;
};

struct InducedMap {
    /// Degrees where either side is nonzero, increasing.
    std::vector<InducedMapDegree> degrees;

    bool is_epimorphism() const;
    bool is_monomorphism() const;
};

/// Map H̃_*(A) -> H̃_*(X) induced by the inclusion A ⊆ X over a field.
/// Throws InputError if A is not a subcomplex of X or the coefficients are Z.
InducedMap induced_inclusion_map(const SimplicialComplex& a, const SimplicialComplex& x, const Coefficients& coeff);

/// Tensor product in reduced degrees: factor degrees (d_0..d_m) land in
/// d_0 + ... + d_m + m. The empty product is Z in degree -1. Throws
/// OutOfScopeError when a factor has torsion under integer coefficients.
GradedGroup graded_tensor(std::span<const GradedGroup> factors, const Coefficients& coeff = Coefficients::integers());

/// Alternating sum of ranks.
long euler_characteristic(const GradedGroup& g);

}  // namespace polyprod
