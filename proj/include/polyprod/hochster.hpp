#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyprod/homology.hpp"

namespace polyprod {

/**
 * Bigraded table (σ,ω) -> H̃_{*-1}(K_{σ,ω}) in internal degrees: degree *
 * holds reduced degree * - 1, so {∅} contributes Z at * = 0.
 */
class BigradedTable {
public:
    BigradedTable() = default;
    BigradedTable(VertexSet ground, std::vector<IndexPair> pairs, std::vector<GradedGroup> groups);

    VertexSet ground() const { return ground_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<IndexPair>& pairs() const { return pairs_; }
    const std::vector<GradedGroup>& groups() const { return groups_; }
    /// Throws std::out_of_range for a pair that was not computed.
    const GradedGroup& at(IndexPair p) const;

private:
    VertexSet ground_;
    std::vector<IndexPair> pairs_;
    std::vector<GradedGroup> groups_;
    std::map<IndexPair, std::size_t> index_;
};

/// H̃_{*-1}(K_{σ,ω}).
GradedGroup hochster_entry(const SimplicialComplex& k, IndexPair p, const Coefficients& coeff = Coefficients::integers());
/// H̃^{*-1}(K_{σ,ω}).
GradedGroup hochster_coentry(const SimplicialComplex& k, IndexPair p, const Coefficients& coeff = Coefficients::integers());

/// Table over `pairs`, or over every disjoint pair of the ground in ternary
/// order when none are given. Entries are computed in parallel.
BigradedTable hochster_table(const SimplicialComplex& k, const Coefficients& coeff = Coefficients::integers(),
                             std::optional<std::vector<IndexPair>> pairs = std::nullopt);

/// One degree of the map ψ(η) = sgn(η, ω∖η) (ω∖η)*, stored as a signed permutation.
struct WitnessDegree {
    /// Relative degree |η| - 1.
    int source_degree = 0;
    /// Cochain degree |ω| - |η| - 1.
    int target_degree = 0;
    std::size_t target_dim = 0;
    /// Per source basis element: target basis index (-1 if ω∖η is not a basis element) and sign.
    std::vector<long> target_index;
    std::vector<int> signs;
    /// ψ d = ε δ ψ on chains of this source degree.
    int epsilon = 1;

    IntegerMatrix matrix() const;
};

struct DualityWitness {
    IndexPair pair;
    VertexSet reference;
    /// (S ∖ (σ∪ω), ω)
    IndexPair dual_pair;
    SimplicialComplex slice;
    SimplicialComplex dual_slice;
    std::vector<WitnessDegree> degrees;

    /// dual(K_{σ,ω}, ω) == (K°)_{σ̃,ω}
    bool slices_dual = false;
    bool signed_permutation = false;
    bool chain_map = false;
    /// H̃_*(K_{σ,ω}) and H̃^*((K°)_{σ̃,ω}), integer coefficients.
    GradedGroup homology;
    GradedGroup cohomology;
    /// H̃_j ≅ H̃^{|ω|-j-3} for every j.
    bool groups_match = false;

    bool holds() const { return slices_dual && signed_permutation && chain_map && groups_match; }
    /// Empty when the witness holds.
    std::string failure() const;
};

/// Builds and checks the chain-level duality for one pair. Throws InputError
/// when ω is empty or the pair or K is not inside `s`.
DualityWitness alexander_duality_witness(const SimplicialComplex& k, IndexPair p, VertexSet s);
/// Same with a precomputed dual(k, s).
DualityWitness alexander_duality_witness(const SimplicialComplex& k, const SimplicialComplex& k_dual, IndexPair p,
                                         VertexSet s);

struct CompositionHomology {
    /// Tensor formula in reduced degrees.
    GradedGroup formula;
    /// Reduced homology of the composition complex.
    GradedGroup direct;
    bool agree = false;
};

/// Throws OutOfScopeError when a factor has torsion under integer coefficients.
CompositionHomology composition_homology(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                                         const Coefficients& coeff = Coefficients::integers());

enum class PieceVerdict { isomorphic, mismatch, unsupported };

std::string_view verdict_name(PieceVerdict v);

struct HochsterPiece {
    /// (σ, ω) on the composition ground.
    IndexPair pair;
    /// (σ̂, ω̂) on K's ground.
    IndexPair k_pair;
    /// (k, (σ_k, ω_k)) for every block with ω_k nonempty.
    std::vector<std::pair<std::size_t, IndexPair>> factors;
    /// Internal degrees.
    GradedGroup direct;
    GradedGroup formula;
    PieceVerdict verdict = PieceVerdict::unsupported;
};

struct HochsterCompositionReport {
    std::vector<HochsterPiece> pieces;
    std::size_t isomorphic = 0;
    std::size_t mismatched = 0;
    std::size_t unsupported = 0;

    bool all_isomorphic() const { return mismatched == 0 && unsupported == 0; }
};

/// Piecewise comparison of the composition's table with the tensor formula
/// built from K's and the L_k's tables. Throws InputError if some L_k is void.
HochsterCompositionReport hochster_composition_formula(const SimplicialComplex& k,
                                                       std::span<const SimplicialComplex> ls,
                                                       const Coefficients& coeff = Coefficients::integers(),
                                                       std::optional<std::vector<IndexPair>> pairs = std::nullopt);

}  // namespace polyprod
