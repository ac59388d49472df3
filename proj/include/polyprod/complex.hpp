#pragma once

#include <cstdint>
#include <ranges>
#include <span>
#include <vector>

#include "polyprod/vertex_set.hpp"

namespace polyprod {

/**
 * A simplicial complex on an explicit ground set.
 *
 * The face family is stored in full as a numerically sorted list of masks.
 * The void complex {} (no faces at all) and {∅} (only the empty face) are
 * distinct states; ground vertices that are not faces are ghost vertices.
 * Values are immutable once built.
 */
class SimplicialComplex {
public:
    /// The void complex on an empty ground.
    SimplicialComplex() = default;

    /// Downward closure of `facets`. No facets gives the void complex, the
    /// single facet {} gives {∅}. Throws InputError naming a label outside ground.
    static SimplicialComplex make(VertexSet ground, std::span<const VertexSet> facets);
    static SimplicialComplex make(VertexSet ground, std::initializer_list<VertexSet> facets) {
        return make(ground, std::span<const VertexSet>(facets.begin(), facets.size()));
    }

    static SimplicialComplex void_complex(VertexSet ground);
    /// {∅} on `ground` (every ground vertex is a ghost).
    static SimplicialComplex empty_face(VertexSet ground);
    /// Δ^S: every subset of s, on ground s.
    static SimplicialComplex simplex(VertexSet s);
    /// ∂Δ^S = Δ^S minus S itself; ∂Δ^∅ is void.
    static SimplicialComplex boundary(VertexSet s);

    /// Trusted constructor from a complete, sorted, downward-closed face list.
    static SimplicialComplex from_sorted_faces(VertexSet ground, std::vector<std::uint64_t> faces);
    /// Validating constructor: sorts, deduplicates and checks downward closure.
    static SimplicialComplex from_faces(VertexSet ground, std::vector<std::uint64_t> faces);

    VertexSet ground() const { return ground_; }
    bool is_void() const { return faces_.empty(); }
    std::size_t face_count() const { return faces_.size(); }

    std::span<const std::uint64_t> face_bits() const { return faces_; }
    auto faces() const {
        return faces_ | std::views::transform([](std::uint64_t b) { return VertexSet::from_bits(b); });
    }
    VertexSet face(std::size_t i) const { return VertexSet::from_bits(faces_[i]); }

    bool contains(VertexSet f) const;
    std::vector<VertexSet> facets() const;
    /// Union of all faces (the non-ghost vertices).
    VertexSet support() const;
    /// Largest face size minus one; -1 for {∅}, -2 for the void complex.
    int dimension() const;
    /// counts[k] = number of faces with k vertices.
    std::vector<std::size_t> face_counts() const;

    /// Same faces on a different ground; the support must fit.
    SimplicialComplex with_ground(VertexSet g) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(VertexSet ground, std::vector<std::uint64_t> faces)
        : ground_(ground), faces_(std::move(faces)) {}

    VertexSet ground_;
    std::vector<std::uint64_t> faces_;
};

/// A simplicial pair (X, A): A's faces are among X's, both on the same ground.
/// A may be void.
struct SimplicialPair {
    SimplicialComplex X;
    SimplicialComplex A;

    SimplicialPair(SimplicialComplex x, SimplicialComplex a);
    VertexSet ground() const { return X.ground(); }
};

/// Sorted downward closure of a list of masks.
std::vector<std::uint64_t> close_downward(std::span<const std::uint64_t> facets);

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& x);

/// link_K σ = {τ | σ∪τ ∈ K, σ∩τ = ∅} on ground K.ground ∖ σ.
SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma);

/// {τ ∈ K | τ ⊆ ω} on ground ω.
SimplicialComplex restrict_to(const SimplicialComplex& k, VertexSet omega);

/// K_{σ,ω} = link_K σ restricted to ω, on ground ω.
SimplicialComplex slice(const SimplicialComplex& k, IndexPair p);

/// Dual relative to s: {s∖σ | σ ⊆ s, σ ∉ K}, on ground s.
SimplicialComplex dual(const SimplicialComplex& k, VertexSet s);

/// Face-set union / intersection of complexes on the same ground.
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Join of complexes on pairwise disjoint grounds; the empty list gives {∅}.
SimplicialComplex join(std::span<const SimplicialComplex> factors);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/**
 * Polyhedral product complex: the union over faces τ of K of the joins taking
 * X_k for k ∈ τ and A_k otherwise. The k-th pair belongs to the k-th smallest
 * label of K's ground; pair grounds must be pairwise disjoint (an empty block
 * ground is allowed). K void gives the void complex.
 */
SimplicialComplex polyhedral_complex(const SimplicialComplex& k, std::span<const SimplicialPair> pairs);

/// polyhedral_complex with pairs (Δ^{ground L_k}, L_k).
SimplicialComplex composition_complex(const SimplicialComplex& k, std::span<const SimplicialComplex> ls);

/// Pairs (Δ^{ground L_k}, L_k) for a composition.
std::vector<SimplicialPair> composition_pairs(std::span<const SimplicialComplex> ls);

struct GhostFactorization {
    /// Labels k of K whose A_k is void.
    VertexSet void_positions;
    /// polyhedral_complex(link_K S; remaining pairs).
    SimplicialComplex core;
    /// X_k for k ∈ S, in label order.
    std::vector<SimplicialComplex> cone_factors;
};

/// Splits off the X_k factors of pairs with void A_k; the join of the outputs
/// equals polyhedral_complex(k, pairs).
GhostFactorization ghost_factorization(const SimplicialComplex& k, std::span<const SimplicialPair> pairs);

}  // namespace polyprod
