#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polyprod/hochster.hpp"

namespace polyprod {

/// A point of a finite model; products concatenate coordinates.
using Point = std::vector<int>;
using PointSet = std::set<Point>;
/// The tuple set of a finite polyhedral product space.
using FiniteProductSpace = PointSet;

/// Finite model of a space pair (X, A) with A ⊆ X; either may be empty.
struct FiniteSpacePair {
    PointSet X;
    PointSet A;

    FiniteSpacePair(PointSet x, PointSet a);
    /// Pair of one-coordinate points.
    static FiniteSpacePair of(std::initializer_list<int> x, std::initializer_list<int> a);
    static FiniteSpacePair of(const std::vector<int>& x, const std::vector<int>& a);
};

/// Union over τ ∈ K of the products taking X_k for k ∈ τ and A_k otherwise.
/// The k-th pair belongs to the k-th smallest label of K's ground.
FiniteProductSpace finite_product(const SimplicialComplex& k, std::span<const FiniteSpacePair> pairs);

/// X_1 × ... × X_m.
FiniteProductSpace full_product(std::span<const FiniteSpacePair> pairs);

struct IdentityVerdict {
    bool holds = false;
    std::size_t lhs_size = 0;
    std::size_t rhs_size = 0;
    /// A tuple in exactly one side.
    std::optional<Point> counterexample;
    std::string detail;
};

/// Complement of the product space inside X_1 × ... × X_m against the
/// product over the dual of K with pairs (X_k, X_k ∖ A_k). K's ground must be nonempty.
IdentityVerdict complement_identity_check(const SimplicialComplex& k, std::span<const FiniteSpacePair> pairs);

/// Nested product over K of the block products of the inner pairs against the
/// product over the polyhedral product complex with the leaf pairs. Leaves are
/// indexed by the labels of the union of the inner grounds, in order.
IdentityVerdict substitution_identity_check(const SimplicialComplex& k, std::span<const SimplicialPair> inner,
                                            std::span<const FiniteSpacePair> leaves);

std::string point_to_string(const Point& p);

/// Parameters (r, q) of the sphere pair (S^{r+1}, S^q), 0 <= q <= r.
struct SpherePair {
    int r = 0;
    int q = 0;
    friend bool operator==(const SpherePair&, const SpherePair&) = default;
};

class SpherePairSystem {
public:
    SpherePairSystem() = default;
    /// Throws InputError when some pair violates 0 <= q <= r.
    explicit SpherePairSystem(std::vector<SpherePair> params);
    /// "r1:q1,r2:q2,..."
    static SpherePairSystem parse(std::string_view text);

    std::size_t size() const { return params_.size(); }
    const SpherePair& operator[](std::size_t k) const { return params_[k]; }
    const std::vector<SpherePair>& params() const { return params_; }
    /// Σ (r_k + 1), the dimension of the ambient product of spheres.
    int total_dimension() const;
    /// Parameters (r_k, r_k - q_k) of the complement pairs.
    SpherePairSystem complement() const;
    std::string to_string() const;

private:
    std::vector<SpherePair> params_;
};

enum class LedgerPart { hat, bar, relative_hat };

std::string_view part_name(LedgerPart p);

struct LedgerEntry {
    LedgerPart part = LedgerPart::hat;
    IndexPair pair;
    /// Suspension shift t.
    int shift = 0;
    /// Internal degree inside K's table (0 for hat entries).
    int source_degree = 0;
    int degree = 0;
    FgAbelianGroup group;
};

struct SpaceHomologyReport {
    GradedGroup hat;
    GradedGroup bar;
    GradedGroup total;
    /// Decomposition of H_*(X̃, M): hat over σ ∉ K, bar shifted up by one.
    GradedGroup relative_hat;
    GradedGroup relative_bar;
    std::vector<LedgerEntry> ledger;
};

enum class Variance { homology, cohomology };

/// Homology (or cohomology) of M = Z(K; (S^{r_k+1}, S^{q_k})) read off K's
/// table: hat = Z at Σ_{k∈σ}(r_k+1) per σ ∈ K, bar = internal degree i of
/// (σ,ω), ω ≠ ∅, placed at i + Σ_{k∈σ}(r_k+1) + Σ_{k∈ω} q_k.
SpaceHomologyReport sphere_pair_homology(const SimplicialComplex& k, const SpherePairSystem& sys,
                                         Variance variance = Variance::homology);

struct SphereDualityReport {
    int total_dimension = 0;
    GradedGroup bar;
    GradedGroup complement_bar;
    /// bar_d(M) ≅ bar^{R-d-1}(M^c) for all d.
    bool graded_iso = false;
    /// Every bar contribution (σ,ω) at d pairs with (σ̃,ω) at R-d-1, and back.
    bool ledger_paired = false;
    /// Every σ ∈ K at d pairs with the relative hat of [m]∖σ at R-d.
    bool hat_paired = false;
    std::vector<std::string> failures;

    bool holds() const { return graded_iso && ledger_paired && hat_paired; }
};

SphereDualityReport sphere_pair_duality_check(const SimplicialComplex& k, const SpherePairSystem& sys);

}  // namespace polyprod
