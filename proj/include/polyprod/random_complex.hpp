#pragma once

#include <random>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod {

using Rng = std::mt19937_64;

/// Random complex on `ground`: void and {∅} with probability 5% each,
/// otherwise the downward closure of f uniform facets with f uniform in [0, 2^n].
SimplicialComplex random_complex(VertexSet ground, Rng& rng);

/// Random complex whose facets have at most `max_facet` vertices; used where
/// near-full simplices would make a property vacuous.
SimplicialComplex random_sparse_complex(VertexSet ground, int max_facets, int max_facet, Rng& rng);

/// Random subcomplex of x (void with probability 10%).
SimplicialComplex random_subcomplex(const SimplicialComplex& x, Rng& rng);

/// Random pair (X, A) on `ground` with X nonvoid.
SimplicialPair random_pair(VertexSet ground, Rng& rng);

/// Every downward-closed family on `ground`, void included (|ground| <= 5).
std::vector<SimplicialComplex> all_complexes(VertexSet ground);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace polyprod
