#pragma once

#include <initializer_list>
#include <vector>

#include "polyprod/complex.hpp"

namespace testing_helpers {

using polyprod::SimplicialComplex;
using polyprod::VertexSet;

inline VertexSet vs(std::initializer_list<int> labels) { return VertexSet::of(labels); }

inline SimplicialComplex cx(VertexSet ground, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<VertexSet> fs;
    for (auto f : facets)
        fs.push_back(VertexSet::of(f));
    return SimplicialComplex::make(ground, fs);
}

/// The 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_6() {
    return cx(VertexSet::range(1, 6), {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                       {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {2, 4, 6}, {3, 5, 6}});
}

/// 7-vertex torus.
inline SimplicialComplex torus_7() {
    return cx(VertexSet::range(1, 7), {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
                                       {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {4, 6, 7}, {5, 7, 1}, {6, 1, 2}, {7, 2, 3}});
}

}  // namespace testing_helpers
