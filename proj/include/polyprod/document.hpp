#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod {

/**
 * Text form of a complex:
 *
 *     ground: [1,2,3]
 *     blocks: [2,1]          (optional)
 *     facets: [[1,2],[3]]
 *
 * `facets: []` is the void complex and `facets: [[]]` is {∅}. Lines starting
 * with '#' and blank lines are ignored.
 */
struct ComplexDocument {
    SimplicialComplex complex;
    std::vector<int> blocks;
};

/// Throws InputError with a line number on malformed input.
ComplexDocument parse_document(std::string_view text);
ComplexDocument read_document(const std::string& path);

/// Canonical form: facets sorted within and across (lexicographically).
std::string render_document(const ComplexDocument& doc);
std::string render_document(const SimplicialComplex& k);

/// "[1,2,3]" / "1,2,3" -> labels.
std::vector<int> parse_label_list(std::string_view text);
/// Labels in increasing order, as "[1,2]".
std::string render_labels(VertexSet s);

/// Canonically sorted facets.
std::vector<VertexSet> canonical_facets(const SimplicialComplex& k);

}  // namespace polyprod
