#include "polyprod/chain_complex.hpp"

#include <algorithm>

namespace polyprod {
namespace {

constexpr int kDenseLookupLimit = 20;

const std::vector<std::uint64_t>& empty_basis() {
    static const std::vector<std::uint64_t> none;
    return none;
}

}  // namespace

std::size_t ChainComplex::dim(int degree) const { return basis(degree).size(); }

const std::vector<std::uint64_t>& ChainComplex::basis(int degree) const {
    if (degree < min_degree || degree > max_degree())
        return empty_basis();
    return bases[static_cast<std::size_t>(degree - min_degree)];
}

const IntegerMatrix* ChainComplex::boundary(int degree) const {
    if (degree <= min_degree || degree > max_degree())
        return nullptr;
    return &boundaries[static_cast<std::size_t>(degree - min_degree)];
}

long ChainComplex::index_of(std::uint64_t face) const {
    if ((face & ~lookup_support_) != 0)
        return -1;
    if (!lookup_.empty())
        return lookup_[compress_bits(face, lookup_support_)];
    auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), std::pair<std::uint64_t, long>{face, -1});
    return (it != sorted_index_.end() && it->first == face) ? it->second : -1;
}

ChainComplex chain_complex_on(std::vector<std::uint64_t> family) {
    ChainComplex c;
    if (family.empty())
        return c;

    std::uint64_t support = 0;
    int top = 0;
    for (std::uint64_t f : family) {
        support |= f;
        top = std::max(top, std::popcount(f));
    }
    c.bases.resize(static_cast<std::size_t>(top) + 1);
    std::sort(family.begin(), family.end(),
              [](std::uint64_t a, std::uint64_t b) { return lex_less(VertexSet::from_bits(a), VertexSet::from_bits(b)); });
    for (std::uint64_t f : family)
        c.bases[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    c.lookup_support_ = support;
    const bool dense = std::popcount(support) <= kDenseLookupLimit;
    if (dense)
        c.lookup_.assign(std::size_t{1} << std::popcount(support), -1);
    for (const auto& basis : c.bases)
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (dense)
                c.lookup_[compress_bits(basis[i], support)] = static_cast<long>(i);
            else
                c.sorted_index_.emplace_back(basis[i], static_cast<long>(i));
        }
    std::sort(c.sorted_index_.begin(), c.sorted_index_.end());
    auto position = [&c](std::uint64_t f) { return c.index_of(f); };

    c.boundaries.resize(c.bases.size());
    c.boundaries[0] = IntegerMatrix(0, c.bases[0].size());
    for (std::size_t k = 1; k < c.bases.size(); ++k) {
        const auto& cols = c.bases[k];
        IntegerMatrix d(c.bases[k - 1].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::int64_t sign = 1;
            for (std::uint64_t b = cols[j]; b != 0; b &= b - 1, sign = -sign) {
                const long row = position(cols[j] & ~(b & (~b + 1)));
                if (row >= 0)
                    d(static_cast<std::size_t>(row), j) = sign;
            }
        }
        c.boundaries[k] = std::move(d);
    }
    return c;
}

ChainComplex augmented_chain_complex(const SimplicialComplex& k) {
    return chain_complex_on(std::vector<std::uint64_t>(k.face_bits().begin(), k.face_bits().end()));
}

ChainComplex relative_chain_complex(VertexSet omega, const SimplicialComplex& l) {
    if (!l.support().subset_of(omega))
        throw InputError("relative complex: L has vertices outside " + omega.to_string());
    std::vector<std::uint64_t> nonfaces;
    const auto faces = l.face_bits();
    std::size_t next = 0;
    for_each_subset(omega, [&](VertexSet s) {
        while (next < faces.size() && faces[next] < s.bits())
            ++next;
        if (next < faces.size() && faces[next] == s.bits())
            return;
        nonfaces.push_back(s.bits());
    });
    return chain_complex_on(std::move(nonfaces));
}

bool boundary_squares_to_zero(const ChainComplex& c) {
    for (int d = c.min_degree + 2; d <= c.max_degree(); ++d) {
        const IntegerMatrix* a = c.boundary(d - 1);
        const IntegerMatrix* b = c.boundary(d);
        if (a != nullptr && b != nullptr && !multiply(*a, *b).is_zero())
            return false;
    }
    return true;
}

}  // namespace polyprod
