#include "polyprod/vertex_set.hpp"

#include <numeric>

namespace polyprod {

GroundSet::GroundSet(VertexSet vertices, std::vector<int> block_sizes)
    : vertices_(vertices), block_sizes_(std::move(block_sizes)) {
    int total = 0;
    for (int b : block_sizes_) {
        if (b <= 0)
            throw InputError("block sizes must be positive, got " + std::to_string(b));
        total += b;
    }
    if (!block_sizes_.empty() && total != vertices_.size())
        throw InputError("blocks sum to " + std::to_string(total) + " but the ground has " +
                         std::to_string(vertices_.size()) + " vertices");
}

VertexSet GroundSet::block(std::size_t k) const {
    if (block_sizes_.empty())
        return k == 0 ? vertices_ : VertexSet{};
    const auto labels = vertices_.labels();
    const int offset = std::accumulate(block_sizes_.begin(), block_sizes_.begin() + static_cast<long>(k), 0);
    VertexSet out;
    for (int i = 0; i < block_sizes_.at(k); ++i)
        out = out | VertexSet::single(labels[static_cast<std::size_t>(offset + i)]);
    return out;
}

std::vector<IndexPair> all_index_pairs(VertexSet ground) {
    const auto labels = ground.labels();
    const std::size_t n = labels.size();
    if (n > 16)
        throw InputError("enumerating all index pairs over " + std::to_string(n) + " vertices is not supported");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 3;

    std::vector<IndexPair> out;
    out.reserve(total);
    std::vector<int> digits(n, 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::uint64_t s = 0;
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << (labels[i] - 1);
            if (digits[i] == 1)
                s |= bit;
            else if (digits[i] == 2)
                w |= bit;
        }
        out.emplace_back(VertexSet::from_bits(s), VertexSet::from_bits(w));
        for (std::size_t i = 0; i < n; ++i) {
            if (++digits[i] < 3)
                break;
            digits[i] = 0;
        }
    }
    return out;
}

std::size_t ternary_index(VertexSet ground, IndexPair p) {
    std::size_t idx = 0;
    std::size_t scale = 1;
    for (int v : ground.labels()) {
        if (p.sigma.contains(v))
            idx += scale;
        else if (p.omega.contains(v))
            idx += 2 * scale;
        scale *= 3;
    }
    return idx;
}

}  // namespace polyprod
