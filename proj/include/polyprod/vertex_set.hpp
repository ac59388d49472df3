#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "polyprod/errors.hpp"

namespace polyprod {

inline constexpr int kMaxVertexLabel = 64;

/// A finite set of vertex labels in 1..64. Label v occupies bit v-1, so the
/// numeric order of masks is a total order on sets and labels are global:
/// links and slices never relabel.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(std::initializer_list<int> labels) {
        return from_labels(std::span<const int>(labels.begin(), labels.size()));
    }

    static VertexSet from_labels(std::span<const int> labels) {
        VertexSet s;
        for (int v : labels)
            s = s | single(v);
        return s;
    }

    static VertexSet single(int v) {
        if (v < 1 || v > kMaxVertexLabel)
            throw InputError("vertex label " + std::to_string(v) + " outside 1.." +
                             std::to_string(kMaxVertexLabel));
        return from_bits(std::uint64_t{1} << (v - 1));
    }

    /// {first, ..., last}; empty when last < first.
    static VertexSet range(int first, int last) {
        VertexSet s;
        for (int v = first; v <= last; ++v)
            s = s | single(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const {
        return v >= 1 && v <= kMaxVertexLabel && ((bits_ >> (v - 1)) & 1U) != 0;
    }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }

    /// Smallest label; 0 for the empty set.
    constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// Position of label v among the sorted labels of this set (v need not be a member).
    constexpr int rank_of(int v) const {
        return std::popcount(bits_ & ((std::uint64_t{1} << (v - 1)) - 1));
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    /// "{1,2,5}"; "{}" for the empty set.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : labels()) {
            if (!first)
                s += ',';
            s += std::to_string(v);
            first = false;
        }
        return s + '}';
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order of the sorted label lists (a proper prefix sorts first).
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    // The list holding `low` is smaller unless the other one stops there.
    if ((a.bits() & low) != 0)
        return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

/// Calls f(sub) for every subset of s, in increasing numeric order (starting with {}).
template <class F>
void for_each_subset(VertexSet s, F&& f) {
    const std::uint64_t mask = s.bits();
    std::uint64_t sub = 0;
    do {
        f(VertexSet::from_bits(sub));
        sub = (sub - mask) & mask;
    } while (sub != 0);
}

/// Packs the bits of x selected by mask into the low bits (software pext).
constexpr std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t out = 0;
    int k = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
        if ((x & (m & (~m + 1))) != 0)
            out |= std::uint64_t{1} << k;
    }
    return out;
}

/// Inverse of compress_bits (software pdep).
constexpr std::uint64_t expand_bits(std::uint64_t x, std::uint64_t mask) {
    std::uint64_t out = 0;
    int k = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
        if (((x >> k) & 1U) != 0)
            out |= m & (~m + 1);
    }
    return out;
}

/// A ground set with an optional partition into consecutive blocks (in label order).
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(VertexSet vertices) : vertices_(vertices) {}
    GroundSet(VertexSet vertices, std::vector<int> block_sizes);

    VertexSet vertices() const { return vertices_; }
    bool has_blocks() const { return !block_sizes_.empty(); }
    const std::vector<int>& block_sizes() const { return block_sizes_; }
    std::size_t block_count() const { return block_sizes_.size(); }
    VertexSet block(std::size_t k) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    VertexSet vertices_;
    std::vector<int> block_sizes_;
};

/// A disjoint pair (sigma, omega) of vertex subsets.
struct IndexPair {
    VertexSet sigma;
    VertexSet omega;

    IndexPair() = default;
    IndexPair(VertexSet s, VertexSet w) : sigma(s), omega(w) {
        if (!s.disjoint(w))
            throw InputError("index pair " + s.to_string() + "," + w.to_string() + " is not disjoint");
    }

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// All disjoint pairs over `ground`, enumerated by a ternary counter: the i-th
/// smallest label is digit i (least significant first), 0 = neither, 1 = sigma,
/// 2 = omega.
std::vector<IndexPair> all_index_pairs(VertexSet ground);

/// Position of `p` in the all_index_pairs(ground) order.
std::size_t ternary_index(VertexSet ground, IndexPair p);

}  // namespace polyprod
