#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyprod/matrix.hpp"

namespace polyprod {

/// Finitely generated abelian group Z^rank + Z/d_1 + ... with d_1 | d_2 | ...,
/// every d_i >= 2. The representation is canonical, so == is isomorphism.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;

    static FgAbelianGroup free(std::size_t rank);
    /// Throws InputError unless the torsion list is a divisibility chain of values >= 2.
    static FgAbelianGroup from_invariant_factors(std::size_t rank, std::vector<BigInt> torsion);
    /// Normalizes any list of cyclic orders (1s are dropped).
    static FgAbelianGroup from_cyclic_orders(std::size_t rank, std::vector<BigInt> orders);

    std::size_t rank() const { return rank_; }
    const std::vector<BigInt>& torsion() const { return torsion_; }
    bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    /// Number of torsion factors divisible by p.
    std::size_t torsion_count_divisible_by(unsigned long p) const;

    friend FgAbelianGroup operator+(const FgAbelianGroup& a, const FgAbelianGroup& b);
    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

    /// "0", "Z", "Z^3", "Z^2 + Z/2 + Z/4". With `field_ranks` a free part is
    /// always written Z^r, even for r = 1.
    std::string to_string(bool field_ranks = false) const;

private:
    std::size_t rank_ = 0;
    std::vector<BigInt> torsion_;
};

/// Degree-indexed family of groups; only nonzero degrees are stored.
class GradedGroup {
public:
    using Map = std::map<int, FgAbelianGroup>;

    GradedGroup() = default;
    static GradedGroup concentrated(int degree, FgAbelianGroup g);

    /// Zero groups erase the degree.
    void set(int degree, FgAbelianGroup g);
    void add(int degree, const FgAbelianGroup& g);
    FgAbelianGroup at(int degree) const;

    bool is_zero() const { return parts_.empty(); }
    bool is_free() const;
    const Map& parts() const { return parts_; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Sum of ranks over all degrees.
    std::size_t total_rank() const;
    GradedGroup shifted(int by) const;

    friend GradedGroup operator+(const GradedGroup& a, const GradedGroup& b);
    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

    /// One "d<k>: <group>" line per nonzero degree (none for the zero group).
    std::vector<std::string> lines(bool field_ranks = false) const;
    /// Lines joined by ", "; "0" for the zero group.
    std::string to_string(bool field_ranks = false) const;

private:
    Map parts_;
};

}  // namespace polyprod
