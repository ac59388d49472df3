#include "polyprod/abelian_group.hpp"

#include <algorithm>

#include "polyprod/errors.hpp"

namespace polyprod {

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) {
    FgAbelianGroup g;
    g.rank_ = rank;
    return g;
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(std::size_t rank, std::vector<BigInt> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2)
            throw InputError("torsion coefficient " + torsion[i].get_str() + " is below 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw InputError("torsion coefficients " + torsion[i - 1].get_str() + ", " + torsion[i].get_str() +
                             " do not form a divisibility chain");
    }
    FgAbelianGroup g;
    g.rank_ = rank;
    g.torsion_ = std::move(torsion);
    return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::size_t rank, std::vector<BigInt> orders) {
    for (auto& d : orders) {
        d = abs(d);
        if (d == 0)
            throw InputError("cyclic order 0 is not finite; count it in the rank");
    }
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            BigInt g;
            BigInt l;
            mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
            orders[i] = g;
            orders[j] = l;
        }
    std::erase_if(orders, [](const BigInt& d) { return d == 1; });
    std::sort(orders.begin(), orders.end());
    FgAbelianGroup g;
    g.rank_ = rank;
    g.torsion_ = std::move(orders);
    return g;
}

std::size_t FgAbelianGroup::torsion_count_divisible_by(unsigned long p) const {
    return static_cast<std::size_t>(
        std::count_if(torsion_.begin(), torsion_.end(), [p](const BigInt& d) { return mpz_divisible_ui_p(d.get_mpz_t(), p) != 0; }));
}

FgAbelianGroup operator+(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<BigInt> orders = a.torsion_;
    orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
    return FgAbelianGroup::from_cyclic_orders(a.rank_ + b.rank_, std::move(orders));
}

std::string FgAbelianGroup::to_string(bool field_ranks) const {
    if (is_zero())
        return "0";
    std::string out;
    if (rank_ > 0)
        out = (rank_ == 1 && !field_ranks) ? "Z" : "Z^" + std::to_string(rank_);
    for (const auto& d : torsion_) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

GradedGroup GradedGroup::concentrated(int degree, FgAbelianGroup g) {
    GradedGroup out;
    out.set(degree, std::move(g));
    return out;
}

void GradedGroup::set(int degree, FgAbelianGroup g) {
    if (g.is_zero())
        parts_.erase(degree);
    else
        parts_[degree] = std::move(g);
}

void GradedGroup::add(int degree, const FgAbelianGroup& g) {
    if (g.is_zero())
        return;
    auto it = parts_.find(degree);
    if (it == parts_.end())
        parts_.emplace(degree, g);
    else
        it->second = it->second + g;
}

FgAbelianGroup GradedGroup::at(int degree) const {
    auto it = parts_.find(degree);
    return it == parts_.end() ? FgAbelianGroup{} : it->second;
}

bool GradedGroup::is_free() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const auto& kv) { return kv.second.is_free(); });
}

std::size_t GradedGroup::total_rank() const {
    std::size_t r = 0;
    for (const auto& [d, g] : parts_)
        r += g.rank();
    return r;
}

GradedGroup GradedGroup::shifted(int by) const {
    GradedGroup out;
    for (const auto& [d, g] : parts_)
        out.parts_.emplace(d + by, g);
    return out;
}

GradedGroup operator+(const GradedGroup& a, const GradedGroup& b) {
    GradedGroup out = a;
    for (const auto& [d, g] : b.parts_)
        out.add(d, g);
    return out;
}

std::vector<std::string> GradedGroup::lines(bool field_ranks) const {
    std::vector<std::string> out;
    for (const auto& [d, g] : parts_)
        out.push_back("d" + std::to_string(d) + ": " + g.to_string(field_ranks));
    return out;
}

std::string GradedGroup::to_string(bool field_ranks) const {
    if (parts_.empty())
        return "0";
    std::string s;
    for (const auto& line : lines(field_ranks)) {
        if (!s.empty())
            s += ", ";
        s += line;
    }
    return s;
}

}  // namespace polyprod
