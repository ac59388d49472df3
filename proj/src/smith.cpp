#include "polyprod/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace polyprod {
namespace {

struct Overflow {};

// Checked arithmetic policy for int64; the GMP policy never throws.
struct CheckedInt {
    using T = std::int64_t;
    static T sub_mul(T a, T q, T b) {
        T prod = 0;
        T out = 0;
        if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
            throw Overflow{};
        return out;
    }
    static T abs(T a) {
        if (a == INT64_MIN)
            throw Overflow{};
        return a < 0 ? -a : a;
    }
    static BigInt big(T a) { return BigInt(static_cast<long>(a)); }
};

struct GmpInt {
    using T = BigInt;
    static T sub_mul(const T& a, const T& q, const T& b) { return a - q * b; }
    static T abs(const T& a) { return ::abs(a); }
    static BigInt big(const T& a) { return a; }
};

template <class P>
std::vector<BigInt> diagonalize(DenseMatrix<typename P::T> m) {
    using T = typename P::T;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the trailing block.
        std::size_t pr = rows;
        std::size_t pc = cols;
        T best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                const T& x = m(r, c);
                if (x == 0)
                    continue;
                T ax = P::abs(x);
                if (pr == rows || ax < best) {
                    best = std::move(ax);
                    pr = r;
                    pc = c;
                    if (best == 1)
                        goto found;
                }
            }
        if (pr == rows)
            break;
    found:
        if (pr != t)
            for (std::size_t c = t; c < cols; ++c)
                std::swap(m(pr, c), m(t, c));
        if (pc != t)
            for (std::size_t r = t; r < rows; ++r)
                std::swap(m(r, pc), m(r, t));

        bool clean = true;
        const T p = m(t, t);
        for (std::size_t r = t + 1; r < rows; ++r) {
            if (m(r, t) == 0)
                continue;
            const T q = m(r, t) / p;
            for (std::size_t c = t; c < cols; ++c)
                if (m(t, c) != 0)
                    m(r, c) = P::sub_mul(m(r, c), q, m(t, c));
            if (m(r, t) != 0)
                clean = false;
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            if (m(t, c) == 0)
                continue;
            const T q = m(t, c) / p;
            for (std::size_t r = t; r < rows; ++r)
                if (m(r, t) != 0)
                    m(r, c) = P::sub_mul(m(r, c), q, m(r, t));
            if (m(t, c) != 0)
                clean = false;
        }
        // A nonzero remainder is smaller than |p|; the next scan picks it up.
        if (!clean)
            continue;
        diag.push_back(P::big(P::abs(p)));
        ++t;
    }

    // Turn the diagonal into a divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0)
                continue;
            BigInt g;
            BigInt l;
            mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntegerMatrix& m) {
    try {
        return diagonalize<CheckedInt>(m);
    } catch (const Overflow&) {
        return diagonalize<GmpInt>(m.cast<BigInt>());
    }
}

std::vector<BigInt> smith_normal_form(const BigIntMatrix& m) { return diagonalize<GmpInt>(m); }

SmithSummary smith_summary(const IntegerMatrix& m) {
    SmithSummary s;
    for (auto& d : smith_normal_form(m)) {
        ++s.rank;
        if (d > 1)
            s.torsion.push_back(std::move(d));
    }
    return s;
}

}  // namespace polyprod
