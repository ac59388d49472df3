#include "polyprod/field_linalg.hpp"

#include "polyprod/kernels/kernels.hpp"
#include "polyprod/smith.hpp"

namespace polyprod {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

// a^(p-2) mod p
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
        if ((e & 1U) != 0)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

std::size_t rank_gf2(const IntegerMatrix& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((m(r, c) & 1) != 0)
                rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    const auto& k = kernels::active();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && (rows[piv][w] & bit) == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
            if ((rows[r][w] & bit) != 0)
                k.xor_rows(rows[r].data() + w, rows[rank].data() + w, words - w);
        ++rank;
    }
    return rank;
}

std::size_t rank_small_prime(const IntegerMatrix& m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(m.cols()));
    const auto sp = static_cast<std::int64_t>(p);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = static_cast<std::uint32_t>(((m(r, c) % sp) + sp) % sp);
    const auto& k = kernels::active();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        const std::uint64_t inv = inverse_mod(rows[rank][c], p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const auto factor = static_cast<std::uint32_t>((p - (rows[r][c] * inv) % p) % p);
            k.axpy_mod_p(rows[r].data() + c, rows[rank].data() + c, factor, p, m.cols() - c);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_large_prime(const IntegerMatrix& m, std::uint32_t p) {
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    const auto sp = static_cast<std::int64_t>(p);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = static_cast<std::uint64_t>(((m(r, c) % sp) + sp) % sp);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        const std::uint64_t inv = inverse_mod(rows[rank][c], p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const std::uint64_t factor = p - mul_mod(rows[r][c], inv, p);
            for (std::size_t j = c; j < m.cols(); ++j)
                rows[r][j] = (rows[r][j] + mul_mod(factor, rows[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint32_t p) {
    if (m.empty())
        return 0;
    if (p == 2)
        return rank_gf2(m);
    if (p <= kernels::kMaxKernelPrime)
        return rank_small_prime(m, p);
    return rank_large_prime(m, p);
}

std::size_t rank_over(const IntegerMatrix& m, const Coefficients& c) {
    if (m.empty())
        return 0;
    if (c.kind() == Coefficients::Kind::prime)
        return rank_mod_p(m, c.prime());
    return smith_normal_form(m).size();
}

mpq_class Field::normalize(const mpq_class& x) const {
    if (p_ == 0)
        return x;
    mpz_class num = x.get_num() % p_;
    if (num < 0)
        num += p_;
    mpz_class den = x.get_den() % p_;
    const auto inv = inverse_mod(den.get_ui(), p_);
    num = (num * inv) % p_;
    return mpq_class(num);
}

mpq_class Field::inverse(const mpq_class& x) const {
    if (x == 0)
        throw std::domain_error("inverse of zero");
    if (p_ == 0)
        return 1 / x;
    const mpq_class n = normalize(x);
    return mpq_class(static_cast<unsigned long>(inverse_mod(n.get_num().get_ui(), p_)));
}

FieldMatrix to_field(const IntegerMatrix& m, const Field& f) {
    FieldMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = f.normalize(mpq_class(static_cast<long>(m(r, c))));
    return out;
}

Rref rref(FieldMatrix m, const Field& f) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
        const mpq_class inv = f.inverse(m(row, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(row, j) = f.mul(m(row, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0)
                continue;
            const mpq_class factor = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
        }
        out.pivot_columns.push_back(c);
        ++row;
    }
    out.matrix = std::move(m);
    return out;
}

std::vector<FieldVector> nullspace(const FieldMatrix& m, const Field& f) {
    const Rref r = rref(m, f);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : r.pivot_columns)
        is_pivot[c] = 1;
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free] != 0)
            continue;
        FieldVector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = f.normalize(-r.matrix(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b, const Field& f) {
    FieldMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = f.normalize(b[r]);
    }
    const Rref rr = rref(std::move(aug), f);
    if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == a.cols())
        return std::nullopt;
    FieldVector x(a.cols(), 0);
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        x[rr.pivot_columns[i]] = rr.matrix(i, a.cols());
    return x;
}

}  // namespace polyprod
