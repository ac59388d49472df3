#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "polyprod/coefficients.hpp"
#include "polyprod/matrix.hpp"

namespace polyprod {

/// Rank of an integer matrix reduced mod p (p prime). F_2 runs on packed rows.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint32_t p);

/// Rank over the coefficient field; for the integers this is the rank over Q.
std::size_t rank_over(const IntegerMatrix& m, const Coefficients& c);

/// Matrices over Q or F_p. F_p entries are kept as integers in [0, p).
using FieldMatrix = DenseMatrix<mpq_class>;
using FieldVector = std::vector<mpq_class>;

/// Arithmetic in the field chosen by `c` (Q for the integers).
class Field {
public:
    explicit Field(const Coefficients& c) : p_(c.kind() == Coefficients::Kind::prime ? c.prime() : 0) {}

    mpq_class normalize(const mpq_class& x) const;
    mpq_class inverse(const mpq_class& x) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }

private:
    unsigned long p_;
};

FieldMatrix to_field(const IntegerMatrix& m, const Field& f);

struct Rref {
    FieldMatrix matrix;
    std::vector<std::size_t> pivot_columns;
};

Rref rref(FieldMatrix m, const Field& f);
/// Basis of {x | m x = 0}.
std::vector<FieldVector> nullspace(const FieldMatrix& m, const Field& f);
/// Some x with a x = b, or nullopt.
std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b, const Field& f);

}  // namespace polyprod
