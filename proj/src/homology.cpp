#include "polyprod/homology.hpp"

#include <algorithm>

#include "polyprod/smith.hpp"

namespace polyprod {
namespace {

struct MapData {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

MapData analyze(const IntegerMatrix* m, const Coefficients& coeff, bool transpose) {
    MapData out;
    if (m == nullptr || m->empty() || m->is_zero())
        return out;
    if (coeff.kind() == Coefficients::Kind::integers) {
        SmithSummary s = smith_summary(transpose ? m->transposed() : *m);
        out.rank = s.rank;
        out.torsion = std::move(s.torsion);
    } else {
        out.rank = rank_over(*m, coeff);
    }
    return out;
}

GradedGroup assemble(const ChainComplex& c, const Coefficients& coeff, bool cohomology) {
    GradedGroup out;
    if (c.empty())
        return out;
    // maps[i] describes boundary(min_degree + i); one extra zero map on top.
    std::vector<MapData> maps;
    for (int d = c.min_degree; d <= c.max_degree() + 1; ++d)
        maps.push_back(analyze(c.boundary(d), coeff, cohomology));
    for (int d = c.min_degree; d <= c.max_degree(); ++d) {
        const auto i = static_cast<std::size_t>(d - c.min_degree);
        const std::size_t free = c.dim(d) - maps[i].rank - maps[i + 1].rank;
        // Homology torsion comes from the incoming boundary, cohomology
        // torsion from the incoming coboundary (the transpose of d_d).
        const auto& torsion = cohomology ? maps[i].torsion : maps[i + 1].torsion;
        out.set(d, FgAbelianGroup::from_invariant_factors(free, torsion));
    }
    return out;
}

}  // namespace

GradedGroup homology_of(const ChainComplex& c, const Coefficients& coeff) { return assemble(c, coeff, false); }

GradedGroup cohomology_of(const ChainComplex& c, const Coefficients& coeff) { return assemble(c, coeff, true); }

GradedGroup reduced_homology(const SimplicialComplex& k, const Coefficients& coeff) {
    return homology_of(augmented_chain_complex(k), coeff);
}

GradedGroup reduced_cohomology(const SimplicialComplex& k, const Coefficients& coeff) {
    return cohomology_of(augmented_chain_complex(k), coeff);
}

RelativeHomology relative_homology(VertexSet omega, const SimplicialComplex& l, const Coefficients& coeff) {
    RelativeHomology out;
    out.groups = homology_of(relative_chain_complex(omega, l), coeff);
    out.boundary_iso = out.groups == reduced_homology(l, coeff).shifted(1);
    return out;
}

bool InducedMap::is_epimorphism() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.cokernel == 0; });
}

bool InducedMap::is_monomorphism() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.kernel == 0; });
}

namespace {

struct HomologyBasis {
    std::vector<FieldVector> boundaries;      // spanning set of B_d
    std::vector<FieldVector> representatives;  // cycles completing B_d to Z_d
};

std::vector<FieldVector> columns(const FieldMatrix& m) {
    std::vector<FieldVector> out(m.cols(), FieldVector(m.rows()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c][r] = m(r, c);
    return out;
}

FieldMatrix from_columns(const std::vector<FieldVector>& cols, std::size_t rows) {
    FieldMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    return m;
}

HomologyBasis homology_basis(const ChainComplex& c, int d, const Field& f) {
    HomologyBasis hb;
    const std::size_t n = c.dim(d);
    if (n == 0)
        return hb;
    std::vector<FieldVector> cycles;
    if (const IntegerMatrix* out = c.boundary(d)) {
        cycles = nullspace(to_field(*out, f), f);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            FieldVector e(n, 0);
            e[i] = 1;
            cycles.push_back(std::move(e));
        }
    }
    if (const IntegerMatrix* in = c.boundary(d + 1))
        hb.boundaries = columns(to_field(*in, f));
    std::vector<FieldVector> all = hb.boundaries;
    all.insert(all.end(), cycles.begin(), cycles.end());
    const Rref r = rref(from_columns(all, n), f);
    for (std::size_t p : r.pivot_columns)
        if (p >= hb.boundaries.size())
            hb.representatives.push_back(all[p]);
    return hb;
}

}  // namespace

InducedMap induced_inclusion_map(const SimplicialComplex& a, const SimplicialComplex& x, const Coefficients& coeff) {
    if (!coeff.is_field())
        throw InputError("induced maps are computed over a field; pass q or p:<prime>");
    if (!is_subcomplex(a, x))
        throw InputError("induced map: the first complex is not a subcomplex of the second");
    const Field f(coeff);
    const ChainComplex ca = augmented_chain_complex(a);
    const ChainComplex cx = augmented_chain_complex(x);

    InducedMap out;
    const int top = std::max(ca.max_degree(), cx.max_degree());
    for (int d = -1; d <= top; ++d) {
        const HomologyBasis ha = homology_basis(ca, d, f);
        const HomologyBasis hx = homology_basis(cx, d, f);
        if (ha.representatives.empty() && hx.representatives.empty())
            continue;
        InducedMapDegree deg;
        deg.degree = d;
        deg.source_dim = ha.representatives.size();
        deg.target_dim = hx.representatives.size();
        deg.matrix = FieldMatrix(deg.target_dim, deg.source_dim);

        std::vector<FieldVector> system = hx.boundaries;
        system.insert(system.end(), hx.representatives.begin(), hx.representatives.end());
        const FieldMatrix lhs = from_columns(system, cx.dim(d));
        const auto& basis_a = ca.basis(d);
        for (std::size_t j = 0; j < deg.source_dim; ++j) {
            FieldVector v(cx.dim(d), 0);
            for (std::size_t i = 0; i < basis_a.size(); ++i)
                v[static_cast<std::size_t>(cx.index_of(basis_a[i]))] = ha.representatives[j][i];
            const auto sol = solve(lhs, v, f);
            if (!sol)
                throw std::logic_error("image of a cycle is not a cycle");
            for (std::size_t i = 0; i < deg.target_dim; ++i)
                deg.matrix(i, j) = (*sol)[hx.boundaries.size() + i];
        }
        const std::size_t rank = rref(deg.matrix, f).pivot_columns.size();
        deg.image = rank;
        deg.kernel = deg.source_dim - rank;
        deg.cokernel = deg.target_dim - rank;
        out.degrees.push_back(std::move(deg));
    }
    return out;
}

GradedGroup graded_tensor(std::span<const GradedGroup> factors, const Coefficients& coeff) {
    GradedGroup acc = GradedGroup::concentrated(-1, FgAbelianGroup::free(1));
    for (const GradedGroup& g : factors) {
        if (!coeff.is_field() && !g.is_free())
            throw OutOfScopeError("tensor formula needs torsion-free factors over the integers, got " + g.to_string());
        GradedGroup next;
        for (const auto& [d1, a] : acc)
            for (const auto& [d2, b] : g)
                next.add(d1 + d2 + 1, FgAbelianGroup::free(a.rank() * b.rank()));
        acc = std::move(next);
    }
    return acc;
}

long euler_characteristic(const GradedGroup& g) {
    long chi = 0;
    for (const auto& [d, grp] : g)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(grp.rank());
    return chi;
}

}  // namespace polyprod
