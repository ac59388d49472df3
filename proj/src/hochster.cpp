#include "polyprod/hochster.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyprod/parallel.hpp"

namespace polyprod {

BigradedTable::BigradedTable(VertexSet ground, std::vector<IndexPair> pairs, std::vector<GradedGroup> groups)
    : ground_(ground), pairs_(std::move(pairs)), groups_(std::move(groups)) {
    if (pairs_.size() != groups_.size())
        throw std::invalid_argument("table pairs and groups differ in length");
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        index_.emplace(pairs_[i], i);
}

const GradedGroup& BigradedTable::at(IndexPair p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::out_of_range("pair " + p.sigma.to_string() + "," + p.omega.to_string() + " is not in the table");
    return groups_[it->second];
}

GradedGroup hochster_entry(const SimplicialComplex& k, IndexPair p, const Coefficients& coeff) {
    return reduced_homology(slice(k, p), coeff).shifted(1);
}

GradedGroup hochster_coentry(const SimplicialComplex& k, IndexPair p, const Coefficients& coeff) {
    return reduced_cohomology(slice(k, p), coeff).shifted(1);
}

BigradedTable hochster_table(const SimplicialComplex& k, const Coefficients& coeff,
                             std::optional<std::vector<IndexPair>> pairs) {
    std::vector<IndexPair> ps = pairs ? std::move(*pairs) : all_index_pairs(k.ground());
    for (const auto& p : ps)
        if (!(p.sigma | p.omega).subset_of(k.ground()))
            throw InputError("pair " + p.sigma.to_string() + "," + p.omega.to_string() + " is not inside the ground " +
                             k.ground().to_string());
    std::vector<GradedGroup> groups(ps.size());
    parallel_for(ps.size(), [&](std::size_t i) { groups[i] = hochster_entry(k, ps[i], coeff); });
    return BigradedTable(k.ground(), std::move(ps), std::move(groups));
}

IntegerMatrix WitnessDegree::matrix() const {
    IntegerMatrix m(target_dim, target_index.size());
    for (std::size_t j = 0; j < target_index.size(); ++j)
        if (target_index[j] >= 0)
            m(static_cast<std::size_t>(target_index[j]), j) = signs[j];
    return m;
}

std::string DualityWitness::failure() const {
    std::string why;
    auto note = [&why](bool ok, const char* what) {
        if (!ok)
            why += why.empty() ? what : std::string("; ") + what;
    };
    note(slices_dual, "dual of the slice differs from the slice of the dual");
    note(signed_permutation, "psi is not a signed permutation");
    note(chain_map, "psi does not intertwine d and delta");
    note(groups_match, "homology and dual cohomology differ");
    return why;
}

namespace {

// Parity of the shuffle placing sorted η before sorted τ (η ∩ τ = ∅).
int shuffle_sign(std::uint64_t eta, std::uint64_t tau) {
    int inversions = 0;
    for (std::uint64_t b = eta; b != 0; b &= b - 1) {
        const std::uint64_t low = b & (~b + 1);
        inversions += std::popcount(tau & (low - 1));
    }
    return (inversions & 1) != 0 ? -1 : 1;
}

}  // namespace

DualityWitness alexander_duality_witness(const SimplicialComplex& k, IndexPair p, VertexSet s) {
    if (!k.ground().subset_of(s))
        throw InputError("complex ground " + k.ground().to_string() + " is not inside " + s.to_string());
    return alexander_duality_witness(k, dual(k, s), p, s);
}

DualityWitness alexander_duality_witness(const SimplicialComplex& k, const SimplicialComplex& k_dual, IndexPair p,
                                         VertexSet s) {
    if (p.omega.empty())
        throw InputError("duality needs a nonempty omega: H^{sigma,{}} has no dual partner");
    if (!(p.sigma | p.omega).subset_of(s))
        throw InputError("pair " + p.sigma.to_string() + "," + p.omega.to_string() + " is not inside " + s.to_string());
    if (!k.ground().subset_of(s) || k_dual.ground() != s)
        throw InputError("complex and dual do not live on " + s.to_string());

    DualityWitness w;
    w.pair = p;
    w.reference = s;
    w.dual_pair = IndexPair(s - (p.sigma | p.omega), p.omega);
    // The pair lives in S; K may have a smaller ground, so slice on S.
    w.slice = k.ground() == s ? slice(k, p) : slice(k.with_ground(s), p);
    w.dual_slice = slice(k_dual, w.dual_pair);
    w.slices_dual = dual(w.slice, p.omega) == w.dual_slice;

    const ChainComplex source = relative_chain_complex(p.omega, w.slice);
    const ChainComplex target = augmented_chain_complex(w.dual_slice);
    const int n = p.omega.size();
    const std::uint64_t omega = p.omega.bits();

    w.signed_permutation = true;
    for (int e = source.min_degree; e <= source.max_degree(); ++e) {
        WitnessDegree deg;
        deg.source_degree = e;
        deg.target_degree = n - e - 2;
        deg.target_dim = target.dim(deg.target_degree);
        const auto& basis = source.basis(e);
        std::vector<char> hit(deg.target_dim, 0);
        for (std::uint64_t eta : basis) {
            const std::uint64_t tau = omega & ~eta;
            long idx = target.index_of(tau);
            if (idx >= 0 && std::popcount(tau) - 1 != deg.target_degree)
                idx = -1;
            deg.target_index.push_back(idx);
            deg.signs.push_back(shuffle_sign(eta, tau));
            if (idx < 0 || hit[static_cast<std::size_t>(idx)] != 0)
                w.signed_permutation = false;
            else
                hit[static_cast<std::size_t>(idx)] = 1;
        }
        if (basis.size() != deg.target_dim)
            w.signed_permutation = false;
        w.degrees.push_back(std::move(deg));
    }
    // Target basis elements in degrees the source never reaches.
    for (int t = target.min_degree; t <= target.max_degree(); ++t) {
        const int e = n - t - 2;
        if (target.dim(t) != 0 && source.dim(e) == 0)
            w.signed_permutation = false;
    }

    w.chain_map = w.signed_permutation;
    if (w.chain_map) {
        auto degree_of = [&](int e) -> const WitnessDegree* {
            if (e < source.min_degree || e > source.max_degree())
                return nullptr;
            return &w.degrees[static_cast<std::size_t>(e - source.min_degree)];
        };
        for (auto& deg : w.degrees) {
            const int e = deg.source_degree;
            const IntegerMatrix* d_src = source.boundary(e);
            const IntegerMatrix* d_tgt = target.boundary(deg.target_degree + 1);
            const WitnessDegree* below = degree_of(e - 1);
            const std::size_t out_dim = target.dim(deg.target_degree + 1);
            int epsilon = 0;
            for (std::size_t j = 0; j < deg.target_index.size() && w.chain_map; ++j) {
                std::vector<std::int64_t> lhs(out_dim, 0);
                std::vector<std::int64_t> rhs(out_dim, 0);
                if (d_src != nullptr && below != nullptr)
                    for (std::size_t r = 0; r < d_src->rows(); ++r) {
                        const std::int64_t c = (*d_src)(r, j);
                        if (c != 0)
                            lhs[static_cast<std::size_t>(below->target_index[r])] += c * below->signs[r];
                    }
                if (d_tgt != nullptr) {
                    const auto row = static_cast<std::size_t>(deg.target_index[j]);
                    for (std::size_t c = 0; c < d_tgt->cols(); ++c)
                        rhs[c] = (*d_tgt)(row, c) * deg.signs[j];
                }
                for (std::size_t i = 0; i < out_dim; ++i) {
                    if (lhs[i] == 0 && rhs[i] == 0)
                        continue;
                    const int ratio = lhs[i] == rhs[i] ? 1 : (lhs[i] == -rhs[i] ? -1 : 0);
                    if (ratio == 0 || (epsilon != 0 && ratio != epsilon)) {
                        w.chain_map = false;
                        break;
                    }
                    epsilon = ratio;
                }
            }
            deg.epsilon = epsilon == 0 ? 1 : epsilon;
        }
    }

    w.homology = homology_of(augmented_chain_complex(w.slice));
    w.cohomology = cohomology_of(target);
    w.groups_match = true;
    for (const auto& [j, g] : w.homology)
        if (w.cohomology.at(n - j - 3) != g)
            w.groups_match = false;
    for (const auto& [i, g] : w.cohomology)
        if (w.homology.at(n - i - 3) != g)
            w.groups_match = false;
    return w;
}

CompositionHomology composition_homology(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                                         const Coefficients& coeff) {
    std::vector<GradedGroup> factors;
    factors.push_back(reduced_homology(k, coeff));
    for (const auto& l : ls)
        factors.push_back(reduced_homology(l, coeff));
    CompositionHomology out;
    out.formula = graded_tensor(factors, coeff);
    out.direct = reduced_homology(composition_complex(k, ls), coeff);
    out.agree = out.formula == out.direct;
    return out;
}

std::string_view verdict_name(PieceVerdict v) {
    switch (v) {
        case PieceVerdict::isomorphic:
            return "isomorphic";
        case PieceVerdict::mismatch:
            return "mismatch";
        case PieceVerdict::unsupported:
            return "unsupported";
    }
    return "unsupported";
}

HochsterCompositionReport hochster_composition_formula(const SimplicialComplex& k,
                                                       std::span<const SimplicialComplex> ls,
                                                       const Coefficients& coeff,
                                                       std::optional<std::vector<IndexPair>> pairs) {
    const auto labels = k.ground().labels();
    if (labels.size() != ls.size())
        throw InputError("block mismatch: complex has " + std::to_string(labels.size()) + " vertices but " +
                         std::to_string(ls.size()) + " blocks were given");
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i].is_void())
            throw InputError("block " + std::to_string(i + 1) + " is the void complex; the formula needs L_k nonvoid");

    const SimplicialComplex comp = composition_complex(k, ls);
    std::vector<IndexPair> ps = pairs ? std::move(*pairs) : all_index_pairs(comp.ground());

    std::vector<BigradedTable> l_tables;
    for (const auto& l : ls)
        l_tables.push_back(hochster_table(l, coeff));
    const BigradedTable k_table = hochster_table(k, coeff);

    HochsterCompositionReport report;
    report.pieces.resize(ps.size());
    parallel_for(ps.size(), [&](std::size_t idx) {
        HochsterPiece& piece = report.pieces[idx];
        const IndexPair p = ps[idx];
        piece.pair = p;
        VertexSet sigma_hat;
        VertexSet omega_hat;
        std::vector<GradedGroup> factors;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            const VertexSet block = ls[i].ground();
            const IndexPair local(p.sigma & block, p.omega & block);
            if (!local.omega.empty()) {
                omega_hat = omega_hat | VertexSet::single(labels[i]);
                piece.factors.emplace_back(i, local);
                factors.push_back(l_tables[i].at(local));
            } else if (!ls[i].contains(local.sigma)) {
                sigma_hat = sigma_hat | VertexSet::single(labels[i]);
            }
        }
        piece.k_pair = IndexPair(sigma_hat, omega_hat);
        factors.insert(factors.begin(), k_table.at(piece.k_pair));
        piece.direct = hochster_entry(comp, p, coeff);

        // Internal degree is reduced degree + 1 on both sides.
        std::vector<GradedGroup> reduced;
        for (const auto& f : factors)
            reduced.push_back(f.shifted(-1));
        try {
            piece.formula = graded_tensor(reduced, coeff).shifted(1);
            piece.verdict = piece.formula == piece.direct ? PieceVerdict::isomorphic : PieceVerdict::mismatch;
        } catch (const OutOfScopeError&) {
            piece.verdict = PieceVerdict::unsupported;
        }
    });
    for (const auto& piece : report.pieces) {
        if (piece.verdict == PieceVerdict::isomorphic)
            ++report.isomorphic;
        else if (piece.verdict == PieceVerdict::mismatch)
            ++report.mismatched;
        else
            ++report.unsupported;
    }
    return report;
}

}  // namespace polyprod
