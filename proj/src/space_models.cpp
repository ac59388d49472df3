#include "polyprod/space_models.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>

namespace polyprod {

FiniteSpacePair::FiniteSpacePair(PointSet x, PointSet a) : X(std::move(x)), A(std::move(a)) {
    if (!std::includes(X.begin(), X.end(), A.begin(), A.end()))
        throw InputError("finite pair: A is not a subset of X");
}

FiniteSpacePair FiniteSpacePair::of(const std::vector<int>& x, const std::vector<int>& a) {
    PointSet xs;
    PointSet as;
    for (int v : x)
        xs.insert(Point{v});
    for (int v : a)
        as.insert(Point{v});
    return FiniteSpacePair(std::move(xs), std::move(as));
}

FiniteSpacePair FiniteSpacePair::of(std::initializer_list<int> x, std::initializer_list<int> a) {
    return of(std::vector<int>(x), std::vector<int>(a));
}

namespace {

void append_product(std::span<const PointSet* const> factors, PointSet& out) {
    std::vector<Point> acc{Point{}};
    for (const PointSet* f : factors) {
        if (f->empty())
            return;
        std::vector<Point> next;
        next.reserve(acc.size() * f->size());
        for (const Point& a : acc)
            for (const Point& b : *f) {
                Point c = a;
                c.insert(c.end(), b.begin(), b.end());
                next.push_back(std::move(c));
            }
        acc = std::move(next);
    }
    out.insert(acc.begin(), acc.end());
}

void require_pair_count(const SimplicialComplex& k, std::size_t count) {
    if (static_cast<std::size_t>(k.ground().size()) != count)
        throw InputError("block mismatch: complex has " + std::to_string(k.ground().size()) + " vertices but " +
                         std::to_string(count) + " pairs were given");
}

IdentityVerdict compare(const PointSet& lhs, const PointSet& rhs) {
    IdentityVerdict v;
    v.lhs_size = lhs.size();
    v.rhs_size = rhs.size();
    v.holds = lhs == rhs;
    if (!v.holds) {
        std::vector<Point> diff;
        std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
        v.counterexample = diff.front();
        v.detail = "tuple " + point_to_string(diff.front()) + " lies only in the " +
                   (lhs.count(diff.front()) != 0 ? "left" : "right") + " side";
    }
    return v;
}

}  // namespace

FiniteProductSpace finite_product(const SimplicialComplex& k, std::span<const FiniteSpacePair> pairs) {
    require_pair_count(k, pairs.size());
    const auto labels = k.ground().labels();
    PointSet out;
    std::vector<const PointSet*> factors(pairs.size());
    for (VertexSet tau : k.faces()) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            factors[i] = tau.contains(labels[i]) ? &pairs[i].X : &pairs[i].A;
        append_product(factors, out);
    }
    return out;
}

FiniteProductSpace full_product(std::span<const FiniteSpacePair> pairs) {
    std::vector<const PointSet*> factors;
    for (const auto& p : pairs)
        factors.push_back(&p.X);
    PointSet out;
    append_product(factors, out);
    return out;
}

IdentityVerdict complement_identity_check(const SimplicialComplex& k, std::span<const FiniteSpacePair> pairs) {
    require_pair_count(k, pairs.size());
    if (k.ground().empty())
        throw InputError("complement identity needs at least one factor");
    const PointSet all = full_product(pairs);
    const PointSet z = finite_product(k, pairs);
    PointSet lhs;
    std::set_difference(all.begin(), all.end(), z.begin(), z.end(), std::inserter(lhs, lhs.end()));

    std::vector<FiniteSpacePair> complements;
    for (const auto& p : pairs) {
        PointSet ac;
        std::set_difference(p.X.begin(), p.X.end(), p.A.begin(), p.A.end(), std::inserter(ac, ac.end()));
        complements.emplace_back(p.X, std::move(ac));
    }
    return compare(lhs, finite_product(dual(k, k.ground()), complements));
}

IdentityVerdict substitution_identity_check(const SimplicialComplex& k, std::span<const SimplicialPair> inner,
                                            std::span<const FiniteSpacePair> leaves) {
    require_pair_count(k, inner.size());
    VertexSet ground;
    int last = 0;
    for (const auto& p : inner) {
        if (p.ground().empty())
            continue;
        if (p.ground().min() <= last)
            throw InputError("inner pair grounds must be consecutive blocks in label order");
        last = p.ground().max();
        ground = ground | p.ground();
    }
    if (static_cast<std::size_t>(ground.size()) != leaves.size())
        throw InputError("expected " + std::to_string(ground.size()) + " leaf pairs, got " +
                         std::to_string(leaves.size()));

    std::vector<FiniteSpacePair> blocks;
    for (const auto& p : inner) {
        std::vector<FiniteSpacePair> local;
        for (int v : p.ground().labels())
            local.push_back(leaves[static_cast<std::size_t>(ground.rank_of(v))]);
        blocks.emplace_back(finite_product(p.X, local), finite_product(p.A, local));
    }
    const PointSet lhs = finite_product(k, blocks);
    const PointSet rhs = finite_product(polyhedral_complex(k, inner), leaves);
    return compare(lhs, rhs);
}

std::string point_to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ')';
}

SpherePairSystem::SpherePairSystem(std::vector<SpherePair> params) : params_(std::move(params)) {
    for (const auto& p : params_)
        if (p.r < 0 || p.q < 0 || p.q > p.r)
            throw InputError("sphere pair " + std::to_string(p.r) + ":" + std::to_string(p.q) +
                             " violates 0 <= q <= r");
}

SpherePairSystem SpherePairSystem::parse(std::string_view text) {
    std::vector<SpherePair> params;
    auto number = [&](std::string_view part) {
        while (!part.empty() && part.front() == ' ')
            part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ')
            part.remove_suffix(1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw InputError("bad sphere pair parameter '" + std::string(part) + "'");
        return v;
    };
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw InputError("sphere pair '" + std::string(item) + "' is not of the form r:q");
        params.push_back({number(item.substr(0, colon)), number(item.substr(colon + 1))});
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
        if (text.empty())
            throw InputError("trailing comma in sphere pair list");
    }
    return SpherePairSystem(std::move(params));
}

int SpherePairSystem::total_dimension() const {
    int r = 0;
    for (const auto& p : params_)
        r += p.r + 1;
    return r;
}

SpherePairSystem SpherePairSystem::complement() const {
    std::vector<SpherePair> out;
    for (const auto& p : params_)
        out.push_back({p.r, p.r - p.q});
    return SpherePairSystem(std::move(out));
}

std::string SpherePairSystem::to_string() const {
    std::string s;
    for (const auto& p : params_) {
        if (!s.empty())
            s += ',';
        s += std::to_string(p.r) + ":" + std::to_string(p.q);
    }
    return s;
}

std::string_view part_name(LedgerPart p) {
    switch (p) {
        case LedgerPart::hat:
            return "hat";
        case LedgerPart::bar:
            return "bar";
        case LedgerPart::relative_hat:
            return "relative-hat";
    }
    return "hat";
}

SpaceHomologyReport sphere_pair_homology(const SimplicialComplex& k, const SpherePairSystem& sys, Variance variance) {
    const VertexSet ground = k.ground();
    if (static_cast<std::size_t>(ground.size()) != sys.size())
        throw InputError("complex has " + std::to_string(ground.size()) + " vertices but " +
                         std::to_string(sys.size()) + " sphere pairs were given");
    auto sum = [&](VertexSet s, bool use_q) {
        int t = 0;
        for (int v : s.labels()) {
            const auto& p = sys[static_cast<std::size_t>(ground.rank_of(v))];
            t += use_q ? p.q : p.r + 1;
        }
        return t;
    };

    SpaceHomologyReport rep;
    const FgAbelianGroup z = FgAbelianGroup::free(1);
    for_each_subset(ground, [&](VertexSet sigma) {
        const int t = sum(sigma, false);
        const bool face = k.contains(sigma);
        const LedgerPart part = face ? LedgerPart::hat : LedgerPart::relative_hat;
        rep.ledger.push_back({part, IndexPair(sigma, VertexSet{}), t, 0, t, z});
        (face ? rep.hat : rep.relative_hat).add(t, z);
    });
    for (const IndexPair& p : all_index_pairs(ground)) {
        if (p.omega.empty() || !k.contains(p.sigma))
            continue;
        const GradedGroup entry =
            variance == Variance::homology ? hochster_entry(k, p) : hochster_coentry(k, p);
        const int t = sum(p.sigma, false) + sum(p.omega, true);
        for (const auto& [i, g] : entry) {
            rep.ledger.push_back({LedgerPart::bar, p, t, i, i + t, g});
            rep.bar.add(i + t, g);
        }
    }
    rep.total = rep.hat + rep.bar;
    rep.relative_bar = rep.bar.shifted(1);
    return rep;
}

SphereDualityReport sphere_pair_duality_check(const SimplicialComplex& k, const SpherePairSystem& sys) {
    const VertexSet ground = k.ground();
    if (ground.empty())
        throw InputError("sphere duality needs at least one factor");
    SphereDualityReport out;
    out.total_dimension = sys.total_dimension();
    const int r = out.total_dimension;
    const SpaceHomologyReport m = sphere_pair_homology(k, sys, Variance::homology);
    const SpaceHomologyReport mc = sphere_pair_homology(dual(k, ground), sys.complement(), Variance::cohomology);
    out.bar = m.bar;
    out.complement_bar = mc.bar;

    out.graded_iso = true;
    for (const auto& [d, g] : m.bar)
        if (mc.bar.at(r - d - 1) != g) {
            out.graded_iso = false;
            out.failures.push_back("bar degree " + std::to_string(d) + ": " + g.to_string() + " vs complement degree " +
                                   std::to_string(r - d - 1) + ": " + mc.bar.at(r - d - 1).to_string());
        }
    for (const auto& [d, g] : mc.bar)
        if (m.bar.at(r - d - 1).is_zero()) {
            out.graded_iso = false;
            out.failures.push_back("complement bar degree " + std::to_string(d) + " has no partner");
        }

    using Key = std::tuple<LedgerPart, IndexPair, int>;
    std::map<Key, FgAbelianGroup> partner;
    std::size_t bar_entries = 0;
    std::size_t rel_entries = 0;
    for (const auto& e : mc.ledger) {
        partner.emplace(Key{e.part, e.pair, e.degree}, e.group);
        bar_entries += e.part == LedgerPart::bar ? 1 : 0;
        rel_entries += e.part == LedgerPart::relative_hat ? 1 : 0;
    }
    std::size_t bar_matched = 0;
    std::size_t hat_matched = 0;
    bool bar_ok = true;
    bool hat_ok = true;
    for (const auto& e : m.ledger) {
        if (e.part == LedgerPart::relative_hat)
            continue;
        Key key = e.part == LedgerPart::bar
                      ? Key{LedgerPart::bar, IndexPair(ground - (e.pair.sigma | e.pair.omega), e.pair.omega), r - e.degree - 1}
                      : Key{LedgerPart::relative_hat, IndexPair(ground - e.pair.sigma, VertexSet{}), r - e.degree};
        auto it = partner.find(key);
        if (it == partner.end() || it->second != e.group) {
            out.failures.push_back(std::string(part_name(e.part)) + " entry " + e.pair.sigma.to_string() + "," +
                                   e.pair.omega.to_string() + " at degree " + std::to_string(e.degree) +
                                   " has no matching partner");
            (e.part == LedgerPart::bar ? bar_ok : hat_ok) = false;
            continue;
        }
        (e.part == LedgerPart::bar ? bar_matched : hat_matched) += 1;
    }
    out.ledger_paired = bar_ok && bar_matched == bar_entries;
    out.hat_paired = hat_ok && hat_matched == rel_entries;
    if (bar_matched != bar_entries)
        out.failures.push_back("complement has " + std::to_string(bar_entries - bar_matched) + " unpaired bar entries");
    if (!out.hat_paired)
        out.failures.push_back("hat/relative-hat counts differ");
    return out;
}

}  // namespace polyprod
