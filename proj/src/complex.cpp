#include "polyprod/complex.hpp"

#include <algorithm>

#include "polyprod/kernels/kernels.hpp"

namespace polyprod {
namespace {

// Facets larger than this would need 2^size subsets.
constexpr int kMaxEnumerableFacet = 24;
// Grounds up to this size are closed with a dense bitmap.
constexpr int kDenseClosureLimit = 20;

void require_subset(VertexSet part, VertexSet whole, const std::string& what) {
    const VertexSet extra = part - whole;
    if (!extra.empty())
        throw InputError(what + " contains vertex " + std::to_string(extra.min()) +
                         " outside the ground set " + whole.to_string());
}

void require_disjoint_grounds(std::span<const VertexSet> grounds) {
    VertexSet seen;
    for (VertexSet g : grounds) {
        if (!g.disjoint(seen))
            throw InputError("block grounds overlap at vertex " + std::to_string((g & seen).min()));
        seen = seen | g;
    }
}

}  // namespace

std::vector<std::uint64_t> close_downward(std::span<const std::uint64_t> facets) {
    std::uint64_t all = 0;
    for (std::uint64_t f : facets) {
        if (std::popcount(f) > kMaxEnumerableFacet)
            throw InputError("facet with " + std::to_string(std::popcount(f)) + " vertices is too large");
        all |= f;
    }
    std::vector<std::uint64_t> out;
    if (facets.empty())
        return out;

    const int n = std::popcount(all);
    if (n <= kDenseClosureLimit) {
        std::vector<char> mark(std::size_t{1} << n, 0);
        for (std::uint64_t f : facets)
            mark[compress_bits(f, all)] = 1;
        for (std::size_t idx = mark.size(); idx-- > 0;) {
            if (mark[idx] == 0)
                continue;
            for (std::size_t b = idx; b != 0; b &= b - 1)
                mark[idx & ~(b & (~b + 1))] = 1;
        }
        for (std::size_t idx = 0; idx < mark.size(); ++idx) {
            if (mark[idx] != 0)
                out.push_back(expand_bits(idx, all));
        }
        return out;
    }

    for (std::uint64_t f : facets)
        for_each_subset(VertexSet::from_bits(f), [&](VertexSet s) { out.push_back(s.bits()); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::make(VertexSet ground, std::span<const VertexSet> facets) {
    std::vector<std::uint64_t> bits;
    bits.reserve(facets.size());
    for (VertexSet f : facets) {
        require_subset(f, ground, "facet");
        bits.push_back(f.bits());
    }
    return SimplicialComplex(ground, close_downward(bits));
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet ground) { return SimplicialComplex(ground, {}); }

SimplicialComplex SimplicialComplex::empty_face(VertexSet ground) { return SimplicialComplex(ground, {0}); }

SimplicialComplex SimplicialComplex::simplex(VertexSet s) {
    const VertexSet facet[] = {s};
    return make(s, facet);
}

SimplicialComplex SimplicialComplex::boundary(VertexSet s) {
    std::vector<std::uint64_t> faces = simplex(s).faces_;
    faces.pop_back();  // s itself is the largest mask
    return SimplicialComplex(s, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_sorted_faces(VertexSet ground, std::vector<std::uint64_t> faces) {
    return SimplicialComplex(ground, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(VertexSet ground, std::vector<std::uint64_t> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::uint64_t f : faces) {
        require_subset(VertexSet::from_bits(f), ground, "face");
        for (std::uint64_t b = f; b != 0; b &= b - 1) {
            const std::uint64_t sub = f & ~(b & (~b + 1));
            if (!std::binary_search(faces.begin(), faces.end(), sub))
                throw InputError("face family is not downward closed: " + VertexSet::from_bits(f).to_string() +
                                 " present but " + VertexSet::from_bits(sub).to_string() + " missing");
        }
    }
    return SimplicialComplex(ground, std::move(faces));
}

bool SimplicialComplex::contains(VertexSet f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f.bits());
}

std::vector<VertexSet> SimplicialComplex::facets() const {
    const VertexSet sup = support();
    std::vector<VertexSet> out;
    for (std::uint64_t f : faces_) {
        bool maximal = true;
        for (std::uint64_t b = sup.bits() & ~f; b != 0 && maximal; b &= b - 1) {
            if (contains(VertexSet::from_bits(f | (b & (~b + 1)))))
                maximal = false;
        }
        if (maximal)
            out.push_back(VertexSet::from_bits(f));
    }
    return out;
}

VertexSet SimplicialComplex::support() const {
    std::uint64_t s = 0;
    for (std::uint64_t f : faces_)
        s |= f;
    return VertexSet::from_bits(s);
}

int SimplicialComplex::dimension() const {
    int d = -2;
    for (std::uint64_t f : faces_)
        d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(ground_.size()) + 1, 0);
    for (std::uint64_t f : faces_)
        ++counts[static_cast<std::size_t>(std::popcount(f))];
    return counts;
}

SimplicialComplex SimplicialComplex::with_ground(VertexSet g) const {
    require_subset(support(), g, "complex support");
    return SimplicialComplex(g, faces_);
}

SimplicialPair::SimplicialPair(SimplicialComplex x, SimplicialComplex a) : X(std::move(x)), A(std::move(a)) {
    if (X.ground() != A.ground())
        throw InputError("pair grounds differ: " + X.ground().to_string() + " vs " + A.ground().to_string());
    if (!is_subcomplex(A, X))
        throw InputError("A is not a subcomplex of X in pair on " + X.ground().to_string());
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& x) {
    return std::includes(x.face_bits().begin(), x.face_bits().end(), a.face_bits().begin(), a.face_bits().end());
}

SimplicialComplex slice(const SimplicialComplex& k, IndexPair p) {
    require_subset(p.sigma | p.omega, k.ground(), "index pair");
    const std::uint64_t allowed = (p.sigma | p.omega).bits();
    const auto faces = k.face_bits();
    // Candidates satisfy sigma <= f <= sigma|omega numerically.
    const auto lo = std::lower_bound(faces.begin(), faces.end(), p.sigma.bits());
    const auto hi = std::upper_bound(lo, faces.end(), allowed);
    const auto n = static_cast<std::size_t>(hi - lo);
    std::vector<std::uint64_t> out(n);
    // Removing sigma from supersets of sigma keeps numeric order.
    out.resize(kernels::active().slice_filter(&*faces.begin() + (lo - faces.begin()), n, p.sigma.bits(), allowed,
                                              out.data()));
    return SimplicialComplex::from_sorted_faces(p.omega, std::move(out));
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma) {
    require_subset(sigma, k.ground(), "link simplex");
    return slice(k, IndexPair(sigma, k.ground() - sigma));
}

SimplicialComplex restrict_to(const SimplicialComplex& k, VertexSet omega) {
    return slice(k, IndexPair(VertexSet{}, omega));
}

SimplicialComplex dual(const SimplicialComplex& k, VertexSet s) {
    if (s.empty())
        throw InputError("dual requires a nonempty reference set");
    if (s.size() > 26)
        throw InputError("dual relative to " + std::to_string(s.size()) + " vertices is too large to enumerate");
    require_subset(k.ground(), s, "complex ground");

    const auto faces = k.face_bits();
    std::vector<std::uint64_t> out;
    out.reserve((std::size_t{1} << s.size()) - faces.size());
    std::size_t next = 0;
    // Subsets arrive in increasing order, so a merge against the sorted faces decides membership.
    for_each_subset(s, [&](VertexSet sub) {
        if (next < faces.size() && faces[next] == sub.bits()) {
            ++next;
            return;
        }
        out.push_back((s - sub).bits());
    });
    std::reverse(out.begin(), out.end());
    return SimplicialComplex::from_sorted_faces(s, std::move(out));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground())
        throw InputError("union of complexes on different grounds");
    std::vector<std::uint64_t> out;
    std::set_union(a.face_bits().begin(), a.face_bits().end(), b.face_bits().begin(), b.face_bits().end(),
                   std::back_inserter(out));
    return SimplicialComplex::from_sorted_faces(a.ground(), std::move(out));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground())
        throw InputError("intersection of complexes on different grounds");
    std::vector<std::uint64_t> out;
    std::set_intersection(a.face_bits().begin(), a.face_bits().end(), b.face_bits().begin(), b.face_bits().end(),
                          std::back_inserter(out));
    return SimplicialComplex::from_sorted_faces(a.ground(), std::move(out));
}

namespace {

// All unions f_1 | ... | f_m with f_k from factor k; grounds already checked disjoint.
void append_join(std::span<const SimplicialComplex* const> factors, std::vector<std::uint64_t>& out) {
    std::vector<std::uint64_t> acc{0};
    std::vector<std::uint64_t> next;
    for (const SimplicialComplex* f : factors) {
        if (f->is_void())
            return;
        next.clear();
        next.reserve(acc.size() * f->face_count());
        for (std::uint64_t r : acc)
            for (std::uint64_t g : f->face_bits())
                next.push_back(r | g);
        acc.swap(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
}

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SimplicialComplex join(std::span<const SimplicialComplex> factors) {
    std::vector<VertexSet> grounds;
    std::vector<const SimplicialComplex*> ptrs;
    VertexSet ground;
    for (const auto& f : factors) {
        grounds.push_back(f.ground());
        ptrs.push_back(&f);
        ground = ground | f.ground();
    }
    require_disjoint_grounds(grounds);
    std::vector<std::uint64_t> out;
    append_join(ptrs, out);
    sort_unique(out);
    return SimplicialComplex::from_sorted_faces(ground, std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const SimplicialComplex both[] = {a, b};
    return join(both);
}

SimplicialComplex polyhedral_complex(const SimplicialComplex& k, std::span<const SimplicialPair> pairs) {
    const auto labels = k.ground().labels();
    if (labels.size() != pairs.size())
        throw InputError("block mismatch: complex has " + std::to_string(labels.size()) + " vertices but " +
                         std::to_string(pairs.size()) + " pairs were given");
    std::vector<VertexSet> grounds;
    VertexSet ground;
    for (const auto& p : pairs) {
        grounds.push_back(p.ground());
        ground = ground | p.ground();
    }
    require_disjoint_grounds(grounds);

    std::vector<std::uint64_t> out;
    std::vector<const SimplicialComplex*> factors(pairs.size());
    for (VertexSet tau : k.faces()) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            factors[i] = tau.contains(labels[i]) ? &pairs[i].X : &pairs[i].A;
        append_join(factors, out);
    }
    sort_unique(out);
    return SimplicialComplex::from_sorted_faces(ground, std::move(out));
}

std::vector<SimplicialPair> composition_pairs(std::span<const SimplicialComplex> ls) {
    std::vector<SimplicialPair> pairs;
    pairs.reserve(ls.size());
    for (const auto& l : ls)
        pairs.emplace_back(SimplicialComplex::simplex(l.ground()), l);
    return pairs;
}

SimplicialComplex composition_complex(const SimplicialComplex& k, std::span<const SimplicialComplex> ls) {
    return polyhedral_complex(k, composition_pairs(ls));
}

GhostFactorization ghost_factorization(const SimplicialComplex& k, std::span<const SimplicialPair> pairs) {
    const auto labels = k.ground().labels();
    if (labels.size() != pairs.size())
        throw InputError("block mismatch: complex has " + std::to_string(labels.size()) + " vertices but " +
                         std::to_string(pairs.size()) + " pairs were given");
    GhostFactorization out;
    std::vector<SimplicialPair> rest;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].A.is_void()) {
            out.void_positions = out.void_positions | VertexSet::single(labels[i]);
            out.cone_factors.push_back(pairs[i].X);
        } else {
            rest.push_back(pairs[i]);
        }
    }
    out.core = polyhedral_complex(link(k, out.void_positions), rest);
    return out;
}

}  // namespace polyprod
