#include "polyprod/random_complex.hpp"

#include <algorithm>

namespace polyprod {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

std::uint64_t random_subset(VertexSet ground, Rng& rng) {
    const int n = ground.size();
    if (n == 0)
        return 0;
    const std::uint64_t local = n == 64 ? rng() : rng() & ((std::uint64_t{1} << n) - 1);
    return expand_bits(local, ground.bits());
}

}  // namespace

SimplicialComplex random_complex(VertexSet ground, Rng& rng) {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (u < 0.05)
        return SimplicialComplex::void_complex(ground);
    if (u < 0.10)
        return SimplicialComplex::empty_face(ground);
    const int n = std::min(ground.size(), 20);
    const auto count = std::uniform_int_distribution<std::uint64_t>(0, std::uint64_t{1} << n)(rng);
    std::vector<std::uint64_t> facets(count);
    for (auto& f : facets)
        f = random_subset(ground, rng);
    return SimplicialComplex::from_sorted_faces(ground, close_downward(facets));
}

SimplicialComplex random_sparse_complex(VertexSet ground, int max_facets, int max_facet, Rng& rng) {
    const auto labels = ground.labels();
    const int count = uniform_int(rng, 0, max_facets);
    std::vector<std::uint64_t> facets;
    for (int i = 0; i < count; ++i) {
        auto pool = labels;
        std::shuffle(pool.begin(), pool.end(), rng);
        const int size = uniform_int(rng, 0, std::min<int>(max_facet, static_cast<int>(pool.size())));
        std::uint64_t f = 0;
        for (int j = 0; j < size; ++j)
            f |= std::uint64_t{1} << (pool[static_cast<std::size_t>(j)] - 1);
        facets.push_back(f);
    }
    return SimplicialComplex::from_sorted_faces(ground, close_downward(facets));
}

SimplicialComplex random_subcomplex(const SimplicialComplex& x, Rng& rng) {
    if (x.is_void() || std::uniform_real_distribution<double>(0.0, 1.0)(rng) < 0.10)
        return SimplicialComplex::void_complex(x.ground());
    const auto faces = x.face_bits();
    const int count = uniform_int(rng, 1, static_cast<int>(std::min<std::size_t>(faces.size(), 8)));
    std::vector<std::uint64_t> picks;
    for (int i = 0; i < count; ++i)
        picks.push_back(faces[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(faces.size()) - 1))]);
    return SimplicialComplex::from_sorted_faces(x.ground(), close_downward(picks));
}

SimplicialPair random_pair(VertexSet ground, Rng& rng) {
    SimplicialComplex x = random_complex(ground, rng);
    if (x.is_void())
        x = SimplicialComplex::empty_face(ground);
    SimplicialComplex a = random_subcomplex(x, rng);
    return SimplicialPair(std::move(x), std::move(a));
}

std::vector<SimplicialComplex> all_complexes(VertexSet ground) {
    const int n = ground.size();
    if (n > 5)
        throw InputError("exhaustive enumeration is limited to 5 vertices");
    const std::size_t total = std::size_t{1} << n;
    std::vector<SimplicialComplex> out;
    std::vector<char> in(total, 0);
    // Decide subsets in increasing order; a subset may join only if all its
    // codimension-one faces already did.
    auto rec = [&](auto&& self, std::size_t s) -> void {
        if (s == total) {
            std::vector<std::uint64_t> faces;
            for (std::size_t i = 0; i < total; ++i)
                if (in[i] != 0)
                    faces.push_back(expand_bits(i, ground.bits()));
            out.push_back(SimplicialComplex::from_sorted_faces(ground, std::move(faces)));
            return;
        }
        self(self, s + 1);
        bool ok = true;
        for (std::size_t b = s; b != 0 && ok; b &= b - 1)
            ok = in[s & ~(b & (~b + 1))] != 0;
        if (s == 0 || ok) {
            in[s] = 1;
            self(self, s + 1);
            in[s] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace polyprod
