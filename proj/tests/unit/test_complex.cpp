#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "polyprod/random_complex.hpp"

using namespace polyprod;
using namespace testing_helpers;

namespace {

// Brute-force dual straight from the definition.
SimplicialComplex dual_oracle(const SimplicialComplex& k, VertexSet s) {
    std::vector<std::uint64_t> faces;
    for_each_subset(s, [&](VertexSet sub) {
        if (!k.contains(sub))
            faces.push_back((s - sub).bits());
    });
    return SimplicialComplex::from_faces(s, faces);
}

// A face of the polyhedral product: each block trace lies in X_k, and the
// blocks where it misses A_k form a face of K.
SimplicialComplex polyhedral_oracle(const SimplicialComplex& k, const std::vector<SimplicialPair>& pairs) {
    VertexSet ground;
    for (const auto& p : pairs)
        ground = ground | p.ground();
    const auto k_labels = k.ground().labels();
    std::vector<std::uint64_t> faces;
    if (k.is_void())
        return SimplicialComplex::from_faces(ground, faces);
    for_each_subset(ground, [&](VertexSet f) {
        VertexSet outside;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const VertexSet trace = f & pairs[i].ground();
            if (!pairs[i].X.contains(trace))
                return;
            if (!pairs[i].A.contains(trace))
                outside = outside | VertexSet::single(k_labels[i]);
        }
        if (k.contains(outside))
            faces.push_back(f.bits());
    });
    return SimplicialComplex::from_faces(ground, faces);
}

}  // namespace

TEST_CASE("vertex sets order lexicographically and enumerate subsets") {
    CHECK(lex_less(vs({1, 2}), vs({1, 3})));
    CHECK(lex_less(vs({1}), vs({1, 2})));
    CHECK(lex_less(vs({1, 3}), vs({2})));
    CHECK_FALSE(lex_less(vs({2}), vs({2})));
    CHECK(lex_less(VertexSet{}, vs({5})));
    int count = 0;
    for_each_subset(vs({2, 4, 7}), [&](VertexSet) { ++count; });
    CHECK(count == 8);
    CHECK_THROWS_AS(VertexSet::single(0), InputError);
    CHECK_THROWS_AS(VertexSet::single(65), InputError);
    CHECK_THROWS_AS(IndexPair(vs({1}), vs({1, 2})), InputError);
}

TEST_CASE("index pairs enumerate in ternary order") {
    const VertexSet g = vs({1, 3, 4});
    const auto pairs = all_index_pairs(g);
    CHECK(pairs.size() == 27);
    std::set<IndexPair> distinct(pairs.begin(), pairs.end());
    CHECK(distinct.size() == 27);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        CHECK(ternary_index(g, pairs[i]) == i);
    CHECK(pairs[1].sigma == vs({1}));
    CHECK(pairs[2].omega == vs({1}));
}

TEST_CASE("ground sets validate blocks") {
    const GroundSet g(VertexSet::range(1, 5), {2, 3});
    CHECK(g.block(0) == vs({1, 2}));
    CHECK(g.block(1) == vs({3, 4, 5}));
    CHECK_THROWS_AS(GroundSet(VertexSet::range(1, 3), {1, 1}), InputError);
    CHECK_THROWS_AS(GroundSet(VertexSet::range(1, 3), {3, 0}), InputError);
}

TEST_CASE("make_complex distinguishes void from the empty face") {
    const auto simplex = cx(vs({1, 2, 3}), {{1, 2, 3}});
    CHECK(simplex.face_count() == 8);
    const auto v = cx(vs({1, 2}), {});
    CHECK(v.is_void());
    CHECK(v.face_count() == 0);
    const auto e = cx(vs({1, 2}), {{}});
    CHECK_FALSE(e.is_void());
    CHECK(e.face_count() == 1);
    CHECK(e.contains(VertexSet{}));
    CHECK(v != e);
    CHECK(e.dimension() == -1);
    // Ghost vertex 3.
    const auto g = cx(vs({1, 2, 3}), {{1, 2}});
    CHECK(g.support() == vs({1, 2}));
    CHECK(g.facets() == std::vector<VertexSet>{vs({1, 2})});
    CHECK_THROWS_WITH_AS(cx(vs({1, 2}), {{1, 4}}), doctest::Contains("vertex 4"), InputError);
}

TEST_CASE("simplex and boundary") {
    const VertexSet s = vs({1, 2, 3});
    CHECK(SimplicialComplex::simplex(s).face_count() == 8);
    CHECK(SimplicialComplex::boundary(s).face_count() == 7);
    CHECK(SimplicialComplex::simplex(VertexSet{}) == SimplicialComplex::empty_face(VertexSet{}));
    CHECK(SimplicialComplex::boundary(VertexSet{}).is_void());
    const auto counts = SimplicialComplex::boundary(s).face_counts();
    CHECK(counts == std::vector<std::size_t>{1, 3, 3, 0});
}

TEST_CASE("link") {
    CHECK(link(SimplicialComplex::simplex(vs({1, 2})), vs({1, 2})) == SimplicialComplex::empty_face(VertexSet{}));
    CHECK(link(cx(vs({1, 2}), {{1}}), vs({2})).is_void());
    const auto l = link(SimplicialComplex::boundary(vs({1, 2, 3})), vs({1}));
    CHECK(l == cx(vs({2, 3}), {{2}, {3}}));
    CHECK(link(cx(vs({1, 2}), {}), VertexSet{}).is_void());
}

TEST_CASE("restrict") {
    const auto k = SimplicialComplex::boundary(vs({1, 2, 3}));
    CHECK(restrict_to(k, k.ground()) == k);
    CHECK(restrict_to(k, vs({1, 2})) == SimplicialComplex::simplex(vs({1, 2})));
    const auto r = restrict_to(cx(vs({1, 2}), {}), vs({1}));
    CHECK(r.is_void());
    CHECK(r.ground() == vs({1}));
}

TEST_CASE("slice") {
    const auto k = cx(vs({1, 2, 3}), {{1, 2}, {3}});
    CHECK(slice(k, IndexPair(VertexSet{}, k.ground())) == k);
    CHECK(slice(k, IndexPair(vs({3}), vs({1, 2}))) == SimplicialComplex::empty_face(vs({1, 2})));
    CHECK(slice(k, IndexPair(vs({1, 3}), vs({2}))).is_void());

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto r = random_complex(VertexSet::range(1, 6), rng);
        for (const auto& p : all_index_pairs(r.ground()))
            REQUIRE(slice(r, p) == restrict_to(link(r, p.sigma), p.omega));
    }
}

TEST_CASE("dual: definition examples") {
    const VertexSet s = vs({1, 2, 3});
    CHECK(dual(SimplicialComplex::simplex(s), s).is_void());
    CHECK(dual(SimplicialComplex::boundary(s), s) == SimplicialComplex::empty_face(s));
    CHECK(dual(SimplicialComplex::void_complex(s), s) == SimplicialComplex::simplex(s));
    const auto self = cx(vs({1, 2}), {{1}});
    CHECK(dual(self, vs({1, 2})) == self);
    CHECK_THROWS_AS(dual(self, VertexSet{}), InputError);
    CHECK_THROWS_AS(dual(self, vs({2, 3})), InputError);
    // Relative to a larger set the ground widens.
    const auto wide = dual(self, vs({1, 2, 3}));
    CHECK(wide.ground() == vs({1, 2, 3}));
    CHECK(wide == dual_oracle(self.with_ground(vs({1, 2, 3})), vs({1, 2, 3})));
}

TEST_CASE("dual: exhaustive involution and De Morgan on small grounds") {
    for (int n = 1; n <= 3; ++n) {
        const VertexSet s = VertexSet::range(1, n);
        const auto all = all_complexes(s);
        for (const auto& a : all) {
            REQUIRE(dual(a, s) == dual_oracle(a, s));
            REQUIRE(dual(dual(a, s), s) == a);
            for (const auto& b : all) {
                REQUIRE(dual(complex_union(a, b), s) == complex_intersection(dual(a, s), dual(b, s)));
                REQUIRE(dual(complex_intersection(a, b), s) == complex_union(dual(a, s), dual(b, s)));
            }
        }
    }
    // Downward-closed families on 3 points, void included.
    CHECK(all_complexes(VertexSet::range(1, 3)).size() == 20);
    CHECK(all_complexes(VertexSet::range(1, 4)).size() == 168);
}

TEST_CASE("dual: matches the oracle on random complexes") {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        const VertexSet s = VertexSet::range(1, uniform_int(rng, 1, 9));
        const auto k = random_complex(s, rng);
        REQUIRE(dual(k, s) == dual_oracle(k, s));
    }
}

TEST_CASE("slice duality on random complexes") {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        const VertexSet s = VertexSet::range(1, uniform_int(rng, 1, 6));
        const auto k = random_complex(s, rng);
        const auto kd = dual(k, s);
        for (const auto& p : all_index_pairs(s)) {
            if (p.omega.empty())
                continue;
            REQUIRE(dual(slice(k, p), p.omega) == slice(kd, IndexPair(s - (p.sigma | p.omega), p.omega)));
        }
    }
}

TEST_CASE("join") {
    const auto x = SimplicialComplex::boundary(vs({3, 4}));
    CHECK(join(SimplicialComplex::void_complex(vs({1, 2})), x).is_void());
    CHECK(join(SimplicialComplex::empty_face(vs({1, 2})), x) == x.with_ground(vs({1, 2, 3, 4})));
    const auto square = join(SimplicialComplex::boundary(vs({1, 2})), x);
    CHECK(square == cx(vs({1, 2, 3, 4}), {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK_THROWS_AS(join(x, x), InputError);
}

TEST_CASE("polyhedral_complex examples") {
    const SimplicialPair p1(SimplicialComplex::simplex(vs({1, 2})), SimplicialComplex::boundary(vs({1, 2})));
    const SimplicialPair p2(SimplicialComplex::simplex(vs({3, 4})), SimplicialComplex::boundary(vs({3, 4})));
    const std::vector<SimplicialPair> pairs{p1, p2};
    const VertexSet m = vs({1, 2});
    CHECK(polyhedral_complex(SimplicialComplex::simplex(m), pairs) == join(p1.X, p2.X));
    CHECK(polyhedral_complex(SimplicialComplex::empty_face(m), pairs) == join(p1.A, p2.A));
    CHECK(polyhedral_complex(SimplicialComplex::boundary(m), pairs) ==
          SimplicialComplex::boundary(VertexSet::range(1, 4)));
    CHECK(polyhedral_complex(SimplicialComplex::void_complex(m), pairs).is_void());
    CHECK_THROWS_AS(polyhedral_complex(SimplicialComplex::simplex(vs({1, 2, 3})), pairs), InputError);
}

TEST_CASE("composition_complex examples") {
    const auto l = SimplicialComplex::boundary(vs({1, 2, 3}));
    const std::vector<SimplicialComplex> one{l};
    CHECK(composition_complex(SimplicialComplex::empty_face(vs({1})), one) == l);
    CHECK(composition_complex(SimplicialComplex::simplex(vs({1})), one) == SimplicialComplex::simplex(l.ground()));
    const std::vector<SimplicialComplex> two{SimplicialComplex::boundary(vs({1, 2})),
                                             SimplicialComplex::boundary(vs({3, 4}))};
    CHECK(composition_complex(SimplicialComplex::boundary(vs({1, 2})), two) ==
          SimplicialComplex::boundary(VertexSet::range(1, 4)));
}

TEST_CASE("polyhedral_complex matches the face characterization") {
    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
        const int m = uniform_int(rng, 1, 3);
        const auto k = random_complex(VertexSet::range(1, m), rng);
        std::vector<SimplicialPair> pairs;
        int next = 1;
        for (int i = 0; i < m; ++i) {
            const int n = uniform_int(rng, 1, 3);
            pairs.push_back(random_pair(VertexSet::range(next, next + n - 1), rng));
            next += n;
        }
        REQUIRE(polyhedral_complex(k, pairs) == polyhedral_oracle(k, pairs));
    }
}

TEST_CASE("slice of a composition and dual of a composition") {
    Rng rng(23);
    for (int t = 0; t < 150; ++t) {
        const int m = uniform_int(rng, 1, 3);
        const auto k = random_complex(VertexSet::range(1, m), rng);
        std::vector<SimplicialComplex> ls;
        std::vector<SimplicialPair> pairs;
        int next = 1;
        for (int i = 0; i < m; ++i) {
            const int n = uniform_int(rng, 1, 3);
            const VertexSet g = VertexSet::range(next, next + n - 1);
            ls.push_back(random_complex(g, rng));
            pairs.push_back(random_pair(g, rng));
            next += n;
        }
        const auto comp = composition_complex(k, ls);
        const VertexSet n_ground = comp.ground();
        std::vector<SimplicialComplex> duals;
        for (const auto& l : ls)
            duals.push_back(dual(l, l.ground()));
        REQUIRE(dual(comp, n_ground) == composition_complex(dual(k, k.ground()), duals));

        const auto poly = polyhedral_complex(k, pairs);
        for (const auto& p : all_index_pairs(n_ground)) {
            std::vector<SimplicialPair> sliced;
            for (const auto& pr : pairs) {
                const IndexPair local(p.sigma & pr.ground(), p.omega & pr.ground());
                sliced.emplace_back(slice(pr.X, local), slice(pr.A, local));
            }
            REQUIRE(slice(poly, p) == polyhedral_complex(k, sliced));
        }
    }
}

TEST_CASE("composition of self-dual complexes is self-dual") {
    const auto k = cx(vs({1, 2}), {{1}});
    const std::vector<SimplicialComplex> ls{cx(vs({1, 2}), {{1}}), cx(vs({3, 4}), {{3}})};
    for (const auto& l : ls)
        REQUIRE(dual(l, l.ground()) == l);
    const auto comp = composition_complex(k, ls);
    CHECK(dual(comp, comp.ground()) == comp);

    // Exhaustively: every self-dual complex on <= 3 vertices composed over every self-dual K on 2.
    std::vector<SimplicialComplex> self_dual_k;
    for (const auto& c : all_complexes(vs({1, 2})))
        if (dual(c, c.ground()) == c)
            self_dual_k.push_back(c);
    std::vector<SimplicialComplex> block1;
    std::vector<SimplicialComplex> block2;
    for (const auto& c : all_complexes(vs({1, 2, 3})))
        if (dual(c, c.ground()) == c)
            block1.push_back(c);
    for (const auto& c : all_complexes(vs({4})))
        if (dual(c, c.ground()) == c)
            block2.push_back(c);
    REQUIRE_FALSE(block1.empty());
    REQUIRE_FALSE(block2.empty());
    for (const auto& kk : self_dual_k)
        for (const auto& a : block1)
            for (const auto& b : block2) {
                const auto c = composition_complex(kk, std::vector<SimplicialComplex>{a, b});
                REQUIRE(dual(c, c.ground()) == c);
            }
}

TEST_CASE("ghost factorization") {
    const SimplicialPair x1(SimplicialComplex::simplex(vs({1})), SimplicialComplex::void_complex(vs({1})));
    const SimplicialPair x2(SimplicialComplex::simplex(vs({2, 3})), SimplicialComplex::boundary(vs({2, 3})));
    const std::vector<SimplicialPair> pairs{x1, x2};
    const auto k = SimplicialComplex::simplex(vs({1, 2}));
    const auto g = ghost_factorization(k, pairs);
    CHECK(g.void_positions == vs({1}));
    REQUIRE(g.cone_factors.size() == 1);
    CHECK(g.cone_factors[0] == x1.X);
    std::vector<SimplicialComplex> parts{g.core};
    parts.insert(parts.end(), g.cone_factors.begin(), g.cone_factors.end());
    CHECK(join(parts) == polyhedral_complex(k, pairs));

    // S not a face: everything is void.
    const auto g2 = ghost_factorization(cx(vs({1, 2}), {{2}}), pairs);
    CHECK(g2.core.is_void());
    CHECK(polyhedral_complex(cx(vs({1, 2}), {{2}}), pairs).is_void());

    Rng rng(29);
    for (int t = 0; t < 200; ++t) {
        const int m = uniform_int(rng, 1, 3);
        const auto kk = random_complex(VertexSet::range(1, m), rng);
        std::vector<SimplicialPair> ps;
        int next = 1;
        for (int i = 0; i < m; ++i) {
            const int n = uniform_int(rng, 1, 2);
            ps.push_back(random_pair(VertexSet::range(next, next + n - 1), rng));
            next += n;
        }
        const auto gf = ghost_factorization(kk, ps);
        std::vector<SimplicialComplex> all{gf.core};
        all.insert(all.end(), gf.cone_factors.begin(), gf.cone_factors.end());
        const auto expected = polyhedral_complex(kk, ps);
        const auto joined = join(all);
        REQUIRE(joined.face_bits().size() == expected.face_bits().size());
        REQUIRE(std::equal(joined.face_bits().begin(), joined.face_bits().end(), expected.face_bits().begin()));
    }
}
