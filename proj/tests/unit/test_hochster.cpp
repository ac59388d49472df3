#include <doctest.h>

#include "helpers.hpp"
#include "polyprod/hochster.hpp"
#include "polyprod/random_complex.hpp"

using namespace polyprod;
using namespace testing_helpers;

namespace {

const GradedGroup kZ0 = GradedGroup::concentrated(0, FgAbelianGroup::free(1));

std::size_t nonzero_entries(const BigradedTable& t) {
    std::size_t n = 0;
    for (const auto& g : t.groups())
        n += g.is_zero() ? 0 : 1;
    return n;
}

}  // namespace

TEST_CASE("hochster table examples") {
    const auto full = hochster_table(SimplicialComplex::simplex(vs({1, 2})));
    CHECK(full.size() == 9);
    for (std::size_t i = 0; i < full.size(); ++i) {
        const IndexPair& p = full.pairs()[i];
        if (p.omega.empty())
            REQUIRE(full.groups()[i] == kZ0);
        else
            REQUIRE(full.groups()[i].is_zero());
    }

    const auto bd = hochster_table(SimplicialComplex::boundary(vs({1, 2})));
    CHECK(bd.at(IndexPair(VertexSet{}, vs({1, 2}))) == GradedGroup::concentrated(1, FgAbelianGroup::free(1)));
    CHECK(bd.at(IndexPair(VertexSet{}, VertexSet{})) == kZ0);
    CHECK(bd.at(IndexPair(vs({1}), VertexSet{})) == kZ0);
    CHECK(bd.at(IndexPair(vs({2}), VertexSet{})) == kZ0);
    // A vertex whose link is {∅}: the slice on the other vertex is {∅} as well.
    CHECK(bd.at(IndexPair(vs({1}), vs({2}))) == kZ0);
    CHECK(bd.at(IndexPair(vs({2}), vs({1}))) == kZ0);
    CHECK(bd.at(IndexPair(vs({1, 2}), VertexSet{})).is_zero());
    CHECK(nonzero_entries(bd) == 6);

    CHECK(nonzero_entries(hochster_table(SimplicialComplex::void_complex(vs({1, 2})))) == 0);

    // Pair order follows the ternary counter.
    const auto pairs = all_index_pairs(bd.ground());
    CHECK(bd.pairs() == pairs);

    const auto listed = hochster_table(SimplicialComplex::boundary(vs({1, 2})), Coefficients::integers(),
                                       std::vector<IndexPair>{IndexPair(VertexSet{}, vs({1, 2}))});
    CHECK(listed.size() == 1);
    CHECK_THROWS_AS(listed.at(IndexPair(VertexSet{}, VertexSet{})), std::out_of_range);
}

TEST_CASE("hochster entries vanish off K and match the slices") {
    Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        const auto k = random_complex(VertexSet::range(1, uniform_int(rng, 1, 5)), rng);
        const auto table = hochster_table(k);
        for (std::size_t i = 0; i < table.size(); ++i) {
            const IndexPair& p = table.pairs()[i];
            if (!k.contains(p.sigma))
                REQUIRE(table.groups()[i].is_zero());
            REQUIRE(table.groups()[i] == reduced_homology(slice(k, p)).shifted(1));
            REQUIRE(hochster_coentry(k, p) == reduced_cohomology(slice(k, p)).shifted(1));
        }
    }
}

TEST_CASE("alexander duality witness examples") {
    const auto bd = SimplicialComplex::boundary(vs({1, 2}));
    const auto w = alexander_duality_witness(bd, IndexPair(VertexSet{}, vs({1, 2})), vs({1, 2}));
    CHECK(w.holds());
    CHECK(w.homology == GradedGroup::concentrated(0, FgAbelianGroup::free(1)));
    CHECK(w.cohomology == GradedGroup::concentrated(-1, FgAbelianGroup::free(1)));
    CHECK(w.dual_slice == SimplicialComplex::empty_face(vs({1, 2})));

    const auto simplex = SimplicialComplex::simplex(vs({1, 2, 3}));
    for (const auto& p : all_index_pairs(simplex.ground())) {
        if (p.omega.empty())
            continue;
        const auto ws = alexander_duality_witness(simplex, p, simplex.ground());
        REQUIRE(ws.holds());
        REQUIRE(ws.homology.is_zero());
        REQUIRE(ws.cohomology.is_zero());
    }

    const auto square = cx(VertexSet::range(1, 4), {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const auto wc = alexander_duality_witness(square, IndexPair(VertexSet{}, VertexSet::range(1, 4)),
                                              VertexSet::range(1, 4));
    CHECK(wc.holds());
    CHECK(wc.dual_slice == cx(VertexSet::range(1, 4), {{1, 3}, {2, 4}}));
    CHECK(wc.homology == GradedGroup::concentrated(1, FgAbelianGroup::free(1)));
    CHECK(wc.cohomology == GradedGroup::concentrated(0, FgAbelianGroup::free(1)));

    CHECK_THROWS_AS(alexander_duality_witness(bd, IndexPair(vs({1}), VertexSet{}), vs({1, 2})), InputError);
    CHECK_THROWS_AS(alexander_duality_witness(bd, IndexPair(VertexSet{}, vs({3})), vs({1, 2})), InputError);
}

TEST_CASE("alexander duality witness: torsion through RP2") {
    // Whole-ground pair in both directions: the torsion must move from H̃_1 to H̃^2.
    const auto rp2 = rp2_6();
    const VertexSet s = rp2.ground();
    const auto w = alexander_duality_witness(rp2, IndexPair(VertexSet{}, s), s);
    CHECK(w.holds());
    CHECK(w.homology.at(1).torsion().size() == 1);
    // H̃_1 = Z/2 pairs with H̃^{6-1-3} = H̃^2 of the dual.
    CHECK(w.cohomology.at(2).torsion().size() == 1);
    const auto kd = dual(rp2, s);
    const auto back = alexander_duality_witness(kd, IndexPair(VertexSet{}, s), s);
    CHECK(back.holds());
    CHECK(back.cohomology.at(2).torsion().size() == 1);
}

TEST_CASE("alexander duality: chain-level witness on every small complex") {
    for (int n = 1; n <= 4; ++n) {
        const VertexSet s = VertexSet::range(1, n);
        for (const auto& k : all_complexes(s)) {
            const auto kd = dual(k, s);
            for (const auto& p : all_index_pairs(s)) {
                if (p.omega.empty())
                    continue;
                const auto w = alexander_duality_witness(k, kd, p, s);
                INFO(w.failure());
                REQUIRE(w.holds());
                for (const auto& d : w.degrees) {
                    REQUIRE((d.epsilon == 1 || d.epsilon == -1));
                    REQUIRE(d.target_degree == p.omega.size() - d.source_degree - 2);
                    const IntegerMatrix m = d.matrix();
                    for (std::size_t c = 0; c < m.cols(); ++c) {
                        int nonzero = 0;
                        for (std::size_t r = 0; r < m.rows(); ++r)
                            if (m(r, c) != 0) {
                                REQUIRE((m(r, c) == 1 || m(r, c) == -1));
                                ++nonzero;
                            }
                        REQUIRE(nonzero == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("alexander duality: random complexes up to 7 vertices") {
    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        const VertexSet s = VertexSet::range(1, uniform_int(rng, 5, 7));
        const auto k = random_complex(s, rng);
        const auto kd = dual(k, s);
        for (const auto& p : all_index_pairs(s)) {
            if (p.omega.empty())
                continue;
            const auto w = alexander_duality_witness(k, kd, p, s);
            INFO(w.failure());
            REQUIRE(w.holds());
        }
    }
}

TEST_CASE("composition homology examples") {
    const auto bd2 = [](int a, int b) { return SimplicialComplex::boundary(vs({a, b})); };
    const auto r = composition_homology(bd2(1, 2), std::vector<SimplicialComplex>{bd2(1, 2), bd2(3, 4)});
    CHECK(r.agree);
    CHECK(r.formula == GradedGroup::concentrated(2, FgAbelianGroup::free(1)));

    const auto z = composition_homology(bd2(1, 2), std::vector<SimplicialComplex>{
                                                       bd2(1, 2), SimplicialComplex::simplex(vs({3, 4}))});
    CHECK(z.agree);
    CHECK(z.formula.is_zero());
    CHECK(z.direct.is_zero());

    const std::vector<SimplicialComplex> with_torsion{rp2_6()};
    CHECK_THROWS_AS(composition_homology(SimplicialComplex::simplex(vs({1})), with_torsion), OutOfScopeError);
    CHECK(composition_homology(SimplicialComplex::simplex(vs({1})), with_torsion, Coefficients::prime_field(2)).agree);
}

TEST_CASE("composition of homology spheres is a homology sphere") {
    const std::vector<SimplicialComplex> spheres{
        SimplicialComplex::boundary(vs({1, 2})),
        SimplicialComplex::boundary(vs({1, 2, 3})),
        SimplicialComplex::boundary(vs({1, 2, 3, 4})),
        cx(VertexSet::range(1, 4), {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
        cx(VertexSet::range(1, 5), {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}),
    };
    auto shift = [](const SimplicialComplex& k, int offset) {
        std::vector<std::uint64_t> faces;
        for (std::uint64_t f : k.face_bits())
            faces.push_back(f << offset);
        return SimplicialComplex::from_faces(VertexSet::from_bits(k.ground().bits() << offset), faces);
    };
    for (const auto& k : spheres) {
        if (k.ground().size() > 3)
            continue;
        for (const auto& a : spheres)
            for (const auto& b : spheres) {
                const int m = k.ground().size();
                std::vector<SimplicialComplex> ls{a};
                int offset = a.ground().size();
                for (int i = 1; i < m; ++i) {
                    const auto& src = (i % 2 == 1) ? b : a;
                    ls.push_back(shift(src, offset));
                    offset += src.ground().size();
                }
                if (offset > 9)
                    continue;
                const auto r = composition_homology(k, ls);
                REQUIRE(r.agree);
                REQUIRE(r.direct.parts().size() == 1);
                REQUIRE(r.direct.total_rank() == 1);
                REQUIRE(r.direct.is_free());
            }
    }
}

TEST_CASE("composition homology agrees on random free instances") {
    Rng rng(79);
    int checked = 0;
    for (int t = 0; t < 300 && checked < 120; ++t) {
        const int m = uniform_int(rng, 1, 3);
        const auto k = random_complex(VertexSet::range(1, m), rng);
        std::vector<SimplicialComplex> ls;
        int next = 1;
        for (int i = 0; i < m; ++i) {
            const int n = uniform_int(rng, 1, 3);
            ls.push_back(random_complex(VertexSet::range(next, next + n - 1), rng));
            next += n;
        }
        try {
            REQUIRE(composition_homology(k, ls).agree);
            ++checked;
        } catch (const OutOfScopeError&) {
        }
        REQUIRE(composition_homology(k, ls, Coefficients::prime_field(2)).agree);
    }
    CHECK(checked >= 100);
}

TEST_CASE("hochster composition formula") {
    const auto bd = [](int a, int b) { return SimplicialComplex::boundary(vs({a, b})); };
    const std::vector<SimplicialComplex> ls{bd(1, 2), bd(3, 4)};
    const auto report = hochster_composition_formula(bd(1, 2), ls);
    CHECK(report.pieces.size() == 81);
    CHECK(report.all_isomorphic());

    const auto* piece = &report.pieces.front();
    for (const auto& p : report.pieces)
        if (p.pair.sigma == vs({1}) && p.pair.omega == vs({3, 4}))
            piece = &p;
    REQUIRE(piece->pair.sigma == vs({1}));
    CHECK(piece->k_pair.sigma.empty());
    CHECK(piece->k_pair.omega == vs({2}));
    CHECK(piece->formula.is_zero());
    CHECK(piece->direct.is_zero());

    const auto comp = composition_complex(bd(1, 2), ls);
    for (const auto& p : report.pieces) {
        if (p.pair.sigma.empty() && p.pair.omega == VertexSet::range(1, 4))
            CHECK(p.direct == composition_homology(bd(1, 2), ls).direct.shifted(1));
        if (p.pair.omega.empty() && comp.contains(p.pair.sigma)) {
            CHECK(p.direct == kZ0);
            CHECK(p.formula == kZ0);
        }
    }

    const std::vector<SimplicialComplex> with_void{bd(1, 2), SimplicialComplex::void_complex(vs({3}))};
    CHECK_THROWS_AS(hochster_composition_formula(bd(1, 2), with_void), InputError);
}

TEST_CASE("hochster composition formula on random instances") {
    Rng rng(83);
    for (int t = 0; t < 25; ++t) {
        const int m = uniform_int(rng, 1, 3);
        const auto k = random_complex(VertexSet::range(1, m), rng);
        std::vector<SimplicialComplex> ls;
        int next = 1;
        for (int i = 0; i < m; ++i) {
            const int n = uniform_int(rng, 1, std::max(1, (7 - next) / (m - i)));
            auto l = random_complex(VertexSet::range(next, next + n - 1), rng);
            if (l.is_void())
                l = SimplicialComplex::empty_face(l.ground());
            ls.push_back(l);
            next += n;
        }
        const auto report = hochster_composition_formula(k, ls);
        REQUIRE(report.mismatched == 0);
        REQUIRE(report.isomorphic + report.unsupported == report.pieces.size());
        REQUIRE(hochster_composition_formula(k, ls, Coefficients::prime_field(2)).all_isomorphic());
    }
}

TEST_CASE("field epimorphism case: the whole homology sits in the (∅, [n]) piece") {
    Rng rng(89);
    const Coefficients f2 = Coefficients::prime_field(2);
    for (int t = 0; t < 60; ++t) {
        const int m = uniform_int(rng, 1, 3);
        const auto k = random_complex(VertexSet::range(1, m), rng);
        std::vector<SimplicialComplex> ls;
        int next = 1;
        for (int i = 0; i < m; ++i) {
            const int n = uniform_int(rng, 1, 2);
            ls.push_back(random_complex(VertexSet::range(next, next + n - 1), rng));
            next += n;
        }
        const auto r = composition_homology(k, ls, f2);
        REQUIRE(r.agree);
        const auto comp = composition_complex(k, ls);
        REQUIRE(hochster_entry(comp, IndexPair(VertexSet{}, comp.ground()), f2) == r.direct.shifted(1));
    }
}
