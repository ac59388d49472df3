#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "polyprod/document.hpp"
#include "polyprod/random_complex.hpp"
#include "polyprod/verify.hpp"

using namespace polyprod;
using namespace testing_helpers;

TEST_CASE("documents parse and render canonically") {
    const auto doc = parse_document("# a comment\nground: [1,2,3]\n\nfacets: [[3,1],[2]]\n");
    CHECK(doc.complex == cx(vs({1, 2, 3}), {{1, 3}, {2}}));
    CHECK(render_document(doc) == "ground: [1,2,3]\nfacets: [[1,3],[2]]\n");

    const auto blocks = parse_document("ground: [1,2,3]\nblocks: [2,1]\nfacets: [[1,2,3]]\n");
    CHECK(blocks.blocks == std::vector<int>{2, 1});
    CHECK(render_document(blocks) == "ground: [1,2,3]\nblocks: [2,1]\nfacets: [[1,2,3]]\n");

    CHECK(parse_document("ground: [1]\nfacets: []\n").complex.is_void());
    CHECK(parse_document("ground: [1]\nfacets: [[]]\n").complex == SimplicialComplex::empty_face(vs({1})));
    CHECK(render_document(SimplicialComplex::void_complex(vs({1, 2}))) == "ground: [1,2]\nfacets: []\n");
    CHECK(render_document(SimplicialComplex::empty_face(vs({1}))) == "ground: [1]\nfacets: [[]]\n");
    CHECK(render_document(SimplicialComplex::empty_face(VertexSet{})) == "ground: []\nfacets: [[]]\n");
}

TEST_CASE("documents reject malformed input") {
    CHECK_THROWS_WITH_AS(parse_document("ground: [1,2]\nfacets: [[1,3]]\n"), doctest::Contains("3"), InputError);
    CHECK_THROWS_WITH_AS(parse_document("ground: [1,2]\nfacets: [[1]\n"), doctest::Contains("line 2"), InputError);
    CHECK_THROWS_AS(parse_document("facets: [[1]]\n"), InputError);
    CHECK_THROWS_AS(parse_document("ground: [1,2]\n"), InputError);
    CHECK_THROWS_AS(parse_document("ground: [1,1]\nfacets: []\n"), InputError);
    CHECK_THROWS_AS(parse_document("ground: [1,2]\nblocks: [1,2]\nfacets: []\n"), InputError);
    CHECK_THROWS_AS(parse_document("ground: [1,2]\nfacets: []\ncolor: red\n"), InputError);
    CHECK_THROWS_AS(parse_document("ground: [0]\nfacets: []\n"), InputError);
    CHECK_THROWS_AS(read_document("/nonexistent/file.txt"), InputError);
    CHECK(parse_label_list("[1, 2,5]") == std::vector<int>{1, 2, 5});
    CHECK(parse_label_list("3,4") == std::vector<int>{3, 4});
    CHECK(parse_label_list("[]").empty());
    CHECK_THROWS_AS(parse_label_list("1,x"), InputError);
}

TEST_CASE("parse and render round-trip on random complexes") {
    Rng rng(137);
    for (int t = 0; t < 300; ++t) {
        const auto k = random_complex(VertexSet::range(1, uniform_int(rng, 0, 8)), rng);
        const std::string text = render_document(k);
        const auto back = parse_document(text);
        REQUIRE(back.complex == k);
        REQUIRE(render_document(back) == text);
    }
}

TEST_CASE("verify suites pass and are deterministic") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        std::ostringstream a;
        std::ostringstream b;
        const VerifyOptions opts{5, 12, 7};
        const auto outcome = run_suite(name, opts, a);
        run_suite(name, opts, b);
        REQUIRE(outcome.ok());
        REQUIRE(outcome.trials == 12);
        REQUIRE(a.str() == b.str());
        REQUIRE(a.str().find("TRIAL 7 " + name + " PASS\n") == 0);
        REQUIRE(a.str().find("SUMMARY " + name + " trials=12 passed=12 failed=0") != std::string::npos);
    }
    CHECK(suite_names().size() == 10);
    std::ostringstream sink;
    CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}, sink), InputError);
    CHECK_THROWS_AS(run_suite("dual", VerifyOptions{13, 1, 0}, sink), InputError);
    CHECK_THROWS_AS(run_suite("dual", VerifyOptions{0, 1, 0}, sink), InputError);
}

TEST_CASE("minimize_complex shrinks to a minimal failing complex") {
    const auto big = cx(VertexSet::range(1, 6), {{1, 2, 3, 4}, {3, 4, 5}, {5, 6}});
    // "Fails" while the complex contains the edge {3,4}.
    const auto small = minimize_complex(big, [](const SimplicialComplex& k) { return k.contains(vs({3, 4})); });
    CHECK(small.contains(vs({3, 4})));
    CHECK(small.facets() == std::vector<VertexSet>{vs({3, 4})});
    CHECK(small.ground() == vs({3, 4}));

    // A predicate that throws is treated as "does not fail".
    const auto same = minimize_complex(big, [&](const SimplicialComplex& k) {
        if (k != big)
            throw InputError("shape changed");
        return true;
    });
    CHECK(same == big);
}
