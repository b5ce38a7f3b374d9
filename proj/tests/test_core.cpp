#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cmt/core.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/verify.hpp"
#include "oracle.hpp"

using namespace cmt;

namespace {

SimplicialComplex make(int n, std::vector<Face> faces) {
    return SimplicialComplex(standard_labels(n), faces);
}

const SimplicialComplex kEmptyComplex(std::vector<VertexLabel>{}, {Face{0}});

}  // namespace

TEST_CASE("vertex labels: parse, print, validate") {
    CHECK(VertexLabel("x1").str() == "x1");
    CHECK(VertexLabel("x1", 2).str() == "x1_2");
    CHECK(VertexLabel::parse("x1") == VertexLabel("x1"));
    CHECK(VertexLabel::parse("x1_2") == VertexLabel("x1", 2));
    CHECK_THROWS_AS(VertexLabel::parse("x_1_2"), ParseError);
    CHECK_THROWS_AS(VertexLabel::parse("_2"), ParseError);
    CHECK_THROWS_AS(VertexLabel::parse("x_"), ParseError);
    CHECK_THROWS_AS(VertexLabel::parse("x_0"), ParseError);
    CHECK_THROWS_AS(VertexLabel::parse("x_two"), ParseError);
    CHECK_THROWS_AS(VertexLabel(""), Error);
    CHECK_THROWS_AS(VertexLabel("a_b"), Error);
}

TEST_CASE("normalization keeps only maximal faces") {
    auto dx = make(2, {face_of({0, 1}), face_of({0})});
    CHECK(dx.facets() == std::vector<Face>{face_of({0, 1})});

    auto antichain = make(3, {face_of({0, 1}), face_of({1, 2})});
    CHECK(antichain.facets() == std::vector<Face>{face_of({0, 1}), face_of({1, 2})});

    auto with_empty = make(1, {Face{0}, face_of({0})});
    CHECK(with_empty.facets() == std::vector<Face>{face_of({0})});

    // idempotent: renormalizing the facet list changes nothing
    auto again = normalize_complex(antichain.facets(), antichain.vertices());
    CHECK(again == antichain);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make(2, {}), EmptyInputError);
    CHECK_THROWS_AS(make(1, {face_of({0, 1})}), BadIndexError);
    CHECK_THROWS_AS(SimplicialComplex({VertexLabel("a"), VertexLabel("a")}, {face_of({0, 1})}),
                    VertexClashError);
    CHECK_THROWS_AS(make(3, {face_of({0, 1})}), GhostVertexError);  // x3 uncovered
    CHECK_THROWS_AS(SimplicialComplex(standard_labels(2), {Face{0}}), GhostVertexError);
    CHECK_THROWS_AS(SimplicialComplex(standard_labels(65), {Face{0}}), Error);
}

TEST_CASE("the empty-face complex is the minimal complex") {
    CHECK(kEmptyComplex.is_empty_complex());
    CHECK(dim(kEmptyComplex) == -1);
    CHECK(is_pure(kEmptyComplex));
    CHECK(kEmptyComplex.contains(0));
    CHECK(kEmptyComplex.all_faces() == std::vector<Face>{0});
}

TEST_CASE("dim") {
    CHECK(dim(make(3, {face_of({0, 1, 2})})) == 2);
    CHECK(dim(make(3, {face_of({0, 1}), face_of({2})})) == 1);
}

TEST_CASE("is_pure") {
    CHECK(is_pure(make(3, {face_of({0, 1}), face_of({1, 2})})));
    CHECK_FALSE(is_pure(make(3, {face_of({0, 1}), face_of({2})})));
}

TEST_CASE("link") {
    auto triangle = make(3, {face_of({0, 1, 2})});
    auto lk = link(triangle, face_of({0}));
    CHECK(lk.facets() == std::vector<Face>{face_of({1, 2})});

    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    auto lk2 = link(path, face_of({1}));
    CHECK(lk2.facets() == std::vector<Face>{face_of({0}), face_of({2})});

    CHECK(link(path, 0) == path);
    CHECK(link(path, face_of({0, 1})).is_empty_complex());
    CHECK_THROWS_AS(link(path, face_of({0, 2})), NotAFaceError);
}

TEST_CASE("link faces match the set definition on every small complex") {
    for (int n = 1; n <= 4; ++n) {
        for_each_complex_on(n, [&](const std::vector<Face>& facets) {
            auto dx = make(n, facets);
            for (Face f : dx.all_faces()) {
                auto lk = link(dx, f);
                std::vector<Face> got = lk.all_faces();
                std::vector<Face> expected = oracle::link_faces(facets, n, f);
                std::sort(got.begin(), got.end());
                std::sort(expected.begin(), expected.end());
                REQUIRE(got == expected);
                if (is_pure(dx)) {
                    // links of faces of a pure complex are pure
                    CHECK(is_pure(lk));
                }
            }
        });
    }
}

TEST_CASE("join") {
    auto a = SimplicialComplex({VertexLabel("a")}, {face_of({0})});
    auto bc = SimplicialComplex({VertexLabel("b"), VertexLabel("c")}, {face_of({0}), face_of({1})});
    auto j = join(a, bc);
    CHECK(j.vertex_count() == 3);
    CHECK(j.facets() == std::vector<Face>{face_of({0, 1}), face_of({0, 2})});

    auto single = join(a, SimplicialComplex({VertexLabel("b")}, {face_of({0})}));
    CHECK(single.facets() == std::vector<Face>{face_of({0, 1})});

    auto with_empty = join(kEmptyComplex, bc);
    CHECK(with_empty.facets() == bc.facets());
    CHECK(with_empty.vertices() == bc.vertices());

    CHECK_THROWS_AS(join(a, a), VertexClashError);
}

TEST_CASE("is_cone") {
    CHECK(is_cone(make(3, {face_of({0, 1}), face_of({0, 2})})) == 0);
    CHECK_FALSE(is_cone(make(3, {face_of({0, 1}), face_of({1, 2}), face_of({0, 2})})).has_value());
    CHECK(is_cone(make(1, {face_of({0})})) == 0);
    CHECK_FALSE(is_cone(kEmptyComplex).has_value());
}

TEST_CASE("faces_of_card") {
    auto triangle = make(3, {face_of({0, 1, 2})});
    CHECK(faces_of_card(triangle, 2) ==
          std::vector<Face>{face_of({0, 1}), face_of({0, 2}), face_of({1, 2})});
    CHECK(faces_of_card(triangle, 0) == std::vector<Face>{Face{0}});
    CHECK(faces_of_card(triangle, 5).empty());

    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    CHECK(faces_of_card(path, 2) == std::vector<Face>{face_of({0, 1}), face_of({1, 2})});
}

TEST_CASE("minimal_nonfaces") {
    auto hollow = make(3, {face_of({0, 1}), face_of({1, 2}), face_of({0, 2})});
    CHECK(minimal_nonfaces(hollow) == std::vector<Face>{face_of({0, 1, 2})});

    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    CHECK(minimal_nonfaces(path) == std::vector<Face>{face_of({0, 2})});

    CHECK(minimal_nonfaces(make(3, {face_of({0, 1, 2})})).empty());
}

TEST_CASE("minimal_nonfaces matches the brute-force scan on every small complex") {
    for (int n = 1; n <= 5; ++n) {
        for_each_complex_on(n, [&](const std::vector<Face>& facets) {
            auto got = minimal_nonfaces(make(n, facets));
            auto expected = oracle::brute_minimal_nonfaces(facets, n);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            REQUIRE(got == expected);
        });
    }
}

TEST_CASE("stanley_reisner_ideal") {
    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    auto ideal = stanley_reisner_ideal(path);
    REQUIRE(ideal.generators().size() == 1);
    CHECK(ideal.generators()[0] == Monomial::squarefree(face_of({0, 2})));

    CHECK(stanley_reisner_ideal(make(3, {face_of({0, 1, 2})})).is_zero());

    auto two_points = make(2, {face_of({0}), face_of({1})});
    auto edge_gen = stanley_reisner_ideal(two_points);
    REQUIRE(edge_gen.generators().size() == 1);
    CHECK(edge_gen.generators()[0] == Monomial::squarefree(face_of({0, 1})));
}

TEST_CASE("stanley-reisner correspondence is a bijection at small scale") {
    // complexes -> ideals -> complexes, and squarefree ideals -> complexes ->
    // ideals; exhaustive up to vertex relabeling on <= 6 vertices, fully
    // labeled on <= 5
    for (int n = 1; n <= 6; ++n) {
        long checked = 0;
        for_each_antichain(n, [&](const std::vector<Face>& facets) {
            if (n == 6 && !is_canonical_labeling(facets, n)) return;
            ++checked;
            // complex direction needs a covering antichain
            if (covers_all(facets, n)) {
                auto dx = make(n, facets);
                CHECK(complex_of_ideal(stanley_reisner_ideal(dx)) == dx);
            }
            // ideal direction: generators from the antichain supports
            std::vector<Monomial> gens;
            for (Face f : facets) gens.push_back(Monomial::squarefree(f));
            MonomialIdeal ideal(standard_labels(n), gens);
            CHECK(stanley_reisner_ideal(complex_of_ideal(ideal)) == ideal);
        });
        CHECK(checked > 0);
    }
}

TEST_CASE("complex_of_ideal rejects non-squarefree input") {
    MonomialIdeal ideal(standard_labels(1), {Monomial({{0, 2}})});
    CHECK_THROWS_AS(complex_of_ideal(ideal), Error);
}

TEST_CASE("independence complex") {
    SimpleGraph edge({VertexLabel("a"), VertexLabel("b")}, {{0, 1}});
    CHECK(independence_complex(edge).facets() == std::vector<Face>{face_of({0}), face_of({1})});

    SimpleGraph edgeless(standard_labels(3), {});
    CHECK(independence_complex(edgeless).facets() == std::vector<Face>{face_of({0, 1, 2})});

    // five vertices a,b,c,d,e with edges ea, ac, cd, de, eb, bc
    SimpleGraph g2({VertexLabel("a"), VertexLabel("b"), VertexLabel("c"), VertexLabel("d"),
                    VertexLabel("e")},
                   {{4, 0}, {0, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 2}});
    auto indep = independence_complex(g2);
    CHECK(indep.facets() == std::vector<Face>{face_of({0, 1, 3}), face_of({2, 4})});
    auto brute = oracle::brute_maximal_independent_sets(5, g2.edges());
    std::sort(brute.begin(), brute.end(), face_lex_less);
    CHECK(indep.facets() == brute);
}

TEST_CASE("edge ideal") {
    SimpleGraph edge({VertexLabel("a"), VertexLabel("b")}, {{0, 1}});
    auto ideal = edge_ideal(edge);
    REQUIRE(ideal.generators().size() == 1);
    CHECK(ideal.generators()[0] == Monomial::squarefree(face_of({0, 1})));

    SimpleGraph triangle(standard_labels(3), {{0, 1}, {0, 2}, {1, 2}});
    CHECK(edge_ideal(triangle).generators().size() == 3);

    CHECK(edge_ideal(SimpleGraph(standard_labels(2), {})).is_zero());
}

TEST_CASE("graph construction") {
    CHECK_THROWS_AS(SimpleGraph(standard_labels(2), {{0, 0}}), Error);
    CHECK_THROWS_AS(SimpleGraph(standard_labels(2), {{0, 5}}), BadIndexError);
    // duplicate and reversed edges collapse
    SimpleGraph g(standard_labels(2), {{1, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("independence complexes of every small graph invert edge data") {
    // the minimal non-faces of the independence complex are exactly the
    // edges, and the edge ideal is its Stanley-Reisner ideal
    for (int n = 0; n <= 6; ++n) {
        for_each_graph_on(n, [&](const SimpleGraph& g) {
            auto indep = independence_complex(g);
            std::vector<Face> expected_edges;
            for (auto [a, b] : g.edges()) expected_edges.push_back(face_of({a, b}));
            std::sort(expected_edges.begin(), expected_edges.end(), face_lex_less);
            REQUIRE(minimal_nonfaces(indep) == expected_edges);
            REQUIRE(edge_ideal(g) == stanley_reisner_ideal(indep));
        });
    }
}

TEST_CASE("independence complexes of every 7-vertex graph invert edge data") {
    // same check at the largest sweep size, split across workers
    auto summary = cmt::detail::run_tasks_ordered(64, 0, {}, [&](int task, cmt::detail::SweepCollector& out) {
        const auto labels = standard_labels(7);
        std::vector<std::pair<int, int>> all_pairs;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) all_pairs.emplace_back(a, b);
        const std::uint32_t total = 1u << all_pairs.size();
        const std::uint32_t chunk = total / 64;
        const std::uint32_t begin = static_cast<std::uint32_t>(task) * chunk;
        const std::uint32_t end = task == 63 ? total : begin + chunk;
        bool all_ok = true;
        for (std::uint32_t mask = begin; mask < end && all_ok; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back(all_pairs[i]);
            SimpleGraph g(labels, std::move(edges));
            auto indep = independence_complex(g);
            std::vector<Face> expected_edges;
            for (auto [a, b] : g.edges()) expected_edges.push_back(face_of({a, b}));
            std::sort(expected_edges.begin(), expected_edges.end(), face_lex_less);
            if (minimal_nonfaces(indep) != expected_edges) all_ok = false;
            if (!(edge_ideal(g) == stanley_reisner_ideal(indep))) all_ok = false;
        }
        TheoremReport report;
        report.instance = "chunk=" + std::to_string(task);
        report.check = "graph-inversion";
        report.verdict = all_ok ? "pass" : "fail";
        out.add(std::move(report));
    });
    CHECK(summary.fail == 0);
    CHECK(summary.pass == 64);
}

TEST_CASE("monomials") {
    Monomial m({{0, 2}, {2, 1}});
    CHECK(m.degree() == 3);
    CHECK(m.exponent(0) == 2);
    CHECK(m.exponent(1) == 0);
    CHECK(m.divides(Monomial({{0, 2}, {1, 1}, {2, 1}})));
    CHECK_FALSE(m.divides(Monomial({{0, 1}, {2, 1}})));
    CHECK(m.times(Monomial({{0, 1}, {1, 1}})) == Monomial({{0, 3}, {1, 1}, {2, 1}}));
    CHECK_FALSE(m.is_squarefree());
    CHECK(Monomial::squarefree(face_of({0, 2})).is_squarefree());
    CHECK_THROWS_AS(Monomial({{0, 0}}), Error);
    CHECK_THROWS_AS(Monomial({{0, 1}, {0, 2}}), Error);
}

TEST_CASE("ideal generators are minimalized") {
    MonomialIdeal ideal(standard_labels(2),
                        {Monomial({{0, 1}}), Monomial({{0, 2}}), Monomial({{0, 1}, {1, 1}})});
    REQUIRE(ideal.generators().size() == 1);
    CHECK(ideal.generators()[0] == Monomial({{0, 1}}));
}

TEST_CASE("face order is lexicographic on vertex sequences") {
    CHECK(face_lex_less(face_of({0}), face_of({0, 1})));
    CHECK(face_lex_less(face_of({0, 1}), face_of({1})));
    CHECK(face_lex_less(Face{0}, face_of({0})));
    CHECK_FALSE(face_lex_less(face_of({1}), face_of({0, 2})));
}
