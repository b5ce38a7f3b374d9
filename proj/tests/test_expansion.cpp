#include <doctest.h>

#include <algorithm>

#include "cmt/expansion.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/verify.hpp"
#include "oracle.hpp"

using namespace cmt;

namespace {

SimplicialComplex make(int n, std::vector<Face> faces) {
    return SimplicialComplex(standard_labels(n), faces);
}

const FieldSpec kQ = FieldSpec::rationals();

std::vector<std::string> label_strings(const std::vector<VertexLabel>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back(l.str());
    return out;
}

}  // namespace

TEST_CASE("expansion vectors") {
    CHECK_THROWS_AS(ExpansionVector({1, 0}), Error);
    CHECK(ExpansionVector::ones(3).all_ones());
    CHECK(ExpansionVector({2, 1, 3}).sum() == 6);
    CHECK(ExpansionVector({1, 1}).min_above_one() == std::nullopt);
    CHECK(ExpansionVector({3, 1, 2}).min_above_one() == 2);
    CHECK_THROWS_AS(expand_complex(make(2, {face_of({0, 1})}), ExpansionVector({2})), Error);
}

TEST_CASE("expanding a face replaces each vertex by its whole block") {
    auto labels = standard_labels(3);
    ExpansionVector alpha({2, 1, 1});
    // {x1, x3} -> {x1_1, x1_2, x3_1}: bits 0,1 (block of x1) and 3 (block of x3)
    CHECK(expand_face(face_of({0, 2}), alpha, labels) == face_of({0, 1, 3}));
    CHECK(expand_face(Face{0}, alpha, labels) == Face{0});
    CHECK(expand_face(face_of({0, 1, 2}), ExpansionVector::ones(3), labels) == face_of({0, 1, 2}));
}

TEST_CASE("expanding a complex: the non-pure instance") {
    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    auto expanded = expand_complex(path, ExpansionVector({2, 1, 1}));
    CHECK(label_strings(expanded.vertices()) ==
          std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x3_1"});
    CHECK(expanded.facets() == std::vector<Face>{face_of({0, 1, 2}), face_of({2, 3})});
    CHECK(is_pure(path));
    CHECK_FALSE(is_pure(expanded));  // purity is not preserved
}

TEST_CASE("expanding by the all-ones vector relabels only") {
    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    auto expanded = expand_complex(path, ExpansionVector::ones(3));
    CHECK(expanded.facets() == path.facets());
    CHECK(label_strings(expanded.vertices()) == std::vector<std::string>{"x1_1", "x2_1", "x3_1"});
}

TEST_CASE("expanding isolated points yields disjoint blocks") {
    auto points = make(3, {face_of({0}), face_of({1}), face_of({2})});
    auto expanded = expand_complex(points, ExpansionVector({2, 2, 2}));
    CHECK(expanded.facets() ==
          std::vector<Face>{face_of({0, 1}), face_of({2, 3}), face_of({4, 5})});
    CHECK(expanded.facet_count() == points.facet_count());
}

TEST_CASE("expanding twice is rejected") {
    auto expanded = expand_complex(make(1, {face_of({0})}), ExpansionVector({2}));
    CHECK_THROWS_AS(expand_complex(expanded, ExpansionVector({1, 1})), Error);
}

TEST_CASE("graph expansion duplicates vertices without intra-block edges") {
    SimpleGraph edge({VertexLabel("a"), VertexLabel("b")}, {{0, 1}});
    auto expanded = expand_graph(edge, ExpansionVector({2, 1}));
    CHECK(label_strings(expanded.vertices()) == std::vector<std::string>{"a_1", "a_2", "b_1"});
    CHECK(expanded.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    SimpleGraph triangle(standard_labels(3), {{0, 1}, {0, 2}, {1, 2}});
    auto tri_expanded = expand_graph(triangle, ExpansionVector({2, 1, 1}));
    CHECK(tri_expanded.edges() ==
          std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    auto iso = expand_graph(triangle, ExpansionVector::ones(3));
    CHECK(iso.edges() == triangle.edges());
}

TEST_CASE("monomial expansion") {
    auto labels = standard_labels(3);
    // x1*x3 with the first variable doubled: one copy choice per factor
    auto gens = expand_monomial(Monomial({{0, 1}, {2, 1}}), ExpansionVector({2, 1, 1}), labels);
    CHECK(gens == std::vector<Monomial>{Monomial({{0, 1}, {3, 1}}), Monomial({{1, 1}, {3, 1}})});

    // x1^2 with two copies: all degree-2 monomials in the block
    auto squares = expand_monomial(Monomial({{0, 2}}), ExpansionVector({2}), standard_labels(1));
    CHECK(squares == std::vector<Monomial>{Monomial({{0, 1}, {1, 1}}), Monomial({{0, 2}}),
                                           Monomial({{1, 2}})});

    auto identity = expand_monomial(Monomial({{0, 1}, {2, 1}}), ExpansionVector::ones(3), labels);
    CHECK(identity == std::vector<Monomial>{Monomial({{0, 1}, {2, 1}})});
}

TEST_CASE("ideal expansion") {
    MonomialIdeal path_sr(standard_labels(3), {Monomial({{0, 1}, {2, 1}})});
    auto expanded = expand_ideal(path_sr, ExpansionVector({2, 1, 1}));
    CHECK(expanded.generators() ==
          std::vector<Monomial>{Monomial({{0, 1}, {3, 1}}), Monomial({{1, 1}, {3, 1}})});
    // matches the Stanley-Reisner ideal of the expanded complex
    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    CHECK(expanded == stanley_reisner_ideal(expand_complex(path, ExpansionVector({2, 1, 1}))));

    CHECK(expand_ideal(MonomialIdeal::zero(standard_labels(2)), ExpansionVector({2, 2})).is_zero());

    MonomialIdeal one_edge(standard_labels(2), {Monomial({{0, 1}, {1, 1}})});
    auto edge_expanded = expand_ideal(one_edge, ExpansionVector({2, 1}));
    SimpleGraph edge(standard_labels(2), {{0, 1}});
    CHECK(edge_expanded == edge_ideal(expand_graph(edge, ExpansionVector({2, 1}))));
}

TEST_CASE("links in an expansion: block-aligned and partial faces") {
    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    ExpansionVector alpha({2, 1, 1});

    // F = {x2_1} = {x2}^alpha: expansion of the link of x2
    auto aligned = link_expansion_decompose(path, alpha, face_of({2}));
    CHECK(aligned.block_aligned);
    CHECK(aligned.g == face_of({1}));
    CHECK(aligned.identity_holds);
    CHECK(aligned.link_complex.facets() == std::vector<Face>{face_of({0, 1}), face_of({3})});

    // F = {x1_1}: misses x1_2, so the link is a cone over it
    auto partial = link_expansion_decompose(path, alpha, face_of({0}));
    CHECK_FALSE(partial.block_aligned);
    CHECK(partial.u == face_of({0}));
    CHECK(partial.identity_holds);
    REQUIRE(partial.cone_apex.has_value());
    CHECK(*partial.cone_apex == 1);  // x1_2
    auto betti = reduced_betti(partial.link_complex, kQ);
    for (int q = -1; q <= betti.top_dim; ++q) CHECK(betti.at(q) == 0);

    // the empty face is the expansion of the empty face
    auto trivial = link_expansion_decompose(path, alpha, Face{0});
    CHECK(trivial.block_aligned);
    CHECK(trivial.g == Face{0});
    CHECK(trivial.identity_holds);

    CHECK_THROWS_AS(link_expansion_decompose(path, alpha, face_of({0, 3})), NotAFaceError);
}

TEST_CASE("expansion theorem harness on its base case") {
    auto points = make(3, {face_of({0}), face_of({1}), face_of({2})});
    auto outcome = verify_expansion_theorem(points, ExpansionVector({2, 2, 2}), kQ);
    CHECK(outcome.verdict == ExpansionTheoremOutcome::Verdict::pass);
    CHECK(outcome.t == 0);
    CHECK(outcome.e == 2);
    CHECK(outcome.k == 2);
    CHECK(outcome.t_prime == 1);
}

TEST_CASE("expansion theorem harness flags the simplex counterexample") {
    // expanding the single edge gives the full simplex on four vertices,
    // which stays Cohen-Macaulay; the predicted level t+e-k+1 = 3 is wrong
    // for this family, and the harness must report that honestly
    auto edge = make(2, {face_of({0, 1})});
    auto outcome = verify_expansion_theorem(edge, ExpansionVector({2, 2}), kQ);
    CHECK(outcome.verdict == ExpansionTheoremOutcome::Verdict::fail);
    CHECK(outcome.t == 0);
    CHECK(outcome.e == 4);
    CHECK(outcome.k == 2);
    CHECK(outcome.t_prime == 0);
    // the oracle agrees that the expansion is genuinely Cohen-Macaulay
    auto expanded = expand_complex(edge, ExpansionVector({2, 2}));
    CHECK(oracle::min_cm_t(expanded.facets(), 4, oracle::Field::q()) == 0);
}

TEST_CASE("expansion theorem harness skips unmet hypotheses") {
    auto impure = make(3, {face_of({0, 1}), face_of({2})});
    CHECK(verify_expansion_theorem(impure, ExpansionVector({2, 1, 1}), kQ).verdict ==
          ExpansionTheoremOutcome::Verdict::skip);

    auto path = make(3, {face_of({0, 1}), face_of({1, 2})});
    CHECK(verify_expansion_theorem(path, ExpansionVector::ones(3), kQ).verdict ==
          ExpansionTheoremOutcome::Verdict::skip);
    // pure base, non-pure expansion
    CHECK(verify_expansion_theorem(path, ExpansionVector({2, 1, 1}), kQ).verdict ==
          ExpansionTheoremOutcome::Verdict::skip);
}

TEST_CASE("expanding a cone can stay Cohen-Macaulay") {
    // the smallest member of the family the theorem sweep reports as fails
    auto point = make(1, {face_of({0})});
    auto expanded = expand_complex(point, ExpansionVector({2}));
    CHECK(is_cohen_macaulay(expanded, kQ));
}

TEST_CASE("Stanley-Reisner ideals commute with expansion on small complexes") {
    for (int n = 1; n <= 4; ++n) {
        for_each_complex_on(n, [&](const std::vector<Face>& facets) {
            auto dx = make(n, facets);
            auto sr = stanley_reisner_ideal(dx);
            for_each_alpha(n, 2, 8, [&](const ExpansionVector& alpha) {
                REQUIRE(expand_ideal(sr, alpha) ==
                        stanley_reisner_ideal(expand_complex(dx, alpha)));
            });
        });
    }
}

TEST_CASE("generator expansion equals the defining sum of block-prime products") {
    Rng rng(555001);
    for (int draw = 0; draw < 300; ++draw) {
        MonomialIdeal ideal = random_ideal(rng, 4, 2, 4);
        ExpansionVector alpha = random_alpha(rng, static_cast<int>(ideal.ring_vertices().size()), 3);
        REQUIRE(expand_ideal(ideal, alpha) == detail::expand_ideal_by_products(ideal, alpha));
    }
}

TEST_CASE("graph expansion commutes with edge ideals and independence complexes") {
    for (int n = 0; n <= 4; ++n) {
        for_each_graph_on(n, [&](const SimpleGraph& g) {
            for_each_alpha(n, 2, 0, [&](const ExpansionVector& alpha) {
                auto expanded = expand_graph(g, alpha);
                REQUIRE(edge_ideal(expanded) == expand_ideal(edge_ideal(g), alpha));
                REQUIRE(independence_complex(expanded) ==
                        expand_complex(independence_complex(g), alpha));
            });
        });
    }
}

TEST_CASE("expansion never loses reduced homology") {
    for (int n = 1; n <= 4; ++n) {
        for_each_complex_on(n, [&](const std::vector<Face>& facets) {
            auto dx = make(n, facets);
            const int d = dim(dx);
            auto base = reduced_betti(dx, kQ);
            for_each_alpha(n, 2, 8, [&](const ExpansionVector& alpha) {
                auto expanded = reduced_betti(expand_complex(dx, alpha), kQ);
                for (int q = -1; q <= d; ++q) REQUIRE(expanded.at(q) >= base.at(q));
            });
        });
    }
}

TEST_CASE("link structure family sweeps clean at small scale") {
    InstanceSweepConfig cfg;
    cfg.max_vertices = 3;
    cfg.alpha_entry_max = 3;
    cfg.expanded_vertex_cap = 9;
    cfg.canonical_only = false;
    auto summary = run_family_sweep(Family::link_structure, cfg);
    CHECK(summary.fail == 0);
    CHECK(summary.pass > 0);
}
