#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grw/generators.hpp"
#include "helpers.hpp"

using namespace grw;
using namespace grwtest;

TEST_CASE("graph construction and validation") {
    Graph empty = Graph::empty(Flavor::Directed);
    CHECK(empty.is_empty());

    Graph cycle = dg({1, 2, 3}, {{10, 1, 2}, {11, 2, 3}, {12, 3, 1}});
    CHECK(cycle.vertex_count() == 3);
    CHECK(cycle.edge_count() == 3);

    CHECK_THROWS_WITH_AS(dg({1}, {{0, 1, 2}}), doctest::Contains("DanglingEndpoint"), Error);
    CHECK_THROWS_WITH_AS(Graph::make(Flavor::Directed, {1, 1}, {}),
                         doctest::Contains("DuplicateId"), Error);
    CHECK_THROWS_WITH_AS(Graph::make(Flavor::Directed, {1, 2},
                                     {Edge{5, 1, 2}, Edge{5, 2, 1}}),
                         doctest::Contains("DuplicateId"), Error);

    // undirected endpoints normalize to a sorted pair
    Graph u = ug({1, 2}, {{0, 2, 1}});
    CHECK(u.edges()[0].a == 1);
    CHECK(u.edges()[0].b == 2);
}

TEST_CASE("morphism validation and composition") {
    Graph one = dg({1});
    Graph edge = dg({1, 2}, {{0, 1, 2}});

    Morphism id = Morphism::identity(edge);
    CHECK(classify(id).is_iso);

    Morphism m = mor(one, edge, {{1, 1}});
    CHECK(m.is_mono());
    CHECK_FALSE(m.is_epi());

    // reversing a directed edge is not structure-preserving
    Graph edge2 = dg({3, 4}, {{7, 3, 4}});
    CHECK_THROWS_WITH_AS(mor(edge, edge2, {{1, 4}, {2, 3}}, {{0, 7}}),
                         doctest::Contains("IncidenceViolation"), Error);

    CHECK_THROWS_WITH_AS(mor(edge, one, {{1, 1}}, {}), doctest::Contains("NotTotal"), Error);

    Morphism f = mor(edge, edge2, {{1, 3}, {2, 4}}, {{0, 7}});
    CHECK(compose(Morphism::identity(edge), f) == f);
    CHECK(compose(f, Morphism::identity(edge2)) == f);
    CHECK(compose(f, Morphism::identity(edge2)).is_mono());

    // fold of two vertices onto one is epi, not mono
    Graph two = dg({1, 2});
    Morphism fold = mor(two, one, {{1, 1}, {2, 1}});
    auto cls = classify(fold);
    CHECK(cls.is_epi);
    CHECK_FALSE(cls.is_mono);
    CHECK_FALSE(cls.is_iso);
}

TEST_CASE("mono enumeration against the exhaustive oracle") {
    Graph vertex = dg({0});
    Graph cycle = dg({1, 2, 3}, {{10, 1, 2}, {11, 2, 3}, {12, 3, 1}});
    Graph edge = dg({0, 1}, {{0, 0, 1}});

    CHECK(enumerate_monos(vertex, cycle).size() == 3);
    CHECK(enumerate_monos(edge, cycle).size() == 3);
    CHECK(enumerate_monos(cycle, edge).empty()); // pigeonhole

    // parallel edges are matched by explicit edge assignment
    Graph parallel = dg({0, 1}, {{0, 0, 1}, {1, 0, 1}});
    CHECK(enumerate_monos(edge, parallel).size() == 2);

    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
        Flavor fl = i % 2 ? Flavor::Undirected : Flavor::Directed;
        Graph A = random_graph(rng, fl, 3, 2);
        Graph B = random_graph(rng, fl, 4, 3);
        auto got = enumerate_monos(A, B);
        CHECK(got.size() == brute_force_mono_count(A, B));
        // deterministic lexicographic order, duplicate-free
        for (std::size_t k = 1; k < got.size(); ++k)
            CHECK(got[k - 1].encode() < got[k].encode());
    }
}

TEST_CASE("strict initiality and morphisms into the empty graph") {
    Graph empty = Graph::empty(Flavor::Directed);
    Graph cycle = dg({1, 2, 3}, {{10, 1, 2}, {11, 2, 3}, {12, 3, 1}});
    CHECK(enumerate_monos(empty, cycle).size() == 1);
    CHECK(enumerate_morphisms(cycle, empty).empty());
    CHECK(enumerate_morphisms(empty, empty).size() == 1);
}

TEST_CASE("isomorphism search") {
    Graph cycle = dg({1, 2, 3}, {{10, 1, 2}, {11, 2, 3}, {12, 3, 1}});
    Graph path = dg({1, 2, 3}, {{10, 1, 2}, {11, 2, 3}});

    auto self = are_isomorphic(cycle, cycle);
    REQUIRE(self);
    CHECK(self->is_iso());
    CHECK_FALSE(are_isomorphic(cycle, path));

    // relabeled copies are isomorphic
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(rng, Flavor::Directed, 4, 4);
        std::vector<Id> verts;
        for (Id v : g.vertices()) verts.push_back(v + 100);
        std::vector<Edge> edges;
        for (const Edge& e : g.edges()) edges.push_back(Edge{e.id + 50, e.a + 100, e.b + 100});
        Graph relabeled = Graph::make(g.flavor(), verts, edges);
        CHECK(are_isomorphic(g, relabeled));
        CHECK(g.canonical_code() == relabeled.canonical_code());
    }
}

TEST_CASE("balanced: mono and epi imply iso") {
    Rng rng(21);
    for (int i = 0; i < 30; ++i) {
        Graph A = random_graph(rng, Flavor::Directed, 3, 2);
        Graph B = random_graph(rng, Flavor::Directed, 3, 2);
        for (const Morphism& f : enumerate_morphisms(A, B))
            if (f.is_mono() && f.is_epi()) CHECK(f.is_iso());
    }
}

TEST_CASE("coproduct") {
    Graph a = dg({1});
    Graph b = dg({5});
    CoproductResult co = coproduct(a, b);
    CHECK(co.object.vertex_count() == 2);
    CHECK(co.inj_left.is_mono());
    CHECK(co.inj_right.is_mono());

    // unit: A + empty is isomorphic to A
    Graph cycle = dg({1, 2, 3}, {{10, 1, 2}, {11, 2, 3}, {12, 3, 1}});
    CoproductResult unit = coproduct(cycle, Graph::empty(Flavor::Directed));
    CHECK(are_isomorphic(unit.object, cycle));

    // equals the pushout of the span over the empty graph
    Graph empty = Graph::empty(Flavor::Directed);
    PushoutResult po = pushout(Span::make(Morphism::make(empty, cycle, {}, {}),
                                          Morphism::make(empty, b, {}, {})));
    CHECK(are_isomorphic(po.object, coproduct(cycle, b).object));

    // mono pairing: [inj_A∘f, inj_B∘g] stays mono
    Rng rng(3);
    for (int i = 0; i < 15; ++i) {
        Graph X = random_graph(rng, Flavor::Directed, 2, 1);
        Graph Y = random_graph(rng, Flavor::Directed, 2, 1);
        Graph A = random_mono_extension(rng, X, 1, 1).cod();
        Graph B = random_mono_extension(rng, Y, 1, 1).cod();
        auto fs = enumerate_monos(X, A);
        auto gs = enumerate_monos(Y, B);
        if (fs.empty() || gs.empty()) continue;
        CoproductResult cxy = coproduct(X, Y);
        CoproductResult cab = coproduct(A, B);
        std::vector<std::pair<Id, Id>> vm, em;
        for (Id v : X.vertices()) vm.emplace_back(cxy.inj_left.v(v), cab.inj_left.v(fs[0].v(v)));
        for (Id v : Y.vertices()) vm.emplace_back(cxy.inj_right.v(v), cab.inj_right.v(gs[0].v(v)));
        for (const Edge& e : X.edges())
            em.emplace_back(cxy.inj_left.e(e.id), cab.inj_left.e(fs[0].e(e.id)));
        for (const Edge& e : Y.edges())
            em.emplace_back(cxy.inj_right.e(e.id), cab.inj_right.e(gs[0].e(e.id)));
        Morphism paired = Morphism::make(cxy.object, cab.object, vm, em);
        CHECK(paired.is_mono());
    }
}

TEST_CASE("mono decomposition") {
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        Graph A = random_graph(rng, Flavor::Directed, 2, 1);
        Graph B = random_graph(rng, Flavor::Directed, 2, 2);
        Graph C = random_graph(rng, Flavor::Directed, 3, 2);
        for (const Morphism& f : enumerate_morphisms(A, B))
            for (const Morphism& g : enumerate_morphisms(B, C)) {
                if (compose(f, g).is_mono()) CHECK(f.is_mono());
            }
    }
}

TEST_CASE("subgraph enumeration is deterministic and complete") {
    Graph edge = dg({0, 1}, {{0, 0, 1}});
    auto parts = subgraphs_containing(edge, {}, {});
    // vertex subsets: {}, {0}, {1}, {0,1}; the last admits the edge too
    CHECK(parts.size() == 5);
    auto again = subgraphs_containing(edge, {}, {});
    REQUIRE(parts.size() == again.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(parts[i].vertices == again[i].vertices);
        CHECK(parts[i].edges == again[i].edges);
    }
}
