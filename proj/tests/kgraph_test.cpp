#include <doctest.h>

#include "kgk/examples.hpp"
#include "kgk/kgraph.hpp"
#include "support/corpus.hpp"

using namespace kgk;
using kgk::tests::rotation_graph;
using kgk::tests::RotationParams;

namespace {

RawGraphSpec two_color_loops() {
    RawGraphSpec s;
    s.rank = 2;
    s.vertices = {"v"};
    s.edges = {{"e", 1, "v", "v"}, {"f", 2, "v", "v"}};
    RawFlip fl;
    fl.i = 1;
    fl.j = 2;
    fl.pairs = {{"e", "f", "f", "e"}};
    s.flips = {fl};
    return s;
}

}  // namespace

TEST_CASE("from_spec rejects structurally broken presentations") {
    RawGraphSpec s = two_color_loops();
    SUBCASE("rank below one") {
        s.rank = 0;
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("no vertices") {
        s.vertices.clear();
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("duplicate vertex id") {
        s.vertices.push_back("v");
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("duplicate edge id") {
        s.edges.push_back({"e", 1, "v", "v"});
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("color out of range") {
        s.edges[0].color = 3;
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("unknown source vertex") {
        s.edges[0].src = "nope";
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("flip block with i >= j") {
        s.flips[0].i = 2;
        s.flips[0].j = 1;
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("flip entry with wrong colors") {
        s.flips[0].pairs[0] = {"f", "e", "e", "f"};
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
    SUBCASE("duplicate forward key") {
        s.flips[0].pairs.push_back({"e", "f", "f", "e"});
        CHECK_THROWS_AS(KGraph::from_spec(s), InputError);
    }
}

TEST_CASE("indexing and adjacency lookups") {
    KGraph g = KGraph::from_spec(generate_example("ex54", {2, 3, 5, 7, 1, 1}).graph);
    CHECK(g.rank() == 2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 4);
    CHECK(g.vertex_index("left") >= 0);
    CHECK(g.vertex_index("nope") == -1);
    int lam1 = g.edge_index("lam1"), mu1 = g.edge_index("mu1"), mu2 = g.edge_index("mu2");
    int left = g.vertex_index("left"), right = g.vertex_index("right");
    CHECK(g.edge(lam1).color == 0);
    CHECK(g.edge(mu1).color == 1);
    CHECK(g.edge(mu1).rng == left);
    CHECK(g.edge(mu1).src == right);
    CHECK(g.edges_of_color(1) == std::vector<int>{mu1, mu2});
    CHECK(g.edges_ranged_at(1, left) == std::vector<int>{mu1});
    CHECK(g.edges_sourced_at(left) == std::vector<int>{lam1, mu2});
}

TEST_CASE("apply_flip works in both color orders") {
    KGraph g = KGraph::from_spec(generate_example("ex54", {2, 3, 5, 7, 1, 1}).graph);
    int lam1 = g.edge_index("lam1"), lam2 = g.edge_index("lam2");
    int mu1 = g.edge_index("mu1"), mu2 = g.edge_index("mu2");

    // forward: lam1.mu1 == mu1.lam2
    CHECK(g.apply_flip(lam1, mu1) == std::pair<int, int>{mu1, lam2});
    CHECK(g.apply_flip(lam2, mu2) == std::pair<int, int>{mu2, lam1});
    // inverse direction recovers the ascending word
    CHECK(g.apply_flip(mu1, lam2) == std::pair<int, int>{lam1, mu1});
    CHECK(g.apply_flip(mu2, lam1) == std::pair<int, int>{lam2, mu2});
    CHECK(g.has_flip(lam1, mu1));

    CHECK_THROWS_AS(g.apply_flip(lam1, lam1), InternalError);
    // lam1.mu2 is not composable, so no table carries it
    CHECK_THROWS_AS(g.apply_flip(lam1, mu2), InputError);
}

TEST_CASE("validate_graph flags semantic defects with specific codes") {
    auto first_code = [](const KGraph& g) {
        ValidationResult r = validate_graph(g);
        REQUIRE_FALSE(r.ok);
        REQUIRE_FALSE(r.issues.empty());
        return r.issues.front().code;
    };

    SUBCASE("valid graphs pass") {
        CHECK(validate_graph(KGraph::from_spec(two_color_loops())).ok);
        CHECK(validate_graph(KGraph::from_spec(generate_example("omega", {3, 2}).graph)).ok);
    }
    SUBCASE("missing entry") {
        RawGraphSpec s = two_color_loops();
        s.flips[0].pairs.clear();
        CHECK(first_code(KGraph::from_spec(s)) == "flip_missing_entry");
    }
    SUBCASE("entry that is not composable") {
        RawGraphSpec s = generate_example("ex54", {2, 3, 5, 7, 1, 1}).graph;
        s.flips[0].pairs[0] = {"lam1", "mu2", "mu1", "lam2"};  // lam1.mu2 does not compose
        CHECK(first_code(KGraph::from_spec(s)) == "flip_entry_not_composable");
    }
    SUBCASE("image breaking the range") {
        RawGraphSpec s = generate_example("ex54", {2, 3, 5, 7, 1, 1}).graph;
        s.flips[0].pairs[0] = {"lam1", "mu1", "mu2", "lam1"};  // r(mu2) == right != r(lam1)
        CHECK(first_code(KGraph::from_spec(s)) == "flip_breaks_range");
    }
    SUBCASE("non-injective table") {
        RotationParams p;
        p.k = 2;
        p.V = 1;
        p.shift = {0, 0};
        p.loops = {2, 1};
        p.twist[{0, 1}] = {0, 0};
        RawGraphSpec s = rotation_graph(p);
        // send both (l1, f) keys to the same image
        KGraph g = KGraph::from_spec(s);
        int a0 = g.edge_index(kgk::tests::rotation_edge_id(0, 0, 0));
        int a1 = g.edge_index(kgk::tests::rotation_edge_id(0, 0, 1));
        int b = g.edge_index(kgk::tests::rotation_edge_id(1, 0, 0));
        g.override_flip(0, 1, {a1, b}, {b, a0});
        ValidationResult r = validate_graph(g);
        REQUIRE_FALSE(r.ok);
        bool found = false;
        for (const auto& is : r.issues) found = found || is.code == "flip_not_injective";
        CHECK(found);
    }
}

TEST_CASE("hexagon holds on the commuting grid and on rotation graphs") {
    KGraph omega = KGraph::from_spec(generate_example("omega", {3, 2}).graph);
    HexagonReport r = check_hexagon(omega);
    CHECK(r.ok);
    CHECK(r.triples_checked == 8);

    KGraph qn3 = KGraph::from_spec(generate_example("qn", {3}).graph);
    r = check_hexagon(qn3);
    CHECK(r.ok);
    CHECK(r.triples_checked == 1);

    std::mt19937_64 rng(123);
    for (int t = 0; t < 25; ++t) {
        RotationParams p = kgk::tests::random_rotation(rng, true);
        KGraph g = KGraph::from_spec(rotation_graph(p));
        REQUIRE(validate_graph(g).ok);
        HexagonReport hr = check_hexagon(g);
        CHECK(hr.ok);
    }
}

TEST_CASE("a transposed flip table still validates but fails the hexagon") {
    RotationParams p;
    p.k = 3;
    p.V = 1;
    p.shift = {0, 0, 0};
    p.loops = {2, 2, 1};
    p.twist[{0, 1}] = {1, 0};
    p.twist[{0, 2}] = {0, 1};
    p.twist[{1, 2}] = {0, 0};
    KGraph g = KGraph::from_spec(rotation_graph(p));
    REQUIRE(validate_graph(g).ok);
    REQUIRE(check_hexagon(g).ok);

    // transpose the images of two keys of the (0,1) table sharing a base
    int a0 = g.edge_index(kgk::tests::rotation_edge_id(0, 0, 0));
    int b0 = g.edge_index(kgk::tests::rotation_edge_id(1, 0, 0));
    int b1 = g.edge_index(kgk::tests::rotation_edge_id(1, 0, 1));
    auto entries = g.flip_entries(0, 1);
    std::pair<int, int> img0, img1;
    for (const auto& [key, img] : entries) {
        if (key == std::pair<int, int>{a0, b0}) img0 = img;
        if (key == std::pair<int, int>{a0, b1}) img1 = img;
    }
    g.override_flip(0, 1, {a0, b0}, img1);
    g.override_flip(0, 1, {a0, b1}, img0);

    CHECK(validate_graph(g).ok);
    HexagonReport hr = check_hexagon(g);
    CHECK_FALSE(hr.ok);
    REQUIRE(hr.witness.has_value());

    HexagonReport par = check_hexagon(g, Exec::parallel);
    CHECK_FALSE(par.ok);
    REQUIRE(par.witness.has_value());
    CHECK(par.triples_checked == hr.triples_checked);
    CHECK(par.witness->a == hr.witness->a);
    CHECK(par.witness->b == hr.witness->b);
    CHECK(par.witness->c == hr.witness->c);
    CHECK(par.witness->via_ab == hr.witness->via_ab);
    CHECK(par.witness->via_bc == hr.witness->via_bc);
}

TEST_CASE("serial and parallel hexagon agree on passing graphs") {
    KGraph g = KGraph::from_spec(generate_example("free_loops", {3, 3}).graph);
    HexagonReport s = check_hexagon(g, Exec::serial);
    HexagonReport p = check_hexagon(g, Exec::parallel);
    CHECK(s.ok);
    CHECK(p.ok);
    CHECK(s.triples_checked == p.triples_checked);
    CHECK(s.triples_checked == 27);
}
