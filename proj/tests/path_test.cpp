#include <doctest.h>

#include <set>

#include "kgk/examples.hpp"
#include "kgk/path.hpp"

using namespace kgk;

namespace {

KGraph crossing() {
    return KGraph::from_spec(generate_example("ex54", {2, 3, 5, 7, 1, 1}).graph);
}

}  // namespace

TEST_CASE("canonical form sorts colors using the flips") {
    KGraph g = crossing();

    Path p = make_path_ids(g, {"mu1", "lam2"});
    CHECK(p.word == std::vector<int>{g.edge_index("lam1"), g.edge_index("mu1")});
    CHECK(p.base == g.vertex_index("left"));

    // already canonical words are untouched
    Path q = make_path_ids(g, {"lam1", "mu1"});
    CHECK(p == q);

    // a longer word: two inversions to fix, one of them created mid-sort
    Path r = make_path_ids(g, {"lam1", "mu1", "lam2", "mu2"});
    CHECK(r.word == std::vector<int>{g.edge_index("lam1"), g.edge_index("lam1"),
                                     g.edge_index("mu1"), g.edge_index("mu2")});

    CHECK_THROWS_AS(make_path_ids(g, {"lam1", "mu2"}), InputError);  // not composable
    CHECK_THROWS_AS(make_path_ids(g, {"nope"}), InputError);
}

TEST_CASE("path accessors") {
    KGraph g = crossing();
    Path v = vertex_path(g, g.vertex_index("right"));
    CHECK(path_degree(g, v).is_zero());
    CHECK(path_rng(g, v) == g.vertex_index("right"));
    CHECK(path_src(g, v) == g.vertex_index("right"));
    CHECK(path_to_string(g, v) == "right");

    Path p = make_path_ids(g, {"mu1", "lam2"});
    CHECK(path_degree(g, p) == Degree({1, 1}));
    CHECK(path_rng(g, p) == g.vertex_index("left"));
    CHECK(path_src(g, p) == g.vertex_index("right"));
    CHECK(path_to_string(g, p) == "lam1.mu1");
}

TEST_CASE("compose normalizes and checks composability") {
    KGraph g = crossing();
    Path a = make_path_ids(g, {"mu1"});
    Path b = make_path_ids(g, {"lam2"});
    Path ab = compose(g, a, b);
    CHECK(ab == make_path_ids(g, {"lam1", "mu1"}));
    CHECK(compose(g, vertex_path(g, a.base), a) == a);
    CHECK_THROWS_AS(compose(g, b, a), InputError);  // s(lam2) == right, r(mu1) == left
}

TEST_CASE("segment cuts at both ends and composes back") {
    KGraph g = crossing();
    Path p = make_path_ids(g, {"lam1", "mu1", "lam2", "mu2"});
    Degree d = path_degree(g, p);
    CHECK(d == Degree({2, 2}));

    // all two-part splits reassemble
    for (const Degree& m : degrees_up_to(d)) {
        Path head = segment(g, p, Degree::zero(2), m);
        Path tail = segment(g, p, m, d);
        CHECK(path_degree(g, head) == m);
        CHECK(compose(g, head, tail) == p);
    }

    // the degree-zero factor in the middle is a vertex with the right base
    Path mid = segment(g, p, Degree({1, 1}), Degree({1, 1}));
    CHECK(path_degree(g, mid).is_zero());
    CHECK(mid.base == path_src(g, segment(g, p, Degree::zero(2), Degree({1, 1}))));

    CHECK_THROWS_AS(segment(g, p, Degree({1, 0}), Degree({0, 1})), InputError);
    CHECK_THROWS_AS(segment(g, p, Degree::zero(2), Degree({3, 0})), InputError);
}

TEST_CASE("enumerate_paths lists each degree slice sorted") {
    KGraph g = crossing();
    std::vector<Path> got = enumerate_paths(g, g.vertex_index("left"), Degree({1, 1}));
    REQUIRE(got.size() == 1);
    CHECK(got[0] == make_path_ids(g, {"lam1", "mu1"}));

    KGraph h = KGraph::from_spec(generate_example("free_loops", {2, 2}).graph);
    std::vector<Path> all = enumerate_paths(h, 0, Degree({2, 1}));
    CHECK(all.size() == 8);  // 2 choices per letter
    std::set<Path> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    for (const Path& p : all) CHECK(count_paths(h, 0, path_degree(h, p)) == 8);
}

TEST_CASE("count_paths matches enumeration and survives big counts") {
    KGraph h = KGraph::from_spec(generate_example("free_loops", {2, 2}).graph);
    for (const Degree& m : degrees_up_to(Degree({3, 3}))) {
        long long want = 1;
        for (int i = 0; i < m.total(); ++i) want *= 2;
        CHECK(count_paths(h, 0, m) == want);
        CHECK(static_cast<long long>(enumerate_paths(h, 0, m).size()) == want);
    }
    // 2^128 paths of this degree: the count must refuse, not wrap
    KGraph big = KGraph::from_spec(generate_example("free_loops", {1, 2}).graph);
    CHECK_THROWS_AS(count_paths(big, 0, Degree({128})), InputError);
}

TEST_CASE("row-finiteness check reports the first starved vertex") {
    KGraph g = crossing();
    RowFiniteReport r = check_row_finite_no_source(g, Degree({2, 2}));
    CHECK(r.ok);
    CHECK_FALSE(r.witness.has_value());
    REQUIRE(r.min_counts.size() == 3);  // the two generators, then the degree itself
    CHECK(r.min_counts[0].first == Degree({1, 0}));
    CHECK(r.min_counts[0].second == 1);
    CHECK(r.min_counts[2].first == Degree({2, 2}));
    CHECK(r.min_counts[2].second == 1);

    // the truncated grid starves its far corner
    KGraph omega = KGraph::from_spec(generate_example("omega", {2, 2}).graph);
    r = check_row_finite_no_source(omega, Degree({1, 1}));
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->second == Degree({1, 0}));
    CHECK(omega.vertex(r.witness->first).id == "2_0");
}
