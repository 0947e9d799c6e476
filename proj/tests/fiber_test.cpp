#include <doctest.h>

#include "kgk/examples.hpp"
#include "kgk/fiber.hpp"

using namespace kgk;

namespace {

struct Loaded {
    KGraph g;
    Weights w;
};

Loaded ex53(std::vector<long long> params) {
    GeneratedExample ex = generate_example("ex53", params);
    KGraph g = KGraph::from_spec(ex.graph);
    Weights w = Weights::from_raw(g, *ex.weights);
    return {std::move(g), std::move(w)};
}

// The reference instance: loops weighted (2,5) and (3,7), modulus 6. The
// image rows below were computed by hand from the sheet congruence
//   7*(5*p1 + 2*p2) == 5*(7*q1 + 3*q2)  (mod 6)
// before any solver existed, and stay frozen as the ground truth.
const std::vector<std::array<long long, 4>> kFrozenRows = {
    {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 2, 2, 0}, {1, 0, 1, 0}, {1, 1, 2, 1}, {1, 2, 0, 1},
};

}  // namespace

TEST_CASE("brute force search reproduces the hand-computed table") {
    Loaded r = ex53({2, 5, 3, 7});
    int x = r.g.edge_index("l1"), y = r.g.edge_index("l2");
    FiberPermutation oracle = brute_force_fiber_congruence(r.g, r.w, x, y);
    CHECK(oracle.modulus == 6);
    CHECK(oracle.rows == kFrozenRows);
}

TEST_CASE("modular solver agrees with the brute force search") {
    struct Instance {
        std::vector<long long> params;
        long long modulus;
    };
    // sign coverage: both positive, negative second loop, negative first loop
    std::vector<Instance> instances = {
        {{2, 5, 3, 7}, 6},
        {{3, 1, -1, 1}, 3},
        {{-4, 3, 5, 3}, 20},
    };
    for (const Instance& inst : instances) {
        CAPTURE(inst.params);
        Loaded r = ex53(inst.params);
        int x = r.g.edge_index("l1"), y = r.g.edge_index("l2");
        FiberPermutation oracle = brute_force_fiber_congruence(r.g, r.w, x, y);
        FiberPermutation solved = solve_fiber_congruence(r.g, r.w, x, y);
        CHECK(solved.modulus == inst.modulus);
        CHECK(solved.modulus == oracle.modulus);
        CHECK(solved.rows == oracle.rows);
        CHECK(static_cast<long long>(solved.rows.size()) == inst.modulus);

        // the reversed pair is its own instance
        FiberPermutation roracle = brute_force_fiber_congruence(r.g, r.w, y, x);
        FiberPermutation rsolved = solve_fiber_congruence(r.g, r.w, y, x);
        CHECK(rsolved.rows == roracle.rows);
    }
}

TEST_CASE("pair_data rejects pairs without a fiber table") {
    Loaded r = ex53({2, 5, 3, 7});
    GeneratedExample free2 = generate_example("free_loops", {1, 2});
    KGraph g1 = KGraph::from_spec(free2.graph);
    Weights trivial = Weights::from_raw(g1, [&] {
        RawWeights raw;
        for (const RawEdge& e : free2.graph.edges) {
            raw.m[e.id] = 1;
            raw.n[e.id] = 1;
        }
        return raw;
    }());
    CHECK_THROWS_AS(pair_data(g1, trivial, 0, 1), InputError);  // same color

    GeneratedExample x54 = generate_example("ex54", {2, 3, 5, 7, 1, 1});
    KGraph g2 = KGraph::from_spec(x54.graph);
    Weights w2 = Weights::from_raw(g2, *x54.weights);
    CHECK_THROWS_AS(
        pair_data(g2, w2, g2.edge_index("lam1"), g2.edge_index("mu2")), InputError);
}

TEST_CASE("solver and oracle both refuse non-coprime weights") {
    Loaded bad = ex53({2, 2, 3, 5});
    int x = bad.g.edge_index("l1"), y = bad.g.edge_index("l2");
    CHECK_THROWS_AS(solve_fiber_congruence(bad.g, bad.w, x, y), InputError);
    CHECK_THROWS_AS(brute_force_fiber_congruence(bad.g, bad.w, x, y), InputError);
}

TEST_CASE("fiber_apply matches the table on points over t = 0") {
    Loaded r = ex53({2, 5, 3, 7});
    FiberPermutation perm =
        solve_fiber_congruence(r.g, r.w, r.g.edge_index("l1"), r.g.edge_index("l2"));
    for (const auto& row : perm.rows) {
        QmodZ x1(row[0], 2);           // p1 / |m(l1)|
        QmodZ x2(5 * row[0] + 2 * row[1], 6);
        auto [y1, y2] = fiber_apply(r.g, r.w, perm, x1, x2);
        CHECK(y1 == QmodZ(row[2], 3));
        CHECK(y2 == QmodZ(7 * row[2] + 3 * row[3], 6));
    }
}

TEST_CASE("fiber_apply outputs satisfy the lift laws at generic parameters") {
    Loaded r = ex53({-4, 3, 5, 3});
    int xe = r.g.edge_index("l1"), ye = r.g.edge_index("l2");
    PairData d = pair_data(r.g, r.w, xe, ye);
    FiberPermutation perm = solve_fiber_congruence(r.g, r.w, xe, ye);
    for (long long a = 0; a < 7; ++a) {
        QmodZ t(a, 7);
        for (const auto& row : {perm.rows[0], perm.rows[7], perm.rows[19]}) {
            QmodZ x1 = root_pow(t, d.a2) + QmodZ(row[0], 4);
            QmodZ x2 = root_pow(t, d.b1) +
                       QmodZ(d.s2 * (d.b1 * row[0] + 4 * row[1]), d.M);
            auto [y1, y2] = fiber_apply(r.g, r.w, perm, x1, x2);
            CHECK(root_pow(x1, d.a1) == root_pow(y1, d.Ap));    // lifted range kept
            CHECK(root_pow(x2, d.b2) == root_pow(y2, d.n2p));   // lifted source kept
            CHECK(root_pow(y1, d.n1p) == root_pow(y2, d.Bp));   // image stays composable
        }
    }
    CHECK_THROWS_AS(fiber_apply(r.g, r.w, perm, QmodZ(), QmodZ(1, 13)), InputError);
}

TEST_CASE("fiber laws hold for solved tables at aligned and coarse denominators") {
    Loaded r = ex53({2, 5, 3, 7});
    FiberPermutation perm =
        solve_fiber_congruence(r.g, r.w, r.g.edge_index("l1"), r.g.edge_index("l2"));
    for (long long den : {6, 3, 5}) {
        FiberLawReport s = verify_fiber_laws(r.g, r.w, perm, den, Exec::serial);
        CHECK(s.ok);
        CHECK(s.rows_checked == 6);
        CHECK(s.samples_per_row == den);
        FiberLawReport p = verify_fiber_laws(r.g, r.w, perm, den, Exec::parallel);
        CHECK(p.ok == s.ok);
    }
}

TEST_CASE("a corrupted row fails the source law at every parameter") {
    Loaded r = ex53({2, 5, 3, 7});
    FiberPermutation perm =
        solve_fiber_congruence(r.g, r.w, r.g.edge_index("l1"), r.g.edge_index("l2"));
    perm.rows[2][2] = (perm.rows[2][2] + 1) % 3;
    for (long long den : {6, 3}) {
        FiberLawReport s = verify_fiber_laws(r.g, r.w, perm, den, Exec::serial);
        CHECK_FALSE(s.ok);
        REQUIRE(s.witness.has_value());
        CHECK(s.witness->row == 2);
        CHECK(s.witness->sample == 0);
        CHECK(s.witness->law == "source_preserved");
        FiberLawReport p = verify_fiber_laws(r.g, r.w, perm, den, Exec::parallel);
        REQUIRE(p.witness.has_value());
        CHECK(p.witness->row == s.witness->row);
        CHECK(p.witness->sample == s.witness->sample);
        CHECK(p.witness->law == s.witness->law);
    }
}

TEST_CASE("verify_fiber_laws rejects malformed inputs") {
    Loaded r = ex53({2, 5, 3, 7});
    FiberPermutation perm =
        solve_fiber_congruence(r.g, r.w, r.g.edge_index("l1"), r.g.edge_index("l2"));
    CHECK_THROWS_AS(verify_fiber_laws(r.g, r.w, perm, 0), InputError);
    perm.rows.pop_back();
    CHECK_THROWS_AS(verify_fiber_laws(r.g, r.w, perm, 6), InputError);
}
