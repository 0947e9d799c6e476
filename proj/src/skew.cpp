#include "kgk/skew.hpp"

#include <algorithm>

#ifdef KGK_HAVE_OPENMP
#include <omp.h>
#endif

namespace kgk {

namespace {

long long mod_norm(long long v, long long mod) {
    v %= mod;
    if (v < 0) v += mod;
    return v;
}

struct TableCache {
    const KGraph& g;
    const Weights& w;
    std::map<std::pair<int, int>, FiberPermutation> tables;

    const FiberPermutation& get(int x, int y) {
        auto it = tables.find({x, y});
        if (it == tables.end())
            it = tables.emplace(std::make_pair(x, y), solve_fiber_congruence(g, w, x, y)).first;
        return it->second;
    }
};

struct LiftedWord3 {
    std::array<int, 3> edges;
    std::array<QmodZ, 3> points;
    bool operator==(const LiftedWord3& o) const {
        return edges == o.edges && points == o.points;
    }
};

LiftedWord3 route_ab_first(const KGraph& g, const Weights& w, TableCache& tc, int a, int b,
                           int c, const QmodZ& x1, const QmodZ& x2, const QmodZ& x3) {
    auto [b1e, a1e] = g.apply_flip(a, b);
    auto [yb1, ya1] = fiber_apply(g, w, tc.get(a, b), x1, x2);
    auto [c1e, a2e] = g.apply_flip(a1e, c);
    auto [yc1, ya2] = fiber_apply(g, w, tc.get(a1e, c), ya1, x3);
    auto [c2e, b2e] = g.apply_flip(b1e, c1e);
    auto [yc2, yb2] = fiber_apply(g, w, tc.get(b1e, c1e), yb1, yc1);
    return {{c2e, b2e, a2e}, {yc2, yb2, ya2}};
}

LiftedWord3 route_bc_first(const KGraph& g, const Weights& w, TableCache& tc, int a, int b,
                           int c, const QmodZ& x1, const QmodZ& x2, const QmodZ& x3) {
    auto [c1p, b1p] = g.apply_flip(b, c);
    auto [yc1, yb1] = fiber_apply(g, w, tc.get(b, c), x2, x3);
    auto [c2p, a1p] = g.apply_flip(a, c1p);
    auto [yc2, ya1] = fiber_apply(g, w, tc.get(a, c1p), x1, yc1);
    auto [b2p, a2p] = g.apply_flip(a1p, b1p);
    auto [yb2, ya2] = fiber_apply(g, w, tc.get(a1p, b1p), ya1, yb1);
    return {{c2p, b2p, a2p}, {yc2, yb2, ya2}};
}

}  // namespace

SkewHexagonReport verify_skew_hexagon(const KGraph& g, const Weights& w, Exec exec) {
    SkewHexagonReport rep;
    if (g.rank() < 3) return rep;
    long long W = required_resolution(g, w);

    // coordinate_fibers[e][r] = grid coordinates v with m(e)*v == r (mod W)
    std::vector<std::vector<std::vector<long long>>> coordinate_fibers(
        static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto& rows = coordinate_fibers[static_cast<size_t>(e)];
        rows.assign(static_cast<size_t>(W), {});
        for (long long v = 0; v < W; ++v)
            rows[static_cast<size_t>(mod_norm(checked_mul(w.m(e), v), W))].push_back(v);
    }

    for (int ci = 0; ci < g.rank() && !rep.witness; ++ci)
        for (int cj = ci + 1; cj < g.rank() && !rep.witness; ++cj)
            for (int cl = cj + 1; cl < g.rank() && !rep.witness; ++cl) {
                std::vector<std::array<int, 3>> triples;
                for (int a : g.edges_of_color(ci))
                    for (int b : g.edges_ranged_at(cj, g.edge(a).src))
                        for (int c : g.edges_ranged_at(cl, g.edge(b).src))
                            triples.push_back({a, b, c});

                // Solve every fiber table either route can touch before the
                // parallel region; lookups are then read-only.
                TableCache tc{g, w, {}};
                for (const auto& [a, b, c] : triples) {
                    auto [b1e, a1e] = g.apply_flip(a, b);
                    auto [c1e, a2e] = g.apply_flip(a1e, c);
                    (void)a2e;
                    auto [c1p, b1p] = g.apply_flip(b, c);
                    auto [c2p, a1p] = g.apply_flip(a, c1p);
                    (void)c2p;
                    tc.get(a, b);
                    tc.get(a1e, c);
                    tc.get(b1e, c1e);
                    tc.get(b, c);
                    tc.get(a, c1p);
                    tc.get(a1p, b1p);
                }

                long long count = 0;
                long long best_rank = -1;
                SkewHexagonWitness best;
                std::string deferred_error;

                for (size_t ti = 0; ti < triples.size(); ++ti) {
                    auto [a, b, c] = triples[ti];
                    const auto& vs_of = coordinate_fibers[static_cast<size_t>(b)];
                    const auto& zs_of = coordinate_fibers[static_cast<size_t>(c)];

                    auto body = [&](long long u, long long& lcount, long long& lrank,
                                    SkewHexagonWitness& lbest) {
                        QmodZ x1(u, W);
                        const auto& vs = vs_of[static_cast<size_t>(
                            mod_norm(checked_mul(w.n(a), u), W))];
                        for (long long v : vs) {
                            QmodZ x2(v, W);
                            const auto& zs = zs_of[static_cast<size_t>(
                                mod_norm(checked_mul(w.n(b), v), W))];
                            for (long long z : zs) {
                                QmodZ x3(z, W);
                                ++lcount;
                                LiftedWord3 lhs =
                                    route_ab_first(g, w, tc, a, b, c, x1, x2, x3);
                                LiftedWord3 rhs =
                                    route_bc_first(g, w, tc, a, b, c, x1, x2, x3);
                                if (!(lhs == rhs)) {
                                    long long r = (static_cast<long long>(ti) * W + u) * W + v;
                                    r = r * W + z;
                                    if (lrank < 0 || r < lrank) {
                                        lrank = r;
                                        lbest = SkewHexagonWitness{ci, cj, cl, a,
                                                                   b,  c,  x1, x2, x3};
                                    }
                                }
                            }
                        }
                    };

                    if (exec == Exec::parallel) {
#ifdef KGK_HAVE_OPENMP
#pragma omp parallel
                        {
                            long long lcount = 0, lrank = -1;
                            SkewHexagonWitness lbest;
#pragma omp for schedule(dynamic, 4) nowait
                            for (long long u = 0; u < W; ++u) {
                                try {
                                    body(u, lcount, lrank, lbest);
                                } catch (const std::exception& ex) {
#pragma omp critical(kgk_skewhex_error)
                                    deferred_error = ex.what();
                                }
                            }
#pragma omp critical(kgk_skewhex_merge)
                            {
                                count += lcount;
                                if (lrank >= 0 && (best_rank < 0 || lrank < best_rank)) {
                                    best_rank = lrank;
                                    best = lbest;
                                }
                            }
                        }
#else
                        exec = Exec::serial;
#endif
                    }
                    if (exec == Exec::serial)
                        for (long long u = 0; u < W; ++u) body(u, count, best_rank, best);
                }

                if (!deferred_error.empty()) throw InputError(deferred_error);
                rep.triples_checked += count;
                if (best_rank >= 0) {
                    rep.ok = false;
                    rep.witness = best;
                }
            }
    return rep;
}

RawGraphSpec build_skew_graph(const KGraph& g, const Weights& w, long long N) {
    long long L = required_resolution(g, w);
    if (N < 1 || N % L != 0)
        throw InputError("resolution " + std::to_string(N) + " must be a positive multiple of " +
                         std::to_string(L) + " (the lcm of |m|*n over all edges)");
    {
        WeightsReport wr = validate_weights(g, w);
        if (!wr.ok)
            throw InputError("weights fail validation (" + wr.issues.front().code +
                             "); the lifted graph would not be well defined");
    }

    RawGraphSpec out;
    out.rank = g.rank();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (long long a = 0; a < N; ++a)
            out.vertices.push_back(g.vertex(v).id + "@" + std::to_string(a));

    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        for (long long u = 0; u < N; ++u) {
            RawEdge re;
            re.id = ed.id + "@" + std::to_string(u);
            re.color = ed.color + 1;
            re.rng = g.vertex(ed.rng).id + "@" + std::to_string(mod_norm(checked_mul(w.m(e), u), N));
            re.src = g.vertex(ed.src).id + "@" + std::to_string(mod_norm(checked_mul(w.n(e), u), N));
            out.edges.push_back(re);
        }
    }

    auto grid_index = [N](const QmodZ& z, const char* what) {
        if (N % z.den() != 0)
            throw InternalError(std::string("lifted point left the grid while building: ") +
                                what);
        return z.num() * (N / z.den());
    };

    TableCache tc{g, w, {}};
    for (int ci = 0; ci < g.rank(); ++ci)
        for (int cj = ci + 1; cj < g.rank(); ++cj) {
            RawFlip blk;
            blk.i = ci + 1;
            blk.j = cj + 1;
            for (int a : g.edges_of_color(ci))
                for (int b : g.edges_ranged_at(cj, g.edge(a).src)) {
                    const FiberPermutation& table = tc.get(a, b);
                    auto [xf, yf] = g.apply_flip(a, b);
                    for (long long u = 0; u < N; ++u) {
                        long long want = mod_norm(checked_mul(w.n(a), u), N);
                        for (long long v = 0; v < N; ++v) {
                            if (mod_norm(checked_mul(w.m(b), v), N) != want) continue;
                            auto [y1, y2] = fiber_apply(g, w, table, QmodZ(u, N), QmodZ(v, N));
                            blk.pairs.push_back(
                                {g.edge(a).id + "@" + std::to_string(u),
                                 g.edge(b).id + "@" + std::to_string(v),
                                 g.edge(xf).id + "@" + std::to_string(grid_index(y1, "first")),
                                 g.edge(yf).id + "@" + std::to_string(grid_index(y2, "second"))});
                        }
                    }
                }
            out.flips.push_back(std::move(blk));
        }
    return out;
}

SkewSamplingReport check_condition_a_skew(const KGraph& g, const Weights& w,
                                          long long sample_den, const Degree& shift_bound) {
    if (shift_bound.rank() != g.rank())
        throw InputError("check_condition_a_skew: shift bound rank mismatch");
    if (sample_den < 2) throw InputError("check_condition_a_skew: sample denominator must be >= 2");
    for (int e = 0; e < g.edge_count(); ++e) {
        if (w.m(e) != 1 && w.m(e) != -1)
            throw InputError("check_condition_a_skew needs |m| == 1 everywhere so lifts are "
                             "forced; edge " + g.edge(e).id + " has m = " + std::to_string(w.m(e)));
        if (gcd_ll(sample_den, w.n(e)) != 1)
            throw InputError("sample denominator " + std::to_string(sample_den) +
                             " shares a factor with n(" + g.edge(e).id + ") = " +
                             std::to_string(w.n(e)) + "; sampled orbits would collapse");
    }
    for (int c = 0; c < g.rank(); ++c)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.edges_ranged_at(c, v).size() != 1)
                throw InputError("check_condition_a_skew needs exactly one incoming color-" +
                                 std::to_string(c + 1) + " edge per vertex; vertex " +
                                 g.vertex(v).id + " has " +
                                 std::to_string(g.edges_ranged_at(c, v).size()));

    SkewSamplingReport rep;
    rep.sample_den = sample_den;
    rep.shift_bound = shift_bound;

    std::vector<Degree> shifts = degrees_up_to(shift_bound);

    // Tail of the sampled path after removing a degree-p head: walk the
    // forced edges color by color; the coordinate scales by m*n per step.
    auto tail_state = [&](int v, const QmodZ& z, const Degree& p) {
        int at = v;
        QmodZ coord = z;
        for (int c = 0; c < g.rank(); ++c)
            for (int step = 0; step < p[c]; ++step) {
                int e = g.edges_ranged_at(c, at)[0];
                at = g.edge(e).src;
                coord = root_pow(coord, checked_mul(w.m(e), w.n(e)));
            }
        return std::make_pair(at, coord);
    };

    for (int v = 0; v < g.vertex_count(); ++v)
        for (long long a = 1; a < sample_den; ++a) {
            if (gcd_ll(a, sample_den) != 1) continue;
            ++rep.starts_checked;
            QmodZ z(a, sample_den);
            std::vector<std::pair<int, QmodZ>> states;
            states.reserve(shifts.size());
            for (const Degree& p : shifts) states.push_back(tail_state(v, z, p));
            for (size_t i = 0; i < shifts.size(); ++i)
                for (size_t j = i + 1; j < shifts.size(); ++j)
                    if (states[i] == states[j]) {
                        rep.ok = false;
                        rep.witness = SkewSamplingWitness{v, a, shifts[i], shifts[j]};
                        return rep;
                    }
        }
    return rep;
}

}  // namespace kgk
