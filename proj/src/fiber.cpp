#include "kgk/fiber.hpp"

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

long long mod_inverse(long long a, long long mod) {
    // extended euclid; a need not be reduced
    long long r0 = mod, r1 = mod_norm(a, mod);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw InputError("modular inverse of " + std::to_string(a) + " mod " +
                         std::to_string(mod) + " does not exist; the weights fail coprimality");
    return mod_norm(t0, mod);
}

long long abs_ll(long long v) { return v < 0 ? -v : v; }

}  // namespace

PairData pair_data(const KGraph& g, const Weights& w, int x, int y) {
    if (g.edge(x).color == g.edge(y).color)
        throw InputError("fiber tables exist only for pairs of distinct colors, got " +
                         g.edge(x).id + "." + g.edge(y).id);
    if (g.edge(x).src != g.edge(y).rng)
        throw InputError("pair " + g.edge(x).id + "." + g.edge(y).id + " is not composable");
    PairData d;
    d.x = x;
    d.y = y;
    auto [xf, yf] = g.apply_flip(x, y);
    d.xf = xf;
    d.yf = yf;
    d.a1 = w.m(x);
    d.a2 = w.m(y);
    d.b1 = w.n(x);
    d.b2 = w.n(y);
    d.Ap = w.m(xf);
    d.Bp = w.m(yf);
    d.n1p = w.n(xf);
    d.n2p = w.n(yf);
    d.M = abs_ll(checked_mul(d.a1, d.a2));
    if (d.M != abs_ll(checked_mul(d.Ap, d.Bp)))
        throw InputError("pair " + g.edge(x).id + "." + g.edge(y).id +
                         ": flip changes |m product|, weights fail validation");
    d.s2 = d.a2 < 0 ? -1 : 1;
    d.sB = d.Bp < 0 ? -1 : 1;
    return d;
}

namespace {

long long congruence_lhs(const PairData& d, long long p1, long long p2) {
    return mod_norm(
        checked_mul(d.b2, checked_add(checked_mul(d.b1, p1), checked_mul(abs_ll(d.a1), p2))),
        d.M);
}

long long congruence_rhs(const PairData& d, long long q1, long long q2) {
    long long inner = checked_add(checked_mul(d.n1p, q1), checked_mul(abs_ll(d.Ap), q2));
    long long v = checked_mul(d.n2p, inner);
    if (d.s2 * d.sB < 0) v = -v;
    return mod_norm(v, d.M);
}

}  // namespace

FiberPermutation solve_fiber_congruence(const KGraph& g, const Weights& w, int x, int y) {
    PairData d = pair_data(g, w, x, y);
    FiberPermutation perm;
    perm.x = x;
    perm.y = y;
    perm.modulus = d.M;

    long long A = abs_ll(d.Ap), B = abs_ll(d.Bp);
    long long sigma = d.s2 * d.sB;
    long long inv_n2p = mod_inverse(d.n2p, d.M);
    long long inv_n1p_A = A == 1 ? 0 : mod_inverse(d.n1p, A);

    for (long long p1 = 0; p1 < abs_ll(d.a1); ++p1)
        for (long long p2 = 0; p2 < abs_ll(d.a2); ++p2) {
            long long lhs = congruence_lhs(d, p1, p2);
            long long u = mod_norm(checked_mul(inv_n2p, lhs), d.M);
            if (sigma < 0) u = mod_norm(-u, d.M);
            // solve n1p*q1 + A*q2 == u (mod M) with q1 in Z_A, q2 in Z_B
            long long q1 = A == 1 ? 0 : mod_norm(checked_mul(inv_n1p_A, u % A), A);
            long long v = mod_norm(u - checked_mul(d.n1p, q1), d.M);
            if (v % A != 0)
                throw InternalError("fiber congruence solver: residue not divisible by |m(xf)|");
            long long q2 = (v / A) % B;
            perm.rows.push_back({p1, p2, q1, q2});
        }
    return perm;
}

FiberPermutation brute_force_fiber_congruence(const KGraph& g, const Weights& w, int x, int y) {
    PairData d = pair_data(g, w, x, y);
    if (d.M > 10000)
        throw InputError("brute force fiber table limited to modulus <= 10000, got " +
                         std::to_string(d.M));
    FiberPermutation perm;
    perm.x = x;
    perm.y = y;
    perm.modulus = d.M;

    for (long long p1 = 0; p1 < abs_ll(d.a1); ++p1)
        for (long long p2 = 0; p2 < abs_ll(d.a2); ++p2) {
            long long lhs = congruence_lhs(d, p1, p2);
            std::optional<std::pair<long long, long long>> hit;
            long long hits = 0;
            for (long long q1 = 0; q1 < abs_ll(d.Ap); ++q1)
                for (long long q2 = 0; q2 < abs_ll(d.Bp); ++q2)
                    if (congruence_rhs(d, q1, q2) == lhs) {
                        ++hits;
                        if (!hit) hit = {q1, q2};
                    }
            if (hits != 1)
                throw InputError("weights give " + std::to_string(hits) +
                                 " image sheets for sheet (" + std::to_string(p1) + "," +
                                 std::to_string(p2) + ") of pair " + g.edge(x).id + "." +
                                 g.edge(y).id + "; a valid weighting gives exactly one");
            perm.rows.push_back({p1, p2, hit->first, hit->second});
        }
    return perm;
}

namespace {

/// First t with (a1*a2) * t == target on the circle.
QmodZ base_parameter(const PairData& d, const QmodZ& target) {
    long long P = checked_mul(d.a1, d.a2);
    if (P > 0) return root_preimages(target, P).front();
    return root_preimages(QmodZ(0, 1) - target, -P).front();
}

long long exact_scaled(const QmodZ& z, long long scale, const char* what) {
    // z * scale must be an integer
    long long num = checked_mul(z.num(), scale);
    if (num % z.den() != 0)
        throw InputError(std::string("point is not on any sheet: ") + what);
    return num / z.den();
}

}  // namespace

std::pair<QmodZ, QmodZ> fiber_apply(const KGraph& g, const Weights& w,
                                    const FiberPermutation& perm, const QmodZ& x1,
                                    const QmodZ& x2) {
    PairData d = pair_data(g, w, perm.x, perm.y);
    long long a1a = abs_ll(d.a1), a2a = abs_ll(d.a2);
    long long Aa = abs_ll(d.Ap);

    QmodZ t = base_parameter(d, root_pow(x1, d.a1));
    long long p1 = mod_norm(exact_scaled(x1 - root_pow(t, d.a2), a1a, "p1 not integral"), a1a);
    long long raw = exact_scaled(x2 - root_pow(t, d.b1), d.M, "p2 not integral");
    long long wv = mod_norm(d.s2 * raw - checked_mul(d.b1, p1), d.M);
    if (wv % a1a != 0)
        throw InputError("point is not on any sheet: offset not divisible by |m(x)|");
    long long p2 = (wv / a1a) % a2a;

    size_t idx = static_cast<size_t>(p1 * a2a + p2);
    if (idx >= perm.rows.size() || perm.rows[idx][0] != p1 || perm.rows[idx][1] != p2)
        throw InternalError("fiber table rows are not in canonical order");
    long long q1 = perm.rows[idx][2], q2 = perm.rows[idx][3];

    QmodZ y1 = root_pow(t, d.Bp) + QmodZ(q1, Aa);
    QmodZ y2 = root_pow(t, d.n1p) +
               QmodZ(d.sB * checked_add(checked_mul(d.n1p, q1), checked_mul(Aa, q2)), d.M);
    return {y1, y2};
}

namespace {

/// 0 when all laws hold at (row, t); otherwise an index into the law table.
int eval_row(const PairData& d, const std::array<long long, 4>& row, const QmodZ& t) {
    long long a1a = d.a1 < 0 ? -d.a1 : d.a1;
    long long Aa = d.Ap < 0 ? -d.Ap : d.Ap;
    QmodZ x1 = root_pow(t, d.a2) + QmodZ(row[0], a1a);
    QmodZ x2 = root_pow(t, d.b1) +
               QmodZ(d.s2 * checked_add(checked_mul(d.b1, row[0]), checked_mul(a1a, row[1])),
                     d.M);
    QmodZ y1 = root_pow(t, d.Bp) + QmodZ(row[2], Aa);
    QmodZ y2 = root_pow(t, d.n1p) +
               QmodZ(d.sB * checked_add(checked_mul(d.n1p, row[2]), checked_mul(Aa, row[3])),
                     d.M);
    if (root_pow(x1, d.b1) != root_pow(x2, d.a2)) return 1;
    if (root_pow(y1, d.n1p) != root_pow(y2, d.Bp)) return 2;
    if (root_pow(x1, d.a1) != root_pow(y1, d.Ap)) return 3;
    if (root_pow(x2, d.b2) != root_pow(y2, d.n2p)) return 4;
    return 0;
}

const char* law_name(int code) {
    switch (code) {
        case 1: return "input_pair_composable";
        case 2: return "image_pair_composable";
        case 3: return "range_preserved";
        default: return "source_preserved";
    }
}

}  // namespace

FiberLawReport verify_fiber_laws(const KGraph& g, const Weights& w, const FiberPermutation& perm,
                                 long long sample_den, Exec exec) {
    if (sample_den < 1) throw InputError("verify_fiber_laws: sample denominator must be >= 1");
    PairData d = pair_data(g, w, perm.x, perm.y);
    if (static_cast<long long>(perm.rows.size()) !=
        checked_mul(d.a1 < 0 ? -d.a1 : d.a1, d.a2 < 0 ? -d.a2 : d.a2))
        throw InputError("fiber table for " + g.edge(perm.x).id + "." + g.edge(perm.y).id +
                         " has the wrong number of rows");

    FiberLawReport rep;
    rep.rows_checked = static_cast<long long>(perm.rows.size());
    rep.samples_per_row = sample_den;

    long long total = checked_mul(rep.rows_checked, sample_den);
    long long bad_rank = -1;
    int bad_law = 0;

    if (exec == Exec::parallel) {
#ifdef KGK_HAVE_OPENMP
#pragma omp parallel
        {
            long long local_rank = -1;
            int local_law = 0;
#pragma omp for schedule(static) nowait
            for (long long i = 0; i < total; ++i) {
                long long row = i / sample_den, a = i % sample_den;
                int code = eval_row(d, perm.rows[static_cast<size_t>(row)],
                                    QmodZ(a, sample_den));
                if (code && (local_rank < 0 || i < local_rank)) {
                    local_rank = i;
                    local_law = code;
                }
            }
#pragma omp critical(kgk_fiber_merge)
            if (local_rank >= 0 && (bad_rank < 0 || local_rank < bad_rank)) {
                bad_rank = local_rank;
                bad_law = local_law;
            }
        }
#else
        exec = Exec::serial;
#endif
    }
    if (exec == Exec::serial) {
        for (long long i = 0; i < total && bad_rank < 0; ++i) {
            long long row = i / sample_den, a = i % sample_den;
            int code = eval_row(d, perm.rows[static_cast<size_t>(row)], QmodZ(a, sample_den));
            if (code) {
                bad_rank = i;
                bad_law = code;
            }
        }
    }

    if (bad_rank >= 0) {
        rep.ok = false;
        rep.witness = FiberLawWitness{static_cast<size_t>(bad_rank / sample_den),
                                      bad_rank % sample_den, law_name(bad_law)};
    }
    return rep;
}

}  // namespace kgk
