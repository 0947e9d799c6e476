#ifndef KGK_FIBER_HPP
#define KGK_FIBER_HPP

#include <array>
#include <optional>

#include "kgk/qmodz.hpp"
#include "kgk/weights.hpp"

namespace kgk {

/// How lifting interacts with one composable pair x.y of distinctly
/// colored edges. Over a circle parameter t, each lift of x.y lives on a
/// sheet indexed by (p1, p2) and the flip carries it to the sheet (q1, q2)
/// of the flipped pair; `rows` stores that index map, sorted by (p1, p2).
/// The table is t-independent, which verify_fiber_laws exercises.
struct FiberPermutation {
    int x = -1, y = -1;  // the pair, in the composable order given
    long long modulus = 1;
    std::vector<std::array<long long, 4>> rows;  // (p1, p2, q1, q2)
};

/// Derived constants of a pair and its flip image, shared by the solver,
/// the oracle and the verifier.
struct PairData {
    int x = -1, y = -1;    // input pair
    int xf = -1, yf = -1;  // flip image: xf carries y's color, yf carries x's
    long long a1 = 0, a2 = 0, b1 = 0, b2 = 0;      // m(x), m(y), n(x), n(y)
    long long Ap = 0, Bp = 0, n1p = 0, n2p = 0;    // m(xf), m(yf), n(xf), n(yf)
    long long M = 1;                                // |a1*a2| == |Ap*Bp|
    int s2 = 1, sB = 1;                             // signs of a2 and Bp
};

PairData pair_data(const KGraph& g, const Weights& w, int x, int y);

/// Sheet map via modular inversion: for each (p1, p2) the congruence
///   n(y) * (n(x) p1 + |m(x)| p2)  ==  sigma * n(yf) * (n(xf) q1 + |m(xf)| q2)  (mod M)
/// has exactly one solution in the (q1, q2) box whenever the weights pass
/// validation, and this computes it directly.
FiberPermutation solve_fiber_congruence(const KGraph& g, const Weights& w, int x, int y);

/// Independent route to the same table: test the congruence against every
/// candidate (q1, q2) and insist on a unique hit. Refuses moduli above
/// 10000; meant as a cross-check, not a production path.
FiberPermutation brute_force_fiber_congruence(const KGraph& g, const Weights& w, int x, int y);

/// Where the flip sends the lifted pair sitting over the circle point
/// (x1, x2). Recovers the sheet index from the point, looks it up in the
/// table, and re-evaluates on the image side with the same parameter.
std::pair<QmodZ, QmodZ> fiber_apply(const KGraph& g, const Weights& w,
                                    const FiberPermutation& perm, const QmodZ& x1,
                                    const QmodZ& x2);

struct FiberLawWitness {
    size_t row = 0;
    long long sample = 0;  // numerator of t over the sample denominator
    std::string law;
};

struct FiberLawReport {
    bool ok = true;
    long long rows_checked = 0;
    long long samples_per_row = 0;
    std::optional<FiberLawWitness> witness;
};

/// Evaluate every table row at every t = a/sample_den and check, exactly:
/// both lifted words stay composable, the flip preserves the lifted range,
/// and it preserves the lifted source. The last law is equivalent to the
/// defining congruence, so a corrupted row fails it at every t. Serial and
/// parallel produce identical reports.
FiberLawReport verify_fiber_laws(const KGraph& g, const Weights& w,
                                 const FiberPermutation& perm, long long sample_den,
                                 Exec exec = Exec::serial);

}  // namespace kgk

#endif
