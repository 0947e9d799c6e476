#ifndef KGK_SKEW_HPP
#define KGK_SKEW_HPP

#include <map>
#include <optional>
#include <string>

#include "kgk/degree.hpp"
#include "kgk/fiber.hpp"

namespace kgk {

struct SkewHexagonWitness {
    int ci = 0, cj = 0, cl = 0;
    int a = -1, b = -1, c = -1;  // base edges
    QmodZ x1, x2, x3;            // lifted points
};

struct SkewHexagonReport {
    bool ok = true;
    long long triples_checked = 0;
    std::optional<SkewHexagonWitness> witness;
};

/// Associativity of lifted reordering, checked on the circle rather than
/// on any discretized graph: every composable lifted triple with points on
/// the canonical grid is pushed through both flip routes, moving points
/// with the fiber tables, and the outcomes must match. Independent of
/// build_skew_graph, which makes the two usable as cross-checks.
SkewHexagonReport verify_skew_hexagon(const KGraph& g, const Weights& w,
                                      Exec exec = Exec::serial);

/// Discretize the lifted graph at resolution N: vertices and edges pick up
/// a coordinate in Z_N ("id@coordinate"), ranges scale by m, sources by n,
/// and flips transport coordinates through the fiber tables. N must be a
/// multiple of required_resolution(g, w) so every sheet point lands on the
/// grid; the result is a plain unweighted presentation.
RawGraphSpec build_skew_graph(const KGraph& g, const Weights& w, long long N);

struct SkewSamplingWitness {
    int vertex = -1;
    long long start_num = 0;  // the sampled point start_num / sample_den
    Degree p, q;              // undistinguished shift pair
};

struct SkewSamplingReport {
    bool ok = true;
    std::string status = "bounded";
    long long sample_den = 0;
    Degree shift_bound;
    long long starts_checked = 0;
    std::optional<SkewSamplingWitness> witness;
};

/// Aperiodicity evidence for the lifted dynamics, by sampling circle
/// points with denominator coprime to all windings. Needs a base graph
/// where continuations are forced (exactly one incoming edge per color at
/// each vertex, |m| == 1 throughout): tails are then determined by their
/// base vertex and coordinate, so two shifts agree iff those agree, and
/// each pair below the bound is decided exactly.
SkewSamplingReport check_condition_a_skew(const KGraph& g, const Weights& w,
                                          long long sample_den, const Degree& shift_bound);

}  // namespace kgk

#endif
