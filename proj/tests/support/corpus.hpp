#ifndef KGK_TESTS_CORPUS_HPP
#define KGK_TESTS_CORPUS_HPP

// Seeded graph corpus shared by the unit suites and the acceptance binary.
//
// The workhorse is the rotation family: V vertices on a ring, each color i
// rotating the ring by a fixed amount a_i with L_i parallel loops, and flip
// tables that add per-color-pair twist constants to the loop indices. The
// rotations commute and the twists act additively and independently per
// color, so every instance satisfies the associativity condition; that
// gives an endless supply of valid graphs whose flips are still varied
// enough to be worth mutating.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kgk/kgraph.hpp"

namespace kgk::tests {

struct RotationParams {
    int k = 1;
    int V = 1;
    std::vector<int> shift;  // a_i, per color
    std::vector<int> loops;  // L_i >= 1, per color
    // twist constants per color pair i < j: first added to the j-side loop
    // index, second to the i-side loop index
    std::map<std::pair<int, int>, std::pair<int, int>> twist;
};

inline std::string rotation_edge_id(int color, int v, int l) {
    return "c" + std::to_string(color + 1) + "v" + std::to_string(v) + "l" + std::to_string(l);
}

inline RawGraphSpec rotation_graph(const RotationParams& p) {
    RawGraphSpec spec;
    spec.rank = p.k;
    for (int v = 0; v < p.V; ++v) spec.vertices.push_back("w" + std::to_string(v));
    auto vid = [&](int v) { return "w" + std::to_string(((v % p.V) + p.V) % p.V); };
    for (int i = 0; i < p.k; ++i)
        for (int v = 0; v < p.V; ++v)
            for (int l = 0; l < p.loops[i]; ++l)
                spec.edges.push_back({rotation_edge_id(i, v, l), i + 1, vid(v + p.shift[i]),
                                      vid(v)});
    for (int i = 0; i < p.k; ++i)
        for (int j = i + 1; j < p.k; ++j) {
            auto [tj, ti] = p.twist.at({i, j});
            RawFlip f;
            f.i = i + 1;
            f.j = j + 1;
            for (int v = 0; v < p.V; ++v)
                for (int l1 = 0; l1 < p.loops[i]; ++l1)
                    for (int l2 = 0; l2 < p.loops[j]; ++l2)
                        f.pairs.push_back(
                            {rotation_edge_id(i, v, l1),
                             rotation_edge_id(j, (v + p.shift[i]) % p.V, l2),
                             rotation_edge_id(j, v, (l2 + tj) % p.loops[j]),
                             rotation_edge_id(i, (v + p.shift[j]) % p.V, (l1 + ti) % p.loops[i])});
            spec.flips.push_back(f);
        }
    return spec;
}

/// Seeded draw: rank 1..3, up to 4 vertices, V * L_i <= 4. When force_rank3
/// is set, also guarantees rank 3 and at least one color with two loops so
/// flip tables have entries to transpose.
inline RotationParams random_rotation(std::mt19937_64& rng, bool force_rank3 = false) {
    RotationParams p;
    p.k = force_rank3 ? 3 : static_cast<int>(rand_range(rng, 1, 3));
    p.V = static_cast<int>(rand_range(rng, 1, force_rank3 ? 2 : 4));
    int max_loops = 4 / p.V;
    for (int i = 0; i < p.k; ++i) {
        p.shift.push_back(static_cast<int>(rand_range(rng, 0, p.V - 1)));
        p.loops.push_back(static_cast<int>(rand_range(rng, 1, max_loops)));
    }
    if (force_rank3)  // V <= 2 leaves room for two parallel loops somewhere
        p.loops[static_cast<size_t>(rand_range(rng, 0, 2))] = 2;
    for (int i = 0; i < p.k; ++i)
        for (int j = i + 1; j < p.k; ++j)
            p.twist[{i, j}] = {static_cast<int>(rand_range(rng, 0, p.loops[j] - 1)),
                               static_cast<int>(rand_range(rng, 0, p.loops[i] - 1))};
    return p;
}

}  // namespace kgk::tests

#endif
