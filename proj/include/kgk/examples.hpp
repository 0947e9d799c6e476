#ifndef KGK_EXAMPLES_HPP
#define KGK_EXAMPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "kgk/weights.hpp"

namespace kgk {

struct GeneratedExample {
    std::string name;
    std::vector<long long> params;
    RawGraphSpec graph;
    std::optional<RawWeights> weights;
};

/// Built-in families:
///   qn K            one vertex, a loop per color, swap flips, m == 1,
///                    n(loop i) = the i-th prime
///   ex53 p1 q1 ...   like qn but with chosen weights (m_i, n_i) per loop
///   ex54 p0 q0 p1 q1 p2 q2
///                    two vertices, color-1 loops on both, color-2 edges
///                    crossing between them, flips linking the two sides
///   omega k D        the commuting grid truncated at coordinate D
///   free_loops k L   one vertex, L loops per color, swap flips
GeneratedExample generate_example(const std::string& name,
                                  const std::vector<long long>& params);

struct Classification {
    bool condition_a = false;
    bool simple_pi = false;
};

/// Closed-form classification, available for qn, ex53 and ex54 only.
Classification classify_example(const std::string& name,
                                const std::vector<long long>& params);

}  // namespace kgk

#endif
