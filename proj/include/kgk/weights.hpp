#ifndef KGK_WEIGHTS_HPP
#define KGK_WEIGHTS_HPP

#include <map>
#include <string>
#include <vector>

#include "kgk/kgraph.hpp"

namespace kgk {

/// Edge weights as read from JSON: exponent m (any nonzero integer) and
/// winding n (positive integer) per edge id.
struct RawWeights {
    std::map<std::string, long long> m;
    std::map<std::string, long long> n;
};

class Weights {
public:
    /// Index raw weights against a graph. Throws InputError when an edge is
    /// missing a weight, an unknown edge id appears, m is zero, or n is not
    /// positive. The arithmetic conditions live in validate_weights.
    static Weights from_raw(const KGraph& g, const RawWeights& raw);

    long long m(int edge) const { return m_[static_cast<size_t>(edge)]; }
    long long n(int edge) const { return n_[static_cast<size_t>(edge)]; }

    RawWeights to_raw(const KGraph& g) const;

private:
    std::vector<long long> m_, n_;
};

struct WeightsReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

/// The two conditions that make the circle extension work:
/// (1) for every composable pair of distinctly colored edges, the m-product
///     (in absolute value) is coprime to the n-product;
/// (2) every flip preserves both the m-product and the n-product.
WeightsReport validate_weights(const KGraph& g, const Weights& w);

/// |m(x) * m(y)| for a composable pair: the modulus of the sheet index
/// arithmetic for that pair.
long long working_modulus(const KGraph& g, const Weights& w, int x, int y);

/// lcm over edges of |m(e)| * n(e): every discretization resolution must be
/// a multiple of this.
long long required_resolution(const KGraph& g, const Weights& w);

}  // namespace kgk

#endif
