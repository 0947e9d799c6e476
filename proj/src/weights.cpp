#include "kgk/weights.hpp"

namespace kgk {

Weights Weights::from_raw(const KGraph& g, const RawWeights& raw) {
    for (const auto& [id, v] : raw.m) {
        (void)v;
        if (g.edge_index(id) < 0) throw InputError("weights.m names unknown edge " + id);
    }
    for (const auto& [id, v] : raw.n) {
        (void)v;
        if (g.edge_index(id) < 0) throw InputError("weights.n names unknown edge " + id);
    }
    Weights w;
    w.m_.resize(static_cast<size_t>(g.edge_count()));
    w.n_.resize(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const std::string& id = g.edge(e).id;
        auto im = raw.m.find(id);
        auto in = raw.n.find(id);
        if (im == raw.m.end()) throw InputError("edge " + id + " has no m weight");
        if (in == raw.n.end()) throw InputError("edge " + id + " has no n weight");
        if (im->second == 0) throw InputError("edge " + id + ": m weight must be nonzero");
        if (in->second < 1) throw InputError("edge " + id + ": n weight must be positive");
        w.m_[static_cast<size_t>(e)] = im->second;
        w.n_[static_cast<size_t>(e)] = in->second;
    }
    return w;
}

RawWeights Weights::to_raw(const KGraph& g) const {
    RawWeights raw;
    for (int e = 0; e < g.edge_count(); ++e) {
        raw.m[g.edge(e).id] = m(e);
        raw.n[g.edge(e).id] = n(e);
    }
    return raw;
}

WeightsReport validate_weights(const KGraph& g, const Weights& w) {
    WeightsReport rep;
    auto issue = [&](const std::string& code, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({code, detail});
    };

    // Coprimality over every ordered pair of distinct colors. Both orders
    // matter: the pair and its flip image are each covered here.
    for (int ci = 0; ci < g.rank(); ++ci)
        for (int cj = 0; cj < g.rank(); ++cj) {
            if (ci == cj) continue;
            for (int x : g.edges_of_color(ci))
                for (int y : g.edges_ranged_at(cj, g.edge(x).src)) {
                    long long mm = checked_mul(w.m(x), w.m(y));
                    long long nn = checked_mul(w.n(x), w.n(y));
                    if (gcd_ll(mm, nn) != 1)
                        issue("weights_not_coprime",
                              "pair " + g.edge(x).id + "." + g.edge(y).id + ": |m product| " +
                                  std::to_string(mm < 0 ? -mm : mm) + " shares a factor with " +
                                  "n product " + std::to_string(nn));
                }
        }

    // Flip entries must preserve both products.
    for (int ci = 0; ci < g.rank(); ++ci)
        for (int cj = ci + 1; cj < g.rank(); ++cj)
            for (const auto& [key, img] : g.flip_entries(ci, cj)) {
                long long m_in = checked_mul(w.m(key.first), w.m(key.second));
                long long m_out = checked_mul(w.m(img.first), w.m(img.second));
                if (m_in != m_out)
                    issue("flip_changes_m_product",
                          "flipping " + g.edge(key.first).id + "." + g.edge(key.second).id +
                              " changes the m product from " + std::to_string(m_in) + " to " +
                              std::to_string(m_out));
                long long n_in = checked_mul(w.n(key.first), w.n(key.second));
                long long n_out = checked_mul(w.n(img.first), w.n(img.second));
                if (n_in != n_out)
                    issue("flip_changes_n_product",
                          "flipping " + g.edge(key.first).id + "." + g.edge(key.second).id +
                              " changes the n product from " + std::to_string(n_in) + " to " +
                              std::to_string(n_out));
            }
    return rep;
}

long long working_modulus(const KGraph& g, const Weights& w, int x, int y) {
    if (g.edge(x).src != g.edge(y).rng)
        throw InputError("working_modulus: " + g.edge(x).id + "." + g.edge(y).id +
                         " is not composable");
    long long m = checked_mul(w.m(x), w.m(y));
    return m < 0 ? -m : m;
}

long long required_resolution(const KGraph& g, const Weights& w) {
    long long l = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        long long me = w.m(e);
        l = lcm_ll(l, checked_mul(me < 0 ? -me : me, w.n(e)));
    }
    return l;
}

}  // namespace kgk
