#include "kgk/infinite_path.hpp"

#include <algorithm>

namespace kgk {

InfPath make_inf_path(const KGraph& g, const Path& prefix, const Path& cycle) {
    if (!path_degree(g, cycle).strictly_positive())
        throw InputError("infinite path: the cycle must use every color, its degree is " +
                         path_degree(g, cycle).to_string());
    if (path_rng(g, cycle) != path_src(g, cycle))
        throw InputError("infinite path: " + path_to_string(g, cycle) + " does not close up");
    if (path_src(g, prefix) != path_rng(g, cycle))
        throw InputError("infinite path: prefix ends at " +
                         g.vertex(path_src(g, prefix)).id + " but the cycle sits at " +
                         g.vertex(path_rng(g, cycle)).id);
    return InfPath{prefix, cycle};
}

InfPath make_inf_path_ids(const KGraph& g, const std::vector<std::string>& prefix_ids,
                          const std::vector<std::string>& cycle_ids,
                          const std::string& at_vertex) {
    Path cycle = make_path_ids(g, cycle_ids);
    Path prefix;
    if (prefix_ids.empty()) {
        int v = at_vertex.empty() ? path_rng(g, cycle) : g.vertex_index(at_vertex);
        if (v < 0) throw InputError("unknown vertex id: " + at_vertex);
        prefix = vertex_path(g, v);
    } else {
        prefix = make_path_ids(g, prefix_ids);
    }
    return make_inf_path(g, prefix, cycle);
}

int inf_rng(const KGraph& g, const InfPath& a) {
    return path_rng(g, a.prefix);
}

Path window(const KGraph& g, const InfPath& a, const Degree& upto) {
    Degree pre = path_degree(g, a.prefix);
    Degree cyc = path_degree(g, a.cycle);
    long long copies = 0;
    for (int i = 0; i < g.rank(); ++i) {
        long long lack = static_cast<long long>(upto[i]) - pre[i];
        if (lack > 0) {
            long long need = (lack + cyc[i] - 1) / cyc[i];
            copies = std::max(copies, need);
        }
    }
    Path unrolled = a.prefix;
    for (long long t = 0; t < copies; ++t) unrolled = compose(g, unrolled, a.cycle);
    return segment(g, unrolled, Degree::zero(g.rank()), upto);
}

InfPath shift(const KGraph& g, const InfPath& a, const Degree& p) {
    Degree pre = path_degree(g, a.prefix);
    Degree cyc = path_degree(g, a.cycle);
    Degree m = p.join(pre);
    Path win = window(g, a, m + cyc);
    Path rho = segment(g, win, p, m);
    Path w2 = segment(g, win, m, m + cyc);
    if (path_rng(g, w2) != path_src(g, w2) || path_src(g, rho) != path_rng(g, w2))
        throw InternalError("shift: the shifted tail lost its cycle structure");
    return InfPath{rho, w2};
}

bool inf_equal(const KGraph& g, const InfPath& a, const InfPath& b) {
    if (inf_rng(g, a) != inf_rng(g, b)) return false;
    Degree depth = path_degree(g, a.prefix).join(path_degree(g, b.prefix)) +
                   path_degree(g, a.cycle) + path_degree(g, b.cycle);
    return window(g, a, depth) == window(g, b, depth);
}

AperiodicReport is_aperiodic(const KGraph& g, const InfPath& a, const Degree& bound) {
    if (bound.rank() != g.rank()) throw InputError("shift bound rank mismatch");
    AperiodicReport rep;
    rep.bound = bound;

    std::vector<Degree> shifts = degrees_up_to(bound);
    // Shifted tails are reused across pairs; compute each once.
    std::vector<InfPath> tails;
    tails.reserve(shifts.size());
    for (const Degree& p : shifts) tails.push_back(shift(g, a, p));

    for (size_t i = 0; i < shifts.size(); ++i)
        for (size_t j = i + 1; j < shifts.size(); ++j)
            if (inf_equal(g, tails[i], tails[j])) {
                rep.ok = false;
                rep.status = "periodic";
                rep.witness = PeriodWitness{shifts[i], shifts[j]};
                return rep;
            }

    rep.ok = true;
    Degree unreachable = path_degree(g, a.prefix) + path_degree(g, a.cycle) +
                         path_degree(g, a.cycle);
    rep.status = bound.geq(unreachable) ? "aperiodic_certified" : "aperiodic_up_to_bound";
    return rep;
}

}  // namespace kgk
