#include "kgk/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace kgk {

std::vector<int> forward_orbit(const KGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("forward_orbit: no such vertex");
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::deque<int> queue{v};
    seen[static_cast<size_t>(v)] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int e : g.edges_sourced_at(u)) {
            int w = g.edge(e).rng;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (seen[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

OrbitReport orbit(const KGraph& g, const InfPath& a) {
    OrbitReport rep;
    std::set<std::pair<Path, Path>> visited;
    std::deque<InfPath> queue;
    visited.insert({a.prefix, a.cycle});
    queue.push_back(a);
    std::set<int> back;
    while (!queue.empty()) {
        InfPath s = queue.front();
        queue.pop_front();
        ++rep.states_explored;
        back.insert(inf_rng(g, s));
        for (int c = 0; c < g.rank(); ++c) {
            InfPath ns = shift(g, s, Degree::unit(g.rank(), c));
            if (visited.insert({ns.prefix, ns.cycle}).second) queue.push_back(ns);
        }
    }
    rep.backward.assign(back.begin(), back.end());
    std::set<int> orb;
    for (int v : rep.backward)
        for (int w : forward_orbit(g, v)) orb.insert(w);
    rep.orb.assign(orb.begin(), orb.end());
    return rep;
}

InvariantReport check_invariant(const KGraph& g, const std::vector<int>& omega) {
    std::set<int> in;
    for (int v : omega) {
        if (v < 0 || v >= g.vertex_count())
            throw InputError("check_invariant: vertex index " + std::to_string(v) +
                             " out of range");
        in.insert(v);
    }
    InvariantReport rep;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in.count(ed.src) && !in.count(ed.rng)) {
            rep.ok = false;
            InvariantWitness w;
            w.kind = "escaping_edge";
            w.edge = e;
            rep.witness = w;
            return rep;
        }
    }
    for (int v : in)
        for (int c = 0; c < g.rank(); ++c) {
            bool fed = false;
            for (int e : g.edges_ranged_at(c, v))
                if (in.count(g.edge(e).src)) {
                    fed = true;
                    break;
                }
            if (!fed) {
                rep.ok = false;
                InvariantWitness w;
                w.kind = "no_entry";
                w.vertex = v;
                w.color = c;
                rep.witness = w;
                return rep;
            }
        }
    return rep;
}

MinimalReport check_minimal(const KGraph& g) {
    int n = g.vertex_count();
    if (n > 20)
        throw InputError("check_minimal enumerates all 2^n vertex subsets and n=" +
                         std::to_string(n) +
                         " is past that; sample candidate subsets with check_invariant instead");
    MinimalReport rep;
    if (n <= 1) return rep;
    for (unsigned long long mask = 1; mask + 1 < (1ull << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (mask & (1ull << v)) subset.push_back(v);
        ++rep.subsets_checked;
        if (check_invariant(g, subset).ok) {
            rep.ok = false;
            rep.witness = subset;
            return rep;
        }
    }
    return rep;
}

std::optional<Path> pitchfork_meet(const KGraph& g, const Path& u, const Path& v) {
    Degree mu = path_degree(g, u).meet(path_degree(g, v));
    Path a = segment(g, u, Degree::zero(g.rank()), mu);
    Path b = segment(g, v, Degree::zero(g.rank()), mu);
    if (a == b) return a;
    return std::nullopt;
}

bool pitchfork_disjoint(const KGraph& g, const Path& u, const Path& v) {
    return !pitchfork_meet(g, u, v).has_value();
}

namespace {

bool certificate_conditions(const KGraph& g, int v0, const std::vector<Path>& tuple) {
    bool returns = false;
    for (size_t t = 1; t < tuple.size(); ++t)
        if (path_src(g, tuple[t]) == v0) {
            returns = true;
            break;
        }
    if (!returns) return false;
    for (size_t s = 0; s < tuple.size(); ++s)
        for (size_t t = s + 1; t < tuple.size(); ++t)
            if (!pitchfork_disjoint(g, tuple[s], tuple[t])) return false;
    return true;
}

}  // namespace

ContractingReport check_contracting(const KGraph& g, int v0, int max_m, int max_deg) {
    if (v0 < 0 || v0 >= g.vertex_count()) throw InputError("check_contracting: no such vertex");
    if (max_m < 1 || max_deg < 1)
        throw InputError("check_contracting: bounds must be at least 1");
    ContractingReport rep;
    if (static_cast<int>(forward_orbit(g, v0).size()) != g.vertex_count()) {
        rep.status = "orbit_incomplete";
        return rep;
    }

    std::vector<Degree> degs;
    for (const Degree& d : degrees_up_to(Degree::constant(g.rank(), max_deg)))
        if (!d.is_zero()) degs.push_back(d);

    std::vector<std::vector<Path>> pool(degs.size());
    std::vector<bool> have(degs.size(), false);
    auto paths_for = [&](size_t di) -> const std::vector<Path>& {
        if (!have[di]) {
            pool[di] = enumerate_paths(g, v0, degs[di]);
            have[di] = true;
        }
        return pool[di];
    };

    for (int m = 1; m <= max_m; ++m) {
        size_t slots = static_cast<size_t>(m) + 1;
        std::vector<size_t> dt(slots, 0);
        while (true) {
            bool feasible = true;
            for (size_t s = 0; s < slots; ++s)
                if (paths_for(dt[s]).empty()) {
                    feasible = false;
                    break;
                }
            if (feasible) {
                std::vector<size_t> pt(slots, 0);
                while (true) {
                    std::vector<Path> tuple;
                    tuple.reserve(slots);
                    for (size_t s = 0; s < slots; ++s)
                        tuple.push_back(paths_for(dt[s])[pt[s]]);
                    ++rep.tuples_tried;
                    if (certificate_conditions(g, v0, tuple)) {
                        rep.ok = true;
                        rep.status = "certificate_found";
                        rep.cert = ContractingCertificate{v0, std::move(tuple)};
                        return rep;
                    }
                    size_t s = slots;
                    while (s > 0) {
                        --s;
                        if (++pt[s] < paths_for(dt[s]).size()) break;
                        pt[s] = 0;
                        if (s == 0) goto paths_done;
                    }
                }
            paths_done:;
            }
            size_t s = slots;
            while (true) {
                if (s == 0) goto degrees_done;
                --s;
                if (++dt[s] < degs.size()) break;
                dt[s] = 0;
            }
        }
    degrees_done:;
    }
    rep.status = "search_exhausted";
    return rep;
}

bool revalidate_certificate(const KGraph& g, const ContractingCertificate& cert) {
    if (cert.v0 < 0 || cert.v0 >= g.vertex_count()) return false;
    if (cert.paths.size() < 2) return false;
    for (const Path& p : cert.paths) {
        if (path_rng(g, p) != cert.v0) return false;
        if (path_degree(g, p).is_zero()) return false;
    }
    if (!certificate_conditions(g, cert.v0, cert.paths)) return false;
    return static_cast<int>(forward_orbit(g, cert.v0).size()) == g.vertex_count();
}

namespace {

std::vector<int> fib_word(size_t n) {
    std::vector<int> s{0};
    while (s.size() < n) {
        std::vector<int> t;
        t.reserve(s.size() * 2);
        for (int ch : s) {
            if (ch == 0) {
                t.push_back(0);
                t.push_back(1);
            } else {
                t.push_back(0);
            }
        }
        s = std::move(t);
    }
    s.resize(n);
    return s;
}

struct Streams {
    std::vector<int> fib;
    int bit(int color, size_t pos) const {
        switch (color % 3) {
            case 0: return fib[pos];
            case 1: return std::popcount(pos) & 1;  // parity stream
            default: return 1 - fib[pos];
        }
    }
};

/// One candidate word per vertex: colors rotate round-robin so every color
/// deepens evenly, branch choices come from the color's stream, and forced
/// steps consume no stream letters.
std::vector<int> guided_word(const KGraph& g, int v, const Degree& depth, const Streams& st) {
    std::vector<int> word;
    std::vector<size_t> pos(static_cast<size_t>(g.rank()), 0);
    int rounds = 0;
    for (int c = 0; c < g.rank(); ++c) rounds = std::max(rounds, depth[c]);
    int at = v;
    for (int r = 0; r < rounds; ++r)
        for (int c = 0; c < g.rank(); ++c) {
            if (r >= depth[c]) continue;
            const auto& cands = g.edges_ranged_at(c, at);
            if (cands.empty())
                throw InternalError("guided_word ran into a source, precondition missed it");
            int e;
            if (cands.size() == 1) {
                e = cands[0];
            } else {
                int b = st.bit(c, pos[static_cast<size_t>(c)]++);
                e = cands[b ? 1 : 0];
            }
            word.push_back(e);
            at = g.edge(e).src;
        }
    return word;
}

std::optional<PeriodWitness> first_undistinguished(const KGraph& g, const Path& w,
                                                   const Degree& depth,
                                                   const std::vector<Degree>& shifts) {
    for (size_t i = 0; i < shifts.size(); ++i)
        for (size_t j = i + 1; j < shifts.size(); ++j) {
            Degree top = shifts[i].join(shifts[j]);
            Degree len = depth.minus(top);
            Path a = segment(g, w, shifts[i], shifts[i] + len);
            Path b = segment(g, w, shifts[j], shifts[j] + len);
            if (a == b) return PeriodWitness{shifts[i], shifts[j]};
        }
    return std::nullopt;
}

/// Exhaustive fallback over the same round-robin word shape, budgeted by
/// node count. Returns the first word whose shifts are all distinguished.
bool dfs_words(const KGraph& g, const Degree& depth, const std::vector<Degree>& shifts, int at,
               int r, int c, std::vector<int>& word, long long& budget,
               std::optional<Path>& found) {
    if (budget-- <= 0) return false;
    int rounds = 0;
    for (int i = 0; i < g.rank(); ++i) rounds = std::max(rounds, depth[i]);
    while (r < rounds && c < g.rank() && r >= depth[c]) ++c;
    if (c >= g.rank()) {
        ++r;
        c = 0;
        while (r < rounds && c < g.rank() && r >= depth[c]) ++c;
    }
    if (r >= rounds) {
        Path w = make_path(g, word);
        if (!first_undistinguished(g, w, depth, shifts)) {
            found = w;
            return true;
        }
        return false;
    }
    for (int e : g.edges_ranged_at(c, at)) {
        word.push_back(e);
        if (dfs_words(g, depth, shifts, g.edge(e).src, r, c + 1, word, budget, found))
            return true;
        word.pop_back();
        if (budget <= 0) return false;
    }
    return false;
}

}  // namespace

ConditionAReport check_condition_a(const KGraph& g, const Degree& depth,
                                   const Degree& shift_bound, long long dfs_budget) {
    if (depth.rank() != g.rank() || shift_bound.rank() != g.rank())
        throw InputError("check_condition_a: degree rank mismatch");
    for (int c = 0; c < g.rank(); ++c)
        if (depth[c] < shift_bound[c] + 1)
            throw InputError("check_condition_a: depth must exceed the shift bound, got depth " +
                             depth.to_string() + " with bound " + shift_bound.to_string());
    for (int c = 0; c < g.rank(); ++c)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.edges_ranged_at(c, v).empty())
                throw InputError("check_condition_a: vertex " + g.vertex(v).id +
                                 " receives no color-" + std::to_string(c + 1) +
                                 " edge; the check needs a source-free graph");

    ConditionAReport rep;
    rep.depth = depth;
    rep.shift_bound = shift_bound;

    size_t stream_len = static_cast<size_t>(depth.total()) + 8;
    Streams st{fib_word(stream_len)};
    std::vector<Degree> shifts = degrees_up_to(shift_bound);

    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexAperiodicity va;
        va.vertex = v;
        Path guided = make_path(g, guided_word(g, v, depth, st));
        auto bad = first_undistinguished(g, guided, depth, shifts);
        if (!bad) {
            va.ok = true;
            va.word = guided;
        } else {
            std::vector<int> scratch;
            long long budget = dfs_budget;
            std::optional<Path> found;
            dfs_words(g, depth, shifts, v, 0, 0, scratch, budget, found);
            if (found) {
                va.ok = true;
                va.word = *found;
            } else {
                va.ok = false;
                va.word = guided;
                va.undistinguished = bad;
                if (!rep.witness_vertex) rep.witness_vertex = v;
                rep.ok = false;
            }
        }
        rep.vertices.push_back(std::move(va));
    }
    return rep;
}

}  // namespace kgk
