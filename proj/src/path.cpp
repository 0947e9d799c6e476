#include "kgk/path.hpp"

#include <algorithm>

namespace kgk {

namespace {

void check_composable(const KGraph& g, const std::vector<int>& word) {
    for (size_t t = 0; t + 1 < word.size(); ++t) {
        const Edge& x = g.edge(word[t]);
        const Edge& y = g.edge(word[t + 1]);
        if (x.src != y.rng)
            throw InputError("word is not composable at " + x.id + "." + y.id + ": " + x.id +
                             " ends at " + g.vertex(x.src).id + " but " + y.id + " starts at " +
                             g.vertex(y.rng).id);
    }
}

/// Bubble the word into ascending color order. Every swap rewrites an
/// adjacent descending pair through the flip tables, which preserves the
/// morphism; the inversion count drops each time, so this terminates.
void sort_colors(const KGraph& g, std::vector<int>& word) {
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (size_t t = 0; t + 1 < word.size(); ++t) {
            if (g.edge(word[t]).color > g.edge(word[t + 1]).color) {
                auto [u, v] = g.apply_flip(word[t], word[t + 1]);
                word[t] = u;
                word[t + 1] = v;
                dirty = true;
            }
        }
    }
}

Degree word_degree(const KGraph& g, const std::vector<int>& word, int rank) {
    std::vector<int> c(static_cast<size_t>(rank), 0);
    for (int e : word) ++c[static_cast<size_t>(g.edge(e).color)];
    return Degree(std::move(c));
}

/// Split off an initial factor of degree `need`. Works on words in any
/// color order. Each round pulls the leftmost edge of a still-needed color
/// to the front: everything blocking it has an exhausted color, hence a
/// different color, so every adjacent swap goes through a flip table.
std::pair<std::vector<int>, std::vector<int>> split_word(const KGraph& g, std::vector<int> w,
                                                         Degree need) {
    std::vector<int> prefix;
    std::vector<int> left = need.coords();
    auto remaining = [&left]() {
        for (int v : left)
            if (v > 0) return true;
        return false;
    };
    while (remaining()) {
        size_t t = w.size();
        for (size_t s = 0; s < w.size(); ++s)
            if (left[static_cast<size_t>(g.edge(w[s]).color)] > 0) {
                t = s;
                break;
            }
        if (t == w.size())
            throw InternalError("split_word: word exhausted before reaching the target degree");
        for (size_t s = t; s > 0; --s) {
            auto [u, v] = g.apply_flip(w[s - 1], w[s]);
            w[s - 1] = u;
            w[s] = v;
        }
        prefix.push_back(w.front());
        --left[static_cast<size_t>(g.edge(w.front()).color)];
        w.erase(w.begin());
    }
    return {std::move(prefix), std::move(w)};
}

}  // namespace

Path vertex_path(const KGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw InternalError("vertex_path: index out of range");
    return Path{v, {}};
}

Path make_path(const KGraph& g, const std::vector<int>& word) {
    if (word.empty()) throw InternalError("make_path: empty word has no range, use vertex_path");
    check_composable(g, word);
    std::vector<int> w = word;
    sort_colors(g, w);
    return Path{g.edge(w.front()).rng, std::move(w)};
}

Path make_path_ids(const KGraph& g, const std::vector<std::string>& ids) {
    std::vector<int> word;
    for (const auto& id : ids) {
        int e = g.edge_index(id);
        if (e < 0) throw InputError("unknown edge id: " + id);
        word.push_back(e);
    }
    return make_path(g, word);
}

int path_rng(const KGraph& g, const Path& p) {
    (void)g;
    return p.base;
}

int path_src(const KGraph& g, const Path& p) {
    return p.word.empty() ? p.base : g.edge(p.word.back()).src;
}

Degree path_degree(const KGraph& g, const Path& p) {
    return word_degree(g, p.word, g.rank());
}

std::string path_to_string(const KGraph& g, const Path& p) {
    if (p.word.empty()) return g.vertex(p.base).id;
    std::string s;
    for (size_t t = 0; t < p.word.size(); ++t) {
        if (t) s += ".";
        s += g.edge(p.word[t]).id;
    }
    return s;
}

Path compose(const KGraph& g, const Path& p, const Path& q) {
    if (path_src(g, p) != path_rng(g, q))
        throw InputError("compose: " + path_to_string(g, p) + " ends at " +
                         g.vertex(path_src(g, p)).id + " but " + path_to_string(g, q) +
                         " starts at " + g.vertex(path_rng(g, q)).id);
    if (q.word.empty()) return p;
    std::vector<int> w = p.word;
    w.insert(w.end(), q.word.begin(), q.word.end());
    sort_colors(g, w);
    return Path{g.edge(w.front()).rng, std::move(w)};
}

Path segment(const KGraph& g, const Path& p, const Degree& from, const Degree& to) {
    Degree d = path_degree(g, p);
    if (!from.leq(to) || !to.leq(d))
        throw InputError("segment: need from <= to <= degree, got from=" + from.to_string() +
                         " to=" + to.to_string() + " degree=" + d.to_string());
    auto [head, tail] = split_word(g, p.word, to);
    (void)tail;
    auto [cut, mid] = split_word(g, std::move(head), from);
    if (mid.empty()) {
        // Degree-zero factor: its vertex is where the cut prefix ended.
        int v = cut.empty() ? p.base : g.edge(cut.back()).src;
        return Path{v, {}};
    }
    sort_colors(g, mid);
    return Path{g.edge(mid.front()).rng, std::move(mid)};
}

namespace {

void enum_dfs(const KGraph& g, const Degree& m, int color, int left_in_color, int at,
              std::vector<int>& word, std::vector<Path>& out, int range_vertex) {
    while (color < g.rank() && left_in_color == 0) {
        ++color;
        if (color < g.rank()) left_in_color = m[color];
    }
    if (color >= g.rank()) {
        out.push_back(Path{range_vertex, word});
        return;
    }
    for (int e : g.edges_ranged_at(color, at)) {
        word.push_back(e);
        enum_dfs(g, m, color, left_in_color - 1, g.edge(e).src, word, out, range_vertex);
        word.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const KGraph& g, int v, const Degree& m) {
    if (m.rank() != g.rank())
        throw InputError("enumerate_paths: degree rank " + std::to_string(m.rank()) +
                         " does not match graph rank " + std::to_string(g.rank()));
    if (v < 0 || v >= g.vertex_count()) throw InputError("enumerate_paths: no such vertex");
    std::vector<Path> out;
    std::vector<int> word;
    enum_dfs(g, m, 0, m.rank() > 0 ? m[0] : 0, v, word, out, v);
    return out;
}

long long count_paths(const KGraph& g, int v, const Degree& m) {
    if (m.rank() != g.rank())
        throw InputError("count_paths: degree rank " + std::to_string(m.rank()) +
                         " does not match graph rank " + std::to_string(g.rank()));
    if (v < 0 || v >= g.vertex_count()) throw InputError("count_paths: no such vertex");
    int nv = g.vertex_count();
    // t[w] = number of degree-so-far words with range v and source w
    std::vector<long long> t(static_cast<size_t>(nv), 0);
    t[static_cast<size_t>(v)] = 1;
    for (int c = 0; c < g.rank(); ++c) {
        for (int step = 0; step < m[c]; ++step) {
            std::vector<long long> nxt(static_cast<size_t>(nv), 0);
            for (int e : g.edges_of_color(c)) {
                const Edge& ed = g.edge(e);
                long long cur = t[static_cast<size_t>(ed.rng)];
                if (cur)
                    nxt[static_cast<size_t>(ed.src)] =
                        checked_add(nxt[static_cast<size_t>(ed.src)], cur);
            }
            t = std::move(nxt);
        }
    }
    long long total = 0;
    for (long long x : t) total = checked_add(total, x);
    return total;
}

RowFiniteReport check_row_finite_no_source(const KGraph& g, const Degree& m) {
    if (m.rank() != g.rank())
        throw InputError("check_row_finite_no_source: degree rank mismatch");
    RowFiniteReport rep;
    std::vector<Degree> degrees;
    for (int c = 0; c < g.rank(); ++c) degrees.push_back(Degree::unit(g.rank(), c));
    if (std::find(degrees.begin(), degrees.end(), m) == degrees.end()) degrees.push_back(m);

    for (const Degree& d : degrees) {
        long long mn = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            long long c = count_paths(g, v, d);
            if (c == 0 && !rep.witness) {
                rep.ok = false;
                rep.witness = {v, d};
            }
            if (mn < 0 || c < mn) mn = c;
        }
        rep.min_counts.push_back({d, mn});
        if (mn == 0) rep.ok = false;
    }
    return rep;
}

}  // namespace kgk
