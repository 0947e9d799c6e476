#include "kgk/kgraph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#ifdef KGK_HAVE_OPENMP
#include <omp.h>
#endif

namespace kgk {

KGraph KGraph::from_spec(const RawGraphSpec& spec) {
    if (spec.rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(spec.rank));
    if (spec.vertices.empty()) throw InputError("graph needs at least one vertex");

    KGraph g;
    g.rank_ = spec.rank;

    std::vector<std::string> vids = spec.vertices;
    std::sort(vids.begin(), vids.end());
    for (const auto& id : vids) {
        if (g.vertex_idx_.count(id)) throw InputError("duplicate vertex id: " + id);
        g.vertex_idx_[id] = static_cast<int>(g.vertices_.size());
        g.vertices_.push_back(Vertex{id});
    }

    std::vector<RawEdge> redges = spec.edges;
    std::sort(redges.begin(), redges.end(),
              [](const RawEdge& a, const RawEdge& b) { return a.id < b.id; });
    for (const auto& re : redges) {
        if (g.edge_idx_.count(re.id)) throw InputError("duplicate edge id: " + re.id);
        if (re.color < 1 || re.color > spec.rank)
            throw InputError("edge " + re.id + ": color " + std::to_string(re.color) +
                             " out of range 1.." + std::to_string(spec.rank));
        auto sv = g.vertex_idx_.find(re.src);
        auto rv = g.vertex_idx_.find(re.rng);
        if (sv == g.vertex_idx_.end())
            throw InputError("edge " + re.id + ": unknown source vertex " + re.src);
        if (rv == g.vertex_idx_.end())
            throw InputError("edge " + re.id + ": unknown range vertex " + re.rng);
        g.edge_idx_[re.id] = static_cast<int>(g.edges_.size());
        g.edges_.push_back(Edge{re.id, re.color - 1, sv->second, rv->second});
    }

    int k = g.rank_;
    int nv = g.vertex_count();
    g.by_color_.assign(static_cast<size_t>(k), {});
    g.ranged_at_.assign(static_cast<size_t>(k),
                        std::vector<std::vector<int>>(static_cast<size_t>(nv)));
    g.sourced_at_.assign(static_cast<size_t>(nv), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges_[static_cast<size_t>(e)];
        g.by_color_[static_cast<size_t>(ed.color)].push_back(e);
        g.ranged_at_[static_cast<size_t>(ed.color)][static_cast<size_t>(ed.rng)].push_back(e);
        g.sourced_at_[static_cast<size_t>(ed.src)].push_back(e);
    }

    g.flip_fwd_.assign(static_cast<size_t>(k * k), {});
    g.flip_inv_.assign(static_cast<size_t>(k * k), {});
    std::set<std::pair<int, int>> seen_blocks;
    for (const auto& blk : spec.flips) {
        if (blk.i < 1 || blk.j < 1 || blk.i > k || blk.j > k)
            throw InputError("flip block colors (" + std::to_string(blk.i) + "," +
                             std::to_string(blk.j) + ") out of range 1.." + std::to_string(k));
        if (blk.i >= blk.j)
            throw InputError("flip block colors must satisfy i < j, got (" +
                             std::to_string(blk.i) + "," + std::to_string(blk.j) + ")");
        if (!seen_blocks.insert({blk.i, blk.j}).second)
            throw InputError("duplicate flip block for colors (" + std::to_string(blk.i) + "," +
                             std::to_string(blk.j) + ")");
        int ci = blk.i - 1, cj = blk.j - 1;
        auto& fwd = g.flip_fwd_[static_cast<size_t>(g.pair_slot(ci, cj))];
        for (const auto& ent : blk.pairs) {
            std::array<int, 3> want_color = {ci, cj, cj};  // a, b, b2 (a2 checked below)
            std::array<int, 4> idx{};
            for (int t = 0; t < 4; ++t) {
                auto it = g.edge_idx_.find(ent[static_cast<size_t>(t)]);
                if (it == g.edge_idx_.end())
                    throw InputError("flip entry references unknown edge " +
                                     ent[static_cast<size_t>(t)]);
                idx[static_cast<size_t>(t)] = it->second;
            }
            for (int t = 0; t < 3; ++t)
                if (g.edges_[static_cast<size_t>(idx[static_cast<size_t>(t)])].color !=
                    want_color[static_cast<size_t>(t)])
                    throw InputError("flip entry [" + ent[0] + "," + ent[1] + "," + ent[2] + "," +
                                     ent[3] + "]: edge " + ent[static_cast<size_t>(t)] +
                                     " has the wrong color for its slot");
            if (g.edges_[static_cast<size_t>(idx[3])].color != ci)
                throw InputError("flip entry [" + ent[0] + "," + ent[1] + "," + ent[2] + "," +
                                 ent[3] + "]: edge " + ent[3] + " has the wrong color for its slot");
            long long key = pack(idx[0], idx[1]);
            if (fwd.count(key))
                throw InputError("flip block (" + std::to_string(blk.i) + "," +
                                 std::to_string(blk.j) + ") lists the pair (" + ent[0] + "," +
                                 ent[1] + ") twice");
            fwd[key] = pack(idx[2], idx[3]);
        }
    }
    g.rebuild_inverse();
    return g;
}

void KGraph::rebuild_inverse() {
    for (size_t s = 0; s < flip_fwd_.size(); ++s) {
        flip_inv_[s].clear();
        for (const auto& [key, img] : flip_fwd_[s]) flip_inv_[s][img] = key;
    }
}

int KGraph::vertex_index(const std::string& id) const {
    auto it = vertex_idx_.find(id);
    return it == vertex_idx_.end() ? -1 : it->second;
}

int KGraph::edge_index(const std::string& id) const {
    auto it = edge_idx_.find(id);
    return it == edge_idx_.end() ? -1 : it->second;
}

const std::vector<int>& KGraph::edges_of_color(int color) const {
    return by_color_[static_cast<size_t>(color)];
}

const std::vector<int>& KGraph::edges_ranged_at(int color, int v) const {
    return ranged_at_[static_cast<size_t>(color)][static_cast<size_t>(v)];
}

const std::vector<int>& KGraph::edges_sourced_at(int v) const {
    return sourced_at_[static_cast<size_t>(v)];
}

bool KGraph::has_flip(int x, int y) const {
    int cx = edge(x).color, cy = edge(y).color;
    if (cx >= cy) return false;
    const auto& fwd = flip_fwd_[static_cast<size_t>(pair_slot(cx, cy))];
    return fwd.count(pack(x, y)) != 0;
}

std::pair<int, int> KGraph::apply_flip(int x, int y) const {
    int cx = edge(x).color, cy = edge(y).color;
    if (cx == cy) throw InternalError("apply_flip: same-color edges cannot be reordered");
    const auto& tab = cx < cy ? flip_fwd_[static_cast<size_t>(pair_slot(cx, cy))]
                              : flip_inv_[static_cast<size_t>(pair_slot(cy, cx))];
    auto it = tab.find(pack(x, y));
    if (it == tab.end())
        throw InputError("flip table has no entry for the word " + edge(x).id + "." + edge(y).id +
                         " (graph fails validation)");
    return {static_cast<int>(it->second >> 32), static_cast<int>(it->second & 0xffffffffll)};
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> KGraph::flip_entries(int i,
                                                                                      int j) const {
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    for (const auto& [key, img] : flip_fwd_[static_cast<size_t>(pair_slot(i, j))])
        out.push_back({{static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffll)},
                       {static_cast<int>(img >> 32), static_cast<int>(img & 0xffffffffll)}});
    std::sort(out.begin(), out.end());
    return out;
}

void KGraph::override_flip(int i, int j, std::pair<int, int> key, std::pair<int, int> image) {
    auto& fwd = flip_fwd_[static_cast<size_t>(pair_slot(i, j))];
    auto it = fwd.find(pack(key.first, key.second));
    if (it == fwd.end()) throw InternalError("override_flip: no such entry");
    it->second = pack(image.first, image.second);
    rebuild_inverse();
}

ValidationResult validate_graph(const KGraph& g) {
    ValidationResult res;
    auto issue = [&](const std::string& code, const std::string& detail) {
        res.ok = false;
        res.issues.push_back({code, detail});
    };

    int k = g.rank();
    for (int ci = 0; ci < k; ++ci) {
        for (int cj = ci + 1; cj < k; ++cj) {
            const auto entries = g.flip_entries(ci, cj);
            std::set<std::pair<int, int>> images;
            for (const auto& [key, img] : entries) {
                const Edge& a = g.edge(key.first);
                const Edge& b = g.edge(key.second);
                const Edge& b2 = g.edge(img.first);
                const Edge& a2 = g.edge(img.second);
                std::string word = a.id + "." + b.id;
                if (a.src != b.rng)
                    issue("flip_entry_not_composable",
                          "flip (" + std::to_string(ci + 1) + "," + std::to_string(cj + 1) +
                              "): key word " + word + " is not composable");
                if (b2.src != a2.rng)
                    issue("flip_image_not_composable", "image of " + word + ", word " + b2.id +
                                                           "." + a2.id + ", is not composable");
                if (b2.rng != a.rng)
                    issue("flip_breaks_range",
                          "flipping " + word + " moved the range vertex from " +
                              g.vertex(a.rng).id + " to " + g.vertex(b2.rng).id);
                if (a2.src != b.src)
                    issue("flip_breaks_source",
                          "flipping " + word + " moved the source vertex from " +
                              g.vertex(b.src).id + " to " + g.vertex(a2.src).id);
                if (!images.insert(img).second)
                    issue("flip_not_injective", "two entries of flip (" + std::to_string(ci + 1) +
                                                    "," + std::to_string(cj + 1) +
                                                    ") share the image " + b2.id + "." + a2.id);
            }

            // Completeness over ascending pairs, surjectivity over descending.
            long long ascending = 0, descending = 0;
            for (int a : g.edges_of_color(ci))
                for (int b : g.edges_ranged_at(cj, g.edge(a).src)) {
                    ++ascending;
                    if (!g.has_flip(a, b))
                        issue("flip_missing_entry",
                              "flip (" + std::to_string(ci + 1) + "," + std::to_string(cj + 1) +
                                  ") has no entry for the word " + g.edge(a).id + "." +
                                  g.edge(b).id);
                }
            for (int y : g.edges_of_color(cj))
                for (int x : g.edges_ranged_at(ci, g.edge(y).src)) {
                    ++descending;
                    if (!images.count({y, x}))
                        issue("flip_not_surjective",
                              "no entry of flip (" + std::to_string(ci + 1) + "," +
                                  std::to_string(cj + 1) + ") produces the word " + g.edge(y).id +
                                  "." + g.edge(x).id);
                }
            if (ascending != descending)
                issue("flip_count_mismatch",
                      "flip (" + std::to_string(ci + 1) + "," + std::to_string(cj + 1) + "): " +
                          std::to_string(ascending) + " ascending composable words vs " +
                          std::to_string(descending) + " descending, no bijection can exist");
        }
    }
    return res;
}

namespace {

struct TripleEval {
    std::array<int, 3> via_ab;
    std::array<int, 3> via_bc;
    bool agree;
};

TripleEval eval_hexagon_triple(const KGraph& g, int a, int b, int c) {
    auto [b1, a1] = g.apply_flip(a, b);
    auto [c1, a2] = g.apply_flip(a1, c);
    auto [c2, b2] = g.apply_flip(b1, c1);

    auto [c1p, b1p] = g.apply_flip(b, c);
    auto [c2p, a1p] = g.apply_flip(a, c1p);
    auto [b2p, a2p] = g.apply_flip(a1p, b1p);

    TripleEval ev;
    ev.via_ab = {c2, b2, a2};
    ev.via_bc = {c2p, b2p, a2p};
    ev.agree = ev.via_ab == ev.via_bc;
    return ev;
}

}  // namespace

HexagonReport check_hexagon(const KGraph& g, Exec exec) {
    HexagonReport rep;
    if (g.rank() < 3) return rep;

    for (int ci = 0; ci < g.rank() && !rep.witness; ++ci)
        for (int cj = ci + 1; cj < g.rank() && !rep.witness; ++cj)
            for (int cl = cj + 1; cl < g.rank() && !rep.witness; ++cl) {
                // Composable (a,b) prefixes, ascending by (a,b); the c loop
                // stays inside the worker so both policies share the layout.
                std::vector<std::pair<int, int>> prefixes;
                for (int a : g.edges_of_color(ci))
                    for (int b : g.edges_ranged_at(cj, g.edge(a).src))
                        prefixes.push_back({a, b});

                long long count = 0;
                // Lexicographic rank of the best (smallest) witness so far;
                // the two policies agree because min() is order-free.
                long long best_rank = -1;
                HexagonWitness best;
                std::string deferred_error;

                if (exec == Exec::parallel) {
#ifdef KGK_HAVE_OPENMP
#pragma omp parallel
                    {
                        long long local_count = 0;
                        long long local_rank = -1;
                        HexagonWitness local_best;
#pragma omp for schedule(dynamic, 16) nowait
                        for (long long p = 0; p < static_cast<long long>(prefixes.size()); ++p) {
                            auto [a, b] = prefixes[static_cast<size_t>(p)];
                            const auto& cs = g.edges_ranged_at(cl, g.edge(b).src);
                            for (size_t t = 0; t < cs.size(); ++t) {
                                ++local_count;
                                TripleEval ev;
                                try {
                                    ev = eval_hexagon_triple(g, a, b, cs[t]);
                                } catch (const std::exception& ex) {
#pragma omp critical(kgk_hexagon_error)
                                    deferred_error = ex.what();
                                    continue;
                                }
                                if (!ev.agree) {
                                    long long r = p * static_cast<long long>(g.edge_count()) +
                                                  cs[t];
                                    if (local_rank < 0 || r < local_rank) {
                                        local_rank = r;
                                        local_best = HexagonWitness{ci,      cj,        cl,
                                                                    a,       b,         cs[t],
                                                                    ev.via_ab, ev.via_bc};
                                    }
                                }
                            }
                        }
#pragma omp critical(kgk_hexagon_merge)
                        {
                            count += local_count;
                            if (local_rank >= 0 && (best_rank < 0 || local_rank < best_rank)) {
                                best_rank = local_rank;
                                best = local_best;
                            }
                        }
                    }
#else
                    exec = Exec::serial;
#endif
                }
                if (exec == Exec::serial) {
                    for (long long p = 0; p < static_cast<long long>(prefixes.size()); ++p) {
                        auto [a, b] = prefixes[static_cast<size_t>(p)];
                        for (int c : g.edges_ranged_at(cl, g.edge(b).src)) {
                            ++count;
                            TripleEval ev = eval_hexagon_triple(g, a, b, c);
                            if (!ev.agree && best_rank < 0) {
                                best_rank = p * static_cast<long long>(g.edge_count()) + c;
                                best = HexagonWitness{ci, cj, cl, a, b, c, ev.via_ab, ev.via_bc};
                            }
                        }
                    }
                }

                if (!deferred_error.empty()) throw InputError(deferred_error);
                rep.triples_checked += count;
                if (best_rank >= 0) {
                    rep.ok = false;
                    rep.witness = best;
                }
            }
    return rep;
}

}  // namespace kgk
