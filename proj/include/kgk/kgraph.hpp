#ifndef KGK_KGRAPH_HPP
#define KGK_KGRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgk/common.hpp"
#include "kgk/degree.hpp"

namespace kgk {

/// Presentation of a rank-k graph as parsed from JSON or built by a
/// generator, before any indexing. Colors are 1-based here (as in the file
/// format); KGraph switches to 0-based internally.
struct RawEdge {
    std::string id;
    int color = 0;
    std::string src;
    std::string rng;
};

struct RawFlip {
    int i = 0, j = 0;  // color pair, 1-based, i < j
    // entries [a, b, b2, a2]: the word a.b (colors i then j) equals b2.a2
    std::vector<std::array<std::string, 4>> pairs;
};

struct RawGraphSpec {
    int rank = 0;
    std::vector<std::string> vertices;
    std::vector<RawEdge> edges;
    std::vector<RawFlip> flips;
};

struct Vertex {
    std::string id;
};

struct Edge {
    std::string id;
    int color = 0;  // 0-based
    int src = 0;    // vertex index of the source
    int rng = 0;    // vertex index of the range
};

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationResult {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

/// Indexed colored graph with reordering bijections between adjacent
/// colors. Words compose function-style: in a word e1.e2 the source of e1
/// meets the range of e2, so the range of the word is r(e1) and its source
/// is s(last).
class KGraph {
public:
    /// Index a raw presentation. Throws InputError on anything that makes
    /// indexing impossible (duplicate ids, unknown references, colors out
    /// of range, malformed flip blocks). Semantic defects such as missing
    /// or non-bijective flip entries are left for validate_graph.
    static KGraph from_spec(const RawGraphSpec& spec);

    int rank() const { return rank_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int idx) const { return vertices_[static_cast<size_t>(idx)]; }
    const Edge& edge(int idx) const { return edges_[static_cast<size_t>(idx)]; }
    int vertex_index(const std::string& id) const;  // -1 if absent
    int edge_index(const std::string& id) const;    // -1 if absent

    /// Edge indices of one color, ascending. Color is 0-based.
    const std::vector<int>& edges_of_color(int color) const;
    /// Edges e with r(e) == v, i.e. the candidates for extending a word on
    /// the right once its source has reached v. Ascending edge index.
    const std::vector<int>& edges_ranged_at(int color, int v) const;
    /// Edges e with s(e) == v. Ascending edge index.
    const std::vector<int>& edges_sourced_at(int v) const;

    /// Rewrite the composable two-edge word x.y into the opposite color
    /// pattern: returns (u, v) with u.v == x.y, color(u) == color(y),
    /// color(v) == color(x). Throws InputError if the table lacks the
    /// entry (possible only on graphs that fail validation) and
    /// InternalError if x and y share a color.
    std::pair<int, int> apply_flip(int x, int y) const;

    /// True if the (i,j) forward table has an entry for the ascending word
    /// x.y. Only meaningful when color(x) < color(y).
    bool has_flip(int x, int y) const;

    /// Forward flip table for colors i < j (0-based), as sorted entries
    /// ((a,b),(b2,a2)). Used by the validator and by mutation tooling.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> flip_entries(int i, int j) const;

    /// Replace one forward entry and rebuild the inverse. For building
    /// deliberately broken graphs in tests; leaves validation intact only
    /// if the edit preserves range and source signatures.
    void override_flip(int i, int j, std::pair<int, int> key, std::pair<int, int> image);

private:
    static long long pack(int a, int b) {
        return (static_cast<long long>(a) << 32) | static_cast<unsigned int>(b);
    }
    int pair_slot(int i, int j) const { return i * rank_ + j; }
    void rebuild_inverse();

    int rank_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> vertex_idx_;
    std::unordered_map<std::string, int> edge_idx_;
    std::vector<std::vector<int>> by_color_;
    std::vector<std::vector<std::vector<int>>> ranged_at_;  // [color][vertex]
    std::vector<std::vector<int>> sourced_at_;              // [vertex]
    // flip_fwd_[pair_slot(i,j)]: packed (a,b) -> packed (b2,a2), i < j
    std::vector<std::unordered_map<long long, long long>> flip_fwd_;
    std::vector<std::unordered_map<long long, long long>> flip_inv_;

    friend ValidationResult validate_graph(const KGraph&);
};

/// Check that the presentation defines a genuine rank-k structure: every
/// composable ascending pair of distinctly colored edges has exactly one
/// flip image, images are composable with ranges and sources preserved,
/// and each table is a bijection onto the composable descending pairs.
/// The associativity test for rank >= 3 lives in check_hexagon.
ValidationResult validate_graph(const KGraph& g);

struct HexagonWitness {
    int ci = 0, cj = 0, cl = 0;  // colors, 0-based
    int a = 0, b = 0, c = 0;     // the ascending composable triple
    std::array<int, 3> via_ab{};  // descending word reached flipping (a,b) first
    std::array<int, 3> via_bc{};  // descending word reached flipping (b,c) first
};

struct HexagonReport {
    bool ok = true;
    long long triples_checked = 0;
    std::optional<HexagonWitness> witness;
};

/// For every color triple i < j < l and every composable word a.b.c in
/// those colors, reverse the word into descending color order along both
/// flip routes and require the results to agree. Reports the
/// lexicographically first disagreement over (i, j, l, a, b, c); the
/// serial and parallel policies produce identical reports.
HexagonReport check_hexagon(const KGraph& g, Exec exec = Exec::serial);

}  // namespace kgk

#endif
