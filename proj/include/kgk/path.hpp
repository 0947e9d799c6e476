#ifndef KGK_PATH_HPP
#define KGK_PATH_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kgk/degree.hpp"
#include "kgk/kgraph.hpp"

namespace kgk {

/// A morphism of the path category, stored as its canonical word: edge
/// colors ascend left to right. Degree-zero paths are vertices; `base`
/// carries the vertex and is kept equal to the range vertex for nonempty
/// words too, so comparisons never need the graph.
struct Path {
    int base = -1;
    std::vector<int> word;

    bool operator==(const Path& o) const { return base == o.base && word == o.word; }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const {
        return std::tie(base, word) < std::tie(o.base, o.word);
    }
};

Path vertex_path(const KGraph& g, int v);

/// Wrap a composable edge word and bring it to canonical color order.
/// Throws InputError if adjacent edges fail to compose.
Path make_path(const KGraph& g, const std::vector<int>& word);
Path make_path_ids(const KGraph& g, const std::vector<std::string>& ids);

int path_rng(const KGraph& g, const Path& p);
int path_src(const KGraph& g, const Path& p);
Degree path_degree(const KGraph& g, const Path& p);
std::string path_to_string(const KGraph& g, const Path& p);

Path compose(const KGraph& g, const Path& p, const Path& q);

/// The factor p(from, to): what remains of p after cutting an initial part
/// of degree `from` and a final part beyond `to`. Requires
/// from <= to <= degree(p) coordinatewise.
Path segment(const KGraph& g, const Path& p, const Degree& from, const Degree& to);

/// All paths of degree m with range v, sorted by canonical word.
std::vector<Path> enumerate_paths(const KGraph& g, int v, const Degree& m);

/// |{paths of degree m with range v}| without materializing them; exact,
/// throws on overflow.
long long count_paths(const KGraph& g, int v, const Degree& m);

struct RowFiniteReport {
    bool ok = true;
    // Minimum over vertices of the path count, per checked degree: each
    // color generator first, then the requested degree.
    std::vector<std::pair<Degree, long long>> min_counts;
    std::optional<std::pair<int, Degree>> witness;  // first vertex left without paths
};

/// Finiteness of the counting matrices is automatic on a finite graph, so
/// the content here is receiver-completeness: every vertex must be the
/// range of at least one path of every checked degree.
RowFiniteReport check_row_finite_no_source(const KGraph& g, const Degree& m);

}  // namespace kgk

#endif
