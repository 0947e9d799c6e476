#ifndef KGK_DYNAMICS_HPP
#define KGK_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kgk/infinite_path.hpp"
#include "kgk/path.hpp"

namespace kgk {

/// Vertices reachable from v along paths (v itself included), sorted.
std::vector<int> forward_orbit(const KGraph& g, int v);

struct OrbitReport {
    /// Ranges of all shifted tails of the input path, sorted. Computed
    /// exactly: the shifted representations live in a finite state space
    /// (prefix degree never grows, cycle degree is constant).
    std::vector<int> backward;
    /// Union of the forward orbits of everything in `backward`, sorted.
    std::vector<int> orb;
    long long states_explored = 0;
};

OrbitReport orbit(const KGraph& g, const InfPath& a);

struct InvariantWitness {
    std::string kind;  // "escaping_edge" | "no_entry"
    int edge = -1;     // for escaping_edge
    int vertex = -1;   // for no_entry
    int color = -1;    // for no_entry
};

struct InvariantReport {
    bool ok = true;
    std::optional<InvariantWitness> witness;
};

/// Two-sided invariance of a vertex set: no edge leads from the set to the
/// outside (source in, range out), and every vertex of the set receives an
/// edge of every color from inside the set.
InvariantReport check_invariant(const KGraph& g, const std::vector<int>& omega);

struct MinimalReport {
    bool ok = true;
    std::optional<std::vector<int>> witness;  // a proper nonempty invariant subset
    long long subsets_checked = 0;
};

/// Exhaustive check that no proper nonempty vertex subset is invariant.
/// Subsets are enumerated in numeric bitmask order; graphs above 20
/// vertices are rejected with advice to sample instead.
MinimalReport check_minimal(const KGraph& g);

/// Common initial part of two paths up to the meet of their degrees, if
/// their initial parts agree there; empty otherwise. Two paths with a
/// common refinement always agree on this segment, so an empty result
/// certifies that they generate disjoint cylinders.
std::optional<Path> pitchfork_meet(const KGraph& g, const Path& u, const Path& v);
bool pitchfork_disjoint(const KGraph& g, const Path& u, const Path& v);

struct ContractingCertificate {
    int v0 = -1;
    std::vector<Path> paths;  // u_0 .. u_m, each with range v0 and nonzero degree
};

struct ContractingReport {
    bool ok = false;
    std::string status;  // "certificate_found" | "orbit_incomplete" | "search_exhausted"
    std::optional<ContractingCertificate> cert;
    long long tuples_tried = 0;
};

/// Search for a family u_0..u_m of paths into v0, pairwise disjoint in the
/// pitchfork sense, with at least one u_t (t >= 1) returning to v0. The
/// search runs in lexicographic order over the family size, the degree
/// tuple, and the path tuple, so the first certificate found is canonical.
/// Requires every vertex reachable from v0; otherwise reports
/// orbit_incomplete without searching.
ContractingReport check_contracting(const KGraph& g, int v0, int max_m, int max_deg);

bool revalidate_certificate(const KGraph& g, const ContractingCertificate& cert);

struct VertexAperiodicity {
    int vertex = -1;
    bool ok = false;
    Path word;  // the candidate actually checked, at full depth
    std::optional<PeriodWitness> undistinguished;  // first failing shift pair
};

struct ConditionAReport {
    bool ok = true;
    std::string status = "bounded";  // evidence to finite depth, never a proof
    Degree depth;
    Degree shift_bound;
    std::vector<VertexAperiodicity> vertices;
    std::optional<int> witness_vertex;
};

/// Look for per-vertex evidence of aperiodic behavior: a path of the given
/// depth whose shifts by all pairs p != q below the bound differ on their
/// overlapping windows. Candidates are built from fixed low-complexity
/// binary streams (one per color) so runs are reproducible; if the guided
/// word fails, a budgeted exhaustive search over words takes over before
/// the vertex is declared stuck.
ConditionAReport check_condition_a(const KGraph& g, const Degree& depth,
                                   const Degree& shift_bound, long long dfs_budget = 20000);

}  // namespace kgk

#endif
