#ifndef KGK_INFINITE_PATH_HPP
#define KGK_INFINITE_PATH_HPP

#include <optional>
#include <string>

#include "kgk/path.hpp"

namespace kgk {

/// Eventually periodic infinite path: prefix followed by the cycle forever.
/// The cycle must close up (range == source == source of the prefix) and
/// use every color at least once, so windows of any degree exist.
struct InfPath {
    Path prefix;
    Path cycle;

    bool operator==(const InfPath& o) const { return prefix == o.prefix && cycle == o.cycle; }
};

InfPath make_inf_path(const KGraph& g, const Path& prefix, const Path& cycle);
InfPath make_inf_path_ids(const KGraph& g, const std::vector<std::string>& prefix_ids,
                          const std::vector<std::string>& cycle_ids, const std::string& at_vertex);

int inf_rng(const KGraph& g, const InfPath& a);

/// The initial segment a(0, upto). Unrolls just enough cycle copies.
Path window(const KGraph& g, const InfPath& a, const Degree& upto);

/// The shifted path: drop the initial segment of degree p. The result is
/// returned in the normalized representation whose prefix degree is
/// (prefix - p) joined with zero, so repeated shifting stays bounded.
InfPath shift(const KGraph& g, const InfPath& a, const Degree& p);

/// Exact equality of the represented infinite paths. Two eventually
/// periodic paths agree everywhere iff they agree on a window of degree
/// (join of prefixes) + (sum of cycle degrees): past the prefixes both are
/// purely periodic, and within that window each one completes enough
/// periods to determine the other.
bool inf_equal(const KGraph& g, const InfPath& a, const InfPath& b);

struct PeriodWitness {
    Degree p, q;  // distinct shifts with identical tails
};

struct AperiodicReport {
    bool ok = false;  // true when no coincidence was found below the bound
    std::string status;  // "periodic" | "aperiodic_up_to_bound" | "aperiodic_certified"
    std::optional<PeriodWitness> witness;
    Degree bound;
};

/// Search all pairs p < q below the bound (lexicographically ordered) for
/// a coincidence of shifted tails. Any path of this representable class
/// satisfies shift(prefix) == shift(prefix + cycle), so with a generous
/// bound the search is guaranteed to land on "periodic"; the certified
/// status exists for callers that pass a bound dominating prefix + 2*cycle
/// and still see no coincidence, which no representable input can produce.
AperiodicReport is_aperiodic(const KGraph& g, const InfPath& a, const Degree& bound);

}  // namespace kgk

#endif
