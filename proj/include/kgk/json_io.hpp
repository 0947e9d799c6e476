#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kgk/fiber.hpp"
#include "kgk/kgraph.hpp"
#include "kgk/weights.hpp"

namespace kgk {

struct ParsedInput {
    RawGraphSpec graph;
    std::optional<RawWeights> weights;
};

/// Parses the on-disk graph format. Strict: unknown keys anywhere in the
/// document are an error, as are missing required fields or wrong types.
/// Throws InputError with a message naming the offending key or entry.
ParsedInput parse_kgraph_json(const std::string& text);

/// Serializes a graph (and its weights, when given) back to the same format.
/// Output is canonical: vertices sorted, edges sorted by id, flip blocks by
/// color pair, flip entries lexicographically. Two structurally equal graphs
/// always produce byte-identical text.
std::string graph_to_json(const RawGraphSpec& spec, const RawWeights* weights = nullptr);

/// Serializes one solved fiber table: the edge pair, its colors (1-based) and
/// the table rows in canonical order.
std::string fiber_permutation_to_json(const KGraph& g, const FiberPermutation& perm);

}  // namespace kgk
