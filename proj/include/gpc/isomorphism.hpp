#pragma once

#include "gpc/graph.hpp"

#include <optional>
#include <vector>

namespace gpc {

/// Exact isomorphism test by colour refinement plus individualisation.
///
/// Both graphs are refined jointly (so colours are comparable), then one
/// vertex of the smallest non-singleton class of G is paired in turn with each
/// candidate of H and the partition is refined again. Exhaustive, hence exact;
/// fast on the small and highly symmetric graphs this library builds. Cost
/// grows quickly for large graphs with big refinement-resistant classes
/// (beyond a few dozen vertices per class).
bool are_isomorphic(const Graph& g, const Graph& h);

/// The isomorphism found, as a map from ids of g to ids of h.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace gpc
