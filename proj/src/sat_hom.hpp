#pragma once

#include "gpc/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gpc::detail {

/// Decides G -> H with a CDCL solver over the direct encoding (one variable
/// per pair of a pattern vertex and a target vertex). Returns the map, or
/// nullopt when none exists. Throws BudgetExceededError after
/// `decision_budget` solver decisions. G and H must be loopless, H nonempty.
std::optional<std::vector<VertexId>> sat_hom(const Graph& g, const Graph& h, std::uint64_t decision_budget);

/// Clause count of the encoding sat_hom would build, for deciding whether
/// it is worth building at all.
std::uint64_t sat_hom_clauses(const Graph& g, const Graph& h);

}  // namespace gpc::detail
