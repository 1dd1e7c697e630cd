#pragma once

#include <cstddef>
#include <cstdint>

namespace gpc {

/// Caps and budgets shared by the exact searches and the exponential
/// constructions.
struct SearchOptions {
    /// Branching nodes allowed per homomorphism search before it gives up
    /// with BudgetExceededError.
    std::uint64_t node_budget = 200'000'000;
    /// Largest vertex count a helical or negative-power construction may produce.
    std::size_t vertex_cap = 200'000;
    /// Worker threads for lattice sweeps; results do not depend on it.
    unsigned jobs = 1;
    /// Partial colourings allowed when enumerating colourings (colourful test).
    std::uint64_t coloring_budget = 10'000'000;
    /// Largest graph core_of() accepts.
    std::size_t core_cap = 14;

    /// Defaults overridden by GPC_NODE_BUDGET, GPC_VERTEX_CAP and GPC_JOBS.
    static SearchOptions from_environment();
};

}  // namespace gpc
