#pragma once

#include "gpc/graph.hpp"

#include <cstdint>
#include <vector>

namespace gpc::detail {

struct CliqueResult {
    std::size_t size = 0;
    /// The search finished, so `size` is the clique number (or the stop
    /// threshold was reached).
    bool complete = false;
};

/// Branch-and-bound maximum clique with greedy-colouring bounds (MCQ style).
/// Stops as soon as a clique of `stop_at` vertices is found or after `budget`
/// expansions. Loops are ignored.
CliqueResult max_clique(const std::vector<Bitset>& rows, std::size_t stop_at, std::uint64_t budget);

/// Colours used by a DSATUR greedy colouring: an upper bound on chi, hence on omega.
int dsatur(const Graph& g);

std::vector<Bitset> rows_of(const Graph& g);
std::vector<Bitset> complement_rows(const Graph& g);

}  // namespace gpc::detail
