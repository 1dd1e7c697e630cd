#pragma once

#include "gpc/graph.hpp"
#include "gpc/options.hpp"
#include "gpc/rational.hpp"

namespace gpc {

/// Least k with G -> K_k. 0 for the empty graph. Throws LoopError.
///
/// Bounds first (clique number, ceil(n / independence number), a DSATUR
/// colouring), then exact searches for k between the bounds.
int chromatic_number(const Graph& g, const SearchOptions& options = {});

/// Least n/d (reduced) with G -> K_{n/d}. Candidates are the reduced
/// fractions in [2, chi(G)] with numerator at most |V(G)|, which contain the
/// optimum; the hom order of circular complete graphs follows the order of
/// the fractions, so the candidates are binary searched.
/// Throws LoopError, or PreconditionError when G has no edges.
Rational circular_chromatic_number(const Graph& g, const SearchOptions& options = {});

/// Result of sweeping (2n+1)/(n-t) over 0 < t < n with
/// chi(G^{(2n+1)/(3(2t+1))}) = 3.
struct ChicSweep {
    bool found = false;
    /// Smallest ratio seen, reduced. Only an upper bound on chi_c(G) in
    /// general: the sweep is bounded.
    Rational best;
    int witness_n = 0;
    int witness_t = 0;
    int max_t = 0;
    int max_n = 0;
};

/// Throws PreconditionError on bipartite input, LoopError on loops.
ChicSweep chic_via_powers(const Graph& g, int max_t, int max_n, const SearchOptions& options = {});

/// Lower bound on a power thickness from a bounded lattice search.
struct ThicknessEstimate {
    int level = 0;
    bool found = false;
    /// The winning exponent, unreduced (2r+1)/(2s+1). Meaningless when !found.
    Rational best_ratio;
    OddFraction witness;
    /// chi of the winning power (0 for theta_H estimates).
    int witness_chi = 0;
    /// Largest denominator searched, 2*max_s + 1.
    int search_bound = 1;
    /// Every lattice ratio with denominator <= search_bound and below the odd
    /// girth was decided, so best_ratio is the exact lattice maximum.
    bool exhaustive_below_bound = true;
};

/// theta_i(G) estimate: for each s <= max_s, the largest r with
/// (2r+1)/(2s+1) < og(G) and chi(G^{(2r+1)/(2s+1)}) <= chi(G) + i, found by
/// binary search (the powers form a hom chain in r). The largest ratio wins;
/// ties go to the smaller s.
/// Throws PreconditionError when G is bipartite or i < 3 - chi(G).
ThicknessEstimate thickness_lower_bound(const Graph& g, int i, int max_s, const SearchOptions& options = {});

/// theta_H(G) estimate: same lattice search with G^{(2r+1)/(2s+1)} -> H as
/// the condition. found is false when no lattice ratio maps to H.
ThicknessEstimate theta_H_lower_bound(const Graph& g, const Graph& h, int max_s,
                                      const SearchOptions& options = {});

/// Whether every proper chi(G)-colouring has an induced subgraph in which
/// each closed neighbourhood sees all colours. Colourings are enumerated up
/// to renaming of colours; each is peeled to its largest such subgraph.
/// Throws LoopError, or BudgetExceededError past options.coloring_budget.
bool is_colorful(const Graph& g, const SearchOptions& options = {});

/// Largest 2n+1 <= 2*max_n+1 with S_{2t+1}(G) -> C_{2n+1}. C_1 is a single
/// looped vertex, which receives every graph, so the answer is at least 1
/// (and is 1 exactly when chi(G) > 3 and t = 0). Exact once
/// max_n >= ((2t+1) og(G) - 1)/2. Throws PreconditionError on bipartite input.
int f_parameter(const Graph& g, int t, int max_n, const SearchOptions& options = {});

/// 2 floor((1 + t chi_c) / (chi_c - 2)) + 1 in exact arithmetic.
/// Throws PreconditionError when chi_c <= 2.
std::int64_t f_closed_form(Rational chi_c, int t);

struct SpectralBoundReport {
    double lambda_g = 0;
    std::size_t edge_count = 0;
    std::size_t vertex_count = 0;
    int cycle_length = 0;
    double lambda_cycle = 0;
    /// lambda_g >= (2|E| / (2|V|)) * lambda_cycle - 1e-9. A violation proves
    /// G does not map to the cycle.
    bool bound_satisfied = false;
};

/// Throws LoopError; PreconditionError when n < 1 or G is empty.
SpectralBoundReport spectral_check(const Graph& g, int n);

}  // namespace gpc
