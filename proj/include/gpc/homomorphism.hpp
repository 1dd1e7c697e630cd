#pragma once

#include "gpc/graph.hpp"
#include "gpc/options.hpp"
#include "gpc/rational.hpp"

#include <cstdint>
#include <vector>

namespace gpc {

/// Outcome of an exhaustive homomorphism search. Exists carries the vertex
/// map (ids of G to ids of H); None is a proof that no map exists.
struct HomCertificate {
    enum class Verdict { Exists, None };

    Verdict verdict = Verdict::None;
    std::vector<VertexId> map;
    std::uint64_t nodes_explored = 0;

    bool exists() const { return verdict == Verdict::Exists; }
    explicit operator bool() const { return exists(); }
};

/// Re-checks a witness edge by edge.
bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<VertexId>& map);

/// Decides G -> H.
///
/// Sound refutations run first: odd girth, clique number, and for rotation
/// invariant targets the ratio |V|/alpha. The search proper maintains arc
/// consistency over bitset domains, solves connected components of G
/// separately and branches dom/wdeg (domain size over conflict-weighted
/// degree). Interchangeable values are pruned when H is complete, and the
/// first vertex of each component is pinned when H is rotation invariant
/// (see is_rotation_invariant).
///
/// When a short probe of this search gives up and the budget allows more, the
/// instance is handed to a clause-learning SAT solver (CaDiCaL) under the
/// direct encoding; its models are re-checked before being returned. The
/// budget then counts solver decisions. Results are deterministic. Throws
/// BudgetExceededError when options.node_budget runs out, so None always
/// remains a proof.
HomCertificate exists_hom(const Graph& g, const Graph& h, const SearchOptions& options = {});

/// G <-> H.
bool hom_equivalent(const Graph& g, const Graph& h, const SearchOptions& options = {});

/// G -> H and not H -> G.
bool strictly_below(const Graph& g, const Graph& h, const SearchOptions& options = {});

/// A smallest retract of G, as an induced subgraph of G. Unique up to
/// isomorphism. Throws PreconditionError when G exceeds options.core_cap.
Graph core_of(const Graph& g, const SearchOptions& options = {});

/// Checks G^{(2r+1)/(2s+1)} -> H  <=>  G -> H^{-(2s+1)/(2r+1)}.
///
/// Requires 1 <= (2r+1)/(2s+1) < og(G) and a loopless H. Returns whether both
/// sides agree.
struct DualityCheck {
    bool power_side = false;     // G^{e} -> H
    bool negative_side = false;  // G -> H^{-1/e}
    bool holds() const { return power_side == negative_side; }
};
DualityCheck check_duality(const Graph& g, const Graph& h, OddFraction exponent,
                           const SearchOptions& options = {});
bool verify_duality(const Graph& g, const Graph& h, OddFraction exponent,
                    const SearchOptions& options = {});

}  // namespace gpc
