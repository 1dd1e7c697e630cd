#pragma once

#include "gpc/graph.hpp"
#include "gpc/options.hpp"

namespace gpc {

/// K_n on atoms "0".."n-1".
Graph complete(int n);

/// C_n on atoms "0".."n-1", i adjacent to i+1 mod n.
Graph cycle(int n);

/// K_{n/d}: v_i ~ v_j iff d <= |i-j| <= n-d. Requires n >= 2d >= 2.
Graph circular_complete(int n, int d);

/// KG(m,n): n-subsets of [m] = {1..m}, adjacent when disjoint. Requires m >= 2n >= 2.
/// Vertices are single-set tuples like "{1,2}", in lexicographic order.
Graph kneser(int m, int n);

/// SG(m,n): the subgraph of KG(m,n) induced by the 2-stable n-subsets
/// (no two elements cyclically consecutive in [m]).
Graph schrijver(int m, int n);

/// H(m,n,k). Vertices (A_1..A_k), A_r subset of [m], |A_1| = n, |A_r| >= n,
/// A_s and A_{s+1} disjoint, A_t subset of A_{t+2}. Adjacent when A_i, B_i are
/// disjoint for all i and A_j subset of B_{j+1}, B_j subset of A_{j+1}.
/// Throws CapExceededError past options.vertex_cap; requires m <= 63.
Graph helical(int m, int n, int k, const SearchOptions& options = {});

/// Petersen graph on atoms "0".."9": outer 5-cycle 0..4, spokes i~i+5,
/// inner pentagram 5+i ~ 5+(i+2 mod 5).
Graph petersen();

/// Coxeter graph on atoms "0".."27" from a literal edge table.
Graph coxeter();

}  // namespace gpc
