#pragma once

#include "gpc/graph.hpp"
#include "gpc/options.hpp"
#include "gpc/rational.hpp"

namespace gpc {

/// S_t(G): every edge replaced by a path of length t. Loopless input only.
///
/// For odd t = 2s+1 the inner vertices of the path for edge uv (u before v in
/// vertex order) are named (u,v)_i and (v,u)_i for 1 <= i <= s, with
/// (u,v)_0 = u and (v,u)_0 = v; the path edges are (uv)_i (vu)_{s-i} for
/// 0 <= i <= s and (vu)_{s-j+1} (uv)_j for 1 <= j <= s. So (uv)_i sits at
/// distance 2i from u. For even t the inner vertices are (u,v)_1..(u,v)_{t-1}
/// walking from u. New vertices follow the originals, edge by edge.
/// If a name is already taken (subdividing a subdivision) it is wrapped as
/// <~k,name> with the smallest k >= 1 that is free.
Graph subdivide(const Graph& g, int t);

/// G^k: same vertices, u ~ v iff a walk of length exactly k joins them (u = v
/// gives a loop). Boolean adjacency-matrix exponentiation; loops allowed.
Graph power(const Graph& g, int k);

/// G^{(2r+1)/(2s+1)} = (S_{2s+1}(G))^{2r+1}. Loopless input only.
Graph fractional_power(const Graph& g, OddFraction exponent);

/// G^{-1/(2s+1)}.
///
/// Vertices are tuples (A_1..A_{s+1}) of subsets of V(G) with A_1 = {v} and
/// nonempty A_i within N_{i-1}(v); rendered as SetTuple labels over the 0-based
/// vertex positions of G. Adjacent when A_i within B_{i+1} and B_i within
/// A_{i+1} for i <= s, and A_j fully joined to B_j for j <= s+1.
///
/// A vertex v whose walk neighbourhoods N_1..N_s include an empty set (an
/// isolated vertex when s >= 1) contributes no tuple; the construction is
/// meant for graphs without isolated vertices. Requires |V(G)| <= 63 and no
/// loops; throws CapExceededError past options.vertex_cap.
Graph negative_unit_power(const Graph& g, int s, const SearchOptions& options = {});

/// G^{-(2s+1)/(2r+1)} = (G^{-1/(2r+1)})^{2s+1}. Requires s <= r.
Graph negative_power(const Graph& g, int s, int r, const SearchOptions& options = {});

}  // namespace gpc
