#pragma once

// Brute-force reference implementations. They only read adjacency from the
// library and share none of its algorithms, so they can serve as oracles.

#include "gpc/graph.hpp"
#include "gpc/rational.hpp"

#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency(const gpc::Graph& g);
gpc::Graph from_matrix(const Matrix& m);

/// Plain backtracking over vertex order, no propagation.
bool hom_exists(const Matrix& g, const Matrix& h);
bool hom_exists(const gpc::Graph& g, const gpc::Graph& h);

/// u ~ v in G^k, by following the set of walk ends k steps from u.
Matrix walk_power(const Matrix& g, int k);

/// Tries every permutation; n <= 9 or so.
bool isomorphic(const Matrix& a, const Matrix& b);

/// Smallest odd k with a closed walk of length k, or nullopt when bipartite.
std::optional<int> odd_girth(const Matrix& g);

Matrix complete(int n);
Matrix cycle(int n);
/// Z_p, i ~ j iff q <= |i - j| mod p <= p - q.
Matrix circular(int p, int q);

int chromatic(const Matrix& g);
/// min p/q over p <= 2|V| with G -> K_{p/q}.
gpc::Rational circular_chromatic(const Matrix& g);

/// G(n, p) on atoms "0".."n-1".
gpc::Graph random_graph(std::mt19937& rng, int n, double p);
/// Random graph with an odd cycle through the first three vertices.
gpc::Graph random_non_bipartite(std::mt19937& rng, int n, double p);

}  // namespace oracle
