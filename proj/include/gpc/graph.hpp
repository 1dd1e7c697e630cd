#pragma once

#include "gpc/label.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpc {

using VertexId = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Calls fn(i) for every set bit of `bits`, in increasing order.
template <typename Fn>
void for_each_bit(const Bitset& bits, Fn&& fn) {
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
        fn(static_cast<VertexId>(i));
}

/// Finite undirected graph with loops permitted.
///
/// Vertices keep their construction order; ids are positions in that order.
/// Adjacency is held as one bitset row per vertex. Instances are immutable;
/// use GraphBuilder to make one.
class Graph {
public:
    Graph() = default;

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return edge_count_; }

    const VertexLabel& label(VertexId v) const { return labels_[v]; }
    const std::string& name(VertexId v) const { return names_[v]; }
    std::span<const std::string> names() const { return names_; }

    std::optional<VertexId> find(std::string_view name) const;
    /// Throws UnknownVertexError.
    VertexId index_of(const VertexLabel& label) const;
    VertexId index_of(std::string_view name) const;

    bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
    const Bitset& neighbors(VertexId v) const { return rows_[v]; }
    std::size_t degree(VertexId v) const { return rows_[v].count(); }

    bool has_loop(VertexId v) const { return rows_[v].test(v); }
    bool has_loops() const { return loop_count_ > 0; }
    std::size_t loop_count() const { return loop_count_; }

    /// Edges as id pairs (u <= v), ordered by (u, v).
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    /// Edges as rendered-name pairs, smaller name first, sorted; the JSON order.
    std::vector<std::pair<std::string, std::string>> canonical_edges() const;

    Bitset empty_set() const { return Bitset(order()); }

    /// Same names in the same order and the same adjacency.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class GraphBuilder;

    std::vector<VertexLabel> labels_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
    std::size_t loop_count_ = 0;
};

class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t expected_order) { reserve(expected_order); }

    void reserve(std::size_t n);

    /// Throws PreconditionError on a duplicate rendered label.
    VertexId add_vertex(VertexLabel label);
    /// Idempotent; (v, v) adds a loop.
    void add_edge(VertexId u, VertexId v);
    std::size_t order() const { return labels_.size(); }

    Graph build() &&;

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Odd girth: the length of a shortest odd closed walk.
class OddGirth {
public:
    enum class Kind { One, Finite, Infinite };

    static OddGirth one() { return OddGirth(Kind::One, 1); }
    static OddGirth finite(std::size_t g) { return OddGirth(Kind::Finite, g); }
    static OddGirth infinite() { return OddGirth(Kind::Infinite, 0); }

    Kind kind() const { return kind_; }
    bool is_one() const { return kind_ == Kind::One; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    /// 1 for One; the cycle length for Finite. Meaningless for Infinite.
    std::size_t length() const { return value_; }

    /// Whether num/den < og, compared exactly. Infinite exceeds every ratio.
    bool exceeds(long long num, long long den) const;

    std::string to_string() const;

    friend bool operator==(const OddGirth&, const OddGirth&) = default;

private:
    OddGirth(Kind k, std::size_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::size_t value_;
};

OddGirth odd_girth(const Graph& g);

/// N_i(v): vertices joined to v by a walk of length exactly i.
Bitset walk_neighborhood(const Graph& g, VertexId v, std::size_t length);
/// Same, by label, returned sorted by rendered name.
std::vector<VertexLabel> walk_neighborhood(const Graph& g, const VertexLabel& v, std::size_t length);

bool is_bipartite(const Graph& g);

Graph induced_subgraph(const Graph& g, const Bitset& keep);
Graph induced_subgraph(const Graph& g, std::span<const VertexLabel> keep);

/// Largest eigenvalue of the Laplacian D - A. Throws LoopError.
double laplacian_lambda_max(const Graph& g);

/// Vertex sets of the connected components, each in increasing id order,
/// components ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// True when v -> v+1 (mod n) is an automorphism in construction order.
/// Cycles, complete graphs and circular complete graphs satisfy this.
bool is_rotation_invariant(const Graph& g);

/// Complete graph test on loopless graphs.
bool is_complete(const Graph& g);

}  // namespace gpc
