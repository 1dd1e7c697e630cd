#include "gpc/graph.hpp"

#include "gpc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <deque>
#include <limits>

namespace gpc {

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VertexId Graph::index_of(const VertexLabel& label) const { return index_of(label.render()); }

VertexId Graph::index_of(std::string_view name) const {
    if (auto v = find(name))
        return *v;
    throw UnknownVertexError(std::string(name));
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u) {
        const auto& row = rows_[u];
        for (auto v = row.test(u) ? u : row.find_next(u); v != Bitset::npos; v = row.find_next(v))
            out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::canonical_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edge_count_);
    for (auto [u, v] : edges()) {
        const auto& a = names_[u];
        const auto& b = names_[v];
        if (a <= b)
            out.emplace_back(a, b);
        else
            out.emplace_back(b, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.rows_ == b.rows_;
}

void GraphBuilder::reserve(std::size_t n) {
    labels_.reserve(n);
    names_.reserve(n);
    index_.reserve(n);
}

VertexId GraphBuilder::add_vertex(VertexLabel label) {
    auto name = label.render();
    auto id = labels_.size();
    auto [it, inserted] = index_.emplace(name, id);
    if (!inserted)
        throw PreconditionError("duplicate vertex label: " + name);
    labels_.push_back(std::move(label));
    names_.push_back(std::move(name));
    return id;
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
    if (u >= labels_.size() || v >= labels_.size())
        throw PreconditionError("edge endpoint out of range");
    edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() && {
    Graph g;
    const auto n = labels_.size();
    g.rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges_) {
        g.rows_[u].set(v);
        g.rows_[v].set(u);
    }
    std::size_t twice = 0;
    for (VertexId v = 0; v < n; ++v) {
        twice += g.rows_[v].count();
        if (g.rows_[v].test(v)) {
            ++g.loop_count_;
            ++twice;  // a loop appears once in its row but is one edge
        }
    }
    g.edge_count_ = twice / 2;
    g.labels_ = std::move(labels_);
    g.names_ = std::move(names_);
    g.index_ = std::move(index_);
    return g;
}

bool OddGirth::exceeds(long long num, long long den) const {
    switch (kind_) {
    case Kind::Infinite:
        return true;
    case Kind::One:
    case Kind::Finite:
        return num < static_cast<long long>(value_) * den;
    }
    return false;
}

std::string OddGirth::to_string() const {
    switch (kind_) {
    case Kind::One:
        return "1";
    case Kind::Finite:
        return std::to_string(value_);
    case Kind::Infinite:
        return "inf";
    }
    return "?";
}

OddGirth odd_girth(const Graph& g) {
    if (g.has_loops())
        return OddGirth::one();
    const auto n = g.order();
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    std::vector<std::size_t> dist(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto x = queue[head];
            // any odd cycle found from here on is no shorter than 2 d(x) + 1
            if (best != unseen && 2 * dist[x] + 1 >= best)
                break;
            bool stop = false;
            for_each_bit(g.neighbors(x), [&](VertexId y) {
                if (stop)
                    return;
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                } else if (dist[y] == dist[x]) {
                    best = std::min(best, 2 * dist[x] + 1);
                    stop = true;
                }
            });
        }
    }
    if (best == unseen)
        return OddGirth::infinite();
    return OddGirth::finite(best);
}

Bitset walk_neighborhood(const Graph& g, VertexId v, std::size_t length) {
    if (v >= g.order())
        throw UnknownVertexError("#" + std::to_string(v));
    Bitset current = g.empty_set();
    current.set(v);
    for (std::size_t step = 0; step < length; ++step) {
        Bitset next = g.empty_set();
        for_each_bit(current, [&](VertexId u) { next |= g.neighbors(u); });
        if (next == current)
            break;  // fixed point: every further step gives the same set
        current = std::move(next);
    }
    return current;
}

std::vector<VertexLabel> walk_neighborhood(const Graph& g, const VertexLabel& v, std::size_t length) {
    auto bits = walk_neighborhood(g, g.index_of(v), length);
    std::vector<VertexId> ids;
    for_each_bit(bits, [&](VertexId u) { ids.push_back(u); });
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
    std::vector<VertexLabel> out;
    out.reserve(ids.size());
    for (auto u : ids)
        out.push_back(g.label(u));
    return out;
}

bool is_bipartite(const Graph& g) {
    if (g.has_loops())
        return false;
    const auto n = g.order();
    std::vector<int> side(n, -1);
    std::deque<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        if (side[root] >= 0)
            continue;
        side[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            bool conflict = false;
            for_each_bit(g.neighbors(x), [&](VertexId y) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    conflict = true;
                }
            });
            if (conflict)
                return false;
        }
    }
    return true;
}

Graph induced_subgraph(const Graph& g, const Bitset& keep) {
    GraphBuilder b(keep.count());
    std::vector<VertexId> remap(g.order(), g.order());
    for_each_bit(keep, [&](VertexId v) { remap[v] = b.add_vertex(g.label(v)); });
    for_each_bit(keep, [&](VertexId u) {
        for_each_bit(g.neighbors(u) & keep, [&](VertexId v) {
            if (v >= u)
                b.add_edge(remap[u], remap[v]);
        });
    });
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const VertexLabel> keep) {
    Bitset bits = g.empty_set();
    for (const auto& label : keep)
        bits.set(g.index_of(label));
    return induced_subgraph(g, bits);
}

double laplacian_lambda_max(const Graph& g) {
    if (g.has_loops())
        throw LoopError("laplacian_lambda_max");
    const auto n = static_cast<Eigen::Index>(g.order());
    if (n == 0)
        return 0.0;
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        lap(u, u) = static_cast<double>(g.degree(static_cast<VertexId>(u)));
        for_each_bit(g.neighbors(static_cast<VertexId>(u)),
                     [&](VertexId v) { lap(u, static_cast<Eigen::Index>(v)) = -1.0; });
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    const auto n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> out;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<VertexId> comp{root};
        seen[root] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for_each_bit(g.neighbors(comp[head]), [&](VertexId y) {
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_rotation_invariant(const Graph& g) {
    const auto n = g.order();
    if (n == 0)
        return true;
    // row v+1 must equal row v rotated by one position
    for (VertexId v = 0; v < n; ++v) {
        const auto& row = g.neighbors(v);
        const auto& next = g.neighbors((v + 1) % n);
        for (VertexId w = 0; w < n; ++w)
            if (row.test(w) != next.test((w + 1) % n))
                return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    if (g.has_loops())
        return false;
    const auto n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace gpc
