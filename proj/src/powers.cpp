#include "gpc/powers.hpp"

#include "gpc/error.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace gpc {

namespace {

using Rows = std::vector<Bitset>;
using Mask = std::uint64_t;

Rows identity_rows(std::size_t n) {
    Rows rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        rows[i].set(i);
    return rows;
}

// Boolean matrix product: row i of the result is the union of rows j of `y`
// over the set bits j of row i of `x`.
Rows multiply(const Rows& x, const Rows& y) {
    const auto n = x.size();
    Rows z(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for_each_bit(x[i], [&](VertexId j) { z[i] |= y[j]; });
    return z;
}

// Inner vertices are named (u,v)_i. When G already has vertices with such
// names (a subdivision of a subdivision), the new names are wrapped as
// <~k,(u,v)_i> with the smallest k >= 1 that avoids every existing name.
class InnerNamer {
public:
    InnerNamer(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& edges, int t) : g_(g) {
        auto clashes = [&](int level) {
            for (auto [u, v] : edges)
                for (int i = 1; i < t; ++i)
                    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}})
                        if (g.find(make(a, b, i, level).render()))
                            return true;
            return false;
        };
        while (clashes(level_))
            ++level_;
    }

    VertexLabel operator()(VertexId a, VertexId b, int i) const { return make(a, b, i, level_); }

private:
    VertexLabel make(VertexId a, VertexId b, int i, int level) const {
        auto sub = VertexLabel::sub(g_.label(a), g_.label(b), i);
        return level == 0 ? sub : VertexLabel::pair(VertexLabel::atom("~" + std::to_string(level)), sub);
    }

    const Graph& g_;
    int level_ = 0;
};

}  // namespace

Graph subdivide(const Graph& g, int t) {
    if (t < 1)
        throw PreconditionError("subdivide: t >= 1 required");
    if (g.has_loops())
        throw LoopError("subdivide");
    const auto edges = g.edges();
    const InnerNamer name(g, edges, t);
    GraphBuilder b(g.order() + static_cast<std::size_t>(t - 1) * edges.size());
    for (VertexId v = 0; v < g.order(); ++v)
        b.add_vertex(g.label(v));

    if (t % 2 == 1) {
        const int s = (t - 1) / 2;
        for (auto [u, v] : edges) {
            // uv[i] = (uv)_i, vu[i] = (vu)_i, index 0 being the endpoint itself
            std::vector<VertexId> uv(s + 1), vu(s + 1);
            uv[0] = u;
            vu[0] = v;
            for (int i = 1; i <= s; ++i)
                uv[i] = b.add_vertex(name(u, v, i));
            for (int i = 1; i <= s; ++i)
                vu[i] = b.add_vertex(name(v, u, i));
            for (int i = 0; i <= s; ++i)
                b.add_edge(uv[i], vu[s - i]);
            for (int j = 1; j <= s; ++j)
                b.add_edge(vu[s - j + 1], uv[j]);
        }
    } else {
        for (auto [u, v] : edges) {
            VertexId previous = u;
            for (int i = 1; i < t; ++i) {
                auto inner = b.add_vertex(name(u, v, i));
                b.add_edge(previous, inner);
                previous = inner;
            }
            b.add_edge(previous, v);
        }
    }
    return std::move(b).build();
}

Graph power(const Graph& g, int k) {
    if (k < 1)
        throw PreconditionError("power: k >= 1 required");
    const auto n = g.order();
    Rows base(n);
    for (VertexId v = 0; v < n; ++v)
        base[v] = g.neighbors(v);
    Rows result = identity_rows(n);
    bool first = true;
    for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
        if (e & 1u) {
            result = first ? base : multiply(result, base);
            first = false;
        }
        if (e > 1)
            base = multiply(base, base);
    }
    GraphBuilder b(n);
    for (VertexId v = 0; v < n; ++v)
        b.add_vertex(g.label(v));
    for (VertexId u = 0; u < n; ++u)
        for_each_bit(result[u], [&](VertexId v) {
            if (v >= u)
                b.add_edge(u, v);
        });
    return std::move(b).build();
}

Graph fractional_power(const Graph& g, OddFraction exponent) {
    if (exponent.r < 0 || exponent.s < 0)
        throw PreconditionError("fractional_power: r, s >= 0 required");
    if (g.has_loops())
        throw LoopError("fractional_power");
    return power(subdivide(g, static_cast<int>(exponent.denominator())),
                 static_cast<int>(exponent.numerator()));
}

Graph negative_unit_power(const Graph& g, int s, const SearchOptions& options) {
    if (s < 0)
        throw PreconditionError("negative_unit_power: s >= 0 required");
    if (g.has_loops())
        throw LoopError("negative_unit_power");
    const auto n = g.order();
    if (n > 63)
        throw PreconditionError("negative_unit_power: at most 63 vertices supported");

    std::vector<Mask> adjacency(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for_each_bit(g.neighbors(v), [&](VertexId w) { adjacency[v] |= Mask{1} << w; });
    auto step = [&](Mask set) {
        Mask out = 0;
        for (VertexId w = 0; w < n; ++w)
            if (set & (Mask{1} << w))
                out |= adjacency[w];
        return out;
    };

    // walk[v][i] = N_i(v)
    std::vector<std::vector<Mask>> walk(n, std::vector<Mask>(s + 1));
    long double projected = 0;
    for (VertexId v = 0; v < n; ++v) {
        walk[v][0] = Mask{1} << v;
        long double count = 1;
        for (int i = 1; i <= s; ++i) {
            walk[v][i] = step(walk[v][i - 1]);
            count *= std::ldexp(1.0L, std::popcount(walk[v][i])) - 1;
        }
        projected += count;
    }
    if (projected > static_cast<long double>(options.vertex_cap))
        throw CapExceededError("negative_unit_power would have about " +
                               std::to_string(static_cast<unsigned long long>(projected)) +
                               " vertices, above the cap of " + std::to_string(options.vertex_cap));

    std::vector<std::vector<Mask>> tuples;
    tuples.reserve(static_cast<std::size_t>(projected));
    std::vector<Mask> current;
    for (VertexId v = 0; v < n; ++v) {
        bool usable = true;
        for (int i = 1; i <= s; ++i)
            usable = usable && walk[v][i] != 0;
        if (!usable)
            continue;
        current.assign(1, walk[v][0]);
        auto extend = [&](auto&& self) -> void {
            const auto i = current.size();  // choosing A_{i+1} within N_i(v)
            if (i == static_cast<std::size_t>(s) + 1) {
                tuples.push_back(current);
                return;
            }
            const Mask allowed = walk[v][i];
            // nonempty submasks in increasing numeric order
            for (Mask sub = allowed & (~allowed + 1); sub != 0; sub = (sub - allowed) & allowed) {
                current.push_back(sub);
                self(self);
                current.pop_back();
            }
        };
        extend(extend);
    }

    // common[t][j]: vertices joined to every member of A_j of tuple t
    std::vector<std::vector<Mask>> common(tuples.size(), std::vector<Mask>(s + 1));
    const Mask everything = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (std::size_t t = 0; t < tuples.size(); ++t)
        for (int j = 0; j <= s; ++j) {
            Mask c = everything;
            for (VertexId w = 0; w < n; ++w)
                if (tuples[t][j] & (Mask{1} << w))
                    c &= adjacency[w];
            common[t][j] = c;
        }

    GraphBuilder b(tuples.size());
    for (const auto& tuple : tuples) {
        std::vector<std::vector<int>> sets;
        for (auto m : tuple) {
            std::vector<int> members;
            for (VertexId w = 0; w < n; ++w)
                if (m & (Mask{1} << w))
                    members.push_back(static_cast<int>(w));
            sets.push_back(std::move(members));
        }
        b.add_vertex(VertexLabel::sets(std::move(sets)));
    }
    for (std::size_t a = 0; a < tuples.size(); ++a) {
        for (std::size_t c = a; c < tuples.size(); ++c) {
            const auto& x = tuples[a];
            const auto& y = tuples[c];
            bool ok = true;
            for (int i = 0; i < s && ok; ++i)
                ok = (x[i] & ~y[i + 1]) == 0 && (y[i] & ~x[i + 1]) == 0;
            for (int j = 0; j <= s && ok; ++j)
                ok = (x[j] & ~common[c][j]) == 0;
            if (ok)
                b.add_edge(a, c);
        }
    }
    return std::move(b).build();
}

Graph negative_power(const Graph& g, int s, int r, const SearchOptions& options) {
    if (s < 0 || r < 0)
        throw PreconditionError("negative_power: s, r >= 0 required");
    if (s > r)
        throw PreconditionError("negative_power: (2s+1)/(2r+1) <= 1 required");
    return power(negative_unit_power(g, r, options), 2 * s + 1);
}

}  // namespace gpc
