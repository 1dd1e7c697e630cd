#include "sat_hom.hpp"

#include "gpc/error.hpp"

#include <cadical.hpp>

#include <algorithm>
#include <climits>
#include <string>

namespace gpc::detail {

namespace {

// Ordered pairs (a, b) with a, b not adjacent in H, diagonal included.
std::uint64_t non_edges(const Graph& h) {
    const std::uint64_t n = h.order();
    return n * n - 2 * static_cast<std::uint64_t>(h.size());
}

bool conflict_encoding_is_smaller(const Graph& g, const Graph& h) {
    const std::uint64_t n = h.order();
    const std::uint64_t conflicts = g.size() * non_edges(h);
    const std::uint64_t supports = 2 * g.size() * n + g.order() * n * (n - 1) / 2;
    return conflicts <= supports;
}

// Unit clauses licensed by symmetry. A complete target lets each component
// colour one of its cliques freely, and then a vertex next to the clique needs
// at most one unused colour; a rotation-invariant target lets each component
// pin one vertex.
struct SymmetryUnits {
    std::vector<std::pair<VertexId, VertexId>> fixed;
    std::vector<std::pair<VertexId, VertexId>> forbidden;
};

SymmetryUnits symmetry_units(const Graph& g, const Graph& h) {
    SymmetryUnits out;
    const bool complete = is_complete(h);
    if (!complete && !is_rotation_invariant(h))
        return out;
    auto heavier = [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); };
    for (const auto& component : connected_components(g)) {
        const auto start = *std::min_element(component.begin(), component.end(), heavier);
        if (!complete) {
            out.fixed.emplace_back(start, 0);
            continue;
        }
        Bitset candidates = g.neighbors(start);
        std::vector<VertexId> clique{start};
        while (candidates.any() && clique.size() < h.order()) {
            VertexId next = static_cast<VertexId>(candidates.find_first());
            for (auto v = candidates.find_next(next); v != Bitset::npos; v = candidates.find_next(v))
                if (heavier(static_cast<VertexId>(v), next))
                    next = static_cast<VertexId>(v);
            clique.push_back(next);
            candidates &= g.neighbors(next);
        }
        for (std::size_t i = 0; i < clique.size(); ++i)
            out.fixed.emplace_back(clique[i], static_cast<VertexId>(i));

        Bitset outside = g.neighbors(start);
        for (auto v : clique)
            outside.reset(v);
        if (!outside.any())
            continue;
        VertexId extra = static_cast<VertexId>(outside.find_first());
        for_each_bit(outside, [&](VertexId v) {
            if (heavier(v, extra))
                extra = v;
        });
        for (VertexId a = clique.size() + 1; a < h.order(); ++a)
            out.forbidden.emplace_back(extra, a);
    }
    return out;
}

}  // namespace

std::uint64_t sat_hom_clauses(const Graph& g, const Graph& h) {
    const std::uint64_t n = h.order();
    if (conflict_encoding_is_smaller(g, h))
        return g.order() + g.size() * non_edges(h);
    return g.order() + 2 * g.size() * n + g.order() * n * (n - 1) / 2;
}

std::optional<std::vector<VertexId>> sat_hom(const Graph& g, const Graph& h, std::uint64_t decision_budget) {
    const auto n = static_cast<int>(h.order());
    const auto var = [n](VertexId v, VertexId a) { return static_cast<int>(v) * n + static_cast<int>(a) + 1; };

    CaDiCaL::Solver solver;
    for (VertexId v = 0; v < g.order(); ++v) {
        for (VertexId a = 0; a < h.order(); ++a)
            solver.add(var(v, a));
        solver.add(0);
    }
    const auto edges = g.edges();
    if (conflict_encoding_is_smaller(g, h)) {
        // any true variable of each vertex then gives a homomorphism
        for (auto [u, v] : edges)
            for (VertexId a = 0; a < h.order(); ++a)
                for (VertexId b = 0; b < h.order(); ++b)
                    if (!h.adjacent(a, b)) {
                        solver.add(-var(u, a));
                        solver.add(-var(v, b));
                        solver.add(0);
                    }
    } else {
        for (VertexId v = 0; v < g.order(); ++v)
            for (VertexId a = 0; a < h.order(); ++a)
                for (VertexId b = a + 1; b < h.order(); ++b) {
                    solver.add(-var(v, a));
                    solver.add(-var(v, b));
                    solver.add(0);
                }
        for (auto [u, v] : edges)
            for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}})
                for (VertexId a = 0; a < h.order(); ++a) {
                    solver.add(-var(x, a));
                    for_each_bit(h.neighbors(a), [&](VertexId b) { solver.add(var(y, b)); });
                    solver.add(0);
                }
    }
    const auto units = symmetry_units(g, h);
    for (auto [v, a] : units.fixed) {
        solver.add(var(v, a));
        solver.add(0);
    }
    for (auto [v, a] : units.forbidden) {
        solver.add(-var(v, a));
        solver.add(0);
    }

    solver.limit("decisions", static_cast<int>(std::min<std::uint64_t>(decision_budget, INT_MAX)));
    const int status = solver.solve();
    if (status == 20)
        return std::nullopt;
    if (status != 10)
        throw BudgetExceededError("homomorphism search exceeded its budget of " + std::to_string(decision_budget) +
                                  " solver decisions");

    std::vector<VertexId> map(g.order(), 0);
    for (VertexId v = 0; v < g.order(); ++v)
        for (VertexId a = 0; a < h.order(); ++a)
            if (solver.val(var(v, a)) > 0) {
                map[v] = a;
                break;
            }
    return map;
}

}  // namespace gpc::detail
