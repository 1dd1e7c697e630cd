#include "clique.hpp"

#include <algorithm>

namespace gpc::detail {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const std::vector<Bitset>& rows, std::size_t stop_at, std::uint64_t budget)
        : rows_(rows), stop_at_(stop_at), budget_(budget) {}

    CliqueResult run() {
        const auto n = rows_.size();
        Bitset all(n);
        all.set();
        try {
            expand(0, all);
        } catch (const Stop&) {
        }
        return {best_, !out_of_budget_};
    }

private:
    struct Stop {};

    // Greedy colouring of `p`; returns vertices in colour order with bounds.
    void colour_order(const Bitset& p, std::vector<VertexId>& order, std::vector<std::size_t>& bounds) const {
        Bitset uncoloured = p;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset candidates = uncoloured;
            while (candidates.any()) {
                auto v = static_cast<VertexId>(candidates.find_first());
                candidates.reset(v);
                candidates -= rows_[v];
                uncoloured.reset(v);
                order.push_back(v);
                bounds.push_back(colour);
            }
        }
    }

    void expand(std::size_t size, Bitset p) {
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            throw Stop{};
        }
        std::vector<VertexId> order;
        std::vector<std::size_t> bounds;
        colour_order(p, order, bounds);
        for (auto i = order.size(); i-- > 0;) {
            if (size + bounds[i] <= best_)
                return;
            auto v = order[i];
            Bitset next = p & rows_[v];
            next.reset(v);
            if (size + 1 > best_) {
                best_ = size + 1;
                if (best_ >= stop_at_)
                    throw Stop{};
            }
            if (next.any())
                expand(size + 1, std::move(next));
            p.reset(v);
        }
    }

    const std::vector<Bitset>& rows_;
    std::size_t stop_at_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace

CliqueResult max_clique(const std::vector<Bitset>& rows, std::size_t stop_at, std::uint64_t budget) {
    if (rows.empty())
        return {0, true};
    return CliqueSearch(rows, stop_at, budget).run();
}

std::vector<Bitset> rows_of(const Graph& g) {
    std::vector<Bitset> rows(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        rows[v] = g.neighbors(v);
        rows[v].reset(v);
    }
    return rows;
}

std::vector<Bitset> complement_rows(const Graph& g) {
    std::vector<Bitset> rows(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        rows[v] = ~g.neighbors(v);
        rows[v].reset(v);
    }
    return rows;
}

int dsatur(const Graph& g) {
    const auto n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<Bitset> seen(n, Bitset(n + 1));
    std::vector<std::size_t> saturation(n, 0);
    int used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        VertexId pick = n;
        for (VertexId v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            if (pick == n || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 0;
        while (seen[pick].test(static_cast<std::size_t>(c)))
            ++c;
        colour[pick] = c;
        used = std::max(used, c + 1);
        for_each_bit(g.neighbors(pick), [&](VertexId w) {
            if (!seen[w].test(static_cast<std::size_t>(c))) {
                seen[w].set(static_cast<std::size_t>(c));
                ++saturation[w];
            }
        });
    }
    return used;
}

}  // namespace gpc::detail
