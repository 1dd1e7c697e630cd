#include "gpc/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gpc {

namespace {

// Disjoint union of the two graphs: ids [0, n) are G, [n, 2n) are H.
class JointRefiner {
public:
    JointRefiner(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
        adjacency_.resize(2 * n_);
        for (VertexId v = 0; v < n_; ++v) {
            for_each_bit(g.neighbors(v), [&](VertexId w) { adjacency_[v].push_back(w); });
            for_each_bit(h.neighbors(v), [&](VertexId w) { adjacency_[n_ + v].push_back(n_ + w); });
        }
    }

    std::optional<std::vector<VertexId>> run() {
        std::vector<int> colours(2 * n_);
        for (VertexId v = 0; v < n_; ++v) {
            colours[v] = g_.has_loop(v) ? 1 : 0;
            colours[n_ + v] = h_.has_loop(v) ? 1 : 0;
        }
        return search(std::move(colours));
    }

private:
    // Refines to the coarsest equitable partition. Returns false when the two
    // sides end up with different class sizes.
    bool refine(std::vector<int>& colours) const {
        std::size_t classes = std::set<int>(colours.begin(), colours.end()).size();
        while (true) {
            std::vector<std::vector<int>> signature(2 * n_);
            for (VertexId v = 0; v < 2 * n_; ++v) {
                auto& sig = signature[v];
                sig.reserve(adjacency_[v].size() + 1);
                for (auto w : adjacency_[v])
                    sig.push_back(colours[w]);
                std::sort(sig.begin(), sig.end());
                sig.insert(sig.begin(), colours[v]);
            }
            std::map<std::vector<int>, int> ids;
            for (const auto& sig : signature)
                ids.emplace(sig, 0);
            int next = 0;
            for (auto& [sig, id] : ids)
                id = next++;
            for (VertexId v = 0; v < 2 * n_; ++v)
                colours[v] = ids[signature[v]];
            if (ids.size() == classes)
                break;
            classes = ids.size();
        }
        std::vector<long> balance(classes, 0);
        for (VertexId v = 0; v < n_; ++v) {
            ++balance[colours[v]];
            --balance[colours[n_ + v]];
        }
        return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
    }

    std::optional<std::vector<VertexId>> search(std::vector<int> colours) const {
        if (!refine(colours))
            return std::nullopt;
        std::map<int, std::vector<VertexId>> cells;
        for (VertexId v = 0; v < n_; ++v)
            cells[colours[v]].push_back(v);
        const std::vector<VertexId>* target = nullptr;
        int target_colour = -1;
        for (const auto& [colour, members] : cells) {
            if (members.size() > 1 && (target == nullptr || members.size() < target->size())) {
                target = &members;
                target_colour = colour;
            }
        }
        if (target == nullptr)
            return check_discrete(colours);

        const int fresh = static_cast<int>(2 * n_) + 1;
        const VertexId x = target->front();
        for (VertexId y = 0; y < n_; ++y) {
            if (colours[n_ + y] != target_colour)
                continue;
            auto next = colours;
            next[x] = fresh;
            next[n_ + y] = fresh;
            if (auto found = search(std::move(next)))
                return found;
        }
        return std::nullopt;
    }

    std::optional<std::vector<VertexId>> check_discrete(const std::vector<int>& colours) const {
        std::vector<VertexId> by_colour(2 * n_ + 2, n_);
        for (VertexId y = 0; y < n_; ++y)
            by_colour[colours[n_ + y]] = y;
        std::vector<VertexId> map(n_);
        for (VertexId x = 0; x < n_; ++x)
            map[x] = by_colour[colours[x]];
        for (VertexId u = 0; u < n_; ++u)
            for (VertexId v = u; v < n_; ++v)
                if (g_.adjacent(u, v) != h_.adjacent(map[u], map[v]))
                    return std::nullopt;
        return map;
    }

    const Graph& g_;
    const Graph& h_;
    std::size_t n_;
    std::vector<std::vector<VertexId>> adjacency_;
};

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size() || g.loop_count() != h.loop_count())
        return std::nullopt;
    std::vector<std::size_t> dg, dh;
    for (VertexId v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return std::nullopt;
    return JointRefiner(g, h).run();
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace gpc
