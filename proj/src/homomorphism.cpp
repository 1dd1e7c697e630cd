#include "gpc/homomorphism.hpp"

#include "clique.hpp"
#include "sat_hom.hpp"
#include "gpc/error.hpp"
#include "gpc/powers.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace gpc {

namespace {

using Word = std::uint64_t;

constexpr std::uint64_t kFilterBudget = 20'000;
constexpr std::uint64_t kProbeNodes = 50'000;
constexpr std::uint64_t kSatClauseLimit = 8'000'000;

// Domains of all pattern vertices in one flat word array, `words` per vertex.
class Domains {
public:
    Domains(std::size_t vars, std::size_t words) : words_(words), data_(vars * words, 0) {}

    Word* operator[](VertexId v) { return data_.data() + v * words_; }
    const Word* operator[](VertexId v) const { return data_.data() + v * words_; }
    std::size_t words() const { return words_; }

private:
    std::size_t words_;
    std::vector<Word> data_;
};

std::size_t popcount(const Word* a, std::size_t words) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i)
        c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

VertexId first_bit(const Word* a, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] != 0)
            return i * 64 + static_cast<VertexId>(std::countr_zero(a[i]));
    return words * 64;
}

std::vector<Word> to_words(const Bitset& b, std::size_t words) {
    std::vector<Word> out(words, 0);
    boost::to_block_range(b, out.begin());
    return out;
}

class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h, const SearchOptions& options)
        : g_(g), h_(h), options_(options), words_((h.order() + 63) / 64) {
        const auto m = h.order();
        target_rows_.reserve(m * words_);
        for (VertexId a = 0; a < m; ++a) {
            auto w = to_words(h.neighbors(a), words_);
            target_rows_.insert(target_rows_.end(), w.begin(), w.end());
        }
        active_.assign(words_, 0);
        for (VertexId a = 0; a < m; ++a)
            if (h.degree(a) > 0)
                active_[a / 64] |= Word{1} << (a % 64);

        value_rank_.resize(m);
        std::vector<VertexId> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
        value_order_ = order;
        for (std::size_t i = 0; i < m; ++i)
            value_rank_[order[i]] = i;

        pattern_adjacency_.resize(g.order());
        edge_slot_.resize(g.order());
        std::size_t edges = 0;
        for (VertexId v = 0; v < g.order(); ++v)
            for_each_bit(g.neighbors(v), [&](VertexId w) {
                pattern_adjacency_[v].push_back(w);
                if (w < v) {
                    // both directions share the slot taken when w was scanned
                    const auto& back = pattern_adjacency_[w];
                    const auto at = std::find(back.begin(), back.end(), v) - back.begin();
                    edge_slot_[v].push_back(edge_slot_[w][at]);
                } else {
                    edge_slot_[v].push_back(edges++);
                }
            });
        edge_weight_.assign(edges, 1);

        interchangeable_values_ = is_complete(h);
        pin_first_ = !interchangeable_values_ && h.size() > 0 && is_rotation_invariant(h);
    }

    HomCertificate run() {
        HomCertificate cert;
        cert.map.assign(g_.order(), 0);
        for (const auto& component : connected_components(g_)) {
            if (component.size() == 1 && g_.degree(component.front()) == 0) {
                cert.map[component.front()] = value_order_.front();
                continue;
            }
            if (!solve(component, cert.map)) {
                cert.verdict = HomCertificate::Verdict::None;
                cert.map.clear();
                cert.nodes_explored = nodes_;
                return cert;
            }
        }
        cert.verdict = HomCertificate::Verdict::Exists;
        cert.nodes_explored = nodes_;
        return cert;
    }

private:
    const Word* target_row(VertexId a) const { return target_rows_.data() + a * words_; }

    bool solve(const std::vector<VertexId>& component, std::vector<VertexId>& map) {
        component_ = &component;
        Domains domains(g_.order(), words_);
        for (auto v : component)
            std::memcpy(domains[v], active_.data(), words_ * sizeof(Word));
        if (!propagate(domains, component))
            return false;
        first_decision_ = true;
        if (!search(domains))
            return false;
        for (auto v : component)
            map[v] = first_bit(domains[v], words_);
        return true;
    }

    // AC-3 over the pattern edges: D(u) is cut to the union of the target
    // neighbourhoods of D(v) for every pattern edge uv.
    bool propagate(Domains& domains, const std::vector<VertexId>& seeds) {
        std::vector<VertexId> queue(seeds.begin(), seeds.end());
        std::vector<char> queued(g_.order(), 0);
        for (auto v : queue)
            queued[v] = 1;
        std::vector<Word> support(words_);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto v = queue[head];
            queued[v] = 0;
            const Word* dv = domains[v];
            std::fill(support.begin(), support.end(), 0);
            for (std::size_t i = 0; i < words_; ++i) {
                for (Word bits = dv[i]; bits != 0; bits &= bits - 1) {
                    const auto a = i * 64 + static_cast<VertexId>(std::countr_zero(bits));
                    const Word* row = target_row(a);
                    for (std::size_t j = 0; j < words_; ++j)
                        support[j] |= row[j];
                }
            }
            const auto& around = pattern_adjacency_[v];
            for (std::size_t k = 0; k < around.size(); ++k) {
                const auto u = around[k];
                Word* du = domains[u];
                bool changed = false;
                Word any = 0;
                for (std::size_t j = 0; j < words_; ++j) {
                    const Word next = du[j] & support[j];
                    changed |= next != du[j];
                    du[j] = next;
                    any |= next;
                }
                if (any == 0) {
                    ++edge_weight_[edge_slot_[v][k]];
                    return false;
                }
                if (changed && !queued[u]) {
                    queued[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        return true;
    }

    bool search(Domains& domains) {
        const auto& component = *component_;
        // dom/wdeg: edges that caused wipe-outs weigh more
        VertexId best = g_.order();
        std::uint64_t best_size = 0;
        std::uint64_t best_weight = 1;
        for (auto v : component) {
            const std::uint64_t size = popcount(domains[v], words_);
            if (size <= 1)
                continue;
            std::uint64_t weight = 0;
            const auto& around = pattern_adjacency_[v];
            for (std::size_t k = 0; k < around.size(); ++k)
                if (popcount(domains[around[k]], words_) > 1)
                    weight += edge_weight_[edge_slot_[v][k]];
            weight = std::max<std::uint64_t>(weight, 1);
            if (best == g_.order() || size * best_weight < best_size * weight) {
                best = v;
                best_size = size;
                best_weight = weight;
            }
        }
        if (best == g_.order())
            return true;  // all singletons and arc consistent: a homomorphism

        std::vector<VertexId> values;
        const Word* db = domains[best];
        for (std::size_t i = 0; i < words_; ++i)
            for (Word bits = db[i]; bits != 0; bits &= bits - 1)
                values.push_back(i * 64 + static_cast<VertexId>(std::countr_zero(bits)));
        std::sort(values.begin(), values.end(),
                  [&](VertexId a, VertexId b) { return value_rank_[a] < value_rank_[b]; });

        if (interchangeable_values_) {
            // values nobody is fixed to are still in every domain and
            // symmetric; one representative suffices
            std::vector<Word> used(words_, 0);
            for (auto v : component)
                if (popcount(domains[v], words_) == 1)
                    for (std::size_t j = 0; j < words_; ++j)
                        used[j] |= domains[v][j];
            bool fresh_taken = false;
            std::erase_if(values, [&](VertexId a) {
                if (used[a / 64] & (Word{1} << (a % 64)))
                    return false;
                if (fresh_taken)
                    return true;
                fresh_taken = true;
                return false;
            });
        } else if (pin_first_ && first_decision_) {
            values.resize(1);
        }
        first_decision_ = false;

        for (auto a : values) {
            if (++nodes_ > options_.node_budget)
                throw BudgetExceededError("homomorphism search exceeded its node budget of " +
                                          std::to_string(options_.node_budget));
            Domains child = domains;
            Word* dc = child[best];
            std::fill(dc, dc + words_, 0);
            dc[a / 64] |= Word{1} << (a % 64);
            const std::vector<VertexId> seed{best};
            if (propagate(child, seed) && search(child)) {
                domains = std::move(child);
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    const SearchOptions& options_;
    std::size_t words_;
    std::vector<Word> target_rows_;
    std::vector<Word> active_;
    std::vector<VertexId> value_order_;
    std::vector<std::size_t> value_rank_;
    std::vector<std::vector<VertexId>> pattern_adjacency_;
    std::vector<std::vector<std::size_t>> edge_slot_;
    std::vector<std::uint64_t> edge_weight_;
    bool interchangeable_values_ = false;
    bool pin_first_ = false;
    bool first_decision_ = true;
    const std::vector<VertexId>* component_ = nullptr;
    std::uint64_t nodes_ = 0;
};

HomCertificate constant_map(const Graph& g, VertexId image) {
    HomCertificate cert;
    cert.verdict = HomCertificate::Verdict::Exists;
    cert.map.assign(g.order(), image);
    return cert;
}

HomCertificate refuted() { return HomCertificate{}; }

}  // namespace

bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<VertexId>& map) {
    if (map.size() != g.order())
        return false;
    for (auto image : map)
        if (image >= h.order())
            return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(map[u], map[v]))
            return false;
    return true;
}

HomCertificate exists_hom(const Graph& g, const Graph& h, const SearchOptions& options) {
    if (g.order() == 0)
        return constant_map(g, 0);
    if (h.order() == 0)
        return refuted();
    if (h.has_loops()) {
        for (VertexId a = 0; a < h.order(); ++a)
            if (h.has_loop(a))
                return constant_map(g, a);
    }
    if (g.has_loops())
        return refuted();
    if (g.size() == 0)
        return constant_map(g, 0);
    if (h.size() == 0)
        return refuted();

    // odd closed walks map to odd closed walks of at most the same length
    const auto og_h = odd_girth(h);
    if (!og_h.is_infinite()) {
        if (og_h.length() > 3) {
            const auto og_g = odd_girth(g);
            if (og_g.is_finite() && og_g.length() < og_h.length())
                return refuted();
        }
    } else if (!is_bipartite(g)) {
        return refuted();
    }

    // a clique maps onto a clique of the same size
    const auto target_clique = detail::max_clique(detail::rows_of(h), h.order() + 1, kFilterBudget);
    const std::size_t omega_h = target_clique.complete ? target_clique.size
                                                       : static_cast<std::size_t>(detail::dsatur(h));
    if (detail::max_clique(detail::rows_of(g), omega_h + 1, kFilterBudget).size > omega_h)
        return refuted();

    // the fractional chromatic number cannot go up along a homomorphism; it is
    // at least n/alpha for G and exactly n/alpha for a vertex-transitive H
    if (is_rotation_invariant(h) && !is_complete(h)) {
        const auto target_alpha = detail::max_clique(detail::complement_rows(h), h.order() + 1, kFilterBudget);
        if (target_alpha.complete) {
            const auto source_alpha = detail::max_clique(detail::complement_rows(g), g.order() + 1, kFilterBudget);
            if (source_alpha.complete && g.order() * target_alpha.size > h.order() * source_alpha.size)
                return refuted();
        }
    }

    if (options.node_budget <= kProbeNodes || detail::sat_hom_clauses(g, h) > kSatClauseLimit)
        return HomSearch(g, h, options).run();

    // most instances fall to a short backtracking probe; the rest go to clause
    // learning, which copes far better with refutations of coloring type
    SearchOptions probe = options;
    probe.node_budget = kProbeNodes;
    try {
        return HomSearch(g, h, probe).run();
    } catch (const BudgetExceededError&) {
    }
    auto map = detail::sat_hom(g, h, options.node_budget - kProbeNodes);
    HomCertificate cert;
    cert.nodes_explored = kProbeNodes;
    if (map) {
        if (!is_homomorphism(g, h, *map))
            throw std::logic_error("exists_hom: solver model is not a homomorphism");
        cert.verdict = HomCertificate::Verdict::Exists;
        cert.map = std::move(*map);
    }
    return cert;
}

bool hom_equivalent(const Graph& g, const Graph& h, const SearchOptions& options) {
    return exists_hom(g, h, options).exists() && exists_hom(h, g, options).exists();
}

bool strictly_below(const Graph& g, const Graph& h, const SearchOptions& options) {
    return exists_hom(g, h, options).exists() && !exists_hom(h, g, options).exists();
}

Graph core_of(const Graph& g, const SearchOptions& options) {
    if (g.order() > options.core_cap)
        throw PreconditionError("core_of: " + std::to_string(g.order()) + " vertices exceed the cap of " +
                                std::to_string(options.core_cap));
    Bitset kept = g.empty_set();
    kept.set();
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        const Graph current = induced_subgraph(g, kept);
        for (VertexId v = 0; v < g.order() && !shrunk; ++v) {
            if (!kept.test(v))
                continue;
            Bitset smaller = kept;
            smaller.reset(v);
            const Graph target = induced_subgraph(g, smaller);
            auto cert = exists_hom(current, target, options);
            if (!cert.exists())
                continue;
            // the image is a retract candidate: hom-equivalent and strictly smaller
            Bitset image = g.empty_set();
            for (auto t : cert.map)
                image.set(g.index_of(target.name(t)));
            kept = std::move(image);
            shrunk = true;
        }
    }
    return induced_subgraph(g, kept);
}

DualityCheck check_duality(const Graph& g, const Graph& h, OddFraction exponent, const SearchOptions& options) {
    if (exponent.r < exponent.s)
        throw PreconditionError("duality: (2r+1)/(2s+1) >= 1 required");
    if (g.has_loops())
        throw LoopError("duality (G)");
    if (h.has_loops())
        throw LoopError("duality (H)");
    if (!odd_girth(g).exceeds(exponent.numerator(), exponent.denominator()))
        throw PreconditionError("duality: exponent must be below the odd girth of G");
    DualityCheck check;
    check.power_side = exists_hom(fractional_power(g, exponent), h, options).exists();
    check.negative_side = exists_hom(g, negative_power(h, exponent.s, exponent.r, options), options).exists();
    return check;
}

bool verify_duality(const Graph& g, const Graph& h, OddFraction exponent, const SearchOptions& options) {
    return check_duality(g, h, exponent, options).holds();
}

}  // namespace gpc
