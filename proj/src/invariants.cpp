#include "gpc/invariants.hpp"

#include "clique.hpp"
#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/homomorphism.hpp"
#include "gpc/powers.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace gpc {

namespace {

constexpr std::uint64_t kBoundBudget = 200'000;

void require_non_bipartite(const Graph& g, const char* what) {
    if (g.has_loops())
        throw LoopError(what);
    if (is_bipartite(g))
        throw PreconditionError(std::string(what) + ": graph is bipartite");
}

// Largest odd numerator 2r+1 with (2r+1)/(2s+1) < og; -1 when even r = 0 fails.
int max_r_below(const OddGirth& og, int s) {
    if (og.is_infinite())
        return 1 << 20;
    const auto bound = static_cast<std::int64_t>(og.length()) * (2 * s + 1);  // odd
    return static_cast<int>((bound - 3) / 2);
}

// For each s <= max_s the largest r in [0, r_max(s)] satisfying `holds`,
// which must be monotone (true up to some r, false after).
ThicknessEstimate lattice_search(const Graph& g, int max_s, const SearchOptions& options,
                                 const std::function<bool(OddFraction)>& holds) {
    if (max_s < 0)
        throw PreconditionError("max_s >= 0 required");
    const auto og = odd_girth(g);
    std::vector<int> best_r(static_cast<std::size_t>(max_s) + 1, -1);
    detail::parallel_for(best_r.size(), options.jobs, [&](std::size_t index) {
        const int s = static_cast<int>(index);
        int lo = 0;
        int hi = max_r_below(og, s);
        if (hi < 0 || !holds({0, s}))
            return;
        // invariant: holds(lo), and everything above hi is unknown or false
        while (lo < hi) {
            const int mid = lo + (hi - lo + 1) / 2;
            if (holds({mid, s}))
                lo = mid;
            else
                hi = mid - 1;
        }
        best_r[index] = lo;
    });
    ThicknessEstimate estimate;
    estimate.search_bound = 2 * max_s + 1;
    for (int s = 0; s <= max_s; ++s) {
        const int r = best_r[static_cast<std::size_t>(s)];
        if (r < 0)
            continue;
        const OddFraction e{r, s};
        if (!estimate.found || e.value() > estimate.best_ratio) {
            estimate.found = true;
            estimate.best_ratio = e.value();
            estimate.witness = e;
        }
    }
    return estimate;
}

class ColouringEnumerator {
public:
    ColouringEnumerator(const Graph& g, int colours, std::uint64_t budget)
        : g_(g), colours_(colours), budget_(budget), colour_(g.order(), -1) {
        // breadth-first from a maximum-degree vertex, so each vertex after the
        // first of its component already has a coloured neighbour
        const auto n = g.order();
        std::vector<char> placed(n, 0);
        std::vector<VertexId> by_degree(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
        for (auto root : by_degree) {
            if (placed[root])
                continue;
            placed[root] = 1;
            order_.push_back(root);
            for (auto head = order_.size() - 1; head < order_.size(); ++head)
                for_each_bit(g.neighbors(order_[head]), [&](VertexId w) {
                    if (!placed[w]) {
                        placed[w] = 1;
                        order_.push_back(w);
                    }
                });
        }
    }

    // Calls visit(colouring) for every proper colouring with `colours`
    // colours, one per colour-renaming class. Stops when visit returns false.
    bool run(const std::function<bool(const std::vector<int>&)>& visit) { return extend(0, 0, visit); }

private:
    bool extend(std::size_t depth, int used, const std::function<bool(const std::vector<int>&)>& visit) {
        if (++nodes_ > budget_)
            throw BudgetExceededError("colouring enumeration exceeded its budget of " + std::to_string(budget_));
        if (depth == order_.size())
            return used < colours_ || visit(colour_);
        const auto v = order_[depth];
        const int limit = std::min(colours_, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for_each_bit(g_.neighbors(v), [&](VertexId w) { clash = clash || colour_[w] == c; });
            if (clash)
                continue;
            colour_[v] = c;
            const bool keep_going = extend(depth + 1, std::max(used, c + 1), visit);
            colour_[v] = -1;
            if (!keep_going)
                return false;
        }
        return true;
    }

    const Graph& g_;
    int colours_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colour_;
    std::vector<VertexId> order_;
};

bool survives_peeling(const Graph& g, const std::vector<int>& colour, int colours) {
    Bitset alive = g.empty_set();
    alive.set();
    bool changed = true;
    while (changed && alive.any()) {
        changed = false;
        for_each_bit(Bitset(alive), [&](VertexId v) {
            std::uint64_t seen = std::uint64_t{1} << colour[v];
            for_each_bit(g.neighbors(v) & alive, [&](VertexId w) { seen |= std::uint64_t{1} << colour[w]; });
            if (std::popcount(seen) < colours) {
                alive.reset(v);
                changed = true;
            }
        });
    }
    return alive.any();
}

}  // namespace

int chromatic_number(const Graph& g, const SearchOptions& options) {
    if (g.has_loops())
        throw LoopError("chromatic_number");
    const auto n = g.order();
    if (n == 0)
        return 0;
    if (g.size() == 0)
        return 1;
    if (is_bipartite(g))
        return 2;

    const int upper = detail::dsatur(g);
    int lower = 3;
    const auto clique = detail::max_clique(detail::rows_of(g), static_cast<std::size_t>(upper), kBoundBudget);
    lower = std::max(lower, static_cast<int>(clique.size));
    if (lower < upper) {
        const auto independent = detail::max_clique(detail::complement_rows(g), n + 1, kBoundBudget);
        if (independent.complete)
            lower = std::max(lower, static_cast<int>(ceil_div(static_cast<std::int64_t>(n),
                                                              static_cast<std::int64_t>(independent.size))));
    }
    for (int k = lower; k < upper; ++k)
        if (exists_hom(g, complete(k), options).exists())
            return k;
    return upper;
}

Rational circular_chromatic_number(const Graph& g, const SearchOptions& options) {
    if (g.has_loops())
        throw LoopError("circular_chromatic_number");
    if (g.size() == 0)
        throw PreconditionError("circular_chromatic_number: graph has no edges");
    if (is_bipartite(g))
        return {2, 1};
    const auto chi = static_cast<std::int64_t>(chromatic_number(g, options));
    const auto n = static_cast<std::int64_t>(g.order());

    std::vector<Rational> candidates;
    for (std::int64_t p = 3; p <= n; ++p)
        for (std::int64_t q = 1; 2 * q < p; ++q)
            if (p <= chi * q && std::gcd(p, q) == 1)
                candidates.emplace_back(p, q);
    std::sort(candidates.begin(), candidates.end());

    // the last candidate is chi/1, which holds
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const auto mid = lo + (hi - lo) / 2;
        const auto& c = candidates[mid];
        if (exists_hom(g, circular_complete(static_cast<int>(c.num), static_cast<int>(c.den)), options).exists())
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

ChicSweep chic_via_powers(const Graph& g, int max_t, int max_n, const SearchOptions& options) {
    require_non_bipartite(g, "chic_via_powers");
    ChicSweep sweep;
    sweep.max_t = max_t;
    sweep.max_n = max_n;
    auto three_colourable = [&](int n, int t) {
        const auto p = fractional_power(g, {n, 3 * t + 1});
        return !p.has_loops() && exists_hom(p, complete(3), options).exists();
    };
    // For fixed t the exponent grows with n, so the condition holds for an
    // initial run of n and the ratio shrinks along it: find the run's end.
    std::vector<int> last_n(static_cast<std::size_t>(std::max(0, max_t)), -1);
    detail::parallel_for(last_n.size(), options.jobs, [&](std::size_t index) {
        const int t = static_cast<int>(index) + 1;
        int lo = t + 1;
        int hi = max_n;
        if (lo > hi || !three_colourable(lo, t))
            return;
        while (lo < hi) {
            const int mid = lo + (hi - lo + 1) / 2;
            if (three_colourable(mid, t))
                lo = mid;
            else
                hi = mid - 1;
        }
        last_n[index] = lo;
    });
    for (int t = 1; t <= max_t; ++t) {
        const int n = last_n[static_cast<std::size_t>(t - 1)];
        if (n < 0)
            continue;
        const Rational ratio(2 * n + 1, n - t);
        if (!sweep.found || ratio < sweep.best) {
            sweep.found = true;
            sweep.best = ratio.reduced();
            sweep.witness_n = n;
            sweep.witness_t = t;
        }
    }
    return sweep;
}

ThicknessEstimate thickness_lower_bound(const Graph& g, int i, int max_s, const SearchOptions& options) {
    require_non_bipartite(g, "thickness_lower_bound");
    const int chi = chromatic_number(g, options);
    if (i < 3 - chi)
        throw PreconditionError("thickness_lower_bound: level must be at least 3 - chi(G) = " +
                                std::to_string(3 - chi));
    const auto target = complete(chi + i);
    auto estimate = lattice_search(g, max_s, options, [&](OddFraction e) {
        return exists_hom(fractional_power(g, e), target, options).exists();
    });
    estimate.level = i;
    if (estimate.found)
        estimate.witness_chi = chromatic_number(fractional_power(g, estimate.witness), options);
    return estimate;
}

ThicknessEstimate theta_H_lower_bound(const Graph& g, const Graph& h, int max_s, const SearchOptions& options) {
    require_non_bipartite(g, "theta_H_lower_bound (G)");
    require_non_bipartite(h, "theta_H_lower_bound (H)");
    return lattice_search(g, max_s, options, [&](OddFraction e) {
        return exists_hom(fractional_power(g, e), h, options).exists();
    });
}

bool is_colorful(const Graph& g, const SearchOptions& options) {
    if (g.has_loops())
        throw LoopError("is_colorful");
    if (g.order() == 0)
        return true;
    const int chi = chromatic_number(g, options);
    if (chi > 64)
        throw PreconditionError("is_colorful: more than 64 colours");
    ColouringEnumerator enumerator(g, chi, options.coloring_budget);
    return enumerator.run([&](const std::vector<int>& colour) { return survives_peeling(g, colour, chi); });
}

int f_parameter(const Graph& g, int t, int max_n, const SearchOptions& options) {
    require_non_bipartite(g, "f_parameter");
    if (t < 0)
        throw PreconditionError("f_parameter: t >= 0 required");
    const auto subdivided = subdivide(g, 2 * t + 1);
    for (int n = max_n; n >= 1; --n)
        if (exists_hom(subdivided, cycle(2 * n + 1), options).exists())
            return 2 * n + 1;
    return 1;
}

std::int64_t f_closed_form(Rational chi_c, int t) {
    if (chi_c.den <= 0 || chi_c.num <= 2 * chi_c.den)
        throw PreconditionError("f_closed_form: chi_c > 2 required, got " + chi_c.to_string());
    if (t < 0)
        throw PreconditionError("f_closed_form: t >= 0 required");
    // (1 + t p/q) / (p/q - 2) = (q + t p) / (p - 2q)
    return 2 * floor_div(chi_c.den + t * chi_c.num, chi_c.num - 2 * chi_c.den) + 1;
}

SpectralBoundReport spectral_check(const Graph& g, int n) {
    if (n < 1)
        throw PreconditionError("spectral_check: n >= 1 required");
    if (g.order() == 0)
        throw PreconditionError("spectral_check: empty graph");
    SpectralBoundReport report;
    report.lambda_g = laplacian_lambda_max(g);
    report.edge_count = g.size();
    report.vertex_count = g.order();
    report.cycle_length = 2 * n + 1;
    report.lambda_cycle = laplacian_lambda_max(cycle(2 * n + 1));
    const double factor = (2.0 * static_cast<double>(report.edge_count)) / (2.0 * static_cast<double>(report.vertex_count));
    report.bound_satisfied = report.lambda_g >= factor * report.lambda_cycle - 1e-9;
    return report;
}

}  // namespace gpc
