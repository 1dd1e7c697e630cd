// Acceptance run: one PASS/FAIL line per criterion, with the time taken
// against its limit. Exit status is the number of failed criteria.

#include "gpc/constructions.hpp"
#include "gpc/homomorphism.hpp"
#include "gpc/invariants.hpp"
#include "gpc/isomorphism.hpp"
#include "gpc/powers.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace gpc;

namespace {

struct Certificates {
    std::size_t checked = 0;
    std::size_t invalid = 0;
} certificates;

// exists_hom with every positive answer re-checked edge by edge
bool hom(const Graph& g, const Graph& h) {
    const auto cert = exists_hom(g, h);
    if (cert.exists()) {
        ++certificates.checked;
        if (!is_homomorphism(g, h, cert.map))
            ++certificates.invalid;
    }
    return cert.exists();
}

bool below(const Graph& g, const Graph& h) { return hom(g, h) && !hom(h, g); }
bool equivalent(const Graph& g, const Graph& h) { return hom(g, h) && hom(h, g); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* what, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < limit_seconds;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %2d  %-62s %8.2fs (limit %gs)%s%s\n", pass ? "PASS" : "FAIL", id, what, seconds, limit_seconds,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    if (!in_time)
        std::printf("        over the time limit\n");
    std::fflush(stdout);
}

// Distinct values (2r+1)/(2s+1) below og with s <= max_s, smallest denominator kept.
std::vector<OddFraction> lattice(const Graph& g, int max_s) {
    std::map<Rational, OddFraction> by_value;
    const auto og = odd_girth(g);
    for (int s = 0; s <= max_s; ++s)
        for (int r = 0; og.exceeds(2 * r + 1, 2 * s + 1); ++r)
            by_value.try_emplace(Rational(2 * r + 1, 2 * s + 1), OddFraction{r, s});
    std::vector<OddFraction> out;
    for (const auto& [value, e] : by_value)
        out.push_back(e);
    return out;
}

Outcome fail(std::string what) { return {false, std::move(what)}; }

}  // namespace

int main() {
    criterion(1, "odd cycle powers are circular complete graphs", 5, [] {
        int cases = 0;
        for (int n = 2; n <= 6; ++n)
            for (int t = 0; t < n; ++t, ++cases)
                if (!are_isomorphic(fractional_power(cycle(2 * n + 1), {t, 0}), circular_complete(2 * n + 1, n - t)))
                    return fail("n=" + std::to_string(n) + " t=" + std::to_string(t));
        return Outcome{true, std::to_string(cases) + " cases"};
    });

    criterion(2, "chi of helical graphs is m - 2n + 2", 120, [] {
        struct Case {
            int m, n, k;
        };
        std::vector<Case> cases;
        for (int m = 3; m <= 5; ++m)
            for (int k = 1; k <= 2; ++k)
                cases.push_back({m, 1, k});
        cases.push_back({5, 2, 2});
        std::string seen;
        for (auto [m, n, k] : cases) {
            const int chi = chromatic_number(helical(m, n, k));
            seen += " H(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")=" +
                    std::to_string(chi);
            if (chi != m - 2 * n + 2)
                return fail("got" + seen);
        }
        return Outcome{true, seen.substr(1)};
    });

    criterion(3, "odd girth of H(m,1,k) is 2k + 2ceil((2k-1)/(m-2)) - 1", 120, [] {
        for (int m = 4; m <= 6; ++m)
            for (int k = 1; k <= 3; ++k) {
                const auto expected = static_cast<std::size_t>(2 * k + 2 * ceil_div(2 * k - 1, m - 2) - 1);
                const auto og = odd_girth(helical(m, 1, k));
                if (!og.is_finite() || og.length() != expected)
                    return fail("m=" + std::to_string(m) + " k=" + std::to_string(k) + " got " + og.to_string());
            }
        return Outcome{true, "9 cases"};
    });

    criterion(4, "power / negative power duality agrees on both sides", 300, [] {
        const std::vector<std::pair<std::string, Graph>> gs{{"C5", cycle(5)}, {"C7", cycle(7)}, {"K3", complete(3)}};
        const std::vector<std::pair<std::string, Graph>> hs{{"K3", complete(3)}, {"K4", complete(4)}, {"C5", cycle(5)}};
        int checked = 0;
        for (const auto& [gn, g] : gs)
            for (const auto& [hn, h] : hs)
                for (OddFraction e : {OddFraction{0, 0}, OddFraction{1, 1}, OddFraction{1, 0}, OddFraction{2, 1}}) {
                    if (!odd_girth(g).exceeds(e.numerator(), e.denominator()))
                        continue;
                    const auto power_side = hom(fractional_power(g, e), h);
                    const auto negative_side = hom(g, negative_power(h, e.s, e.r));
                    ++checked;
                    if (power_side != negative_side)
                        return fail(gn + "->" + hn + " at " + e.to_string());
                }
        return Outcome{true, std::to_string(checked) + " triples"};
    });

    criterion(5, "fractional powers are dense: a < b gives G^a < G^b", 600, [] {
        const std::vector<std::pair<std::string, Graph>> gs{{"C5", cycle(5)}, {"C7", cycle(7)}, {"Petersen", petersen()}};
        int pairs = 0;
        for (const auto& [name, g] : gs) {
            const auto values = lattice(g, 2);
            std::vector<Graph> powers;
            for (auto e : values)
                powers.push_back(fractional_power(g, e));
            for (std::size_t a = 0; a < values.size(); ++a)
                for (std::size_t b = a + 1; b < values.size(); ++b, ++pairs)
                    if (!below(powers[a], powers[b]))
                        return fail(name + " " + values[a].to_string() + " vs " + values[b].to_string());
        }
        return Outcome{true, std::to_string(pairs) + " pairs"};
    });

    criterion(6, "Coxeter graph does not map to C7; chi_c(Petersen) = 3", 60, [] {
        if (hom(coxeter(), cycle(7)))
            return fail("Coxeter -> C7 found");
        const auto chic = circular_chromatic_number(petersen());
        if (!chic.same_pair({3, 1}))
            return fail("chi_c(Petersen) = " + chic.to_string());
        return Outcome{};
    });

    criterion(7, "thickness of C5 is 5/3 up to denominator 7", 120, [] {
        const auto estimate = thickness_lower_bound(cycle(5), 0, 2);
        if (!estimate.found || !estimate.best_ratio.same_pair({5, 3}))
            return fail("estimate " + estimate.best_ratio.to_string());
        int above = 0;
        for (int s = 0; s <= 3; ++s)
            for (int r = 0; odd_girth(cycle(5)).exceeds(2 * r + 1, 2 * s + 1); ++r) {
                if (Rational(2 * r + 1, 2 * s + 1) <= Rational(5, 3))
                    continue;
                ++above;
                if (hom(fractional_power(cycle(5), {r, s}), complete(3)))
                    return fail("3-colourable at " + OddFraction{r, s}.to_string());
            }
        return Outcome{true, std::to_string(above) + " ratios above 5/3 refuted"};
    });

    criterion(8, "complete graphs are colourful and have thickness 1", 120, [] {
        for (int n = 3; n <= 5; ++n) {
            if (!is_colorful(complete(n)))
                return fail("K" + std::to_string(n) + " not colourful");
            const auto estimate = thickness_lower_bound(complete(n), 0, 2);
            if (estimate.best_ratio != Rational(1, 1))
                return fail("K" + std::to_string(n) + " thickness " + estimate.best_ratio.to_string());
        }
        return Outcome{};
    });

    criterion(9, "K3^{7/3} is K9", 1, [] {
        return Outcome{are_isomorphic(fractional_power(complete(3), {3, 1}), complete(9)), ""};
    });

    criterion(10, "chi(K5^{-1/3}) = 5, K5^{-1/3} <-> H(5,1,2), (C5^{-1/3})^3 <-> C5", 120, [] {
        const auto inverse = negative_unit_power(complete(5), 1);
        const int chi = chromatic_number(inverse);
        if (chi != 5)
            return fail("chi = " + std::to_string(chi));
        if (!equivalent(inverse, helical(5, 1, 2)))
            return fail("not equivalent to H(5,1,2)");
        if (!equivalent(power(negative_unit_power(cycle(5), 1), 3), cycle(5)))
            return fail("cube of C5^{-1/3} not equivalent to C5");
        return Outcome{true, std::to_string(inverse.order()) + " vertices"};
    });

    criterion(11, "power sweep recovers chi_c(C5) = 5/2; small ratios keep chi = 3", 300, [] {
        const auto sweep = chic_via_powers(cycle(5), 3, 10);
        if (!sweep.found || !sweep.best.same_pair({5, 2}))
            return fail("sweep " + sweep.best.to_string());
        const std::vector<std::pair<std::string, Graph>> gs{
            {"C5", cycle(5)}, {"C7", cycle(7)}, {"K4", complete(4)}, {"K5", complete(5)}, {"Petersen", petersen()}};
        int tested = 0;
        for (const auto& [name, g] : gs) {
            const int chi = chromatic_number(g);
            const Rational threshold(chi, 3 * (chi - 2));
            for (int s = 0; s <= 3; ++s)
                for (int r = 0; Rational(2 * r + 1, 2 * s + 1) <= threshold; ++r, ++tested) {
                    const int got = chromatic_number(fractional_power(g, {r, s}));
                    if (got != 3)
                        return fail(name + " at " + OddFraction{r, s}.to_string() + ": chi " + std::to_string(got));
                }
        }
        return Outcome{true, std::to_string(tested) + " sub-threshold powers"};
    });

    criterion(12, "spectral bound never contradicts a homomorphism; certificates valid", 120, [] {
        std::vector<Graph> pool{cycle(5),   cycle(7),   cycle(9),        complete(3),     complete(4),
                                complete(5), petersen(), coxeter(),      kneser(6, 2),    circular_complete(7, 2),
                                circular_complete(11, 4), helical(4, 1, 2), fractional_power(cycle(5), {2, 1})};
        int found = 0;
        for (const auto& g : pool)
            for (int n = 1; n <= 4; ++n)
                if (hom(g, cycle(2 * n + 1))) {
                    ++found;
                    if (!spectral_check(g, n).bound_satisfied)
                        return fail("bound violated for a mapped pair, n=" + std::to_string(n));
                }
        if (certificates.invalid != 0)
            return fail(std::to_string(certificates.invalid) + " invalid certificates");
        return Outcome{true, std::to_string(found) + " mapped pairs, " + std::to_string(certificates.checked) +
                                 " certificates re-checked"};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}
