#include "gpc/constructions.hpp"

#include "gpc/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gpc {

namespace {

using Mask = std::uint64_t;

// Elements of [m] are 1-based in labels, 0-based as bits.
std::vector<int> mask_elements(Mask mask) {
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u)
            out.push_back(i + 1);
    return out;
}

VertexLabel tuple_label(const std::vector<Mask>& tuple) {
    std::vector<std::vector<int>> sets;
    sets.reserve(tuple.size());
    for (auto m : tuple)
        sets.push_back(mask_elements(m));
    return VertexLabel::sets(std::move(sets));
}

// n-subsets of {0..m-1} in lexicographic order of their sorted elements.
void combinations(int m, int n, int start, Mask current, int remaining, std::vector<Mask>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int i = start; i <= m - remaining; ++i)
        combinations(m, n, i + 1, current | (Mask{1} << i), remaining - 1, out);
}

// Submasks of `free` in increasing numeric order, including 0.
template <typename Fn>
void for_each_submask(Mask free, Fn&& fn) {
    Mask sub = 0;
    while (true) {
        fn(sub);
        if (sub == free)
            break;
        sub = (sub - free) & free;
    }
}

Graph from_tuples(const std::vector<std::vector<Mask>>& tuples, auto&& adjacent) {
    GraphBuilder b(tuples.size());
    for (const auto& t : tuples)
        b.add_vertex(tuple_label(t));
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i; j < tuples.size(); ++j)
            if (adjacent(tuples[i], tuples[j]))
                b.add_edge(i, j);
    return std::move(b).build();
}

void require(bool ok, const std::string& message) {
    if (!ok)
        throw PreconditionError(message);
}

}  // namespace

Graph complete(int n) {
    require(n >= 1, "complete: n >= 1 required");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add_vertex(VertexLabel::atom(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return std::move(b).build();
}

Graph cycle(int n) {
    require(n >= 3, "cycle: n >= 3 required");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add_vertex(VertexLabel::atom(i));
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph circular_complete(int n, int d) {
    require(d >= 1 && n >= 2 * d, "circular_complete: n >= 2d >= 2 required");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add_vertex(VertexLabel::atom(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i >= d && j - i <= n - d)
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph kneser(int m, int n) {
    require(n >= 1 && m >= 2 * n, "kneser: m >= 2n >= 2 required");
    require(m <= 63, "kneser: m <= 63 required");
    std::vector<Mask> subsets;
    combinations(m, n, 0, 0, n, subsets);
    std::vector<std::vector<Mask>> tuples;
    tuples.reserve(subsets.size());
    for (auto s : subsets)
        tuples.push_back({s});
    return from_tuples(tuples, [](const auto& a, const auto& b) { return (a[0] & b[0]) == 0; });
}

Graph schrijver(int m, int n) {
    require(n >= 1 && m >= 2 * n, "schrijver: m >= 2n >= 2 required");
    Graph kg = kneser(m, n);
    Bitset stable = kg.empty_set();
    for (VertexId v = 0; v < kg.order(); ++v) {
        const auto& elements = std::get<VertexLabel::SetTuple>(kg.label(v).value()).sets.front();
        bool ok = true;
        for (std::size_t i = 0; i < elements.size() && ok; ++i) {
            int next = elements[i] % m + 1;  // cyclic successor in [m]
            ok = std::find(elements.begin(), elements.end(), next) == elements.end();
        }
        if (ok)
            stable.set(v);
    }
    return induced_subgraph(kg, stable);
}

Graph helical(int m, int n, int k, const SearchOptions& options) {
    require(n >= 1 && k >= 1 && m >= 2 * n, "helical: m >= 2n, n >= 1, k >= 1 required");
    require(m <= 63, "helical: m <= 63 required");
    const Mask full = (Mask{1} << m) - 1;

    std::vector<Mask> firsts;
    combinations(m, n, 0, 0, n, firsts);

    std::vector<std::vector<Mask>> tuples;
    std::vector<Mask> current;
    current.reserve(k);

    // depth-first; the nesting A_t subset of A_{t+2} is applied while extending
    auto extend = [&](auto&& self) -> void {
        const auto r = current.size();  // next position, 0-based
        if (r == static_cast<std::size_t>(k)) {
            if (tuples.size() >= options.vertex_cap)
                throw CapExceededError("helical(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                       std::to_string(k) + ") exceeds the vertex cap of " +
                                       std::to_string(options.vertex_cap));
            tuples.push_back(current);
            return;
        }
        const Mask previous = current[r - 1];
        const Mask forced = r >= 2 ? current[r - 2] : Mask{0};
        const Mask free = full & ~previous & ~forced;
        for_each_submask(free, [&](Mask extra) {
            Mask candidate = forced | extra;
            if (std::popcount(candidate) < n)
                return;
            current.push_back(candidate);
            self(self);
            current.pop_back();
        });
    };
    for (auto first : firsts) {
        current.assign(1, first);
        extend(extend);
    }

    return from_tuples(tuples, [k](const std::vector<Mask>& a, const std::vector<Mask>& b) {
        for (int i = 0; i < k; ++i)
            if ((a[i] & b[i]) != 0)
                return false;
        for (int j = 0; j + 1 < k; ++j)
            if ((a[j] & ~b[j + 1]) != 0 || (b[j] & ~a[j + 1]) != 0)
                return false;
        return true;
    });
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 10; ++i)
        b.add_vertex(VertexLabel::atom(i));
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

Graph coxeter() {
    // Layout: a_i = i, b_i = 7+i, c_i = 14+i, d_i = 21+i for i in Z_7, with
    // a_i~a_{i+1}, b_i~b_{i+2}, c_i~c_{i+3} and d_i adjacent to a_i, b_i, c_i.
    static constexpr std::array<std::pair<int, int>, 42> kEdges{{
        {0, 1},   {0, 6},   {0, 21},  {1, 2},   {1, 22},  {2, 3},   {2, 23},  {3, 4},   {3, 24},
        {4, 5},   {4, 25},  {5, 6},   {5, 26},  {6, 27},  {7, 9},   {7, 12},  {7, 21},  {8, 10},
        {8, 13},  {8, 22},  {9, 11},  {9, 23},  {10, 12}, {10, 24}, {11, 13}, {11, 25}, {12, 26},
        {13, 27}, {14, 17}, {14, 18}, {14, 21}, {15, 18}, {15, 19}, {15, 22}, {16, 19}, {16, 20},
        {16, 23}, {17, 20}, {17, 24}, {18, 25}, {19, 26}, {20, 27},
    }};
    GraphBuilder b(28);
    for (int i = 0; i < 28; ++i)
        b.add_vertex(VertexLabel::atom(i));
    for (auto [u, v] : kEdges)
        b.add_edge(u, v);
    return std::move(b).build();
}

}  // namespace gpc
