#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Matrix adjacency(const gpc::Graph& g) {
    Matrix m(g.order(), std::vector<bool>(g.order(), false));
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v)
            m[u][v] = g.adjacent(u, v);
    return m;
}

gpc::Graph from_matrix(const Matrix& m) {
    gpc::GraphBuilder b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        b.add_vertex(gpc::VertexLabel::atom(static_cast<long long>(i)));
    for (std::size_t u = 0; u < m.size(); ++u)
        for (std::size_t v = u; v < m.size(); ++v)
            if (m[u][v])
                b.add_edge(u, v);
    return std::move(b).build();
}

namespace {

bool extend(const Matrix& g, const Matrix& h, std::vector<int>& image, std::size_t v) {
    if (v == g.size())
        return true;
    for (std::size_t a = 0; a < h.size(); ++a) {
        bool ok = !g[v][v] || h[a][a];
        for (std::size_t u = 0; u < v && ok; ++u)
            if (g[u][v] && !h[static_cast<std::size_t>(image[u])][a])
                ok = false;
        if (!ok)
            continue;
        image[v] = static_cast<int>(a);
        if (extend(g, h, image, v + 1))
            return true;
    }
    return false;
}

}  // namespace

bool hom_exists(const Matrix& g, const Matrix& h) {
    std::vector<int> image(g.size(), -1);
    return extend(g, h, image, 0);
}

bool hom_exists(const gpc::Graph& g, const gpc::Graph& h) { return hom_exists(adjacency(g), adjacency(h)); }

Matrix walk_power(const Matrix& g, int k) {
    const auto n = g.size();
    Matrix out(n, std::vector<bool>(n, false));
    for (std::size_t start = 0; start < n; ++start) {
        // ends of all walks of the current length
        std::vector<bool> ends(n, false);
        ends[start] = true;
        for (int step = 0; step < k; ++step) {
            std::vector<bool> next(n, false);
            for (std::size_t at = 0; at < n; ++at)
                if (ends[at])
                    for (std::size_t to = 0; to < n; ++to)
                        if (g[at][to])
                            next[to] = true;
            ends = std::move(next);
        }
        out[start] = ends;
    }
    return out;
}

bool isomorphic(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size())
        return false;
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool same = true;
        for (std::size_t u = 0; u < a.size() && same; ++u)
            for (std::size_t v = 0; v < a.size() && same; ++v)
                same = a[u][v] == b[p[u]][p[v]];
        if (same)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::optional<int> odd_girth(const Matrix& g) {
    const int n = static_cast<int>(g.size());
    for (int k = 1; k <= 2 * n + 1; k += 2) {
        const auto walks = walk_power(g, k);
        for (int v = 0; v < n; ++v)
            if (walks[v][v])
                return k;
    }
    return std::nullopt;
}

Matrix complete(int n) { return circular(n, 1); }

Matrix cycle(int n) {
    Matrix m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        m[i][(i + 1) % n] = true;
        m[(i + 1) % n][i] = true;
    }
    return m;
}

Matrix circular(int p, int q) {
    Matrix m(p, std::vector<bool>(p, false));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const int d = ((i - j) % p + p) % p;
            m[i][j] = d >= q && d <= p - q;
        }
    return m;
}

int chromatic(const Matrix& g) {
    if (g.empty())
        return 0;
    for (int k = 1;; ++k)
        if (hom_exists(g, complete(k)))
            return k;
}

gpc::Rational circular_chromatic(const Matrix& g) {
    gpc::Rational best{static_cast<std::int64_t>(g.size()) + 1, 1};
    const int limit = 2 * static_cast<int>(g.size());
    for (int p = 2; p <= limit; ++p)
        for (int q = 1; 2 * q <= p; ++q) {
            const gpc::Rational r{p, q};
            if (r < best && hom_exists(g, circular(p, q)))
                best = r;
        }
    return best.reduced();
}

gpc::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Matrix m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                m[u][v] = m[v][u] = true;
    return from_matrix(m);
}

gpc::Graph random_non_bipartite(std::mt19937& rng, int n, double p) {
    auto m = adjacency(random_graph(rng, n, p));
    std::uniform_int_distribution<int> length(1, (n - 1) / 2);
    const int odd = 2 * length(rng) + 1;
    for (int i = 0; i < odd; ++i) {
        const int j = (i + 1) % odd;
        m[i][j] = m[j][i] = true;
    }
    return from_matrix(m);
}

}  // namespace oracle
