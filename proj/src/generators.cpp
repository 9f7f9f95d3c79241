#include "lwg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace lwg {

namespace {

using EdgePairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

Graph from_pairs(EdgePairs pairs, bool take_lcc = true) {
    return build_graph(pairs, BuildOptions{true, take_lcc});
}

int param(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("generate: missing parameter '" + key + "'");
    return static_cast<int>(std::llround(it->second));
}

double param_real(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("generate: missing parameter '" + key + "'");
    return it->second;
}

} // namespace

Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path_graph: n >= 2 required");
    EdgePairs pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_pairs(std::move(pairs));
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star_graph: n >= 2 required");
    EdgePairs pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
    return from_pairs(std::move(pairs));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    EdgePairs pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return from_pairs(std::move(pairs));
}

Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete_graph: n >= 2 required");
    EdgePairs pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return from_pairs(std::move(pairs));
}

Graph grid_graph(int w, int h) {
    if (w < 1 || h < 1 || static_cast<std::int64_t>(w) * h < 2)
        throw std::invalid_argument("grid_graph: need at least two nodes");
    auto id = [w](int x, int y) { return y * w + x; };
    EdgePairs pairs;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) pairs.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < h) pairs.emplace_back(id(x, y), id(x, y + 1));
        }
    return from_pairs(std::move(pairs));
}

Graph lollipop_graph(int k, int p) {
    if (k < 2 || p < 1) throw std::invalid_argument("lollipop_graph: k >= 2, p >= 1 required");
    EdgePairs pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    for (int i = 0; i < p; ++i) pairs.emplace_back(k - 1 + i, k + i);
    return from_pairs(std::move(pairs));
}

Graph bowtie_graph(int t, int p, int s) {
    if (t < 0 || s < 0 || p < 0 || t + s + p < 1)
        throw std::invalid_argument("bowtie_graph: invalid sizes");
    EdgePairs pairs;
    int first = 0, last = p; // path nodes 0..p
    for (int i = 0; i < p; ++i) pairs.emplace_back(i, i + 1);
    int next = p + 1;
    for (int i = 0; i < t; ++i) pairs.emplace_back(first, next++);
    for (int i = 0; i < s; ++i) pairs.emplace_back(last, next++);
    return from_pairs(std::move(pairs));
}

Graph random_regular_graph(int d, int n, std::uint64_t seed) {
    if (d < 1 || n <= d) throw std::invalid_argument("random_regular_graph: need 1 <= d < n");
    if ((static_cast<std::int64_t>(d) * n) % 2 != 0)
        throw std::invalid_argument("random_regular_graph: d*n must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(d) * n);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < d; ++j) stubs[static_cast<std::size_t>(v) * d + j] = v;

    // the acceptance probability of a uniform configuration decays like
    // exp(-(d^2-1)/4): d=6 needs ~6e3 attempts on average, each failed
    // attempt aborting at its first collision
    const int max_attempts = 1000000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!seen.emplace(u, v).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        EdgePairs pairs(seen.begin(), seen.end());
        return from_pairs(std::move(pairs));
    }
    throw std::runtime_error("random_regular_graph: pairing failed after bounded retries");
}

Graph watts_strogatz_graph(int n, int k, double p, std::uint64_t seed) {
    if (n < 3 || k < 2 || k % 2 != 0 || k >= n)
        throw std::invalid_argument("watts_strogatz_graph: need even k with 2 <= k < n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("watts_strogatz_graph: p in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::set<std::pair<int, int>> edges;
    auto key = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    for (int u = 0; u < n; ++u)
        for (int j = 1; j <= k / 2; ++j) edges.insert(key(u, (u + j) % n));

    for (int j = 1; j <= k / 2; ++j)
        for (int u = 0; u < n; ++u) {
            int v = (u + j) % n;
            if (coin(rng) >= p) continue;
            int w = pick(rng);
            int guard = 0;
            while ((w == u || edges.count(key(u, w))) && guard++ < 8 * n) w = pick(rng);
            if (w == u || edges.count(key(u, w))) continue; // saturated node, keep edge
            edges.erase(key(u, v));
            edges.insert(key(u, w));
        }

    EdgePairs pairs(edges.begin(), edges.end());
    return from_pairs(std::move(pairs));
}

Graph margulis_gabber_galil_graph(int n) {
    int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
    if (side < 2 || side * side != n)
        throw std::invalid_argument("margulis_gabber_galil_graph: n must be a perfect square >= 4");
    auto id = [side](int x, int y) { return ((x % side) + side) % side * side + ((y % side) + side) % side; };
    EdgePairs pairs;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) {
            int v = id(x, y);
            pairs.emplace_back(v, id(x + 2 * y, y));
            pairs.emplace_back(v, id(x + 2 * y + 1, y));
            pairs.emplace_back(v, id(x, y + 2 * x));
            pairs.emplace_back(v, id(x, y + 2 * x + 1));
        }
    return from_pairs(std::move(pairs));
}

Graph chordal_cycle_graph(int n) {
    if (n < 4) throw std::invalid_argument("chordal_cycle_graph: n >= 4 required");
    EdgePairs pairs;
    for (int i = 0; i < n; ++i) {
        pairs.emplace_back(i, (i + 1) % n);
        int j = (2 * i) % n;
        if (j != i) pairs.emplace_back(i, j);
    }
    return from_pairs(std::move(pairs));
}

Graph generate(const std::string& family, const std::map<std::string, double>& params,
               std::uint64_t seed) {
    if (family == "path") return path_graph(param(params, "n"));
    if (family == "star") return star_graph(param(params, "n"));
    if (family == "cycle") return cycle_graph(param(params, "n"));
    if (family == "complete") return complete_graph(param(params, "n"));
    if (family == "grid") return grid_graph(param(params, "w"), param(params, "h"));
    if (family == "lollipop") return lollipop_graph(param(params, "k"), param(params, "p"));
    if (family == "bowtie")
        return bowtie_graph(param(params, "t"), param(params, "p"), param(params, "s"));
    if (family == "regular" || family == "random_regular")
        return random_regular_graph(param(params, "d"), param(params, "n"), seed);
    if (family == "watts_strogatz" || family == "ws")
        return watts_strogatz_graph(param(params, "n"), param(params, "k"),
                                    param_real(params, "p"), seed);
    if (family == "margulis" || family == "margulis_gabber_galil")
        return margulis_gabber_galil_graph(param(params, "n"));
    if (family == "chordal" || family == "chordal_cycle")
        return chordal_cycle_graph(param(params, "n"));
    throw std::invalid_argument("generate: unknown family '" + family + "'");
}

} // namespace lwg
