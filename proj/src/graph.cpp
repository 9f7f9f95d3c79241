#include "lwg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lwg {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    for (int l = 0; l < static_cast<int>(edges_.size()); ++l) {
        const Edge& e = edges_[l];
        if (e.u < 0 || e.v >= n_ || e.u >= e.v)
            throw std::invalid_argument("Graph: edge endpoints not canonical");
        adj_[e.u].emplace_back(e.v, l);
        adj_[e.v].emplace_back(e.u, l);
    }
}

std::vector<int> Graph::bfs_distances(int source) const {
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const auto& [w, l] : adj_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    auto dist = bfs_distances(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.num_vertices(), 0);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comps.back().push_back(u);
            for (const auto& [w, l] : g.incident(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    return comps;
}

Graph build_graph(const std::vector<std::pair<std::int64_t, std::int64_t>>& edge_list,
                  const BuildOptions& options) {
    // Relabel by first appearance, scanning u then v of each pair.
    std::unordered_map<std::int64_t, int> label;
    label.reserve(edge_list.size() * 2);
    auto id_of = [&](std::int64_t x) {
        if (x < 0) throw std::invalid_argument("build_graph: negative vertex id");
        auto [it, fresh] = label.try_emplace(x, static_cast<int>(label.size()));
        return it->second;
    };

    std::vector<Edge> raw;
    raw.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        int u = id_of(a);
        int v = id_of(b);
        if (u == v) {
            if (!options.drop_self_loops)
                throw std::invalid_argument("build_graph: self loop with drop_self_loops=false");
            continue;
        }
        if (u > v) std::swap(u, v);
        raw.push_back({u, v});
    }

    int n = static_cast<int>(label.size());
    if (n == 0 || raw.empty()) throw std::invalid_argument("build_graph: empty graph after cleanup");

    std::sort(raw.begin(), raw.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    Graph full(n, raw);
    if (full.connected()) return full;
    if (!options.take_lcc)
        throw std::invalid_argument("build_graph: disconnected graph and take_lcc=false");

    auto comps = connected_components(full);
    const auto& lcc = *std::max_element(
        comps.begin(), comps.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });

    // Compact relabeling that preserves the relative order of the original ids.
    std::vector<int> keep(lcc.begin(), lcc.end());
    std::sort(keep.begin(), keep.end());
    std::vector<int> remap(n, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) remap[keep[i]] = i;

    std::vector<Edge> kept;
    for (const Edge& e : raw)
        if (remap[e.u] >= 0 && remap[e.v] >= 0) kept.push_back({remap[e.u], remap[e.v]});
    if (kept.empty()) throw std::invalid_argument("build_graph: empty graph after cleanup");
    return Graph(static_cast<int>(keep.size()), std::move(kept));
}

namespace {

int eccentricity(const Graph& g, int s, int* farthest = nullptr) {
    auto dist = g.bfs_distances(s);
    int ecc = 0, arg = s;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (dist[v] < 0) throw std::invalid_argument("diameter: graph is disconnected");
        if (dist[v] > ecc) {
            ecc = dist[v];
            arg = v;
        }
    }
    if (farthest) *farthest = arg;
    return ecc;
}

} // namespace

int diameter(const Graph& g) {
    if (g.num_vertices() <= 1) return 0;
    const int n = g.num_vertices();
    if (n <= 10000) {
        int best = 0;
        for (int s = 0; s < n; ++s) best = std::max(best, eccentricity(g, s));
        return best;
    }
    // Double sweep for a lower bound, then verify exactly: any vertex whose
    // distance from a BFS center is small enough may still realize a longer
    // path, so check all vertices whose eccentricity bound allows it.
    int far = 0;
    eccentricity(g, 0, &far);
    int lb = eccentricity(g, far, &far);
    auto dist = g.bfs_distances(far);
    int best = lb;
    for (int v = 0; v < n; ++v) {
        // ecc(v) >= dist[v]; only vertices with dist[v]*2 >= best can extend it.
        if (2 * dist[v] >= best) best = std::max(best, eccentricity(g, v));
    }
    return best;
}

Graph read_edge_list(std::istream& in, const BuildOptions& options) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::string line;
    std::int64_t min_id = std::numeric_limits<std::int64_t>::max();
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::int64_t a, b;
        if (ls >> a >> b) {
            pairs.emplace_back(a, b);
            min_id = std::min({min_id, a, b});
        }
    }
    if (pairs.empty()) throw std::invalid_argument("read_edge_list: no edges found");
    if (min_id >= 1)
        for (auto& [a, b] : pairs) {
            a -= 1;
            b -= 1;
        }
    return build_graph(pairs, options);
}

Graph read_edge_list_file(const std::string& path, const BuildOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("read_edge_list_file: cannot open " + path);
    return read_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n " << g.num_vertices() << " m " << g.num_edges() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

} // namespace lwg
