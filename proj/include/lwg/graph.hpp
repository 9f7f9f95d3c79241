#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lwg {

/// Undirected edge with canonical orientation u < v. The incidence row of
/// edge l is +1 at u, -1 at v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple connected graph with a fixed edge ordering. Edges are
/// sorted lexicographically; the position of an edge in edges() is its index l
/// used by every downstream module.
class Graph {
  public:
    Graph() = default;

    /// Takes an already canonical edge set: u < v, sorted, no duplicates,
    /// vertex ids in [0, n). Connectivity is checked lazily.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int l) const { return edges_[l]; }

    /// Incident (neighbor, edge index) pairs of u.
    const std::vector<std::pair<int, int>>& incident(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }

    bool connected() const;
    bool is_tree() const { return num_edges() == num_vertices() - 1 && connected(); }

    /// BFS distances from source (-1 for unreachable).
    std::vector<int> bfs_distances(int source) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct BuildOptions {
    bool drop_self_loops = true;
    bool take_lcc = true;
};

/// Canonicalize a raw edge list: relabel vertices 0..n-1 in order of first
/// appearance, drop self loops and duplicate edges, extract the largest
/// connected component. Throws std::invalid_argument on empty results,
/// self loops with drop_self_loops=false, or disconnected input with
/// take_lcc=false.
Graph build_graph(const std::vector<std::pair<std::int64_t, std::int64_t>>& edge_list,
                  const BuildOptions& options = {});

/// Exact unweighted diameter. All-sources BFS for n <= 10^4, double-sweep
/// bound plus verification above that; the result is always exact.
int diameter(const Graph& g);

/// Connected components as vertex index sets (for error reporting).
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Edge-list text format: one "u v" pair per line, '#' starts a comment,
/// 0- or 1-indexed ids auto-detected by the minimum id.
Graph read_edge_list(std::istream& in, const BuildOptions& options = {});
Graph read_edge_list_file(const std::string& path, const BuildOptions& options = {});
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace lwg
