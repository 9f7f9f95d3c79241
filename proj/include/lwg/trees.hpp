#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lwg/graph.hpp"
#include "lwg/laplacian.hpp"

namespace lwg {

/// Tree with stable edge identities whose endpoints may be re-hung by local
/// transformations. Edge l keeps its index across transformations even as its
/// endpoints change; congestions are recomputed on demand.
class Tree {
  public:
    explicit Tree(const Graph& g);
    Tree(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int l) const { return edges_[l]; }
    const std::vector<std::pair<int, int>>& incident(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }

    /// Replace endpoint `from` of edge l by `to`.
    void rehang(int l, int from, int to);

    /// Size of the component containing `side` once edge l is removed.
    int side_size(int l, int side) const;

    /// Canonical immutable snapshot (relabels nothing; endpoints normalized).
    Graph to_graph() const;

    /// Centroid used as the root for up/down orientation.
    int centroid() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_; // stored as given; u/v order irrelevant here
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Congestions c_l = n_l (n - n_l) by a single DFS of subtree sizes.
std::vector<std::int64_t> congestions(const Tree& t);

struct TreeOptimal {
    Vector g_star;       ///< optimal normalized weights sqrt(c_l)/sum sqrt(c)
    double k_star = 0.0; ///< (sum_l sqrt(c_l))^2
};
TreeOptimal tree_optimal(const Tree& t);

/// Exact approximation ratio of uniform (= Lewis) weights on a tree:
/// m * sum c / (sum sqrt c)^2.
double tree_alpha(const Tree& t);

struct EdgePartition {
    std::vector<int> e_less;    ///< g*_l <= ||g*||^2 (ties here)
    std::vector<int> e_greater; ///< g*_l >  ||g*||^2
    std::vector<char> in_greater; ///< indicator by edge index
};
EdgePartition partition_edges(const Tree& t);

/// Lower local transformation at k in E_<: the subtree below e_k is ascended
/// so e_k becomes a leaf edge with congestion m. All other congestions are
/// unchanged. Throws on leaf edges or k not in E_<.
void lower_lt(Tree& t, int k);

/// Upper local transformation at k in E_> per the three re-hang cases on the
/// E_>-spanned subtree. Exactly one congestion changes and strictly
/// increases; its edge index is returned. Throws when both endpoint degrees
/// in the stem are <= 2 or k is not in E_>.
int upper_lt(Tree& t, int k);

struct PolarizeStep {
    int index = 0;
    std::string lt;         ///< "lower", "upper" or "push"
    int edge = 0;           ///< edge whose congestion changed
    double alpha_before = 0.0;
    double alpha_after = 0.0;
};

using PolarizeObserver =
    std::function<void(const PolarizeStep&, const Tree& before, const Tree& after)>;

struct PolarizeResult {
    std::vector<PolarizeStep> steps;
    Tree final_tree;
    bool is_bowtie = false;
    int bowtie_t = 0, bowtie_p = 0, bowtie_s = 0;
};

/// The polarization process: lower LTs until all E_< edges are leaves, upper
/// LTs until the E_> stem is a path, then leaf branches pushed step by step
/// toward the ends. Terminates in a Bowtie; alpha is non-decreasing along
/// accepted steps. The iteration cap 10 n^2 exists only as a bug guard.
PolarizeResult polarize(const Tree& t, const PolarizeObserver& observer = {});

struct BowtieShape {
    int t = 0, p = 0, s = 0;
};

/// True iff the tree is a path with leaf stars only at its two ends; the
/// decomposition takes the maximal path and orders the stars t <= s.
std::optional<BowtieShape> is_bowtie(const Tree& t);

/// TreeInstance per the domain model: congestions, closed-form optimum and
/// the E_< / E_> partition in one bundle.
struct TreeInstance {
    Graph tree;
    int root = 0;
    std::vector<std::int64_t> congestion;
    Vector g_star;
    double k_star = 0.0;
    double alpha = 0.0;
    EdgePartition partition;
};
TreeInstance make_tree_instance(const Graph& g);

} // namespace lwg
