#include "lwg/trees.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lwg {

Tree::Tree(const Graph& g) : Tree(g.num_vertices(), g.edges()) {
    if (!g.is_tree()) throw std::invalid_argument("Tree: input graph is not a tree");
}

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw std::invalid_argument("Tree: m != n-1");
    for (int l = 0; l < num_edges(); ++l) {
        adj_[edges_[l].u].emplace_back(edges_[l].v, l);
        adj_[edges_[l].v].emplace_back(edges_[l].u, l);
    }
}

void Tree::rehang(int l, int from, int to) {
    Edge& e = edges_[l];
    int other;
    if (e.u == from)
        other = e.v;
    else if (e.v == from)
        other = e.u;
    else
        throw std::invalid_argument("Tree::rehang: edge not incident to 'from'");
    if (to == other) throw std::invalid_argument("Tree::rehang: would create a self loop");
    e = {to, other};
    auto& af = adj_[from];
    af.erase(std::find(af.begin(), af.end(), std::pair<int, int>{other, l}));
    auto& ao = adj_[other];
    *std::find(ao.begin(), ao.end(), std::pair<int, int>{from, l}) = {to, l};
    adj_[to].emplace_back(other, l);
}

int Tree::side_size(int l, int side) const {
    int count = 0;
    std::vector<int> stack{side};
    std::vector<char> seen(n_, 0);
    seen[side] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& [v, el] : adj_[u])
            if (el != l && !seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return count;
}

Graph Tree::to_graph() const {
    std::vector<Edge> canon(edges_);
    for (Edge& e : canon)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(canon.begin(), canon.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    return Graph(n_, std::move(canon));
}

int Tree::centroid() const {
    // subtree sizes from an iterative DFS rooted at 0
    std::vector<int> order, parent(n_, -1), size(n_, 1);
    order.reserve(n_);
    std::vector<int> stack{0};
    std::vector<char> seen(n_, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (const auto& [v, l] : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back(v);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    int best = 0, best_weight = n_;
    for (int u = 0; u < n_; ++u) {
        int heaviest = n_ - size[u];
        for (const auto& [v, l] : adj_[u])
            if (parent[v] == u) heaviest = std::max(heaviest, size[v]);
        if (heaviest < best_weight || (heaviest == best_weight && u < best)) {
            best_weight = heaviest;
            best = u;
        }
    }
    return best;
}

std::vector<std::int64_t> congestions(const Tree& t) {
    const int n = t.num_vertices();
    std::vector<int> order, parent(n, -1), parent_edge(n, -1), size(n, 1);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (const auto& [v, l] : t.incident(u))
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                parent_edge[v] = l;
                stack.push_back(v);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    std::vector<std::int64_t> c(t.num_edges());
    for (int v = 0; v < n; ++v)
        if (parent_edge[v] >= 0)
            c[parent_edge[v]] = static_cast<std::int64_t>(size[v]) * (n - size[v]);
    return c;
}

TreeOptimal tree_optimal(const Tree& t) {
    auto c = congestions(t);
    double sum_sqrt = 0.0;
    for (auto cl : c) sum_sqrt += std::sqrt(static_cast<double>(cl));
    TreeOptimal out;
    out.k_star = sum_sqrt * sum_sqrt;
    out.g_star.resize(t.num_edges());
    for (int l = 0; l < t.num_edges(); ++l)
        out.g_star[l] = std::sqrt(static_cast<double>(c[l])) / sum_sqrt;
    return out;
}

double tree_alpha(const Tree& t) {
    auto c = congestions(t);
    double sum = 0.0, sum_sqrt = 0.0;
    for (auto cl : c) {
        sum += static_cast<double>(cl);
        sum_sqrt += std::sqrt(static_cast<double>(cl));
    }
    return t.num_edges() * sum / (sum_sqrt * sum_sqrt);
}

EdgePartition partition_edges(const Tree& t) {
    // g*_l <= ||g*||^2  <=>  sqrt(c_l) * sum_k sqrt(c_k) <= sum_k c_k.
    // Exact ties (stars) survive roundoff inside a relative band.
    auto c = congestions(t);
    double sum = 0.0, sum_sqrt = 0.0;
    for (auto cl : c) {
        sum += static_cast<double>(cl);
        sum_sqrt += std::sqrt(static_cast<double>(cl));
    }
    EdgePartition part;
    part.in_greater.assign(t.num_edges(), 0);
    for (int l = 0; l < t.num_edges(); ++l) {
        const double lhs = std::sqrt(static_cast<double>(c[l])) * sum_sqrt;
        if (lhs <= sum + 1e-9 * sum) {
            part.e_less.push_back(l);
        } else {
            part.e_greater.push_back(l);
            part.in_greater[l] = 1;
        }
    }
    return part;
}

namespace {

// Orientation of edge l relative to a root: returns (parent_side, child_side).
std::pair<int, int> orient_edge(const Tree& t, int l, int root) {
    const Edge& e = t.edge(l);
    std::vector<char> seen(t.num_vertices(), 0);
    std::vector<int> stack{e.u};
    seen[e.u] = 1;
    bool root_on_u = (e.u == root);
    while (!stack.empty() && !root_on_u) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [y, el] : t.incident(x))
            if (el != l && !seen[y]) {
                if (y == root) {
                    root_on_u = true;
                    break;
                }
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return root_on_u ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

int stem_degree(const Tree& t, const EdgePartition& part, int v) {
    int d = 0;
    for (const auto& [w, l] : t.incident(v))
        if (part.in_greater[l]) ++d;
    return d;
}

} // namespace

void lower_lt(Tree& t, int k) {
    auto part = partition_edges(t);
    if (part.in_greater[k]) throw std::invalid_argument("lower_lt: edge k is not in E_<");
    const Edge e = t.edge(k);
    if (t.degree(e.u) == 1 || t.degree(e.v) == 1)
        throw std::invalid_argument("lower_lt: k is already a leaf edge");

    auto [u, v] = orient_edge(t, k, t.centroid());
    // ascend the downward subtree: all of v's other edges move to u
    std::vector<int> moved;
    for (const auto& [w, l] : t.incident(v))
        if (l != k) moved.push_back(l);
    for (int l : moved) t.rehang(l, v, u);
}

int upper_lt(Tree& t, int k) {
    auto part = partition_edges(t);
    if (!part.in_greater[k]) throw std::invalid_argument("upper_lt: edge k is not in E_>");
    const Edge e = t.edge(k);
    const int da = stem_degree(t, part, e.u);
    const int db = stem_degree(t, part, e.v);
    if (da <= 2 && db <= 2)
        throw std::invalid_argument("upper_lt: both stem degrees are <= 2");

    const int n = t.num_vertices();
    int v, u;
    if (da > 2 && db > 2) {
        // case 1: operate on the endpoint whose side holds at most half the tree
        const int side_u = t.side_size(k, e.u);
        if (2 * side_u <= n)
            v = e.u, u = e.v;
        else
            v = e.v, u = e.u;
    } else {
        v = da > 2 ? e.u : e.v;
        u = da > 2 ? e.v : e.u;
    }

    // E_> children of v away from u, sorted by subtree size
    struct Child {
        int vertex;
        int edge;
        int size;
    };
    std::vector<Child> children;
    for (const auto& [w, l] : t.incident(v))
        if (l != k && part.in_greater[l]) children.push_back({w, l, t.side_size(l, w)});
    if (children.size() < 2) throw std::logic_error("upper_lt: stem degree bookkeeping broken");
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
        return a.size != b.size ? a.size < b.size : a.vertex < b.vertex;
    });

    const Child& x1 = children[0];
    const Child& x2 = children[1];
    if (da > 2 && db > 2) {
        t.rehang(x2.edge, v, x1.vertex); // case 1: congestion changes on (v, x1)
        return x1.edge;
    }
    const int n_prime = t.side_size(k, u);
    if (x1.size <= n_prime) {
        t.rehang(x2.edge, v, x1.vertex); // case 2.1
        return x1.edge;
    }
    t.rehang(x1.edge, v, u); // case 2.2: congestion changes on e_k
    return k;
}

std::optional<BowtieShape> is_bowtie(const Tree& t) {
    const int n = t.num_vertices();
    if (n == 1) return BowtieShape{0, 0, 0};
    if (n == 2) return BowtieShape{0, 1, 0};

    std::vector<int> internal;
    for (int u = 0; u < n; ++u)
        if (t.degree(u) >= 2) internal.push_back(u);
    if (internal.empty()) return std::nullopt; // impossible for a tree with n >= 3

    // internal vertices must form a path
    std::vector<int> internal_deg(n, 0);
    for (int u : internal)
        for (const auto& [w, l] : t.incident(u))
            if (t.degree(w) >= 2) ++internal_deg[u];
    int ends = 0, end_a = -1, end_b = -1;
    for (int u : internal) {
        if (internal_deg[u] > 2) return std::nullopt;
        if (internal_deg[u] <= 1) {
            ++ends;
            (end_a < 0 ? end_a : end_b) = u;
        }
    }
    if (internal.size() == 1) {
        end_a = end_b = internal[0];
    } else if (ends != 2) {
        return std::nullopt; // a cycle cannot happen in a tree; defensive
    }

    // every leaf must hang off one of the two stem ends
    int t_count = 0, s_count = 0;
    for (int u = 0; u < n; ++u) {
        if (t.degree(u) != 1) continue;
        const int anchor = t.incident(u)[0].first;
        if (anchor == end_a && end_a != end_b)
            ++t_count;
        else if (anchor == end_b)
            ++s_count;
        else if (anchor == end_a)
            ++s_count; // single stem vertex collects everything
        else
            return std::nullopt;
    }
    BowtieShape shape{t_count, static_cast<int>(internal.size()) - 1, s_count};
    if (shape.t > shape.s) std::swap(shape.t, shape.s);
    return shape;
}

PolarizeResult polarize(const Tree& input, const PolarizeObserver& observer) {
    Tree cur = input;
    const int n = cur.num_vertices();
    const int m = cur.num_edges();
    const long cap = 10L * n * n + 16;
    PolarizeResult out{.steps = {}, .final_tree = cur};

    long guard = 0;
    auto bump = [&] {
        if (++guard > cap)
            throw std::runtime_error("polarize: iteration cap exceeded (bug signal)");
    };
    auto record = [&](const char* type, int edge, const Tree& before, double a_before) {
        PolarizeStep step;
        step.index = static_cast<int>(out.steps.size());
        step.lt = type;
        step.edge = edge;
        step.alpha_before = a_before;
        step.alpha_after = tree_alpha(cur);
        out.steps.push_back(step);
        if (observer) observer(step, before, cur);
    };

    // One transformation per round, lower LTs taking precedence over upper
    // LTs over branch pushes. The partition is recomputed every round: a
    // transformation can flip the membership of *other* edges, so the fixed
    // point is reached only when no step of any kind applies. Every accepted
    // step satisfies its own partition condition, which is what makes alpha
    // non-decreasing along the trajectory.
    auto try_lower = [&]() -> bool {
        auto part = partition_edges(cur);
        auto c = congestions(cur);
        for (int l : part.e_less)
            if (c[l] > m) {
                Tree before = cur;
                const double a0 = tree_alpha(cur);
                lower_lt(cur, l);
                record("lower", l, before, a0);
                return true;
            }
        return false;
    };

    auto try_upper = [&]() -> bool {
        auto part = partition_edges(cur);
        for (int l : part.e_greater) {
            const Edge& e = cur.edge(l);
            if (stem_degree(cur, part, e.u) > 2 || stem_degree(cur, part, e.v) > 2) {
                Tree before = cur;
                const double a0 = tree_alpha(cur);
                const int changed = upper_lt(cur, l);
                record("upper", changed, before, a0);
                return true;
            }
        }
        return false;
    };

    // Push one leaf branch a single step toward a stem end; the move crosses
    // one stem edge and must strictly increase its congestion.
    auto try_push = [&]() -> bool {
        auto part = partition_edges(cur);
        for (int u = 0; u < n; ++u) {
            // u is an internal stem vertex iff it has >= 2 stem edges
            if (stem_degree(cur, part, u) < 2) continue;
            int pending = -1;
            for (const auto& [w, l] : cur.incident(u))
                if (!part.in_greater[l] && cur.degree(w) == 1) {
                    pending = l;
                    break;
                }
            if (pending < 0) continue;
            struct Move {
                int stem_edge;
                int next;
                int dist_to_end;
                int end_star;
            };
            std::vector<Move> moves;
            for (const auto& [w, l] : cur.incident(u)) {
                if (!part.in_greater[l]) continue;
                const int here = cur.side_size(l, u);
                const int there = cur.side_size(l, w);
                if (here < there + 2) continue; // would not strictly increase
                // walk along the stem from w to its end, counting hops
                int dist = 1, prev = u, at = w;
                for (;;) {
                    int next = -1;
                    for (const auto& [y, el] : cur.incident(at))
                        if (part.in_greater[el] && y != prev) next = y;
                    if (next < 0) break;
                    prev = at;
                    at = next;
                    ++dist;
                }
                int star = 0;
                for (const auto& [y, el] : cur.incident(at))
                    if (cur.degree(y) == 1) ++star;
                moves.push_back({l, w, dist, star});
            }
            if (moves.empty()) continue;
            std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
                if (a.dist_to_end != b.dist_to_end) return a.dist_to_end < b.dist_to_end;
                if (a.end_star != b.end_star) return a.end_star > b.end_star;
                return a.next < b.next;
            });
            Tree before = cur;
            const double a0 = tree_alpha(cur);
            cur.rehang(pending, u, moves[0].next);
            record("push", moves[0].stem_edge, before, a0);
            return true;
        }
        return false;
    };

    for (;;) {
        bump();
        if (try_lower()) continue;
        if (try_upper()) continue;
        if (try_push()) continue;
        break;
    }

    out.final_tree = cur;
    if (auto shape = is_bowtie(cur)) {
        out.is_bowtie = true;
        out.bowtie_t = shape->t;
        out.bowtie_p = shape->p;
        out.bowtie_s = shape->s;
    }
    return out;
}

TreeInstance make_tree_instance(const Graph& g) {
    Tree t(g);
    TreeInstance inst;
    inst.tree = g;
    inst.root = t.centroid();
    inst.congestion = congestions(t);
    auto opt = tree_optimal(t);
    inst.g_star = opt.g_star;
    inst.k_star = opt.k_star;
    inst.alpha = tree_alpha(t);
    inst.partition = partition_edges(t);
    return inst;
}

} // namespace lwg
