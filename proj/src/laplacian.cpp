#include "lwg/laplacian.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lwg {

Vector uniform_weights(int m) { return Vector::Constant(m, 1.0 / m); }

Vector apply_laplacian(const Graph& g, const Vector& weights, const Vector& x) {
    Vector y = Vector::Zero(g.num_vertices());
    const auto& edges = g.edges();
    for (int l = 0; l < g.num_edges(); ++l) {
        const double f = weights[l] * (x[edges[l].u] - x[edges[l].v]);
        y[edges[l].u] += f;
        y[edges[l].v] -= f;
    }
    return y;
}

namespace {

void check_support_connected(const Graph& g, const Vector& w) {
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const auto& [v, l] : g.incident(u)) {
            if (w[l] > 0.0 && !seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != n) {
        std::ostringstream msg;
        msg << "LaplacianSystem: positive-weight support is disconnected (" << reached
            << " of " << n << " vertices reachable from vertex 0; first unreachable:";
        for (int v = 0, shown = 0; v < n && shown < 5; ++v)
            if (!seen[v]) {
                msg << " " << v;
                ++shown;
            }
        msg << ")";
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

struct LaplacianSystem::Impl {
    // dense path
    Eigen::LDLT<Matrix> ldlt;
    Matrix m_dense;
    // iterative path
    Vector jacobi_inv; // 1 / diag(M)
    // shared lazy cache of M^{-1}
    mutable Matrix minv;
    mutable std::once_flag minv_once;
    mutable std::atomic<bool> minv_ready{false};
    mutable std::atomic<int> mean_warnings{0};
};

LaplacianSystem::LaplacianSystem(Graph g, Vector weights, SolveOptions options)
    : graph_(std::move(g)), weights_(std::move(weights)), options_(options), impl_(new Impl) {
    const int n = graph_.num_vertices();
    const int m = graph_.num_edges();
    if (weights_.size() != m)
        throw std::invalid_argument("LaplacianSystem: weight vector length != m");
    if ((weights_.array() < 0.0).any())
        throw std::invalid_argument("LaplacianSystem: negative weight");
    check_support_connected(graph_, weights_);

    dense_ = n <= options_.dense_threshold;
    if (dense_) {
        Matrix M = Matrix::Constant(n, n, 1.0 / n);
        for (int l = 0; l < m; ++l) {
            const auto& e = graph_.edge(l);
            const double w = weights_[l];
            M(e.u, e.u) += w;
            M(e.v, e.v) += w;
            M(e.u, e.v) -= w;
            M(e.v, e.u) -= w;
        }
        impl_->m_dense = M;
        impl_->ldlt.compute(M);
        if (impl_->ldlt.info() != Eigen::Success)
            throw std::runtime_error("LaplacianSystem: dense factorization failed");
    } else {
        Vector d = Vector::Constant(n, 1.0 / n);
        for (int l = 0; l < m; ++l) {
            const auto& e = graph_.edge(l);
            d[e.u] += weights_[l];
            d[e.v] += weights_[l];
        }
        impl_->jacobi_inv = d.cwiseInverse();
    }
}

LaplacianSystem::~LaplacianSystem() = default;
LaplacianSystem::LaplacianSystem(LaplacianSystem&&) noexcept = default;
LaplacianSystem& LaplacianSystem::operator=(LaplacianSystem&&) noexcept = default;

int LaplacianSystem::mean_projection_warnings() const { return impl_->mean_warnings.load(); }

namespace {

// M x = L x + mean(x) * 1
Vector apply_shifted(const Graph& g, const Vector& w, const Vector& x) {
    Vector y = apply_laplacian(g, w, x);
    y.array() += x.mean();
    return y;
}

} // namespace

Vector LaplacianSystem::pinv_apply(const Vector& z) const {
    const int n = this->n();
    if (z.size() != n) throw std::invalid_argument("pinv_apply: size mismatch");
    const double mean = z.mean();
    const double znorm = z.norm();
    if (std::abs(mean) > 1e-9 * znorm) impl_->mean_warnings.fetch_add(1);
    Vector rhs = z.array() - mean;

    if (dense_) {
        Vector x = impl_->ldlt.solve(rhs);
        // one refinement step keeps the residual near machine precision even
        // for badly conditioned weights
        x += impl_->ldlt.solve(rhs - impl_->m_dense * x);
        x.array() -= x.mean();
        return x;
    }

    // Jacobi-preconditioned CG on M (SPD); iterates stay mean-free up to
    // roundoff, re-projected at the end.
    const double rhs_norm = rhs.norm();
    Vector x = Vector::Zero(n);
    if (rhs_norm == 0.0) return x;
    Vector r = rhs;
    Vector zv = impl_->jacobi_inv.cwiseProduct(r);
    Vector p = zv;
    double rz = r.dot(zv);
    const int max_iters =
        options_.max_cg_iters > 0 ? options_.max_cg_iters : 200 * n + 10000;
    const double tol = options_.iter_tol * 0.1; // headroom for the contract of 1e-8
    for (int it = 0; it < max_iters; ++it) {
        Vector q = apply_shifted(graph_, weights_, p);
        const double alpha = rz / p.dot(q);
        x += alpha * p;
        r -= alpha * q;
        if (r.norm() <= tol * rhs_norm) break;
        zv = impl_->jacobi_inv.cwiseProduct(r);
        const double rz_new = r.dot(zv);
        p = zv + (rz_new / rz) * p;
        rz = rz_new;
    }
    if (r.norm() > options_.iter_tol * rhs_norm)
        throw std::runtime_error("pinv_apply: CG did not reach the requested residual");
    x.array() -= x.mean();
    return x;
}

const Matrix& LaplacianSystem::pinv_shifted() const {
    std::call_once(impl_->minv_once, [this] {
        const int n = this->n();
        if (dense_) {
            impl_->minv = impl_->ldlt.solve(Matrix::Identity(n, n));
        } else {
            if (n > 8000)
                throw std::runtime_error("pinv_shifted: dense cache too large for iterative mode");
            Matrix inv(n, n);
            Vector e = Vector::Zero(n);
            for (int j = 0; j < n; ++j) {
                e[j] = 1.0;
                inv.col(j) = pinv_apply(e); // = L^+ e_j, mean-free column
                e[j] = 0.0;
            }
            // L^+ + (1/n)11^T
            inv.array() += 1.0 / n;
            impl_->minv = inv;
        }
        impl_->minv_ready.store(true);
    });
    return impl_->minv;
}

double LaplacianSystem::pinv_quad(int u, int v) const {
    if (u == v) throw std::invalid_argument("pinv_quad: endpoints coincide");
    const Matrix& P = pinv_shifted();
    return P(u, u) + P(v, v) - 2.0 * P(u, v);
}

Vector LaplacianSystem::edge_resistances() const {
    const Matrix& P = pinv_shifted();
    Vector r(m());
    for (int l = 0; l < m(); ++l) {
        const auto& e = graph_.edge(l);
        r[l] = P(e.u, e.u) + P(e.v, e.v) - 2.0 * P(e.u, e.v);
    }
    return r;
}

Vector LaplacianSystem::leverage_scores() const {
    return weights_.cwiseProduct(edge_resistances());
}

Vector LaplacianSystem::edge_sqnorms() const {
    const Matrix& P = pinv_shifted();
    Vector s(m());
    for (int l = 0; l < m(); ++l) {
        const auto& e = graph_.edge(l);
        // columns of P differ from columns of L^+ by the constant 1/n, which
        // cancels in the difference
        s[l] = (P.col(e.u) - P.col(e.v)).squaredNorm();
    }
    return s;
}

double LaplacianSystem::trace_pinv() const { return pinv_shifted().trace() - 1.0; }

double LaplacianSystem::logdet_pinv() const {
    if (!dense_)
        throw std::runtime_error("logdet_pinv: requires the dense factorization path");
    return -impl_->ldlt.vectorD().array().log().sum();
}

std::pair<double, double> LaplacianSystem::eig_extremes() const {
    const int n = this->n();
    const int max_iters = 10 * n + 100;
    const double tol = 1e-8;

    // deterministic nonconstant start vector
    auto start = [&] {
        Vector x(n);
        for (int i = 0; i < n; ++i) x[i] = std::sin(1.0 + 0.7 * i) + 1e-3 * i;
        x.array() -= x.mean();
        x.normalize();
        return x;
    };

    // Power iteration on `op` restricted to the mean-free subspace; the
    // Rayleigh quotient must hold still (rel. 1e-8) three checks in a row.
    // NaN signals a spectrum too clustered for the iteration budget.
    auto dominant = [&](auto&& op) {
        Vector x = start();
        double prev = 0.0, ray = 0.0, change = 1.0;
        int stable = 0;
        for (int it = 0; it < max_iters; ++it) {
            Vector y = op(x);
            y.array() -= y.mean();
            ray = x.dot(y);
            const double ynorm = y.norm();
            if (ynorm == 0.0) break;
            x = y / ynorm;
            change = std::abs(ray - prev);
            if (change <= tol * std::abs(ray)) {
                if (++stable >= 3) return ray;
            } else
                stable = 0;
            prev = ray;
        }
        if (change > tol * std::abs(ray))
            return std::numeric_limits<double>::quiet_NaN();
        return ray;
    };

    const double lam_n = dominant(
        [&](const Vector& x) { return apply_laplacian(graph_, weights_, x); });

    // Largest eigenvalue of L^+ is 1/lambda_2; use the cached inverse when it
    // already exists (or build it once on the dense path) so each step is a
    // single mat-vec.
    if (dense_) pinv_shifted();
    double inv_lam2;
    if (impl_->minv_ready.load()) {
        const Matrix& P = impl_->minv;
        inv_lam2 = dominant([&](const Vector& x) { return (P * x).eval(); });
    } else {
        inv_lam2 = dominant([&](const Vector& x) { return pinv_apply(x); });
    }

    if (!std::isnan(lam_n) && !std::isnan(inv_lam2)) return {1.0 / inv_lam2, lam_n};

    // Nearly degenerate extremes stall the power iteration inside its budget;
    // the dense path falls back to the full symmetric eigensolver.
    if (!dense_)
        throw std::runtime_error("eig_extremes: power iteration did not converge");
    Matrix L = Matrix::Zero(n, n);
    for (int l = 0; l < m(); ++l) {
        const auto& e = graph_.edge(l);
        const double w = weights_[l];
        L(e.u, e.u) += w;
        L(e.v, e.v) += w;
        L(e.u, e.v) -= w;
        L(e.v, e.u) -= w;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(L, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eig_extremes: dense eigensolver failed");
    return {es.eigenvalues()[1], es.eigenvalues()[n - 1]};
}

} // namespace lwg
