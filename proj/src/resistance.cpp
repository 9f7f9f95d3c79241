#include "lwg/resistance.hpp"

#include <random>
#include <stdexcept>

namespace lwg {

double effective_resistance(const LaplacianSystem& sys, int i, int j) {
    if (i == j) throw std::invalid_argument("effective_resistance: i != j required");
    return sys.pinv_quad(i, j);
}

double kirchhoff(const LaplacianSystem& sys) { return sys.n() * sys.trace_pinv(); }

double kirchhoff_pairwise(const LaplacianSystem& sys) {
    const int n = sys.n();
    const Matrix& P = sys.pinv_shifted();
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) total += P(i, i) + P(j, j) - 2.0 * P(i, j);
    return total; // sum over unordered pairs equals n Tr L^+
}

ResistanceProfile resistance_profile(const LaplacianSystem& sys) {
    return {sys.edge_resistances(), kirchhoff(sys)};
}

Vector logdet_gradient(const LaplacianSystem& sys) { return sys.edge_resistances(); }

Vector kirchhoff_gradient(const LaplacianSystem& sys) {
    return -static_cast<double>(sys.n()) * sys.edge_sqnorms();
}

MetricCheckReport metric_check(const LaplacianSystem& sys, int samples, std::uint64_t seed) {
    MetricCheckReport rep;
    rep.samples = samples;
    const int n = sys.n();
    if (n < 3) return rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < samples; ++s) {
        int i = pick(rng), j = pick(rng), k = pick(rng);
        if (i == j || j == k || i == k) continue;
        const double v = effective_resistance(sys, i, j) - effective_resistance(sys, i, k) -
                         effective_resistance(sys, k, j);
        rep.max_violation = std::max(rep.max_violation, v);
    }
    rep.ok = rep.max_violation <= 1e-9;
    return rep;
}

} // namespace lwg
