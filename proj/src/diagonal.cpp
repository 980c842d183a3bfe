#include "asdh/diagonal.hpp"

#include <algorithm>
#include <cmath>

namespace asdh {

SecantPair secant_vectors(const NlsProblem& p, std::span<const double> x_prev,
                          std::span<const double> x_new, std::span<const double> F_new,
                          std::span<const double> g_new, EvalCounters& c) {
    SecantPair pair;
    pair.s.resize(x_new.size());
    for (std::size_t i = 0; i < x_new.size(); ++i) pair.s[i] = x_new[i] - x_prev[i];

    pair.y_hat = gauss_newton_apply(p, x_new, pair.s, c);

    // (J_new - J_prev)^T F_new, reusing g_new = J_new^T F_new.
    pair.y_bar = jacobian_transpose_apply(p, x_prev, F_new, c);
    for (std::size_t i = 0; i < pair.y_bar.size(); ++i) pair.y_bar[i] = g_new[i] - pair.y_bar[i];
    return pair;
}

SecantPair safeguard_secant(SecantPair pair, std::span<const double> g_new,
                            const SafeguardParams& params) {
    const double gamma = params.gamma;
    const double rho = params.rho;
    for (std::size_t i = 0; i < pair.s.size(); ++i) {
        const double si = pair.s[i];
        if (si == 0.0) continue;
        // J_prev^T F_new recovered from the unmodified y_bar component.
        const double jprev_f = g_new[i] - pair.y_bar[i];
        const double cross = gamma * std::max({std::abs(g_new[i]), std::abs(jprev_f), rho});
        if (si > 0.0) {
            if (pair.y_hat[i] <= 0.0)
                pair.y_hat[i] = gamma * std::max(std::abs(pair.y_hat[i]), rho);
            if (pair.y_bar[i] <= 0.0) pair.y_bar[i] = cross;
        } else {
            if (pair.y_hat[i] >= 0.0) pair.y_hat[i] = -gamma * std::max(pair.y_hat[i], rho);
            if (pair.y_bar[i] >= 0.0) pair.y_bar[i] = -cross;
        }
    }
    return pair;
}

DiagHessian update_diagonal(const SecantPair& pair, double lo, double hi) {
    DiagHessian H;
    H.lo = lo;
    H.hi = hi;
    H.h.resize(pair.s.size());
    for (std::size_t i = 0; i < pair.s.size(); ++i) {
        if (pair.s[i] == 0.0) {
            H.h[i] = 1.0;
        } else {
            const double r = (pair.y_hat[i] + pair.y_bar[i]) / pair.s[i];
            H.h[i] = std::min(hi, std::max(lo, r));
        }
    }
    return H;
}

Vec direction(const DiagHessian& H, std::span<const double> g) {
    Vec d(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) d[i] = -g[i] / H.h[i];
    return d;
}

}  // namespace asdh
