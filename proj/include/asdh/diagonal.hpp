#pragma once

#include <span>

#include "asdh/problem.hpp"
#include "asdh/vec.hpp"

namespace asdh {

/// Structured secant data for one step s = x_new - x_prev.
///
/// y_hat is the Gauss-Newton part J(x_new)^T J(x_new) s, y_bar the
/// curvature part (J(x_new) - J(x_prev))^T F(x_new). After
/// safeguard_secant, every component with s[i] != 0 satisfies
/// y_hat[i]/s[i] > 0 and y_bar[i]/s[i] > 0.
struct SecantPair {
    Vec y_hat;
    Vec y_bar;
    Vec s;
};

struct SafeguardParams {
    double gamma = 0.2;  // shrinking factor, in (0,1)
    double rho = 1e-4;   // positivity floor, > 0
};

/// Diagonal Hessian approximation with entries clamped to [lo, hi],
/// 0 < lo <= 1 <= hi, hence positive definite.
struct DiagHessian {
    Vec h;
    double lo = 1e-30;
    double hi = 1e30;
};

/// Builds the secant vectors for the step x_prev -> x_new.
/// g_new = J(x_new)^T F_new must already be computed; it is reused for
/// y_bar so the whole call costs exactly two nmvp.
SecantPair secant_vectors(const NlsProblem& p, std::span<const double> x_prev,
                          std::span<const double> x_new, std::span<const double> F_new,
                          std::span<const double> g_new, EvalCounters& c);

/// Sign correction: components of y_hat / y_bar whose ratio with s[i]
/// would be nonpositive are replaced by shrunk, strictly signed values.
/// Components with s[i] == 0 are left alone (the diagonal update pins
/// them to 1). g_new is needed to recover J_prev^T F_new = g_new - y_bar
/// without another operator application. Idempotent.
SecantPair safeguard_secant(SecantPair pair, std::span<const double> g_new,
                            const SafeguardParams& params);

/// h[i] = (y_hat[i] + y_bar[i]) / s[i] clamped to [lo, hi]; 1 where
/// s[i] == 0 (exact floating-point test).
DiagHessian update_diagonal(const SecantPair& pair, double lo, double hi);

/// Solves H d = -g componentwise: d[i] = -g[i] / h[i].
Vec direction(const DiagHessian& H, std::span<const double> g);

}  // namespace asdh
