#include "asdh/linesearch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace asdh {

double eta_schedule(int k, double eta_min, double eta_max) {
    const double t = static_cast<double>(k) / 45.0;
    const double eta = 0.75 * std::exp(-t * t) + 0.1;
    return std::clamp(eta, eta_min, eta_max);
}

bool accept_test(double f_trial, double P, double alpha, double gtd, double theta) {
    // False for NaN trial values.
    return f_trial <= P + theta * alpha * gtd;
}

BacktrackResult backtrack(const NlsProblem& p, EvalCounters& c, std::span<const double> x,
                          std::span<const double> d, double P, double gtd, double theta,
                          int max_halvings) {
    BacktrackResult r;
    r.x_new.resize(x.size());
    double alpha = 1.0;
    const int max_trials = max_halvings + 1;
    for (int trial = 1; trial <= max_trials; ++trial) {
        for (std::size_t i = 0; i < x.size(); ++i) r.x_new[i] = x[i] + alpha * d[i];
        double f_trial = std::numeric_limits<double>::infinity();
        bool evaluated = false;
        try {
            r.F_new = residual(p, r.x_new, c);
            f_trial = objective(r.F_new);
            evaluated = true;
        } catch (const EvalFailure&) {
            // Overflowing trial points are rejected like any failed trial.
        }
        if (evaluated && accept_test(f_trial, P, alpha, gtd, theta)) {
            r.alpha = alpha;
            r.f_new = f_trial;
            r.trials = trial;
            return r;
        }
        alpha *= 0.5;
    }
    throw LineSearchFailure(max_trials);
}

LineSearchState update_pq(const LineSearchState& state, double eta_k, double f_new) {
    LineSearchState next;
    next.Q = eta_k * state.Q + 1.0;
    next.P = (eta_k * state.Q * state.P + f_new) / next.Q;
    next.k = state.k + 1;
    return next;
}

}  // namespace asdh
