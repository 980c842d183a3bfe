#pragma once

#include <span>
#include <stdexcept>

#include "asdh/problem.hpp"
#include "asdh/vec.hpp"

namespace asdh {

/// Backtracking exhausted max_halvings without an acceptable step.
/// Signals a defective direction or scaling; the solver aborts the run.
class LineSearchFailure : public std::runtime_error {
public:
    explicit LineSearchFailure(int trials)
        : std::runtime_error("line search failed after " + std::to_string(trials) + " trials") {}
};

/// State of the nonmonotone (Zhang-Hager) reference value recursion:
///   Q_{k+1} = eta_k Q_k + 1,  P_{k+1} = (eta_k Q_k P_k + f_{k+1}) / Q_{k+1}
/// with P_0 = f(x_0), Q_0 = 1. P is a convex combination of past
/// objective values, nonincreasing across accepted steps, and never
/// drops below the current f(x_k).
struct LineSearchState {
    double P = 0.0;
    double Q = 1.0;
    int k = 0;
};

struct BacktrackResult {
    double alpha = 1.0;
    double f_new = 0.0;
    Vec x_new;
    Vec F_new;
    int trials = 0;  // residual evaluations spent, <= max_halvings + 1
};

/// Default step-memory schedule 0.75 e^{-(k/45)^2} + 0.1, clamped to
/// [eta_min, eta_max]. eta = 0 recovers the classical monotone Armijo
/// test.
double eta_schedule(int k, double eta_min, double eta_max);

/// Nonmonotone Armijo acceptance: f_trial <= P + theta * alpha * gtd.
bool accept_test(double f_trial, double P, double alpha, double gtd, double theta);

/// Backtracks from alpha = 1, halving until accept_test holds. Trial
/// points whose objective is non-finite are rejected like any failed
/// trial. Requires gtd < 0. Throws LineSearchFailure after
/// max_halvings + 1 trials.
BacktrackResult backtrack(const NlsProblem& p, EvalCounters& c, std::span<const double> x,
                          std::span<const double> d, double P, double gtd, double theta,
                          int max_halvings);

/// Advances (P, Q, k) with the accepted objective value f_new.
LineSearchState update_pq(const LineSearchState& state, double eta_k, double f_new);

}  // namespace asdh
