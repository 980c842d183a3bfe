#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "asdh/problem.hpp"

namespace asdh {

enum class RunStatus { converged, maxiter, ls_fail, eval_fail };

std::string_view to_string(RunStatus s);

/// Per-iteration snapshot handed to SolverConfig::observer after each
/// completed iteration. f, gnorm, gtd, dnorm, P, Q describe iteration k;
/// f_next, P_next, Q_next the state after the accepted step.
struct IterationInfo {
    int k = 0;
    double f = 0.0;
    double gnorm = 0.0;
    double gtd = 0.0;
    double dnorm = 0.0;
    double alpha = 1.0;
    int ls_trials = 0;
    double f_next = 0.0;
    double P = 0.0;
    double Q = 1.0;
    double P_next = 0.0;
    double Q_next = 1.0;
};

struct SolverConfig {
    double gamma = 0.2;   // safeguard shrinking factor
    double theta = 1e-4;  // Armijo coefficient
    double rho = 1e-4;    // safeguard positivity floor
    double l = 1e-30;     // diagonal lower clamp
    double u = 1e30;      // diagonal upper clamp
    double eta_min = 0.1;
    double eta_max = 0.85;
    double eps = 1e-4;  // gradient-norm tolerance
    int k_max = 1000;
    int max_halvings = 60;

    /// Custom eta schedule; empty means the default eta_schedule().
    /// Either way the value is clamped to [eta_min, eta_max].
    std::function<double(int)> eta;

    /// Diagnostic hook, called once per completed iteration.
    std::function<void(const IterationInfo&)> observer;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Result and telemetry of one solve, including the scalar config
/// fingerprint so a CSV row fully reproduces the run.
struct RunRecord {
    std::string problem;
    int n = 0;
    int m = 0;
    std::string solver;
    long niter = 0;
    long nfeval = 0;
    long nmvp = 0;
    double time_s = 0.0;
    double fvalue = 0.0;
    double gnorm = 0.0;
    RunStatus status = RunStatus::maxiter;
    // config fingerprint
    double theta = 0.0, gamma = 0.0, rho = 0.0, l = 0.0, u = 0.0, eps = 0.0;
    int kmax = 0;
};

enum class Termination { proceed, converged, maxiter };

/// converged when gnorm <= eps, maxiter when k >= k_max, else proceed.
Termination check_termination(double gnorm, int k, double eps, int k_max);

/// Runs the structured-diagonal-Hessian iteration from the problem's
/// start point. Never throws on finite inputs: line-search and
/// evaluation failures are reported through RunRecord::status.
RunRecord solve(const NlsProblem& p, const SolverConfig& cfg, std::string_view solver_name = "asdh");

}  // namespace asdh
