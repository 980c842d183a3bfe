#include "asdh/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "asdh/diagonal.hpp"
#include "asdh/linesearch.hpp"

namespace asdh {

std::string_view to_string(RunStatus s) {
    switch (s) {
        case RunStatus::converged: return "converged";
        case RunStatus::maxiter: return "maxiter";
        case RunStatus::ls_fail: return "ls-fail";
        case RunStatus::eval_fail: return "eval-fail";
    }
    return "unknown";
}

void SolverConfig::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma must be in (0,1)");
    if (!(theta > 0.0 && theta < 1.0)) fail("theta must be in (0,1)");
    if (!(rho > 0.0)) fail("rho must be positive");
    if (!(l > 0.0 && l <= 1.0 && u >= 1.0)) fail("bounds must satisfy 0 < l <= 1 <= u");
    if (!(eta_min >= 0.0 && eta_min <= eta_max && eta_max <= 1.0))
        fail("eta bounds must satisfy 0 <= eta_min <= eta_max <= 1");
    if (!(eps > 0.0)) fail("eps must be positive");
    if (k_max < 1) fail("k_max must be at least 1");
    if (max_halvings < 1) fail("max_halvings must be at least 1");
}

Termination check_termination(double gnorm, int k, double eps, int k_max) {
    if (gnorm <= eps) return Termination::converged;
    if (k >= k_max) return Termination::maxiter;
    return Termination::proceed;
}

RunRecord solve(const NlsProblem& p, const SolverConfig& cfg, std::string_view solver_name) {
    cfg.validate();

    RunRecord rec;
    rec.problem = p.name();
    rec.n = p.n();
    rec.m = p.m();
    rec.solver = std::string(solver_name);
    rec.theta = cfg.theta;
    rec.gamma = cfg.gamma;
    rec.rho = cfg.rho;
    rec.l = cfg.l;
    rec.u = cfg.u;
    rec.eps = cfg.eps;
    rec.kmax = cfg.k_max;

    EvalCounters counters;
    double f = std::numeric_limits<double>::quiet_NaN();
    double gnorm = std::numeric_limits<double>::quiet_NaN();
    RunStatus status = RunStatus::eval_fail;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Vec x = p.start_point();
        Vec F = residual(p, x, counters);
        f = objective(F);
        Vec g = gradient(p, x, F, counters);
        gnorm = norm2(g);

        DiagHessian H;
        H.lo = cfg.l;
        H.hi = cfg.u;
        H.h.assign(x.size(), 1.0);  // identity on the first iteration

        LineSearchState ls;
        ls.P = f;
        ls.Q = 1.0;
        ls.k = 0;

        int k = 0;
        for (;;) {
            const Termination t = check_termination(gnorm, k, cfg.eps, cfg.k_max);
            if (t != Termination::proceed) {
                status = (t == Termination::converged) ? RunStatus::converged : RunStatus::maxiter;
                break;
            }

            Vec d = direction(H, g);
            const double gtd = dot(g, d);
            BacktrackResult bt =
                backtrack(p, counters, x, d, ls.P, gtd, cfg.theta, cfg.max_halvings);

            Vec g_new = gradient(p, bt.x_new, bt.F_new, counters);
            SecantPair pair = secant_vectors(p, x, bt.x_new, bt.F_new, g_new, counters);
            pair = safeguard_secant(std::move(pair), g_new, {cfg.gamma, cfg.rho});
            DiagHessian H_next = update_diagonal(pair, cfg.l, cfg.u);

            const double eta_raw = cfg.eta ? cfg.eta(k) : eta_schedule(k, cfg.eta_min, cfg.eta_max);
            const double eta_k = std::clamp(eta_raw, cfg.eta_min, cfg.eta_max);
            LineSearchState ls_next = update_pq(ls, eta_k, bt.f_new);

            if (cfg.observer) {
                IterationInfo info;
                info.k = k;
                info.f = f;
                info.gnorm = gnorm;
                info.gtd = gtd;
                info.dnorm = norm2(d);
                info.alpha = bt.alpha;
                info.ls_trials = bt.trials;
                info.f_next = bt.f_new;
                info.P = ls.P;
                info.Q = ls.Q;
                info.P_next = ls_next.P;
                info.Q_next = ls_next.Q;
                cfg.observer(info);
            }

            x = std::move(bt.x_new);
            F = std::move(bt.F_new);
            f = bt.f_new;
            g = std::move(g_new);
            gnorm = norm2(g);
            H = std::move(H_next);
            ls = ls_next;
            counters.niter = ++k;
        }
    } catch (const LineSearchFailure&) {
        status = RunStatus::ls_fail;
    } catch (const EvalFailure&) {
        status = RunStatus::eval_fail;
    }
    const auto t1 = std::chrono::steady_clock::now();

    rec.niter = counters.niter;
    rec.nfeval = counters.nfeval;
    rec.nmvp = counters.nmvp;
    rec.time_s = std::chrono::duration<double>(t1 - t0).count();
    rec.fvalue = f;
    rec.gnorm = gnorm;
    rec.status = status;
    return rec;
}

}  // namespace asdh
