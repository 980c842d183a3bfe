#include <algorithm>
#include <cmath>
#include <vector>

#include "asdh/problems.hpp"
#include "asdh/solver.hpp"
#include "doctest.h"

using namespace asdh;

namespace {

// Starts exactly at a root.
class AtRoot final : public NlsProblem {
public:
    AtRoot() : NlsProblem("at-root", 2, 2, Vec{3.0, -4.0}) {}
    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        f[0] = x[0] - 3.0;
        f[1] = x[1] + 4.0;
    }
    void eval_jacobian_apply(std::span<const double>, std::span<const double> v,
                             std::span<double> out) const override {
        out[0] = v[0];
        out[1] = v[1];
    }
    void eval_jacobian_transpose_apply(std::span<const double>, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = u[0];
        out[1] = u[1];
    }
};

// Reports a hugely wrong Jacobian, so the claimed directional derivative
// keeps the acceptance threshold below the (nonnegative) objective at
// every trial step and backtracking runs out of halvings.
class LyingJacobian final : public NlsProblem {
public:
    LyingJacobian() : NlsProblem("lying-jacobian", 1, 1, Vec{1.0}) {}
    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        f[0] = x[0];
    }
    void eval_jacobian_apply(std::span<const double>, std::span<const double> v,
                             std::span<double> out) const override {
        out[0] = -1e20 * v[0];
    }
    void eval_jacobian_transpose_apply(std::span<const double>, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = -1e20 * u[0];
    }
};

// Residual undefined (NaN) at the start point.
class NanAtStart final : public NlsProblem {
public:
    NanAtStart() : NlsProblem("nan-at-start", 1, 1, Vec{-1.0}) {}
    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        f[0] = std::sqrt(x[0]);
    }
    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        out[0] = 0.5 / std::sqrt(x[0]) * v[0];
    }
    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = 0.5 / std::sqrt(x[0]) * u[0];
    }
};

}  // namespace

TEST_CASE("check_termination: rule precedence") {
    CHECK(check_termination(5e-5, 3, 1e-4, 1000) == Termination::converged);
    CHECK(check_termination(1.0, 1000, 1e-4, 1000) == Termination::maxiter);
    CHECK(check_termination(1.0, 0, 1e-4, 1000) == Termination::proceed);
    CHECK(check_termination(5e-5, 1000, 1e-4, 1000) == Termination::converged);
}

TEST_CASE("solve: immediate convergence at the start point") {
    AtRoot p;
    RunRecord rec = solve(p, SolverConfig{});
    CHECK(rec.status == RunStatus::converged);
    CHECK(rec.niter == 0);
    CHECK(rec.nfeval == 1);
    CHECK(rec.nmvp == 1);
    CHECK(rec.fvalue == 0.0);
    CHECK(rec.gnorm == 0.0);
}

TEST_CASE("solve: extended Rosenbrock in one iteration") {
    for (int n : {2, 1000}) {
        auto p = instantiate("P19", n);
        RunRecord rec = solve(*p, SolverConfig{});
        CHECK(rec.status == RunStatus::converged);
        CHECK(rec.niter == 1);
        CHECK(rec.nfeval == 2);
        CHECK(rec.nmvp == 4);
        CHECK(rec.fvalue <= 1e-12);
    }
}

TEST_CASE("solve: line-search failure is reported, not thrown") {
    LyingJacobian p;
    RunRecord rec = solve(p, SolverConfig{});
    CHECK(rec.status == RunStatus::ls_fail);
    CHECK(rec.niter == 0);
}

TEST_CASE("solve: evaluation failure is reported, not thrown") {
    NanAtStart p;
    RunRecord rec = solve(p, SolverConfig{});
    CHECK(rec.status == RunStatus::eval_fail);
}

TEST_CASE("solve: iteration cap") {
    auto p = instantiate("P30", 2);
    SolverConfig cfg;
    cfg.k_max = 5;
    RunRecord rec = solve(*p, cfg);
    CHECK(rec.status == RunStatus::maxiter);
    CHECK(rec.niter == 5);
    CHECK(std::isfinite(rec.fvalue));
    CHECK(rec.gnorm > cfg.eps);
}

TEST_CASE("solve: invalid configuration throws") {
    auto p = instantiate("P19", 2);
    SolverConfig cfg;
    cfg.gamma = 1.5;
    CHECK_THROWS_AS(solve(*p, cfg), std::invalid_argument);
}

TEST_CASE("solve: product count is 3 niter + 1 on suite problems") {
    for (const char* id : {"P1", "P8", "P19"}) {
        auto p = instantiate(id, 100);
        RunRecord rec = solve(*p, SolverConfig{});
        CHECK(rec.status == RunStatus::converged);
        CHECK(rec.nmvp == 3 * rec.niter + 1);
    }
}

TEST_CASE("solve: reference-value and level-set invariants along a long run") {
    auto p = instantiate("P30", 2);
    SolverConfig cfg;

    std::vector<IterationInfo> trace;
    cfg.observer = [&](const IterationInfo& info) { trace.push_back(info); };
    RunRecord rec = solve(*p, cfg);
    CHECK(rec.status == RunStatus::converged);
    REQUIRE(!trace.empty());

    const double f0 = trace.front().f;
    double max_f = f0;
    for (const IterationInfo& it : trace) {
        // descent with the clamp constants
        CHECK(it.gtd <= -(1.0 / cfg.u) * it.gnorm * it.gnorm + 1e-12);
        CHECK(it.dnorm <= (1.0 / cfg.l) * it.gnorm * (1.0 + 1e-12));
        // P sandwich and monotone decrease
        CHECK(it.f <= it.P * (1.0 + 1e-12) + 1e-12);
        CHECK(it.P <= max_f * (1.0 + 1e-12) + 1e-12);
        CHECK(it.P_next <= it.P * (1.0 + 1e-12) + 1e-12);
        // level set
        CHECK(it.f <= f0 * (1.0 + 1e-12) + 1e-12);
        CHECK(it.f_next <= f0 * (1.0 + 1e-12) + 1e-12);
        max_f = std::max(max_f, it.f_next);
    }

    // first iteration is plain steepest descent: d0 = -g0
    const IterationInfo& first = trace.front();
    CHECK(first.gtd == doctest::Approx(-first.gnorm * first.gnorm));
    CHECK(first.dnorm == doctest::Approx(first.gnorm));
}

TEST_CASE("solve: monotone configuration pins P to the last objective") {
    auto p = instantiate("P30", 2);
    SolverConfig cfg;
    cfg.eta_min = 0.0;
    cfg.eta_max = 0.0;
    std::vector<IterationInfo> trace;
    cfg.observer = [&](const IterationInfo& info) { trace.push_back(info); };
    RunRecord rec = solve(*p, cfg);
    CHECK(rec.status == RunStatus::converged);
    for (const IterationInfo& it : trace) {
        CHECK(it.Q_next == 1.0);
        CHECK(it.P_next == it.f_next);
        CHECK(it.f_next < it.f);  // strictly monotone acceptance
    }
}

TEST_CASE("solve: custom eta schedules are clamped") {
    auto p = instantiate("P30", 2);
    SolverConfig cfg;
    cfg.eta = [](int) { return 5.0; };  // out of range, must clamp to eta_max
    std::vector<IterationInfo> trace;
    cfg.observer = [&](const IterationInfo& info) { trace.push_back(info); };
    RunRecord rec = solve(*p, cfg);
    CHECK(rec.status == RunStatus::converged);
    for (const IterationInfo& it : trace) {
        // Q_{k+1} = eta Q_k + 1 with eta = 0.85 stays below 1/(1-0.85)
        CHECK(it.Q_next <= 1.0 / (1.0 - 0.85) + 1e-9);
    }
}
