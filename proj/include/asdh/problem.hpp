#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "asdh/vec.hpp"

namespace asdh {

/// Thrown when an operator evaluation produces a non-finite entry.
/// Carries the operator name and the offending component index.
class EvalFailure : public std::runtime_error {
public:
    EvalFailure(std::string op, std::size_t index)
        : std::runtime_error("evaluation failure: non-finite entry " + std::to_string(index) +
                             " from " + op),
          op_(std::move(op)),
          index_(index) {}
    const std::string& op() const noexcept { return op_; }
    std::size_t index() const noexcept { return index_; }

private:
    std::string op_;
    std::size_t index_;
};

/// Per-run evaluation counters. `nmvp` counts Jacobian-operator
/// applications; a fused J^T(J s) product counts as one.
struct EvalCounters {
    long nfeval = 0;
    long nmvp = 0;
    long niter = 0;
};

/// Matrix-free nonlinear least-squares problem
///
///     min_x f(x) = 1/2 ||F(x)||^2,   F : R^n -> R^m.
///
/// Implementations provide the residual and the analytic action of the
/// Jacobian and its transpose; the Jacobian matrix is never formed.
/// Instances are immutable and safe to share across threads.
class NlsProblem {
public:
    NlsProblem(std::string name, int n, int m, Vec x0)
        : name_(std::move(name)), n_(n), m_(m), x0_(std::move(x0)) {}
    virtual ~NlsProblem() = default;

    const std::string& name() const noexcept { return name_; }
    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    const Vec& start_point() const noexcept { return x0_; }

    virtual void eval_residual(std::span<const double> x, std::span<double> f) const = 0;
    virtual void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                                     std::span<double> out) const = 0;
    virtual void eval_jacobian_transpose_apply(std::span<const double> x,
                                               std::span<const double> u,
                                               std::span<double> out) const = 0;
    /// J(x)^T (J(x) s). Overridden where the problem structure gives a
    /// cheaper fused form; the default composes the two applications.
    virtual void eval_gauss_newton_apply(std::span<const double> x, std::span<const double> s,
                                         std::span<double> out) const;

private:
    std::string name_;
    int n_;
    int m_;
    Vec x0_;
};

/// f(x) from an already-evaluated residual.
inline double objective(std::span<const double> F) { return 0.5 * dot(F, F); }

// Counted evaluations. Every entry of the result is checked; a non-finite
// value raises EvalFailure. Counters record the attempt even when it fails.

Vec residual(const NlsProblem& p, std::span<const double> x, EvalCounters& c);
Vec jacobian_apply(const NlsProblem& p, std::span<const double> x, std::span<const double> v,
                   EvalCounters& c);
Vec jacobian_transpose_apply(const NlsProblem& p, std::span<const double> x,
                             std::span<const double> u, EvalCounters& c);
/// Fused J^T(J s); increments nmvp by exactly 1.
Vec gauss_newton_apply(const NlsProblem& p, std::span<const double> x, std::span<const double> s,
                       EvalCounters& c);
/// g(x) = J(x)^T F(x) with F already evaluated at x. One nmvp.
Vec gradient(const NlsProblem& p, std::span<const double> x, std::span<const double> F_x,
             EvalCounters& c);
/// Central-difference Jacobian action, (F(x+h v) - F(x-h v)) / (2h).
/// Validation oracle for the analytic operators; costs two residual
/// evaluations and no nmvp.
Vec fd_jacobian_apply(const NlsProblem& p, std::span<const double> x, std::span<const double> v,
                      double h, EvalCounters& c);

}  // namespace asdh
