#include "asdh/problem.hpp"

#include <cmath>

namespace asdh {

namespace {

void check_finite(const char* op, std::span<const double> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) throw EvalFailure(op, i);
    }
}

}  // namespace

void NlsProblem::eval_gauss_newton_apply(std::span<const double> x, std::span<const double> s,
                                         std::span<double> out) const {
    Vec tmp(static_cast<std::size_t>(m_));
    eval_jacobian_apply(x, s, tmp);
    eval_jacobian_transpose_apply(x, tmp, out);
}

Vec residual(const NlsProblem& p, std::span<const double> x, EvalCounters& c) {
    Vec out(static_cast<std::size_t>(p.m()));
    ++c.nfeval;
    p.eval_residual(x, out);
    check_finite("residual", out);
    return out;
}

Vec jacobian_apply(const NlsProblem& p, std::span<const double> x, std::span<const double> v,
                   EvalCounters& c) {
    Vec out(static_cast<std::size_t>(p.m()));
    ++c.nmvp;
    p.eval_jacobian_apply(x, v, out);
    check_finite("jacobian_apply", out);
    return out;
}

Vec jacobian_transpose_apply(const NlsProblem& p, std::span<const double> x,
                             std::span<const double> u, EvalCounters& c) {
    Vec out(static_cast<std::size_t>(p.n()));
    ++c.nmvp;
    p.eval_jacobian_transpose_apply(x, u, out);
    check_finite("jacobian_transpose_apply", out);
    return out;
}

Vec gauss_newton_apply(const NlsProblem& p, std::span<const double> x, std::span<const double> s,
                       EvalCounters& c) {
    Vec out(static_cast<std::size_t>(p.n()));
    ++c.nmvp;  // fused product counts once even when composed internally
    p.eval_gauss_newton_apply(x, s, out);
    check_finite("gauss_newton_apply", out);
    return out;
}

Vec gradient(const NlsProblem& p, std::span<const double> x, std::span<const double> F_x,
             EvalCounters& c) {
    return jacobian_transpose_apply(p, x, F_x, c);
}

Vec fd_jacobian_apply(const NlsProblem& p, std::span<const double> x, std::span<const double> v,
                      double h, EvalCounters& c) {
    const std::size_t n = x.size();
    Vec xp(n), xm(n);
    for (std::size_t i = 0; i < n; ++i) {
        xp[i] = x[i] + h * v[i];
        xm[i] = x[i] - h * v[i];
    }
    Vec fp = residual(p, xp, c);
    Vec fm = residual(p, xm, c);
    for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = (fp[i] - fm[i]) / (2.0 * h);
    return fp;
}

}  // namespace asdh
