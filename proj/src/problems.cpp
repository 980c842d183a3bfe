#include "asdh/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace asdh {

namespace {

Vec constant_start(int n, double value) { return Vec(static_cast<std::size_t>(n), value); }

// ---------------------------------------------------------------- P1
// Penalty I: F_i = sqrt(1e-5) (x_i - 1) for i < n, F_n couples all
// variables through the mean square.
class PenaltyI final : public NlsProblem {
public:
    explicit PenaltyI(int n) : NlsProblem("Penalty I", n, n, constant_start(n, 1.0 / 3.0)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        const std::size_t n = x.size();
        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sq += x[i] * x[i];
            if (i + 1 < n) f[i] = kA * (x[i] - 1.0);
        }
        f[n - 1] = sq / (4.0 * static_cast<double>(n)) - 0.25;
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        const std::size_t n = x.size();
        double xv = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            xv += x[i] * v[i];
            if (i + 1 < n) out[i] = kA * v[i];
        }
        out[n - 1] = xv / (2.0 * static_cast<double>(n));
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        const std::size_t n = x.size();
        const double un = u[n - 1] / (2.0 * static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            out[i] = (i + 1 < n ? kA * u[i] : 0.0) + x[i] * un;
    }

private:
    static constexpr double kA = 3.16227766016837933e-3;  // sqrt(1e-5)
};

// ---------------------------------------------------------------- P2
// Trigonometric: F_i = n - sum_j cos x_j + (i+1)(1 - cos x_i) - sin x_i.
class Trigonometric final : public NlsProblem {
public:
    explicit Trigonometric(int n)
        : NlsProblem("Trigonometric", n, n, constant_start(n, 1.0 / n)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        const std::size_t n = x.size();
        double sum_cos = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum_cos += std::cos(x[j]);
        for (std::size_t i = 0; i < n; ++i) {
            const double ci = std::cos(x[i]);
            f[i] = static_cast<double>(n) - sum_cos +
                   static_cast<double>(i + 1) * (1.0 - ci) - std::sin(x[i]);
        }
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        const std::size_t n = x.size();
        double t = 0.0;
        for (std::size_t j = 0; j < n; ++j) t += std::sin(x[j]) * v[j];
        for (std::size_t i = 0; i < n; ++i) {
            const double si = std::sin(x[i]);
            const double ci = std::cos(x[i]);
            out[i] = t + (static_cast<double>(i + 1) * si - ci) * v[i];
        }
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        const std::size_t n = x.size();
        double usum = 0.0;
        for (std::size_t i = 0; i < n; ++i) usum += u[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double sj = std::sin(x[j]);
            const double cj = std::cos(x[j]);
            out[j] = sj * usum + (static_cast<double>(j + 1) * sj - cj) * u[j];
        }
    }
};

// ---------------------------------------------------------------- P3
// Discrete boundary value: tridiagonal, symmetric Jacobian.
class DiscreteBoundaryValue final : public NlsProblem {
public:
    explicit DiscreteBoundaryValue(int n)
        : NlsProblem("Discrete boundary value", n, n, make_start(n)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        const std::size_t n = x.size();
        const double h = 1.0 / (static_cast<double>(n) + 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double xm = i > 0 ? x[i - 1] : 0.0;
            const double xp = i + 1 < n ? x[i + 1] : 0.0;
            const double t = static_cast<double>(i + 1) * h;
            const double w = x[i] + t + 1.0;
            f[i] = 2.0 * x[i] - xm - xp + 0.5 * h * h * w * w * w;
        }
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        apply_tridiag(x, v, out);
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        apply_tridiag(x, u, out);  // symmetric
    }

private:
    static Vec make_start(int n) {
        Vec x0(static_cast<std::size_t>(n));
        const double h = 1.0 / (n + 1.0);
        for (int i = 0; i < n; ++i) {
            const double t = (i + 1) * h;
            x0[static_cast<std::size_t>(i)] = t * (t - 1.0);
        }
        return x0;
    }

    static void apply_tridiag(std::span<const double> x, std::span<const double> v,
                              std::span<double> out) {
        const std::size_t n = x.size();
        const double h = 1.0 / (static_cast<double>(n) + 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i + 1) * h;
            const double w = x[i] + t + 1.0;
            const double diag = 2.0 + 1.5 * h * h * w * w;
            double r = diag * v[i];
            if (i > 0) r -= v[i - 1];
            if (i + 1 < n) r -= v[i + 1];
            out[i] = r;
        }
    }
};

// ---------------------------------------------------------------- P4
// Linear full rank: m = n + 1. The first n rows use the 2/m coupling of
// the textbook problem; the tail row keeps the 2/n scaling, which is the
// variant whose optimum matches the published results (1/2 + 2/n).
class LinearFullRank final : public NlsProblem {
public:
    explicit LinearFullRank(int n)
        : NlsProblem("Linear full rank", n, n + 1, constant_start(n, 1.0)),
          body_(2.0 / (n + 1.0)),
          tail_(2.0 / n) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        const std::size_t n = x.size();
        double sigma = 0.0;
        for (double xi : x) sigma += xi;
        for (std::size_t i = 0; i < n; ++i) f[i] = x[i] - body_ * sigma - 1.0;
        f[n] = -tail_ * sigma - 1.0;
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        (void)x;
        const std::size_t n = v.size();
        double sv = 0.0;
        for (double vi : v) sv += vi;
        for (std::size_t i = 0; i < n; ++i) out[i] = v[i] - body_ * sv;
        out[n] = -tail_ * sv;
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        (void)x;
        const std::size_t n = out.size();
        double su = 0.0;
        for (std::size_t i = 0; i < n; ++i) su += u[i];
        const double t = body_ * su + tail_ * u[n];
        for (std::size_t j = 0; j < n; ++j) out[j] = u[j] - t;
    }

private:
    double body_;
    double tail_;
};

// ---------------------------------------------------------------- P8/P9
// Strictly convex I/II: separable, diagonal Jacobian.
class StrictlyConvex final : public NlsProblem {
public:
    StrictlyConvex(int n, bool weighted)
        : NlsProblem(weighted ? "Strictly convex II" : "Strictly convex I", n, n,
                     weighted ? constant_start(n, 1.0) : ramp_start(n)),
          weighted_(weighted) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        for (std::size_t i = 0; i < x.size(); ++i)
            f[i] = weight(i) * (std::exp(x[i]) - x[i]);
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = weight(i) * (std::exp(x[i]) - 1.0) * v[i];
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        eval_jacobian_apply(x, u, out);  // diagonal
    }

    void eval_gauss_newton_apply(std::span<const double> x, std::span<const double> s,
                                 std::span<double> out) const override {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double jii = weight(i) * (std::exp(x[i]) - 1.0);
            out[i] = jii * jii * s[i];
        }
    }

private:
    static Vec ramp_start(int n) {
        Vec x0(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x0[static_cast<std::size_t>(i)] = (i + 1.0) / n;
        return x0;
    }
    double weight(std::size_t i) const { return weighted_ ? (static_cast<double>(i) + 1.0) / 10.0 : 1.0; }

    bool weighted_;
};

// ---------------------------------------------------------------- P10
// Brown almost linear: n-1 linear rows plus one product row.
class BrownAlmostLinear final : public NlsProblem {
public:
    explicit BrownAlmostLinear(int n)
        : NlsProblem("Brown almost linear", n, n, constant_start(n, 0.5)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        const std::size_t n = x.size();
        double sigma = 0.0;
        double prod = 1.0;
        for (double xi : x) {
            sigma += xi;
            prod *= xi;
        }
        for (std::size_t i = 0; i + 1 < n; ++i)
            f[i] = x[i] + sigma - (static_cast<double>(n) + 1.0);
        f[n - 1] = prod - 1.0;
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        const std::size_t n = x.size();
        double sv = 0.0;
        for (double vi : v) sv += vi;
        const Vec pi = partial_products(x);
        double last = 0.0;
        for (std::size_t j = 0; j < n; ++j) last += pi[j] * v[j];
        for (std::size_t i = 0; i + 1 < n; ++i) out[i] = v[i] + sv;
        out[n - 1] = last;
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        const std::size_t n = x.size();
        double su = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) su += u[i];
        const Vec pi = partial_products(x);
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = su + pi[j] * u[n - 1];
            if (j + 1 < n) out[j] += u[j];
        }
    }

private:
    // pi[j] = prod_{k != j} x_k via prefix/suffix products.
    static Vec partial_products(std::span<const double> x) {
        const std::size_t n = x.size();
        Vec pre(n + 1, 1.0), suf(n + 1, 1.0);
        for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] * x[i];
        for (std::size_t i = n; i-- > 0;) suf[i] = suf[i + 1] * x[i];
        Vec pi(n);
        for (std::size_t j = 0; j < n; ++j) pi[j] = pre[j] * suf[j + 1];
        return pi;
    }
};

// -------------------------------------------------------- 2x2 blocks
// Base for problems defined pairwise on (x_{2b}, x_{2b+1}) with two
// residuals per block; ships a fused Gauss-Newton product.
class Block2Problem : public NlsProblem {
public:
    using NlsProblem::NlsProblem;

    void eval_residual(std::span<const double> x, std::span<double> f) const final {
        for (std::size_t b = 0; b < x.size() / 2; ++b)
            block_residual(x[2 * b], x[2 * b + 1], &f[2 * b]);
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const final {
        double J[2][2];
        for (std::size_t b = 0; b < x.size() / 2; ++b) {
            block_jacobian(x[2 * b], x[2 * b + 1], J);
            out[2 * b] = J[0][0] * v[2 * b] + J[0][1] * v[2 * b + 1];
            out[2 * b + 1] = J[1][0] * v[2 * b] + J[1][1] * v[2 * b + 1];
        }
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const final {
        double J[2][2];
        for (std::size_t b = 0; b < x.size() / 2; ++b) {
            block_jacobian(x[2 * b], x[2 * b + 1], J);
            out[2 * b] = J[0][0] * u[2 * b] + J[1][0] * u[2 * b + 1];
            out[2 * b + 1] = J[0][1] * u[2 * b] + J[1][1] * u[2 * b + 1];
        }
    }

    void eval_gauss_newton_apply(std::span<const double> x, std::span<const double> s,
                                 std::span<double> out) const final {
        double J[2][2];
        for (std::size_t b = 0; b < x.size() / 2; ++b) {
            block_jacobian(x[2 * b], x[2 * b + 1], J);
            const double t0 = J[0][0] * s[2 * b] + J[0][1] * s[2 * b + 1];
            const double t1 = J[1][0] * s[2 * b] + J[1][1] * s[2 * b + 1];
            out[2 * b] = J[0][0] * t0 + J[1][0] * t1;
            out[2 * b + 1] = J[0][1] * t0 + J[1][1] * t1;
        }
    }

protected:
    virtual void block_residual(double p, double q, double* f) const = 0;
    virtual void block_jacobian(double p, double q, double J[2][2]) const = 0;
};

// P14 / P30.
class FreudensteinRoth final : public Block2Problem {
public:
    FreudensteinRoth(std::string name, int n, Vec x0)
        : Block2Problem(std::move(name), n, n, std::move(x0)) {}

protected:
    void block_residual(double p, double q, double* f) const override {
        f[0] = -13.0 + p + ((5.0 - q) * q - 2.0) * q;
        f[1] = -29.0 + p + ((q + 1.0) * q - 14.0) * q;
    }
    void block_jacobian(double p, double q, double J[2][2]) const override {
        (void)p;
        J[0][0] = 1.0;
        J[0][1] = (10.0 - 3.0 * q) * q - 2.0;
        J[1][0] = 1.0;
        J[1][1] = (3.0 * q + 2.0) * q - 14.0;
    }
};

// P19 / P28.
class ExtendedRosenbrock final : public Block2Problem {
public:
    ExtendedRosenbrock(std::string name, int n) : Block2Problem(std::move(name), n, n, start(n)) {}

protected:
    void block_residual(double p, double q, double* f) const override {
        f[0] = 10.0 * (q - p * p);
        f[1] = 1.0 - p;
    }
    void block_jacobian(double p, double q, double J[2][2]) const override {
        (void)q;
        J[0][0] = -20.0 * p;
        J[0][1] = 10.0;
        J[1][0] = -1.0;
        J[1][1] = 0.0;
    }

private:
    static Vec start(int n) {
        Vec x0(static_cast<std::size_t>(n));
        for (int i = 0; i < n; i += 2) {
            x0[static_cast<std::size_t>(i)] = -1.0;
            x0[static_cast<std::size_t>(i) + 1] = 1.0;
        }
        return x0;
    }
};

// P20.
class ExtendedHimmelblau final : public Block2Problem {
public:
    explicit ExtendedHimmelblau(int n)
        : Block2Problem("Extended Himmelblau", n, n, start(n)) {}

protected:
    void block_residual(double p, double q, double* f) const override {
        f[0] = p * p + q - 11.0;
        f[1] = p + q * q - 7.0;
    }
    void block_jacobian(double p, double q, double J[2][2]) const override {
        J[0][0] = 2.0 * p;
        J[0][1] = 1.0;
        J[1][0] = 1.0;
        J[1][1] = 2.0 * q;
    }

private:
    static Vec start(int n) {
        Vec x0(static_cast<std::size_t>(n));
        for (int i = 0; i < n; i += 2) {
            x0[static_cast<std::size_t>(i)] = 1.0;
            x0[static_cast<std::size_t>(i) + 1] = 1.0 / n;
        }
        return x0;
    }
};

// ---------------------------------------------------------------- P15
// Extended Powell singular: blocks of four variables.
class ExtendedPowellSingular final : public NlsProblem {
public:
    explicit ExtendedPowellSingular(int n)
        : NlsProblem("Extended Powell singular", n, n, constant_start(n, 1.5e-4)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        for (std::size_t b = 0; b < x.size() / 4; ++b) {
            const double a = x[4 * b], bb = x[4 * b + 1], c = x[4 * b + 2], d = x[4 * b + 3];
            f[4 * b] = a + 10.0 * bb;
            f[4 * b + 1] = kSqrt5 * (c - d);
            f[4 * b + 2] = (bb - 2.0 * c) * (bb - 2.0 * c);
            f[4 * b + 3] = kSqrt10 * (a - d) * (a - d);
        }
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        for (std::size_t b = 0; b < x.size() / 4; ++b) {
            const double bb = x[4 * b + 1], c = x[4 * b + 2];
            const double a = x[4 * b], d = x[4 * b + 3];
            const double va = v[4 * b], vb = v[4 * b + 1], vc = v[4 * b + 2], vd = v[4 * b + 3];
            out[4 * b] = va + 10.0 * vb;
            out[4 * b + 1] = kSqrt5 * (vc - vd);
            out[4 * b + 2] = 2.0 * (bb - 2.0 * c) * (vb - 2.0 * vc);
            out[4 * b + 3] = 2.0 * kSqrt10 * (a - d) * (va - vd);
        }
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        for (std::size_t b = 0; b < x.size() / 4; ++b) {
            const double bb = x[4 * b + 1], c = x[4 * b + 2];
            const double a = x[4 * b], d = x[4 * b + 3];
            const double u0 = u[4 * b], u1 = u[4 * b + 1], u2 = u[4 * b + 2], u3 = u[4 * b + 3];
            const double w2 = 2.0 * (bb - 2.0 * c);
            const double w3 = 2.0 * kSqrt10 * (a - d);
            out[4 * b] = u0 + w3 * u3;
            out[4 * b + 1] = 10.0 * u0 + w2 * u2;
            out[4 * b + 2] = kSqrt5 * u1 - 2.0 * w2 * u2;
            out[4 * b + 3] = -kSqrt5 * u1 - w3 * u3;
        }
    }

private:
    static constexpr double kSqrt5 = 2.23606797749978969;
    static constexpr double kSqrt10 = 3.16227766016837933;
};

// ---------------------------------------------------------------- P17
// Broyden tridiagonal.
class BroydenTridiagonal final : public NlsProblem {
public:
    explicit BroydenTridiagonal(int n)
        : NlsProblem("Broyden tridiagonal", n, n, constant_start(n, -1.0)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        const std::size_t n = x.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double xm = i > 0 ? x[i - 1] : 0.0;
            const double xp = i + 1 < n ? x[i + 1] : 0.0;
            f[i] = (3.0 - 2.0 * x[i]) * x[i] - xm - 2.0 * xp + 1.0;
        }
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        const std::size_t n = x.size();
        for (std::size_t i = 0; i < n; ++i) {
            double r = (3.0 - 4.0 * x[i]) * v[i];
            if (i > 0) r -= v[i - 1];
            if (i + 1 < n) r -= 2.0 * v[i + 1];
            out[i] = r;
        }
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        const std::size_t n = x.size();
        for (std::size_t j = 0; j < n; ++j) {
            double r = (3.0 - 4.0 * x[j]) * u[j];
            if (j + 1 < n) r -= u[j + 1];
            if (j > 0) r -= 2.0 * u[j - 1];
            out[j] = r;
        }
    }
};

// ---------------------------------------------------------------- P23
class Bard final : public NlsProblem {
public:
    Bard() : NlsProblem("Bard", 3, 15, constant_start(3, -1000.0)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        for (int i = 0; i < 15; ++i) {
            const double den = kV[i] * x[1] + kW[i] * x[2];
            f[i] = kY[i] - (x[0] + kU[i] / den);
        }
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        for (int i = 0; i < 15; ++i) {
            const double den = kV[i] * x[1] + kW[i] * x[2];
            const double d2 = den * den;
            out[i] = -v[0] + kU[i] * (kV[i] * v[1] + kW[i] * v[2]) / d2;
        }
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = out[1] = out[2] = 0.0;
        for (int i = 0; i < 15; ++i) {
            const double den = kV[i] * x[1] + kW[i] * x[2];
            const double d2 = den * den;
            out[0] -= u[i];
            out[1] += kU[i] * kV[i] / d2 * u[i];
            out[2] += kU[i] * kW[i] / d2 * u[i];
        }
    }

private:
    static constexpr std::array<double, 15> kY = {0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39,
                                                  0.37, 0.58, 0.73, 0.96, 1.34, 2.10, 4.39};
    static constexpr std::array<double, 15> kU = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    static constexpr std::array<double, 15> kV = {15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
    static constexpr std::array<double, 15> kW = {1, 2, 3, 4, 5, 6, 7, 7, 7, 6, 5, 4, 3, 2, 1};
};

// ---------------------------------------------------------------- P24
class BrownBadlyScaled final : public NlsProblem {
public:
    BrownBadlyScaled() : NlsProblem("Brown badly scaled", 2, 3, constant_start(2, 1.0)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        f[0] = x[0] - 1e6;
        f[1] = x[1] - 2e-6;
        f[2] = x[0] * x[1] - 2.0;
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        out[0] = v[0];
        out[1] = v[1];
        out[2] = x[1] * v[0] + x[0] * v[1];
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = u[0] + x[1] * u[2];
        out[1] = u[1] + x[0] * u[2];
    }
};

// ---------------------------------------------------------------- P25
class JennrichSampson final : public NlsProblem {
public:
    JennrichSampson() : NlsProblem("Jennrich-Sampson", 2, 10, constant_start(2, 0.2)) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        for (int i = 1; i <= 10; ++i)
            f[i - 1] = 2.0 + 2.0 * i - (std::exp(i * x[0]) + std::exp(i * x[1]));
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        for (int i = 1; i <= 10; ++i)
            out[i - 1] = -i * (std::exp(i * x[0]) * v[0] + std::exp(i * x[1]) * v[1]);
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = out[1] = 0.0;
        for (int i = 1; i <= 10; ++i) {
            out[0] -= i * std::exp(i * x[0]) * u[i - 1];
            out[1] -= i * std::exp(i * x[1]) * u[i - 1];
        }
    }
};

// ---------------------------------------------------------------- P26
class Box3d final : public NlsProblem {
public:
    Box3d() : NlsProblem("Box 3D", 3, 10, Vec{0.0, 10.0, 20.0}) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        for (int i = 1; i <= 10; ++i) {
            const double t = 0.1 * i;
            f[i - 1] = std::exp(-t * x[0]) - std::exp(-t * x[1]) -
                       x[2] * (std::exp(-t) - std::exp(-10.0 * t));
        }
    }

    void eval_jacobian_apply(std::span<const double> x, std::span<const double> v,
                             std::span<double> out) const override {
        for (int i = 1; i <= 10; ++i) {
            const double t = 0.1 * i;
            out[i - 1] = -t * std::exp(-t * x[0]) * v[0] + t * std::exp(-t * x[1]) * v[1] -
                         (std::exp(-t) - std::exp(-10.0 * t)) * v[2];
        }
    }

    void eval_jacobian_transpose_apply(std::span<const double> x, std::span<const double> u,
                                       std::span<double> out) const override {
        out[0] = out[1] = out[2] = 0.0;
        for (int i = 1; i <= 10; ++i) {
            const double t = 0.1 * i;
            out[0] -= t * std::exp(-t * x[0]) * u[i - 1];
            out[1] += t * std::exp(-t * x[1]) * u[i - 1];
            out[2] -= (std::exp(-t) - std::exp(-10.0 * t)) * u[i - 1];
        }
    }
};

std::vector<ProblemSpec> build_catalog() {
    auto large = [](std::string id, std::string name, bool impl, int block, std::string start,
                    std::string dims) {
        ProblemSpec s;
        s.id = std::move(id);
        s.name = std::move(name);
        s.scale = ScaleClass::large;
        s.implemented = impl;
        s.block = block;
        s.start_desc = std::move(start);
        s.dims_desc = std::move(dims);
        return s;
    };
    auto small = [](std::string id, std::string name, bool impl, int n, int m, std::string start) {
        ProblemSpec s;
        s.id = std::move(id);
        s.name = std::move(name);
        s.scale = ScaleClass::small;
        s.implemented = impl;
        s.fixed_n = n;
        s.fixed_m = m;
        s.start_desc = std::move(start);
        s.dims_desc = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
        return s;
    };

    std::vector<ProblemSpec> v;
    v.push_back(large("P1", "Penalty I", true, 1, "(1/3, ..., 1/3)", "m = n"));
    v.push_back(large("P2", "Trigonometric", true, 1, "(1/n, ..., 1/n)", "m = n"));
    v.push_back(large("P3", "Discrete boundary value", true, 1,
                      "(t1(t1-1), ..., tn(tn-1)), ti = i/(n+1)", "m = n"));
    v.push_back(large("P4", "Linear full rank", true, 1, "(1, ..., 1)", "m = n+1"));
    v.push_back(large("P5", "Problem 202", false, 1, "(2, ..., 2)", "m = n"));
    v.push_back(large("P6", "Problem 206", false, 1, "(1/n, ..., 1/n)", "m = n"));
    v.push_back(large("P7", "Problem 212", false, 1, "(0.5, ..., 0.5)", "m = n"));
    v.push_back(large("P8", "Strictly convex I", true, 1, "(1/n, 2/n, ..., 1)", "m = n"));
    v.push_back(large("P9", "Strictly convex II", true, 1, "(1, ..., 1)", "m = n"));
    v.push_back(large("P10", "Brown almost linear", true, 1, "(0.5, ..., 0.5)", "m = n"));
    v.push_back(large("P11", "Exponential I", false, 1, "(n/(n-1), ..., n/(n-1))", "m = n"));
    v.push_back(large("P12", "Singular", false, 1, "(1, ..., 1)", "m = n"));
    v.push_back(large("P13", "Logarithmic", false, 1, "(1, ..., 1)", "m = n"));
    v.push_back(large("P14", "Extended Freudenstein-Roth", true, 2, "(6, 3, 6, 3, ...)", "m = n"));
    v.push_back(large("P15", "Extended Powell singular", true, 4, "(1.5e-4, ..., 1.5e-4)", "m = n"));
    v.push_back(large("P16", "Function 21", false, 1, "(-1, ..., -1)", "m = n"));
    v.push_back(large("P17", "Broyden tridiagonal", true, 1, "(-1, ..., -1)", "m = n"));
    v.push_back(large("P18", "Generalized Broyden tridiagonal", false, 1, "(-1, ..., -1)", "m = n"));
    v.push_back(large("P19", "Extended Rosenbrock", true, 2, "(-1, 1, -1, 1, ...)", "m = n"));
    v.push_back(large("P20", "Extended Himmelblau", true, 2, "(1, 1/n, 1, 1/n, ...)", "m = n"));
    v.push_back(large("P21", "Function 27", false, 1, "(100, 1/n^2, ..., 1/n^2)", "m = n"));
    v.push_back(large("P22", "Trigonometric logarithmic", false, 1, "(1, ..., 1)", "m = n"));
    v.push_back(small("P23", "Bard", true, 3, 15, "(-1000, -1000, -1000)"));
    v.push_back(small("P24", "Brown badly scaled", true, 2, 3, "(1, 1)"));
    v.push_back(small("P25", "Jennrich-Sampson", true, 2, 10, "(0.2, 0.2)"));
    v.push_back(small("P26", "Box 3D", true, 3, 10, "(0, 10, 20)"));
    v.push_back(small("P27", "Rank deficient Jacobian", false, 2, 3, "(-1, 1)"));
    v.push_back(small("P28", "Rosenbrock", true, 2, 2, "(-1, 1)"));
    v.push_back(small("P29", "Parameterized", false, 2, 3, "(10, 10)"));
    v.push_back(small("P30", "Freudenstein-Roth", true, 2, 2, "(0.5, -2)"));
    return v;
}

}  // namespace

const std::vector<ProblemSpec>& catalog() {
    static const std::vector<ProblemSpec> v = build_catalog();
    return v;
}

const ProblemSpec& find_spec(std::string_view id) {
    for (const ProblemSpec& s : catalog()) {
        if (s.id == id) return s;
    }
    throw UnknownProblem("unknown problem id: " + std::string(id));
}

std::vector<std::string> implemented_ids() {
    std::vector<std::string> ids;
    for (const ProblemSpec& s : catalog())
        if (s.implemented) ids.push_back(s.id);
    return ids;
}

std::unique_ptr<NlsProblem> instantiate(std::string_view id, int n) {
    const ProblemSpec& spec = find_spec(id);
    if (!spec.implemented)
        throw UnknownProblem(spec.id + " (" + spec.name + ") is catalogued but not implemented");

    if (spec.scale == ScaleClass::small) {
        if (n != spec.fixed_n)
            throw DimensionMismatch(spec.id + " requires n = " + std::to_string(spec.fixed_n));
    } else {
        if (n < 2) throw DimensionMismatch(spec.id + " requires n >= 2");
        if (n % spec.block != 0)
            throw DimensionMismatch(spec.id + " requires n divisible by " +
                                    std::to_string(spec.block));
    }

    if (id == "P1") return std::make_unique<PenaltyI>(n);
    if (id == "P2") return std::make_unique<Trigonometric>(n);
    if (id == "P3") return std::make_unique<DiscreteBoundaryValue>(n);
    if (id == "P4") return std::make_unique<LinearFullRank>(n);
    if (id == "P8") return std::make_unique<StrictlyConvex>(n, false);
    if (id == "P9") return std::make_unique<StrictlyConvex>(n, true);
    if (id == "P10") return std::make_unique<BrownAlmostLinear>(n);
    if (id == "P14")
        return std::make_unique<FreudensteinRoth>("Extended Freudenstein-Roth", n, [n] {
            Vec x0(static_cast<std::size_t>(n));
            for (int i = 0; i < n; i += 2) {
                x0[static_cast<std::size_t>(i)] = 6.0;
                x0[static_cast<std::size_t>(i) + 1] = 3.0;
            }
            return x0;
        }());
    if (id == "P15") return std::make_unique<ExtendedPowellSingular>(n);
    if (id == "P17") return std::make_unique<BroydenTridiagonal>(n);
    if (id == "P19") return std::make_unique<ExtendedRosenbrock>("Extended Rosenbrock", n);
    if (id == "P20") return std::make_unique<ExtendedHimmelblau>(n);
    if (id == "P23") return std::make_unique<Bard>();
    if (id == "P24") return std::make_unique<BrownBadlyScaled>();
    if (id == "P25") return std::make_unique<JennrichSampson>();
    if (id == "P26") return std::make_unique<Box3d>();
    if (id == "P28") return std::make_unique<ExtendedRosenbrock>("Rosenbrock", 2);
    if (id == "P30") return std::make_unique<FreudensteinRoth>("Freudenstein-Roth", 2, Vec{0.5, -2.0});
    throw UnknownProblem("unknown problem id: " + std::string(id));
}

}  // namespace asdh
