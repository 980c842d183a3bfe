// Acceptance suite: end-to-end checks of the solver against its
// published reference behavior, the per-iteration guarantees, and the
// harness invariants. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asdh/bench.hpp"
#include "asdh/diagonal.hpp"
#include "asdh/problems.hpp"
#include "asdh/solver.hpp"

using namespace asdh;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++g_failures;
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Trace {
    std::string id;
    RunRecord record;
    std::vector<IterationInfo> iterations;
};

// Dense random linear least-squares problem, used to exercise the
// direction bounds with tight diagonal clamps.
class RandomQuadratic final : public NlsProblem {
public:
    RandomQuadratic(unsigned seed, int n, int m) : RandomQuadratic(make(seed, n, m), n, m) {}

    void eval_residual(std::span<const double> x, std::span<double> f) const override {
        for (int i = 0; i < m(); ++i) {
            double s = -b_[static_cast<std::size_t>(i)];
            for (int j = 0; j < n(); ++j) s += at(i, j) * x[static_cast<std::size_t>(j)];
            f[static_cast<std::size_t>(i)] = s;
        }
    }
    void eval_jacobian_apply(std::span<const double>, std::span<const double> v,
                             std::span<double> out) const override {
        for (int i = 0; i < m(); ++i) {
            double s = 0.0;
            for (int j = 0; j < n(); ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = s;
        }
    }
    void eval_jacobian_transpose_apply(std::span<const double>, std::span<const double> u,
                                       std::span<double> out) const override {
        for (int j = 0; j < n(); ++j) {
            double s = 0.0;
            for (int i = 0; i < m(); ++i) s += at(i, j) * u[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(j)] = s;
        }
    }

private:
    struct Data {
        Vec a, b, x0;
    };
    static Data make(unsigned seed, int n, int m) {
        std::mt19937 rng(seed);
        std::normal_distribution<double> g(0.0, 1.0);
        Data d;
        d.a.resize(static_cast<std::size_t>(n) * m);
        d.b.resize(static_cast<std::size_t>(m));
        d.x0.resize(static_cast<std::size_t>(n));
        for (double& v : d.a) v = g(rng);
        for (double& v : d.b) v = g(rng);
        for (double& v : d.x0) v = g(rng);
        return d;
    }
    RandomQuadratic(Data d, int n, int m)
        : NlsProblem("random-quadratic", n, m, std::move(d.x0)),
          a_(std::move(d.a)),
          b_(std::move(d.b)) {}

    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n() + j]; }
    Vec a_;
    Vec b_;
};

// Literal transliteration of the four safeguard sign cases, kept
// independent of the library implementation.
SecantPair safeguard_reference(SecantPair p, const Vec& g, double gamma, double rho) {
    for (std::size_t i = 0; i < p.s.size(); ++i) {
        const double jk = g[i];             // J_new^T F_new
        const double jprev = g[i] - p.y_bar[i];  // J_prev^T F_new
        if (p.s[i] > 0.0) {
            if (p.y_hat[i] <= 0.0) p.y_hat[i] = gamma * std::max(std::abs(p.y_hat[i]), rho);
            if (p.y_bar[i] <= 0.0)
                p.y_bar[i] =
                    gamma * std::max(std::max(std::abs(jk), std::abs(jprev)), rho);
        } else if (p.s[i] < 0.0) {
            if (p.y_hat[i] >= 0.0) p.y_hat[i] = -gamma * std::max(p.y_hat[i], rho);
            if (p.y_bar[i] >= 0.0)
                p.y_bar[i] =
                    -gamma * std::max(std::max(std::abs(jk), std::abs(jprev)), rho);
        }
    }
    return p;
}

// ------------------------------------------------------------------
// Criteria
// ------------------------------------------------------------------

void criterion_p19_exact() {
    const auto t0 = std::chrono::steady_clock::now();
    auto p = instantiate("P19", 1000);
    const RunRecord rec = solve(*p, SolverConfig{});
    const double elapsed = seconds_since(t0);

    std::ostringstream detail;
    detail << "niter=" << rec.niter << " nfeval=" << rec.nfeval << " nmvp=" << rec.nmvp
           << " f=" << rec.fvalue << " (" << elapsed << "s)";
    const bool ok = rec.status == RunStatus::converged && rec.niter == 1 && rec.nfeval == 2 &&
                    rec.nmvp == 4 && rec.fvalue <= 1e-12 && elapsed < 1.0;
    report("P19 n=1000 exact table row (1/2/4, f<=1e-12, <1s)", ok, detail.str());
}

void criterion_p8_band() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;
    for (int n : {1000, 5000, 10000}) {
        auto p = instantiate("P8", n);
        const RunRecord rec = solve(*p, SolverConfig{});
        detail << "n=" << n << ": f=" << rec.fvalue << " niter=" << rec.niter << "  ";
        ok = ok && rec.status == RunStatus::converged &&
             std::abs(rec.fvalue - 0.5 * n) <= 1e-6 * n && rec.niter >= 3 && rec.niter <= 10;
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 5.0;
    detail << "(" << elapsed << "s)";
    report("P8 optimum band f=n/2 (niter in [3,10], <5s)", ok, detail.str());
}

void criterion_p4_band() {
    const std::map<int, double> expected = {{1000, 0.502}, {5000, 0.5004}, {10000, 0.5002}};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& [n, f_star] : expected) {
        auto p = instantiate("P4", n);
        const RunRecord rec = solve(*p, SolverConfig{});
        detail << "n=" << n << ": f=" << rec.fvalue << " niter=" << rec.niter << "  ";
        ok = ok && rec.status == RunStatus::converged && std::abs(rec.fvalue - f_star) <= 1e-3 &&
             rec.niter <= 5;
    }
    report("P4 optimum band 0.502/0.5004/0.5002 (niter<=5)", ok, detail.str());
}

void criterion_small_scale() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;

    const std::pair<const char*, double> banded[] = {
        {"P23", 8.7448}, {"P25", 62.1811}, {"P30", 24.4921}};
    for (const auto& [id, f_star] : banded) {
        const auto& spec = find_spec(id);
        auto p = instantiate(id, spec.fixed_n);
        const RunRecord rec = solve(*p, SolverConfig{});
        detail << id << ": f=" << rec.fvalue << "  ";
        ok = ok && rec.status == RunStatus::converged && std::abs(rec.fvalue - f_star) <= 1e-3;
    }

    auto p28 = instantiate("P28", 2);
    const RunRecord rec28 = solve(*p28, SolverConfig{});
    detail << "P28: f=" << rec28.fvalue << " niter=" << rec28.niter << "  ";
    ok = ok && rec28.status == RunStatus::converged && rec28.fvalue <= 1e-12 && rec28.niter <= 3;

    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 1.0;
    detail << "(" << elapsed << "s)";
    report("small-scale optima P23/P25/P30/P28 (<1s)", ok, detail.str());
}

std::vector<Trace> run_suite_with_traces() {
    std::vector<Trace> traces;
    for (const std::string& id : implemented_ids()) {
        const ProblemSpec& spec = find_spec(id);
        const int n = spec.scale == ScaleClass::large ? 1000 : spec.fixed_n;
        auto p = instantiate(id, n);
        Trace t;
        t.id = id;
        SolverConfig cfg;
        cfg.observer = [&t](const IterationInfo& info) { t.iterations.push_back(info); };
        t.record = solve(*p, cfg);
        traces.push_back(std::move(t));
    }
    return traces;
}

void criterion_robustness(const std::vector<Trace>& traces, double elapsed) {
    bool ok = elapsed < 60.0;
    std::ostringstream detail;
    for (const Trace& t : traces) {
        if (t.record.status != RunStatus::converged) {
            ok = false;
            detail << t.id << "=" << to_string(t.record.status) << " ";
        }
    }
    detail << traces.size() << "/18 converged (" << elapsed << "s)";
    report("robustness: every implemented problem converges (<60s)", ok, detail.str());
}

void criterion_direction_bounds(const std::vector<Trace>& traces) {
    bool ok = true;
    std::ostringstream detail;

    const SolverConfig defaults;
    for (const Trace& t : traces) {
        for (const IterationInfo& it : t.iterations) {
            if (!(it.gtd <= -(1.0 / defaults.u) * it.gnorm * it.gnorm + 1e-12) ||
                !(it.dnorm <= (1.0 / defaults.l) * it.gnorm * (1.0 + 1e-12))) {
                ok = false;
                detail << t.id << "@k=" << it.k << " ";
            }
        }
    }

    // Tightened clamps on randomized quadratics.
    SolverConfig tight;
    tight.l = 1e-4;
    tight.u = 1e4;
    int seeds_checked = 0;
    for (unsigned seed = 0; seed < 100; ++seed) {
        RandomQuadratic q(seed, 6, 8);
        bool seed_ok = true;
        SolverConfig cfg = tight;
        cfg.observer = [&](const IterationInfo& it) {
            if (!(it.gtd <= -(1.0 / tight.u) * it.gnorm * it.gnorm + 1e-12) ||
                !(it.dnorm <= (1.0 / tight.l) * it.gnorm * (1.0 + 1e-12)))
                seed_ok = false;
        };
        solve(q, cfg);
        if (seed_ok) ++seeds_checked;
    }
    ok = ok && seeds_checked == 100;
    detail << "suite iterations + " << seeds_checked << "/100 tightened quadratic seeds";
    report("direction bounds g'd <= -||g||^2/u, ||d|| <= ||g||/l", ok, detail.str());
}

void criterion_reference_value(const std::vector<Trace>& traces) {
    bool ok = true;
    std::ostringstream detail;
    for (const Trace& t : traces) {
        if (t.iterations.empty()) continue;
        const double f0 = t.iterations.front().f;
        double max_f = f0;
        for (const IterationInfo& it : t.iterations) {
            const double slack = 1e-12 * (1.0 + std::abs(it.P));
            const bool sandwich = it.f <= it.P + slack && it.P <= max_f + slack;
            const bool monotone_ref = it.P_next <= it.P + slack;
            const bool level_set = it.f <= f0 + slack && it.f_next <= f0 + slack;
            if (!(sandwich && monotone_ref && level_set)) {
                ok = false;
                detail << t.id << "@k=" << it.k << " ";
            }
            max_f = std::max(max_f, it.f_next);
        }
    }
    detail << "checked " << traces.size() << " runs";
    report("reference value: P nonincreasing, f<=P<=max f, f<=f(x0)", ok, detail.str());
}

void criterion_safeguard_property() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::uniform_int_distribution<int> zero(0, 4);
    std::uniform_real_distribution<double> ubound(0.0, 6.0);

    bool ok = true;
    long positive_checks = 0;
    for (int rep = 0; rep < 10000; ++rep) {
        const std::size_t n = 4;
        SecantPair pair;
        pair.y_hat.resize(n);
        pair.y_bar.resize(n);
        pair.s.resize(n);
        Vec g(n);
        for (std::size_t i = 0; i < n; ++i) {
            pair.y_hat[i] = u(rng);
            pair.y_bar[i] = u(rng);
            pair.s[i] = zero(rng) == 0 ? 0.0 : u(rng);
            g[i] = u(rng);
        }
        const SafeguardParams params{0.2, 1e-4};
        const SecantPair guarded = safeguard_secant(pair, g, params);
        const SecantPair reference = safeguard_reference(pair, g, params.gamma, params.rho);
        if (guarded.y_hat != reference.y_hat || guarded.y_bar != reference.y_bar) ok = false;

        for (std::size_t i = 0; i < n; ++i) {
            if (guarded.s[i] == 0.0) continue;
            ++positive_checks;
            if (!(guarded.y_hat[i] / guarded.s[i] > 0.0 &&
                  guarded.y_bar[i] / guarded.s[i] > 0.0))
                ok = false;
        }

        const double lo = std::pow(10.0, -ubound(rng));
        const double hi = std::pow(10.0, ubound(rng));
        const DiagHessian H = update_diagonal(guarded, lo, hi);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(H.h[i] >= lo && H.h[i] <= hi)) ok = false;
            if (guarded.s[i] == 0.0 && H.h[i] != 1.0) ok = false;
        }
    }
    std::ostringstream detail;
    detail << "10000 random tuples, " << positive_checks << " nonzero components";
    report("safeguard: sign correction matches the case-by-case oracle, diagonal stays in [l,u]",
           ok, detail.str());
}

int id_at(const std::string& id) { return std::stoi(id.substr(1)); }

void criterion_operator_oracle() {
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id : implemented_ids()) {
        const ProblemSpec& spec = find_spec(id);
        const int n = spec.scale == ScaleClass::large ? 1000 : spec.fixed_n;
        auto p = instantiate(id, n);
        std::mt19937 rng(99u + static_cast<unsigned>(id_at(id)));
        std::uniform_real_distribution<double> u(-1.0, 1.0);

        for (int point = 0; point < 11; ++point) {
            Vec x = p->start_point();
            if (point > 0) {
                const double scale = 0.1 * (1.0 + inf_norm(x));
                for (double& xi : x) xi += scale * u(rng);
            }
            Vec v(static_cast<std::size_t>(p->n())), w(static_cast<std::size_t>(p->m()));
            for (double& t : v) t = u(rng);
            for (double& t : w) t = u(rng);

            EvalCounters c;
            const Vec jv = jacobian_apply(*p, x, v, c);
            const double a = dot(jv, w);
            const double b = dot(v, jacobian_transpose_apply(*p, x, w, c));
            if (!(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)))) {
                ok = false;
                detail << id << ":adjoint ";
            }

            // Brown badly scaled: quadratic residuals across a 1e6 range,
            // so a larger (still truncation-free) step avoids the
            // rounding floor of central differences.
            const double h = (id == "P24" ? 1e-3 : std::sqrt(std::numeric_limits<double>::epsilon())) *
                             (1.0 + inf_norm(x));
            const Vec fd = fd_jacobian_apply(*p, x, v, h, c);
            double diff = 0.0;
            for (std::size_t i = 0; i < fd.size(); ++i)
                diff += (fd[i] - jv[i]) * (fd[i] - jv[i]);
            if (!(std::sqrt(diff) <= 1e-4 * (1.0 + norm2(jv)))) {
                ok = false;
                detail << id << ":fd ";
            }
        }
    }
    detail << "18 problems x 11 points";
    report("operator oracle: adjoint identity and finite-difference agreement", ok, detail.str());
}

void criterion_counting() {
    // P7 is an optional catalog entry; P8 shows the same reported
    // product pattern and stands in for it.
    bool ok = true;
    std::ostringstream detail;
    for (const char* id : {"P1", "P8", "P19"}) {
        auto p = instantiate(id, 1000);
        const RunRecord rec = solve(*p, SolverConfig{});
        detail << id << ": nmvp=" << rec.nmvp << " niter=" << rec.niter << "  ";
        ok = ok && rec.status == RunStatus::converged && rec.nmvp == 3 * rec.niter + 1;
    }
    report("counting convention: nmvp = 3 niter + 1", ok, detail.str());
}

void criterion_profile_oracle() {
    bool ok = true;
    std::ostringstream detail;

    // Hand-computed two-solver, two-problem example.
    auto rec = [](const char* prob, const char* solver, long niter) {
        RunRecord r;
        r.problem = prob;
        r.n = 1;
        r.solver = solver;
        r.niter = niter;
        r.status = RunStatus::converged;
        return r;
    };
    const std::vector<RunRecord> hand = {rec("p1", "A", 2), rec("p2", "A", 4), rec("p1", "B", 4),
                                         rec("p2", "B", 2)};
    const auto curves = performance_profile(hand, Metric::niter);
    auto rho_at = [](const ProfileCurve& c, double tau) {
        double rho = 0.0;
        for (const auto& [t, r] : c.points)
            if (t <= tau + 1e-15) rho = r;
        return rho;
    };
    for (const auto& c : curves) {
        if (rho_at(c, 1.0) != 0.5 || rho_at(c, 2.0) != 1.0) {
            ok = false;
            detail << "hand-example mismatch for " << c.solver << " ";
        }
    }

    // Invariants on the full sweep output.
    BenchPlan plan;  // defaults: all implemented problems, 3 dims, both configs
    const auto records = run_benchmark(plan);
    std::map<std::string, std::pair<int, int>> converged_count;  // solver -> (ok, total)
    for (const auto& r : records) {
        auto& [okc, total] = converged_count[r.solver];
        ++total;
        if (r.status == RunStatus::converged) ++okc;
    }
    for (Metric m : {Metric::niter, Metric::nfeval, Metric::nmvp, Metric::time}) {
        for (const auto& c : performance_profile(records, m)) {
            double prev_rho = 0.0;
            for (const auto& [tau, rho] : c.points) {
                if (!(tau >= 1.0 && rho >= prev_rho - 1e-15 && rho >= 0.0 && rho <= 1.0)) {
                    ok = false;
                    detail << "invariant breach (" << to_string(m) << "," << c.solver << ") ";
                }
                prev_rho = rho;
            }
            // the curve tops out at this solver's converged fraction
            const auto& [okc, total] = converged_count[c.solver];
            const double expect = static_cast<double>(okc) / static_cast<double>(total);
            if (std::abs(c.points.back().second - expect) > 1e-12) {
                ok = false;
                detail << "plateau mismatch (" << to_string(m) << "," << c.solver << ") ";
            }
        }
    }
    detail << records.size() << " sweep records over 4 metrics";
    report("Dolan-More oracle: hand example exact, sweep profiles well-formed", ok, detail.str());
}

}  // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");

    criterion_p19_exact();
    criterion_p8_band();
    criterion_p4_band();
    criterion_small_scale();

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Trace> traces = run_suite_with_traces();
    const double suite_elapsed = seconds_since(t0);

    criterion_robustness(traces, suite_elapsed);
    criterion_direction_bounds(traces);
    criterion_reference_value(traces);
    criterion_safeguard_property();
    criterion_operator_oracle();
    criterion_counting();
    criterion_profile_oracle();

    std::printf("----------------\n%s (%d failure%s)\n", g_failures == 0 ? "ALL PASS" : "FAILED",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
