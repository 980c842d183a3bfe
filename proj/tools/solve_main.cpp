// Single-problem driver. Exits 0 only when the run converged.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "asdh/problems.hpp"
#include "asdh/solver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Solve one catalog problem with the structured diagonal Hessian method"};

    std::string problem_id;
    int n = 0;
    asdh::SolverConfig cfg;

    app.add_option("--problem", problem_id, "problem id, e.g. P19")->required();
    app.add_option("--n", n, "dimension (default: 1000 for large-scale, fixed for small-scale)");
    app.add_option("--eps", cfg.eps, "gradient-norm tolerance");
    app.add_option("--kmax", cfg.k_max, "iteration limit");
    app.add_option("--theta", cfg.theta, "Armijo coefficient");
    app.add_option("--gamma", cfg.gamma, "safeguard shrinking factor");
    app.add_option("--rho", cfg.rho, "safeguard positivity floor");
    app.add_option("--l", cfg.l, "diagonal lower clamp");
    app.add_option("--u", cfg.u, "diagonal upper clamp");

    CLI11_PARSE(app, argc, argv);

    try {
        const asdh::ProblemSpec& spec = asdh::find_spec(problem_id);
        if (n == 0) n = spec.scale == asdh::ScaleClass::small ? spec.fixed_n : 1000;
        const auto problem = asdh::instantiate(problem_id, n);
        const asdh::RunRecord rec = asdh::solve(*problem, cfg);

        std::printf("problem  %s (%s)  n=%d m=%d\n", spec.id.c_str(), rec.problem.c_str(), rec.n,
                    rec.m);
        std::printf("status   %s\n", std::string(asdh::to_string(rec.status)).c_str());
        std::printf("niter    %ld\n", rec.niter);
        std::printf("nfeval   %ld\n", rec.nfeval);
        std::printf("nmvp     %ld\n", rec.nmvp);
        std::printf("time_s   %.6f\n", rec.time_s);
        std::printf("fvalue   %.10g\n", rec.fvalue);
        std::printf("gnorm    %.10g\n", rec.gnorm);
        return rec.status == asdh::RunStatus::converged ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
