#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asdh/solver.hpp"

namespace asdh {

/// A solver configuration with the name it is reported under.
struct NamedConfig {
    std::string name;
    SolverConfig config;
};

/// Built-in configurations: "asdh" (defaults) and "asdh-monotone"
/// (identical but eta pinned to 0, i.e. plain Armijo). Throws
/// std::invalid_argument for other names.
NamedConfig named_config(std::string_view name);

/// Reads a flat key=value file mirroring the SolverConfig fields
/// (gamma, theta, rho, l, u, eta_min, eta_max, eps, kmax, max_halvings;
/// '#' starts a comment). The reported name is the file stem.
NamedConfig load_config_file(const std::filesystem::path& path);

struct BenchPlan {
    std::vector<std::string> problem_ids;    // default: all implemented
    std::vector<int> large_dims = {1000, 5000, 10000};
    std::vector<NamedConfig> configs;        // default: asdh, asdh-monotone
    int repeats = 1;                         // timing repetitions, averaged
};

/// One record per (problem, dimension, config). Individual run failures
/// are recorded in the status field and never abort the sweep. Output is
/// sorted by problem id, then n, then solver name.
std::vector<RunRecord> run_benchmark(const BenchPlan& plan);

enum class Metric { niter, nfeval, nmvp, time };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view s);

/// Some solver is missing a run for some (problem, dimension).
class IncompleteMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cumulative distribution of per-problem cost ratios, one curve per
/// solver. points are (tau, rho(tau)) at every breakpoint ratio, shared
/// across solvers; rho is nondecreasing with values in [0, 1]. Runs that
/// did not converge get ratio +inf and are never counted as best.
struct ProfileCurve {
    std::string solver;
    Metric metric = Metric::niter;
    std::vector<std::pair<double, double>> points;
};

std::vector<ProfileCurve> performance_profile(const std::vector<RunRecord>& records, Metric metric);

/// CSV with header problem,n,m,solver,niter,nfeval,nmvp,time_s,fvalue,
/// gnorm,status,theta,gamma,rho,l,u,eps,kmax. Numbers use the shortest
/// round-trip decimal form; rows of runs that did not converge leave the
/// result fields empty, mirroring the failure convention of the tables.
void emit_csv(const std::vector<RunRecord>& records, const std::filesystem::path& path);

std::vector<RunRecord> read_results_csv(const std::filesystem::path& path);

/// metric,solver,tau,rho rows at every breakpoint.
void emit_profile_csv(const std::vector<ProfileCurve>& curves, const std::filesystem::path& path);

std::vector<ProfileCurve> read_profile_csv(const std::filesystem::path& path);

/// Step-function plot, one polyline per solver, log2 tau axis, legend,
/// title naming the metric.
void emit_profile_svg(const std::vector<ProfileCurve>& curves, const std::filesystem::path& path);

}  // namespace asdh
