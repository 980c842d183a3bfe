// Benchmark driver: sweeps the problem suite over dimensions and solver
// configurations, writes result tables, and renders Dolan-More
// performance profiles.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asdh/bench.hpp"
#include "asdh/problems.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (begin <= s.size()) {
        const std::size_t pos = s.find(',', begin);
        if (pos == std::string::npos) {
            if (begin < s.size()) out.push_back(s.substr(begin));
            break;
        }
        if (pos > begin) out.push_back(s.substr(begin, pos - begin));
        begin = pos + 1;
    }
    return out;
}

asdh::NamedConfig resolve_config(const std::string& spec) {
    if (spec == "asdh" || spec == "asdh-monotone") return asdh::named_config(spec);
    return asdh::load_config_file(spec);
}

int cmd_run(const std::string& problems, const std::string& dims,
            const std::vector<std::string>& configs, const std::string& out, int repeats) {
    asdh::BenchPlan plan;
    if (!problems.empty()) plan.problem_ids = split_list(problems);
    if (!dims.empty()) {
        plan.large_dims.clear();
        for (const std::string& d : split_list(dims)) plan.large_dims.push_back(std::stoi(d));
    }
    for (const std::string& c : configs) plan.configs.push_back(resolve_config(c));
    plan.repeats = repeats;

    const std::vector<asdh::RunRecord> records = asdh::run_benchmark(plan);
    asdh::emit_csv(records, out);

    long failures = 0;
    for (const auto& r : records)
        if (r.status != asdh::RunStatus::converged) ++failures;
    std::printf("%zu runs -> %s (%ld not converged)\n", records.size(), out.c_str(), failures);
    return 0;
}

int cmd_profile(const std::string& in, const std::string& metric, const std::string& out,
                std::string format) {
    const auto records = asdh::read_results_csv(in);
    const auto curves = asdh::performance_profile(records, asdh::parse_metric(metric));
    if (format.empty()) {
        const std::string ext = std::filesystem::path(out).extension().string();
        if (ext == ".csv") format = "csv";
        else if (ext == ".svg") format = "svg";
        else throw std::runtime_error("cannot infer format from '" + out + "'; use --format");
    }
    if (format == "csv") asdh::emit_profile_csv(curves, out);
    else if (format == "svg") asdh::emit_profile_svg(curves, out);
    else throw std::runtime_error("unknown format: " + format);
    std::printf("%s profile (%zu solvers) -> %s\n", metric.c_str(), curves.size(), out.c_str());
    return 0;
}

int cmd_list() {
    std::printf("%-5s %-32s %-6s %-22s %s\n", "id", "name", "scale", "dims", "status");
    for (const auto& spec : asdh::catalog()) {
        std::printf("%-5s %-32s %-6s %-22s %s\n", spec.id.c_str(), spec.name.c_str(),
                    spec.scale == asdh::ScaleClass::large ? "large" : "small",
                    spec.dims_desc.c_str(),
                    spec.implemented ? "required" : "optional-unimplemented");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonlinear least-squares benchmark harness"};
    app.require_subcommand(1);

    std::string problems, dims, out, in, metric = "niter", format;
    std::vector<std::string> configs;
    int repeats = 1;

    auto* run = app.add_subcommand("run", "run the problem x dimension x config sweep");
    run->add_option("--problems", problems, "comma-separated problem ids (default: all implemented)");
    run->add_option("--dims", dims, "comma-separated large-scale dimensions (default 1000,5000,10000)");
    run->add_option("--config", configs, "named config (asdh, asdh-monotone) or key=value file; repeatable");
    run->add_option("--out", out, "output CSV path")->required();
    run->add_option("--repeats", repeats, "timing repetitions to average")->check(CLI::PositiveNumber);

    auto* profile = app.add_subcommand("profile", "compute a Dolan-More performance profile");
    profile->add_option("--in", in, "results CSV from 'run'")->required();
    profile->add_option("--metric", metric, "niter | nfeval | nmvp | time");
    profile->add_option("--out", out, "output path (.csv or .svg)")->required();
    profile->add_option("--format", format, "override format inferred from extension");

    app.add_subcommand("list-problems", "print the problem catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(problems, dims, configs, out, repeats);
        if (profile->parsed()) return cmd_profile(in, metric, out, format);
        return cmd_list();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
