#include "asdh/bench.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "asdh/problems.hpp"

namespace asdh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("bad numeric field: '" + std::string(s) + "'");
    return v;
}

long parse_long(std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("bad integer field: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, begin);
        if (pos == std::string::npos) {
            out.push_back(line.substr(begin));
            return out;
        }
        out.push_back(line.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

std::string trim(std::string s) {
    const auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

int id_number(const std::string& id) {
    int v = 0;
    if (id.size() > 1) std::from_chars(id.data() + 1, id.data() + id.size(), v);
    return v;
}

RunStatus parse_status(std::string_view s) {
    if (s == "converged") return RunStatus::converged;
    if (s == "maxiter") return RunStatus::maxiter;
    if (s == "ls-fail") return RunStatus::ls_fail;
    if (s == "eval-fail") return RunStatus::eval_fail;
    throw std::runtime_error("bad status field: '" + std::string(s) + "'");
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

constexpr const char* kResultsHeader =
    "problem,n,m,solver,niter,nfeval,nmvp,time_s,fvalue,gnorm,status,"
    "theta,gamma,rho,l,u,eps,kmax";

}  // namespace

NamedConfig named_config(std::string_view name) {
    if (name == "asdh") return {"asdh", SolverConfig{}};
    if (name == "asdh-monotone") {
        SolverConfig cfg;
        cfg.eta_min = 0.0;
        cfg.eta_max = 0.0;  // forces eta == 0: plain monotone Armijo
        return {"asdh-monotone", cfg};
    }
    throw std::invalid_argument("unknown config name: " + std::string(name));
}

NamedConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    SolverConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "gamma") cfg.gamma = parse_double(value);
        else if (key == "theta") cfg.theta = parse_double(value);
        else if (key == "rho") cfg.rho = parse_double(value);
        else if (key == "l") cfg.l = parse_double(value);
        else if (key == "u") cfg.u = parse_double(value);
        else if (key == "eta_min") cfg.eta_min = parse_double(value);
        else if (key == "eta_max") cfg.eta_max = parse_double(value);
        else if (key == "eps") cfg.eps = parse_double(value);
        else if (key == "kmax") cfg.k_max = static_cast<int>(parse_long(value));
        else if (key == "max_halvings") cfg.max_halvings = static_cast<int>(parse_long(value));
        else
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
    }
    cfg.validate();
    return {path.stem().string(), cfg};
}

std::vector<RunRecord> run_benchmark(const BenchPlan& plan) {
    std::vector<std::string> ids = plan.problem_ids.empty() ? implemented_ids() : plan.problem_ids;
    std::vector<NamedConfig> configs = plan.configs;
    if (configs.empty()) configs = {named_config("asdh"), named_config("asdh-monotone")};
    const int repeats = std::max(1, plan.repeats);

    std::vector<RunRecord> records;
    for (const std::string& id : ids) {
        const ProblemSpec& spec = find_spec(id);
        std::vector<int> dims = spec.scale == ScaleClass::large ? plan.large_dims
                                                                : std::vector<int>{spec.fixed_n};
        for (int n : dims) {
            const auto problem = instantiate(id, n);
            for (const NamedConfig& nc : configs) {
                RunRecord rec = solve(*problem, nc.config, nc.name);
                if (repeats > 1) {
                    double total = rec.time_s;
                    for (int r = 1; r < repeats; ++r) total += solve(*problem, nc.config, nc.name).time_s;
                    rec.time_s = total / repeats;
                }
                rec.problem = id;  // report by catalog id
                records.push_back(std::move(rec));
            }
        }
    }
    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        if (id_number(a.problem) != id_number(b.problem))
            return id_number(a.problem) < id_number(b.problem);
        if (a.n != b.n) return a.n < b.n;
        return a.solver < b.solver;
    });
    return records;
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::niter: return "niter";
        case Metric::nfeval: return "nfeval";
        case Metric::nmvp: return "nmvp";
        case Metric::time: return "time";
    }
    return "unknown";
}

Metric parse_metric(std::string_view s) {
    if (s == "niter") return Metric::niter;
    if (s == "nfeval") return Metric::nfeval;
    if (s == "nmvp") return Metric::nmvp;
    if (s == "time") return Metric::time;
    throw std::invalid_argument("unknown metric: " + std::string(s));
}

std::vector<ProfileCurve> performance_profile(const std::vector<RunRecord>& records, Metric metric) {
    const auto cost_of = [metric](const RunRecord& r) -> double {
        if (r.status != RunStatus::converged) return kInf;
        switch (metric) {
            case Metric::niter: return static_cast<double>(r.niter);
            case Metric::nfeval: return static_cast<double>(r.nfeval);
            case Metric::nmvp: return static_cast<double>(r.nmvp);
            case Metric::time: return std::max(r.time_s, 1e-9);  // clock resolution floor
        }
        return kInf;
    };

    std::set<std::string> solver_set;
    for (const RunRecord& r : records) solver_set.insert(r.solver);
    std::vector<std::string> solvers(solver_set.begin(), solver_set.end());
    if (solvers.size() < 2)
        throw std::invalid_argument("performance profile needs at least two solvers");

    // (problem, n) -> solver -> cost
    std::map<std::pair<std::string, int>, std::map<std::string, double>> by_problem;
    for (const RunRecord& r : records) by_problem[{r.problem, r.n}][r.solver] = cost_of(r);

    for (const auto& [key, costs] : by_problem) {
        for (const std::string& s : solvers) {
            if (!costs.count(s))
                throw IncompleteMatrix("no run for solver '" + s + "' on " + key.first + " n=" +
                                       std::to_string(key.second));
        }
    }

    const std::size_t nproblems = by_problem.size();
    std::map<std::string, std::vector<double>> ratios;
    std::vector<double> breakpoints{1.0};
    for (const auto& [key, costs] : by_problem) {
        double best = kInf;
        for (const auto& [s, c] : costs) best = std::min(best, c);
        for (const std::string& s : solvers) {
            const double c = costs.at(s);
            double r = kInf;
            if (std::isfinite(c)) r = (c == best) ? 1.0 : c / best;
            ratios[s].push_back(r);
            if (std::isfinite(r)) breakpoints.push_back(r);
        }
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    std::vector<ProfileCurve> curves;
    for (const std::string& s : solvers) {
        ProfileCurve curve;
        curve.solver = s;
        curve.metric = metric;
        for (double tau : breakpoints) {
            std::size_t count = 0;
            for (double r : ratios[s])
                if (r <= tau) ++count;
            curve.points.emplace_back(tau, static_cast<double>(count) / static_cast<double>(nproblems));
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

void emit_csv(const std::vector<RunRecord>& records, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    out << kResultsHeader << '\n';
    for (const RunRecord& r : records) {
        out << r.problem << ',' << r.n << ',' << r.m << ',' << r.solver << ',';
        if (r.status == RunStatus::converged) {
            out << r.niter << ',' << r.nfeval << ',' << r.nmvp << ',' << format_double(r.time_s)
                << ',' << format_double(r.fvalue) << ',' << format_double(r.gnorm) << ',';
        } else {
            out << ",,,,,,";  // failed runs leave the result fields empty
        }
        out << to_string(r.status) << ',' << format_double(r.theta) << ',' << format_double(r.gamma)
            << ',' << format_double(r.rho) << ',' << format_double(r.l) << ',' << format_double(r.u)
            << ',' << format_double(r.eps) << ',' << r.kmax << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<RunRecord> read_results_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != kResultsHeader)
        throw std::runtime_error(path.string() + ": unexpected results header");
    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 18)
            throw std::runtime_error(path.string() + ": bad row: '" + line + "'");
        RunRecord r;
        r.problem = f[0];
        r.n = static_cast<int>(parse_long(f[1]));
        r.m = static_cast<int>(parse_long(f[2]));
        r.solver = f[3];
        r.status = parse_status(f[10]);
        if (r.status == RunStatus::converged) {
            r.niter = parse_long(f[4]);
            r.nfeval = parse_long(f[5]);
            r.nmvp = parse_long(f[6]);
            r.time_s = parse_double(f[7]);
            r.fvalue = parse_double(f[8]);
            r.gnorm = parse_double(f[9]);
        } else {
            r.fvalue = r.gnorm = std::numeric_limits<double>::quiet_NaN();
        }
        r.theta = parse_double(f[11]);
        r.gamma = parse_double(f[12]);
        r.rho = parse_double(f[13]);
        r.l = parse_double(f[14]);
        r.u = parse_double(f[15]);
        r.eps = parse_double(f[16]);
        r.kmax = static_cast<int>(parse_long(f[17]));
        records.push_back(std::move(r));
    }
    return records;
}

void emit_profile_csv(const std::vector<ProfileCurve>& curves, const std::filesystem::path& path) {
    if (curves.empty()) throw std::invalid_argument("no profile curves to emit");
    std::ofstream out = open_for_write(path);
    out << "metric,solver,tau,rho\n";
    for (const ProfileCurve& c : curves) {
        for (const auto& [tau, rho] : c.points)
            out << to_string(c.metric) << ',' << c.solver << ',' << format_double(tau) << ','
                << format_double(rho) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<ProfileCurve> read_profile_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "metric,solver,tau,rho")
        throw std::runtime_error(path.string() + ": unexpected profile header");
    std::vector<ProfileCurve> curves;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 4) throw std::runtime_error(path.string() + ": bad row: '" + line + "'");
        const Metric metric = parse_metric(f[0]);
        auto it = std::find_if(curves.begin(), curves.end(),
                               [&](const ProfileCurve& c) { return c.solver == f[1]; });
        if (it == curves.end()) {
            curves.push_back(ProfileCurve{f[1], metric, {}});
            it = std::prev(curves.end());
        }
        it->points.emplace_back(parse_double(f[2]), parse_double(f[3]));
    }
    return curves;
}

void emit_profile_svg(const std::vector<ProfileCurve>& curves, const std::filesystem::path& path) {
    if (curves.empty()) throw std::invalid_argument("no profile curves to emit");

    constexpr double kWidth = 860, kHeight = 560;
    constexpr double kLeft = 70, kRight = 820, kTop = 60, kBottom = 500;
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    double max_tau = 2.0;
    for (const ProfileCurve& c : curves)
        for (const auto& [tau, rho] : c.points) max_tau = std::max(max_tau, tau);
    const double max_log = std::max(1.0, std::log2(max_tau) * 1.05);

    const auto xmap = [&](double tau) {
        return kLeft + (kRight - kLeft) * std::log2(std::max(tau, 1.0)) / max_log;
    };
    const auto ymap = [&](double rho) { return kBottom - (kBottom - kTop) * rho; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"30\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"18\">Performance profile ("
        << to_string(curves.front().metric) << ")</text>\n";

    // axes and grid
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
        << kBottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kBottom << "\" stroke=\"black\"/>\n";
    for (double rho = 0.0; rho <= 1.0001; rho += 0.25) {
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << ymap(rho) << "\" x2=\"" << kRight
            << "\" y2=\"" << ymap(rho) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << ymap(rho) + 5
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << rho
            << "</text>\n";
    }
    for (double e = 0.0; e <= max_log; e += 1.0) {
        const double tau = std::exp2(e);
        svg << "<line x1=\"" << xmap(tau) << "\" y1=\"" << kTop << "\" x2=\"" << xmap(tau)
            << "\" y2=\"" << kBottom << "\" stroke=\"#eeeeee\"/>\n";
        svg << "<text x=\"" << xmap(tau) << "\" y=\"" << kBottom + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << tau
            << "</text>\n";
    }
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 42
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">tau (log2 "
           "scale)</text>\n";
    svg << "<text x=\"22\" y=\"" << (kTop + kBottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 22 "
        << (kTop + kBottom) / 2 << ")\">fraction of problems</text>\n";

    // step curves, one polyline per solver
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const ProfileCurve& curve = curves[c];
        const char* color = kColors[c % (sizeof(kColors) / sizeof(kColors[0]))];
        std::ostringstream pts;
        double prev_rho = 0.0;
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            const auto [tau, rho] = curve.points[i];
            if (i == 0) {
                pts << xmap(tau) << ',' << ymap(rho) << ' ';
            } else {
                pts << xmap(tau) << ',' << ymap(prev_rho) << ' ';
                pts << xmap(tau) << ',' << ymap(rho) << ' ';
            }
            prev_rho = rho;
        }
        pts << kRight << ',' << ymap(prev_rho);
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
            << pts.str() << "\"/>\n";

        const double ly = kBottom - 20.0 - 22.0 * static_cast<double>(curves.size() - 1 - c);
        svg << "<line x1=\"" << kRight - 150 << "\" y1=\"" << ly << "\" x2=\"" << kRight - 120
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kRight - 112 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << curve.solver << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out = open_for_write(path);
    out << svg.str();
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace asdh
