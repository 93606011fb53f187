// drivedamp: steady-state entanglement of two pumped, damped bosonic modes.
//
//   drivedamp point  --zeta1 0.003 --zeta2 0.01 --omega-b 0.6
//   drivedamp sweep  --zeta1-range 1e-4:5e-2:60:log --zeta2-range 1e-4:5e-2:60:log
//   drivedamp verify --level full
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 all points failed.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drivedamp/csv.hpp"
#include "drivedamp/sweep.hpp"
#include "drivedamp/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitAllFailed = 3;

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    bool log = false;
};

Range parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3 && parts.size() != 4) {
        throw CLI::ValidationError("range", "expected lo:hi:n[:log], got '" + text + "'");
    }
    Range r;
    try {
        std::size_t used = 0;
        r.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        r.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        r.n = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "malformed number in '" + text + "'");
    }
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            r.log = true;
        } else if (parts[3] != "lin") {
            throw CLI::ValidationError("range", "spacing must be 'log' or 'lin'");
        }
    }
    return r;
}

std::vector<double> make_grid(const std::optional<double>& value, const std::string& range,
                              const Range& fallback) {
    if (value) return {*value};
    const Range r = range.empty() ? fallback : parse_range(range);
    return r.log ? drivedamp::logspace(r.lo, r.hi, r.n) : drivedamp::linspace(r.lo, r.hi, r.n);
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) std::cerr << "drivedamp: cannot write " << path << '\n';
    return static_cast<bool>(out);
}

int emit(const std::vector<drivedamp::SweepRow>& rows, const std::vector<std::string>& columns,
         const std::string& out_path, const std::string& gnuplot_path,
         drivedamp::csv::PlotAxes axes) {
    const bool to_stdout = out_path.empty() || out_path == "-";
    std::string script;
    if (!gnuplot_path.empty()) {
        script = drivedamp::csv::gnuplot_script(to_stdout ? "data.csv" : out_path, columns, axes);
    }
    const std::string text = drivedamp::csv::to_string(rows, columns);
    if (to_stdout) {
        std::cout << text;
    } else if (!write_file(out_path, text)) {
        return kExitUsage;
    }
    if (!gnuplot_path.empty() && !write_file(gnuplot_path, script)) return kExitUsage;
    const bool any_ok =
        std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.stable; });
    return any_ok ? 0 : kExitAllFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state entanglement of two pumped bosonic modes with structured baths"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat 'key = value' file; command-line flags override it");
    app.allow_config_extras(false);

    drivedamp::SystemParams base;
    std::optional<double> kappa, kappa_ratio, zeta1, zeta2;
    std::string zeta1_range, zeta2_range, out_path, gnuplot_path;
    std::vector<std::string> columns_arg;
    int threads = 0;

    app.add_option("--omega-a,--omega_a", base.omega_a, "Frequency of mode a")
        ->capture_default_str();
    app.add_option("--omega-b,--omega_b", base.omega_b, "Frequency of mode b")
        ->capture_default_str();
    app.add_option("--omega-p,--omega_p", base.omega_p, "Pump frequency")->capture_default_str();
    auto* k_opt = app.add_option("--kappa", kappa, "Squeezing strength (absolute)");
    auto* kr_opt = app.add_option("--kappa-ratio,--kappa_ratio", kappa_ratio,
                                  "Squeezing strength as a fraction of |Δ1+Δ2| (default 0.1)");
    k_opt->excludes(kr_opt);
    app.add_option("--nu1", base.nu1, "Drude-Lorentz cutoff of bath 1")->capture_default_str();
    app.add_option("--nu2", base.nu2, "Drude-Lorentz cutoff of bath 2")->capture_default_str();
    auto* z1 = app.add_option("--zeta1", zeta1, "Bath 1 coupling");
    auto* z2 = app.add_option("--zeta2", zeta2, "Bath 2 coupling");
    auto* z1r = app.add_option("--zeta1-range,--zeta1_range", zeta1_range, "lo:hi:n[:log]");
    auto* z2r = app.add_option("--zeta2-range,--zeta2_range", zeta2_range, "lo:hi:n[:log]");
    z1->excludes(z1r);
    z2->excludes(z2r);
    app.add_option("--out", out_path, "Output CSV file (default stdout)");
    app.add_option("--columns", columns_arg, "Comma separated CSV columns")->delimiter(',');
    app.add_option("--gnuplot-script,--gnuplot_script", gnuplot_path,
                   "Also write a companion gnuplot script");
    app.add_option("--threads", threads, "Worker threads (DRIVEDAMP_THREADS overrides)")
        ->check(CLI::PositiveNumber);

    auto* point = app.add_subcommand("point", "Evaluate a single parameter point");
    auto* sweep = app.add_subcommand("sweep", "Evaluate a (zeta1, zeta2) grid");
    auto* verify = app.add_subcommand("verify", "Run the oracle verification suite");
    for (auto* sub : {point, sweep, verify}) sub->fallthrough();

    std::string level = "fast";
    drivedamp::verify::Options vopt;
    verify->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();
    verify->add_option("--draws", vopt.draws, "Random parameter draws")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        int parallelism = threads > 0 ? threads : 1;
        parallelism = drivedamp::parallelism_from_env(parallelism);

        if (*verify) {
            vopt.level = level == "full" ? drivedamp::verify::Level::full
                                         : drivedamp::verify::Level::fast;
            vopt.parallelism = parallelism;
            const auto report = drivedamp::verify::run(vopt);
            drivedamp::verify::print(std::cout, report);
            return report.passed() ? 0 : kExitVerify;
        }

        base.kappa = kappa ? *kappa
                           : drivedamp::kappa_from_ratio(base.omega_a, base.omega_b,
                                                         base.omega_p, kappa_ratio.value_or(0.1));
        std::string column_list;
        for (const auto& c : columns_arg) column_list += (column_list.empty() ? "" : ",") + c;
        const std::vector<std::string> columns =
            columns_arg.empty() ? drivedamp::csv::all_columns()
                                : drivedamp::csv::parse_columns(column_list);

        if (*point) {
            if (!zeta1_range.empty() || !zeta2_range.empty()) {
                std::cerr << "drivedamp point: use --zeta1/--zeta2, not ranges\n";
                return kExitUsage;
            }
            drivedamp::SystemParams p = base;
            p.zeta1 = zeta1.value_or(0.01);
            p.zeta2 = zeta2.value_or(0.01);
            return emit({drivedamp::run_point(p)}, columns, out_path, gnuplot_path,
                        drivedamp::csv::PlotAxes::zeta1);
        }

        const Range default_range{1e-4, 5e-2, 60, true};
        drivedamp::SweepSpec spec;
        spec.base = base;
        spec.zeta1_grid = make_grid(zeta1, zeta1_range, default_range);
        spec.zeta2_grid = make_grid(zeta2, zeta2_range, default_range);
        const auto rows = drivedamp::run_sweep(spec, parallelism);
        using drivedamp::csv::PlotAxes;
        const PlotAxes axes = spec.zeta2_grid.size() == 1   ? PlotAxes::zeta1
                              : spec.zeta1_grid.size() == 1 ? PlotAxes::zeta2
                                                            : PlotAxes::zeta1_zeta2;
        return emit(rows, columns, out_path, gnuplot_path, axes);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "drivedamp: " << e.what() << '\n';
        return kExitUsage;
    } catch (const drivedamp::Error& e) {
        std::cerr << "drivedamp: " << e.what() << '\n';
        return kExitUsage;
    }
}
