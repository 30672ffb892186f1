/*
   Copyright 2026, The hmpareto Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hmpareto/cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmpareto/csv.hpp"
#include "hmpareto/error.hpp"
#include "hmpareto/fitting.hpp"
#include "hmpareto/harness.hpp"
#include "hmpareto/json_io.hpp"
#include "hmpareto/models.hpp"
#include "hmpareto/pareto.hpp"
#include "hmpareto/platform.hpp"
#include "hmpareto/sampling.hpp"

namespace hmp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Everything a subcommand may read from the command line.
struct Options {
    std::string platform = "odroid-xu3";
    std::size_t count = 0;
    std::uint64_t start_index = 1;
    std::uint64_t seed = 0;
    std::string measurements;
    std::string estimates;
    std::string perf_params;
    std::string power_params;
    double perf = 0.0;
    double tl_ref = 0.0;
    double f_ref = 0.0;
    std::string pairs;
    std::string config;
    std::string out;
    bool count_only = false;
    bool gnuplot = false;
};

/// Output files produced by one command, committed only after it succeeds.
struct Outputs {
    struct File {
        std::string path;
        std::string content;
    };
    std::vector<File> files;
    std::vector<std::string> inputs;
};

std::ifstream open_input(const std::string& path, Outputs& io)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    io.inputs.push_back(path);
    return in;
}

json load_json_input(const std::string& path, Outputs& io)
{
    io.inputs.push_back(path);
    return read_json_file(path);
}

// Emits `content` to --out when set, else to the console stream.
void emit(const Options& opt, Outputs& io, std::ostream& console, std::string content)
{
    if (opt.out.empty()) {
        console << content;
    } else {
        io.files.push_back({opt.out, std::move(content)});
    }
}

Configuration parse_config_flag(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 4) {
        throw ValidationError("--config expects \"b,L,fb_hz,fl_hz\"");
    }
    auto integer = [](const std::string& s) {
        const double v = parse_number(s, "--config");
        if (v != static_cast<int>(v)) throw ValidationError("--config core counts must be integers");
        return static_cast<int>(v);
    };
    return Configuration{integer(parts[0]), integer(parts[1]), parse_number(parts[2], "--config"),
                         parse_number(parts[3], "--config")};
}

std::string to_string(const json& doc) { return doc.dump(2) + "\n"; }

void cmd_enumerate(const Options& opt, Outputs& io, std::ostream& console)
{
    const PlatformSpec platform = load_platform(opt.platform);
    if (opt.count_only) {
        emit(opt, io, console, std::to_string(configuration_count(platform)) + "\n");
        return;
    }
    std::ostringstream os;
    write_configurations(os, enumerate_configurations(platform));
    emit(opt, io, console, os.str());
}

void cmd_sample(const Options& opt, Outputs& io, std::ostream& console)
{
    const PlatformSpec platform = load_platform(opt.platform);
    const SamplePlan plan{.count = opt.count, .start_index = opt.start_index};
    std::ostringstream os;
    write_configurations(os, sample_configurations(platform, plan));
    emit(opt, io, console, os.str());
}

void cmd_simulate(const Options& opt, Outputs& io, std::ostream& console)
{
    const PlatformSpec platform = load_platform(opt.platform);
    const json perf_doc = load_json_input(opt.perf_params, io);
    const json power_doc = load_json_input(opt.power_params, io);

    SyntheticGroundTruth truth{
        .perf = perf_params_from_json(perf_doc),
        .power = power_params_from_json(power_doc, platform),
        .seed = opt.seed,
    };
    truth.noise_time_sigma = perf_doc.value("noise_time_sigma", truth.noise_time_sigma);
    truth.noise_power_sigma = power_doc.value("noise_power_sigma", truth.noise_power_sigma);
    truth.app = perf_doc.value("app", truth.app);

    const Campaign campaign{
        .platform = platform,
        .configurations = sample_configurations(platform, {.count = opt.count, .start_index = opt.start_index}),
    };
    std::ostringstream os;
    write_measurement_rows(os, simulate_runs(truth, campaign));
    emit(opt, io, console, os.str());
}

void cmd_fit_speedup(const Options& opt, Outputs& io, std::ostream& console)
{
    std::ifstream in = open_input(opt.pairs, io);
    const auto pairs = read_speedup_pairs(in, opt.pairs);
    emit(opt, io, console, format_number(fit_speedup(pairs)) + "\n");
}

void cmd_fit_power(const Options& opt, Outputs& io, std::ostream& console)
{
    const PlatformSpec platform = load_platform(opt.platform);
    io.inputs.push_back(opt.measurements);
    const auto records = ingest_measurements(opt.measurements, platform);
    emit(opt, io, console, to_string(fit_report_to_json(fit_power(records, platform))));
}

void cmd_fit_perf(const Options& opt, Outputs& io, std::ostream& console)
{
    const PlatformSpec platform = load_platform(opt.platform);
    io.inputs.push_back(opt.measurements);
    const auto records = ingest_measurements(opt.measurements, platform);
    emit(opt, io, console, to_string(fit_report_to_json(fit_parallel_fraction(records, opt.perf, opt.tl_ref, opt.f_ref))));
}

void cmd_predict(const Options& opt, Outputs& io, std::ostream& console)
{
    const PlatformSpec platform = load_platform(opt.platform);
    const PerfParams perf = perf_params_from_json(load_json_input(opt.perf_params, io));
    const PowerParams power = power_params_from_json(load_json_input(opt.power_params, io), platform);

    std::vector<Estimate> estimates;
    if (opt.config.empty()) {
        estimates = predict_all(perf, power, platform);
    } else {
        const Configuration c = parse_config_flag(opt.config);
        if (!validate_configuration(platform, c)) {
            throw ValidationError("--config is not a valid configuration on this platform");
        }
        estimates.push_back(estimate(perf, power, snap_to_platform(platform, c)));
    }
    std::ostringstream os;
    write_estimates(os, estimates);
    emit(opt, io, console, os.str());
}

std::string gnuplot_path(const std::string& out)
{
    fs::path p(out);
    if (p.extension() == ".dat") return out + ".dat";
    return p.replace_extension(".dat").string();
}

void cmd_pareto(const Options& opt, Outputs& io, std::ostream& console)
{
    std::ifstream in = open_input(opt.estimates, io);
    const auto estimates = read_estimates(in, opt.estimates);
    if (estimates.empty()) {
        throw ValidationError(opt.estimates + ": no estimates");
    }
    const auto frontier = pareto_frontier(estimates);

    std::ostringstream columns;
    write_time_energy_columns(columns, frontier);
    if (opt.out.empty() && opt.gnuplot) {
        console << columns.str();
        return;
    }
    std::ostringstream os;
    write_frontier(os, frontier);
    emit(opt, io, console, os.str());
    if (opt.gnuplot) {
        io.files.push_back({gnuplot_path(opt.out), columns.str()});
    }
}

void cmd_compare(const Options& opt, Outputs& io, std::ostream& console)
{
    std::ifstream est_in = open_input(opt.estimates, io);
    const auto estimates = read_estimates(est_in, opt.estimates);
    if (estimates.empty()) {
        throw ValidationError(opt.estimates + ": no estimates");
    }
    std::ifstream ref_in = open_input(opt.measurements, io);
    const auto references = read_references(ref_in, opt.measurements);
    const auto frontier = pareto_frontier(estimates);

    auto optional_pct = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    std::ostringstream os;
    os << "label,time_s,energy_j,energy_saving_pct,performance_gain_pct,least_energy_saving_pct,fastest_gain_pct\n";
    for (const auto& ref : references) {
        const ReferenceComparison r = compare_to_reference(frontier, ref);
        os << ref.label << ',' << format_number(ref.time_s) << ',' << format_number(ref.energy_j) << ','
           << optional_pct(r.energy_saving_pct) << ',' << optional_pct(r.performance_gain_pct) << ','
           << format_number(r.least_energy_saving_pct) << ',' << format_number(r.fastest_gain_pct) << '\n';
    }
    emit(opt, io, console, os.str());
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json manifest(const std::string& command, const Options& opt, const Outputs& io)
{
    json outputs = json::array();
    for (const auto& f : io.files) outputs.push_back(f.path);
    json doc{
        {"command", command},
        {"platform_ref", opt.platform},
        {"inputs", io.inputs},
        {"outputs", outputs},
        {"tool_version", std::string(kToolVersion)},
        {"created_utc", utc_timestamp()},
    };
    doc["seed"] = command == "simulate" ? json(opt.seed) : json(nullptr);
    return doc;
}

// Writes every file through a temporary sibling and renames, so a failure
// part-way leaves no output behind.
void commit(const Outputs& io)
{
    std::vector<std::pair<fs::path, fs::path>> staged;
    try {
        for (const auto& f : io.files) {
            const fs::path target(f.path);
            fs::path tmp = target;
            tmp += ".tmp";
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) {
                throw ValidationError("cannot write '" + f.path + "'");
            }
            staged.emplace_back(tmp, target);
            os << f.content;
            os.close();
            if (!os) {
                throw ValidationError("failed writing '" + f.path + "'");
            }
        }
    } catch (...) {
        std::error_code ec;
        for (const auto& [tmp, target] : staged) fs::remove(tmp, ec);
        throw;
    }
    for (const auto& [tmp, target] : staged) fs::rename(tmp, target);
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Performance/energy Pareto configurations for big.LITTLE processors", "hmpareto"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Options opt;
    using Handler = std::function<void(const Options&, Outputs&, std::ostream&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;

    auto add = [&](const char* name, const char* description, Handler handler) {
        CLI::App* sub = app.add_subcommand(name, description);
        commands.emplace_back(sub, std::move(handler));
        return sub;
    };
    auto platform_flag = [&](CLI::App* sub) {
        sub->add_option("--platform", opt.platform, "Platform JSON file or preset name (odroid-xu3)");
    };
    auto out_flag = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Output file (default: stdout)"); };

    CLI::App* enumerate = add("enumerate", "List every configuration of the platform", cmd_enumerate);
    platform_flag(enumerate);
    enumerate->add_flag("--count-only", opt.count_only, "Print only the number of configurations");
    out_flag(enumerate);

    CLI::App* sample = add("sample", "Draw Halton-distributed configurations", cmd_sample);
    platform_flag(sample);
    sample->add_option("--count", opt.count, "Number of configurations")->required();
    sample->add_option("--start-index", opt.start_index, "First Halton index (>= 1)");
    out_flag(sample);

    CLI::App* simulate = add("simulate", "Produce synthetic measurements from known parameters", cmd_simulate);
    platform_flag(simulate);
    simulate->add_option("--count", opt.count, "Number of Halton configurations to measure")->required();
    simulate->add_option("--start-index", opt.start_index, "First Halton index (>= 1)");
    simulate->add_option("--perf-params", opt.perf_params, "Ground-truth performance parameters JSON")->required();
    simulate->add_option("--power-params", opt.power_params, "Ground-truth power parameters JSON")->required();
    simulate->add_option("--seed", opt.seed, "Noise seed");
    out_flag(simulate);

    CLI::App* fit_speedup_cmd = add("fit-speedup", "Median big/LITTLE speedup from timing pairs", cmd_fit_speedup);
    fit_speedup_cmd->add_option("--pairs", opt.pairs, "Speedup pairs CSV")->required();
    out_flag(fit_speedup_cmd);

    CLI::App* fit_power_cmd = add("fit-power", "Fit the chip power constants", cmd_fit_power);
    platform_flag(fit_power_cmd);
    fit_power_cmd->add_option("--measurements", opt.measurements, "Measurement CSV")->required();
    out_flag(fit_power_cmd);

    CLI::App* fit_perf = add("fit-perf", "Fit an application's parallel fraction", cmd_fit_perf);
    platform_flag(fit_perf);
    fit_perf->add_option("--perf", opt.perf, "Big/LITTLE speedup")->required();
    fit_perf->add_option("--tl-ref", opt.tl_ref, "Run time on one LITTLE core at the reference frequency (s)")
        ->required();
    fit_perf->add_option("--f-ref", opt.f_ref, "Reference frequency (Hz)")->required();
    fit_perf->add_option("--measurements", opt.measurements, "Measurement CSV")->required();
    out_flag(fit_perf);

    CLI::App* predict = add("predict", "Estimate time and energy of configurations", cmd_predict);
    platform_flag(predict);
    predict->add_option("--perf-params", opt.perf_params, "Performance parameters JSON")->required();
    predict->add_option("--power-params", opt.power_params, "Power parameters JSON")->required();
    predict->add_option("--config", opt.config, "Single configuration \"b,L,fb_hz,fl_hz\"");
    out_flag(predict);

    CLI::App* pareto = add("pareto", "Select the time/energy Pareto frontier", cmd_pareto);
    pareto->add_option("--estimates", opt.estimates, "Estimates CSV from predict")->required();
    pareto->add_flag("--gnuplot", opt.gnuplot, "Also write a two-column time/energy file");
    out_flag(pareto);

    CLI::App* compare = add("compare", "Compare the frontier with reference runs", cmd_compare);
    compare->add_option("--estimates", opt.estimates, "Estimates CSV from predict")->required();
    compare->add_option("--measurements", opt.measurements, "Reference CSV (label,time_s,energy_j)")->required();
    out_flag(compare);

    std::vector<const char*> argv{"hmpareto"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::Success&) {
        const CLI::App* target = &app;
        for (const auto& [sub, handler] : commands)
            if (sub->parsed()) target = sub;
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "hmpareto: error: " << e.what() << '\n';
        return 2;
    }

    for (const auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        try {
            Outputs io;
            handler(opt, io, out);
            if (!io.files.empty()) {
                io.files.push_back({opt.out + ".manifest.json", ""});
                io.files.back().content = to_string(manifest(sub->get_name(), opt, io));
                commit(io);
            }
            return 0;
        } catch (const std::exception& e) {
            err << "hmpareto: error: " << e.what() << '\n';
            return 1;
        }
    }
    return 1;
}

} // namespace hmp::cli
