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

#include "hmpareto/json_io.hpp"

#include <fstream>

#include "hmpareto/error.hpp"

namespace hmp {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing key '") + key + "'");
    }
    return doc.at(key);
}

double number(const json& doc, const char* key)
{
    const json& v = require(doc, key);
    if (!v.is_number()) {
        throw ParseError(std::string("key '") + key + "' must be a number");
    }
    return v.get<double>();
}

json cluster_to_json(const ClusterSpec& c)
{
    json out{{"core_count", c.core_count}, {"frequencies_hz", c.frequencies_hz}};
    if (!c.name.empty()) out["name"] = c.name;
    return out;
}

ClusterSpec cluster_from_json(const json& doc, const char* role)
{
    const json& node = require(doc, role);
    ClusterSpec c;
    c.name = node.value("name", std::string(role));
    const json& cores = require(node, "core_count");
    if (!cores.is_number_integer()) {
        throw ParseError(std::string(role) + ".core_count must be an integer");
    }
    c.core_count = cores.get<int>();
    const json& freqs = require(node, "frequencies_hz");
    if (!freqs.is_array()) {
        throw ParseError(std::string(role) + ".frequencies_hz must be an array");
    }
    for (const auto& f : freqs) {
        if (!f.is_number()) throw ParseError(std::string(role) + ".frequencies_hz must hold numbers");
        c.frequencies_hz.push_back(f.get<double>());
    }
    return c;
}

template <typename Params>
json report_fields(json out, const FitReport<Params>& report)
{
    out["rmse"] = report.rmse;
    out["n_points"] = report.n_points;
    out["iterations"] = report.iterations;
    out["converged"] = report.converged;
    out["identifiable"] = report.identifiable;
    return out;
}

} // namespace

json platform_to_json(const PlatformSpec& platform)
{
    return json{{"big", cluster_to_json(platform.big)}, {"little", cluster_to_json(platform.little)}};
}

PlatformSpec platform_from_json(const json& doc)
{
    PlatformSpec p{cluster_from_json(doc, "big"), cluster_from_json(doc, "little")};
    validate_platform(p);
    return p;
}

json perf_params_to_json(const PerfParams& p)
{
    return json{{"f", p.parallel_fraction}, {"perf", p.big_speedup}, {"tl_ref_s", p.little_ref_time_s},
                {"f_ref_hz", p.ref_freq_hz}};
}

PerfParams perf_params_from_json(const json& doc)
{
    PerfParams p{
        .parallel_fraction = number(doc, "f"),
        .big_speedup = number(doc, "perf"),
        .little_ref_time_s = number(doc, "tl_ref_s"),
        .ref_freq_hz = number(doc, "f_ref_hz"),
    };
    validate(p);
    return p;
}

json power_params_to_json(const PowerParams& q)
{
    return json{{"alpha_b", q.alpha_big}, {"beta_b", q.beta_big}, {"alpha_l", q.alpha_little},
                {"beta_l", q.beta_little}};
}

PowerParams power_params_from_json(const json& doc, const PlatformSpec& platform)
{
    PowerParams q = with_platform_cores({}, platform);
    q.alpha_big = number(doc, "alpha_b");
    q.beta_big = number(doc, "beta_b");
    q.alpha_little = number(doc, "alpha_l");
    q.beta_little = number(doc, "beta_l");
    validate(q);
    return q;
}

json fit_report_to_json(const FitReport<PerfParams>& report)
{
    return report_fields(perf_params_to_json(report.params), report);
}

json fit_report_to_json(const FitReport<PowerParams>& report)
{
    return report_fields(power_params_to_json(report.params), report);
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace hmp
