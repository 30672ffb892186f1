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

#pragma once

#include <string>

#include <json.hpp>

#include "hmpareto/fitting.hpp"
#include "hmpareto/models.hpp"
#include "hmpareto/platform.hpp"

namespace hmp {

// {"big": {"name": str?, "core_count": int, "frequencies_hz": [num...]}, "little": {...}}
nlohmann::json platform_to_json(const PlatformSpec& platform);
PlatformSpec platform_from_json(const nlohmann::json& doc);

// {"f": num, "perf": num, "tl_ref_s": num, "f_ref_hz": num}
nlohmann::json perf_params_to_json(const PerfParams& p);
PerfParams perf_params_from_json(const nlohmann::json& doc);

// {"alpha_b": num, "beta_b": num, "alpha_l": num, "beta_l": num}; cluster sizes come from the platform.
nlohmann::json power_params_to_json(const PowerParams& q);
PowerParams power_params_from_json(const nlohmann::json& doc, const PlatformSpec& platform);

/// Parameters plus rmse, n_points, iterations, converged, identifiable.
nlohmann::json fit_report_to_json(const FitReport<PerfParams>& report);
nlohmann::json fit_report_to_json(const FitReport<PowerParams>& report);

/// Parses a JSON file. Throws ParseError naming the path.
nlohmann::json read_json_file(const std::string& path);

} // namespace hmp
