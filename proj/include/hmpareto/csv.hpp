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

// Plain comma-separated files: one header line, no quoting, blank lines ignored.
// Every reader checks the header exactly and reports errors as
// ParseError("<source>:<line>: ...").

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmpareto/fitting.hpp"
#include "hmpareto/harness.hpp"
#include "hmpareto/models.hpp"
#include "hmpareto/pareto.hpp"
#include "hmpareto/platform.hpp"

namespace hmp {

inline constexpr std::string_view kConfigurationHeader = "b,l,fb_hz,fl_hz";
inline constexpr std::string_view kMeasurementHeader = "app,b,l,fb_hz,fl_hz,time_s,power_w,repeat";
inline constexpr std::string_view kEstimateHeader = "b,l,fb_hz,fl_hz,time_s,energy_j,p_seq_w,p_par_w";
inline constexpr std::string_view kFrontierHeader = "b,l,fb_hz,fl_hz,time_s,energy_j,p_seq_w,p_par_w,rank";
inline constexpr std::string_view kTraceHeader = "t_s,power_w";
inline constexpr std::string_view kSpeedupPairHeader = "f_hz,t_little_s,t_big_s";
inline constexpr std::string_view kReferenceHeader = "label,time_s,energy_j";

/// Shortest text that parses back to exactly `value`; integral values print without exponent.
std::string format_number(double value);

/// Parses a whole field as a finite double. Throws ParseError.
double parse_number(std::string_view field, std::string_view where);

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// Reads a table whose header must equal one of `headers`. Returns the index of
/// the matched header through `matched` when non-null.
std::vector<CsvRow> read_csv(std::istream& in, const std::string& source, std::span<const std::string_view> headers,
                             std::size_t* matched = nullptr);

void write_configurations(std::ostream& out, std::span<const Configuration> configs);
std::vector<Configuration> read_configurations(std::istream& in, const std::string& source);

void write_measurement_rows(std::ostream& out, std::span<const MeasurementRow> rows);
/// Rows paired with their line number in the source.
std::vector<std::pair<std::size_t, MeasurementRow>> read_measurement_rows(std::istream& in,
                                                                          const std::string& source);

void write_estimates(std::ostream& out, std::span<const Estimate> estimates);
/// The estimates table with a trailing 1-based `rank` column.
void write_frontier(std::ostream& out, std::span<const Estimate> frontier);
/// Accepts both the estimates and the frontier layout (rank is ignored).
std::vector<Estimate> read_estimates(std::istream& in, const std::string& source);

/// Whitespace-separated `time_s energy_j` lines, for plotting tools.
void write_time_energy_columns(std::ostream& out, std::span<const Estimate> estimates);

std::vector<PowerSample> read_power_trace(std::istream& in, const std::string& source);
std::vector<SpeedupPair> read_speedup_pairs(std::istream& in, const std::string& source);
std::vector<ReferencePoint> read_references(std::istream& in, const std::string& source);

} // namespace hmp
