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

#include "hmpareto/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "hmpareto/error.hpp"

namespace hmp {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string at(const std::string& source, std::size_t line)
{
    return source + ":" + std::to_string(line);
}

int parse_count(std::string_view field, std::string_view where)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(std::string(where) + ": expected an integer, got '" + std::string(field) + "'");
    }
    return value;
}

std::optional<double> parse_optional_positive(std::string_view field, std::string_view where)
{
    if (field.empty()) return std::nullopt;
    const double v = parse_number(field, where);
    if (!(v > 0.0)) {
        throw ParseError(std::string(where) + ": measured values must be > 0");
    }
    return v;
}

double parse_positive(std::string_view field, std::string_view where)
{
    const double v = parse_number(field, where);
    if (!(v > 0.0)) {
        throw ParseError(std::string(where) + ": value must be > 0, got '" + std::string(field) + "'");
    }
    return v;
}

Configuration parse_configuration(const std::vector<std::string>& f, std::size_t offset, std::string_view where)
{
    return Configuration{
        .big_cores = parse_count(f[offset], where),
        .little_cores = parse_count(f[offset + 1], where),
        .big_freq_hz = parse_positive(f[offset + 2], where),
        .little_freq_hz = parse_positive(f[offset + 3], where),
    };
}

void put_configuration(std::ostream& out, const Configuration& c)
{
    out << c.big_cores << ',' << c.little_cores << ',' << format_number(c.big_freq_hz) << ','
        << format_number(c.little_freq_hz);
}

void put_estimate(std::ostream& out, const Estimate& e)
{
    put_configuration(out, e.config);
    out << ',' << format_number(e.time_s) << ',' << format_number(e.energy_j) << ',' << format_number(e.power_seq_w)
        << ',' << format_number(e.power_par_w);
}

} // namespace

std::string format_number(double value)
{
    if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 1e15) {
        return std::to_string(static_cast<long long>(value));
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

double parse_number(std::string_view field, std::string_view where)
{
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ParseError(std::string(where) + ": expected a finite number, got '" + std::string(field) + "'");
    }
    return value;
}

std::vector<CsvRow> read_csv(std::istream& in, const std::string& source, std::span<const std::string_view> headers,
                             std::size_t* matched)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t header_index = headers.size();
    while (header_index == headers.size() && std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        for (std::size_t i = 0; i < headers.size(); ++i) {
            if (text == headers[i]) header_index = i;
        }
        if (header_index == headers.size()) {
            throw ParseError(at(source, line_no) + ": unexpected header '" + std::string(text) + "', expected '"
                             + std::string(headers.front()) + "'");
        }
    }
    if (header_index == headers.size()) {
        throw ParseError(source + ": empty file");
    }
    if (matched) *matched = header_index;

    const std::size_t columns = split(headers[header_index]).size();
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        CsvRow row{line_no, split(line)};
        if (row.fields.size() != columns) {
            throw ParseError(at(source, line_no) + ": expected " + std::to_string(columns) + " fields, got "
                             + std::to_string(row.fields.size()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_configurations(std::ostream& out, std::span<const Configuration> configs)
{
    out << kConfigurationHeader << '\n';
    for (const auto& c : configs) {
        put_configuration(out, c);
        out << '\n';
    }
}

std::vector<Configuration> read_configurations(std::istream& in, const std::string& source)
{
    const std::string_view headers[] = {kConfigurationHeader};
    std::vector<Configuration> out;
    for (const auto& row : read_csv(in, source, headers)) {
        out.push_back(parse_configuration(row.fields, 0, at(source, row.line)));
    }
    return out;
}

void write_measurement_rows(std::ostream& out, std::span<const MeasurementRow> rows)
{
    out << kMeasurementHeader << '\n';
    for (const auto& r : rows) {
        out << r.app << ',';
        put_configuration(out, r.config);
        out << ',' << (r.time_s ? format_number(*r.time_s) : "") << ',' << (r.power_w ? format_number(*r.power_w) : "")
            << ',' << r.repeat << '\n';
    }
}

std::vector<std::pair<std::size_t, MeasurementRow>> read_measurement_rows(std::istream& in,
                                                                          const std::string& source)
{
    const std::string_view headers[] = {kMeasurementHeader};
    std::vector<std::pair<std::size_t, MeasurementRow>> out;
    for (const auto& row : read_csv(in, source, headers)) {
        const std::string where = at(source, row.line);
        const auto& f = row.fields;
        if (f[0].empty()) {
            throw ParseError(where + ": app label is empty");
        }
        MeasurementRow m{
            .app = f[0],
            .config = parse_configuration(f, 1, where),
            .time_s = parse_optional_positive(f[5], where),
            .power_w = parse_optional_positive(f[6], where),
            .repeat = parse_count(f[7], where),
        };
        if (!m.time_s && !m.power_w) {
            throw ParseError(where + ": time_s and power_w are both empty");
        }
        if (m.repeat < 0) {
            throw ParseError(where + ": repeat must be >= 0");
        }
        out.emplace_back(row.line, std::move(m));
    }
    return out;
}

void write_estimates(std::ostream& out, std::span<const Estimate> estimates)
{
    out << kEstimateHeader << '\n';
    for (const auto& e : estimates) {
        put_estimate(out, e);
        out << '\n';
    }
}

void write_frontier(std::ostream& out, std::span<const Estimate> frontier)
{
    out << kFrontierHeader << '\n';
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        put_estimate(out, frontier[i]);
        out << ',' << (i + 1) << '\n';
    }
}

std::vector<Estimate> read_estimates(std::istream& in, const std::string& source)
{
    const std::string_view headers[] = {kEstimateHeader, kFrontierHeader};
    std::vector<Estimate> out;
    for (const auto& row : read_csv(in, source, headers)) {
        const std::string where = at(source, row.line);
        const auto& f = row.fields;
        out.push_back(Estimate{
            .config = parse_configuration(f, 0, where),
            .time_s = parse_positive(f[4], where),
            .energy_j = parse_positive(f[5], where),
            .power_seq_w = parse_number(f[6], where),
            .power_par_w = parse_number(f[7], where),
        });
    }
    return out;
}

void write_time_energy_columns(std::ostream& out, std::span<const Estimate> estimates)
{
    out << "# time_s energy_j\n";
    for (const auto& e : estimates) {
        out << format_number(e.time_s) << ' ' << format_number(e.energy_j) << '\n';
    }
}

std::vector<PowerSample> read_power_trace(std::istream& in, const std::string& source)
{
    const std::string_view headers[] = {kTraceHeader};
    std::vector<PowerSample> out;
    for (const auto& row : read_csv(in, source, headers)) {
        const std::string where = at(source, row.line);
        out.push_back({parse_number(row.fields[0], where), parse_number(row.fields[1], where)});
    }
    return out;
}

std::vector<SpeedupPair> read_speedup_pairs(std::istream& in, const std::string& source)
{
    const std::string_view headers[] = {kSpeedupPairHeader};
    std::vector<SpeedupPair> out;
    for (const auto& row : read_csv(in, source, headers)) {
        const std::string where = at(source, row.line);
        out.push_back({parse_positive(row.fields[0], where), parse_positive(row.fields[1], where),
                       parse_positive(row.fields[2], where)});
    }
    return out;
}

std::vector<ReferencePoint> read_references(std::istream& in, const std::string& source)
{
    const std::string_view headers[] = {kReferenceHeader};
    std::vector<ReferencePoint> out;
    for (const auto& row : read_csv(in, source, headers)) {
        const std::string where = at(source, row.line);
        out.push_back({row.fields[0], parse_positive(row.fields[1], where), parse_positive(row.fields[2], where)});
    }
    return out;
}

} // namespace hmp
