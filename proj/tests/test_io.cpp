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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "hmpareto/csv.hpp"
#include "hmpareto/error.hpp"
#include "hmpareto/json_io.hpp"
#include "test_support.hpp"

using namespace hmp;
using nlohmann::json;

TEST_CASE("number formatting round-trips exactly")
{
    CHECK(format_number(2e9) == "2000000000");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-3.0) == "-3");
    CHECK(format_number(0.1) == "0.1");
    testing::Generator gen(8);
    for (int i = 0; i < 5000; ++i) {
        const double v = gen.log_uniform(1e-30, 1e30) * (i % 2 ? -1 : 1);
        CHECK(parse_number(format_number(v), "x") == v);
    }
}

TEST_CASE("number parsing rejects junk")
{
    CHECK(parse_number("+1.5", "x") == 1.5);
    CHECK_THROWS_AS(parse_number(" 2", "x"), ParseError);
    CHECK_THROWS_AS(parse_number("", "x"), ParseError);
    CHECK_THROWS_AS(parse_number("1.5abc", "x"), ParseError);
    CHECK_THROWS_AS(parse_number("nan", "x"), ParseError);
    CHECK_THROWS_AS(parse_number("inf", "x"), ParseError);
    CHECK_THROWS_AS(parse_number("1e400", "x"), ParseError);
}

TEST_CASE("csv structure errors name the line")
{
    const std::string_view headers[] = {"a,b"};
    auto message = [&](const std::string& text) {
        std::istringstream in(text);
        try {
            read_csv(in, "t.csv", headers);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("").find("empty file") != std::string::npos);
    CHECK(message("x,y\n").find("t.csv:1:") != std::string::npos);
    CHECK(message("a,b\n1,2\n\n1,2,3\n").find("t.csv:4:") != std::string::npos);
    CHECK(message("a,b\r\n1,2\r\n").empty());

    std::istringstream in("\na,b\n1,2\n\n3,4\n");
    const auto rows = read_csv(in, "t.csv", headers);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].line == 5);
    CHECK(rows[1].fields[0] == "3");
}

TEST_CASE("estimates round trip through csv")
{
    testing::Generator gen(12);
    std::vector<Estimate> estimates;
    for (int i = 0; i < 200; ++i) {
        const auto c = gen.configuration();
        if (c.big_cores + c.little_cores == 0) continue;
        estimates.push_back(estimate(gen.perf(), gen.power(), c));
    }
    std::stringstream s;
    write_estimates(s, estimates);
    CHECK(read_estimates(s, "e.csv") == estimates);

    std::stringstream f;
    write_frontier(f, estimates);
    CHECK(read_estimates(f, "f.csv") == estimates);
}

TEST_CASE("measurement rows round trip, including missing fields")
{
    const std::vector<MeasurementRow> rows{
        {.app = "a", .config = {1, 2, 1e9, 8e8}, .time_s = 1.25, .power_w = 3.5, .repeat = 0},
        {.app = "a", .config = {0, 4, 1e9, 8e8}, .time_s = std::nullopt, .power_w = 2.0, .repeat = 1},
        {.app = "b", .config = {4, 0, 2e9, 2e8}, .time_s = 0.5, .power_w = std::nullopt, .repeat = 0},
    };
    std::stringstream s;
    write_measurement_rows(s, rows);
    const auto back = read_measurement_rows(s, "m.csv");
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back[i].first == i + 2);
        CHECK(back[i].second == rows[i]);
    }
}

TEST_CASE("small tables")
{
    std::istringstream pairs("f_hz,t_little_s,t_big_s\n1000000000,2,1\n");
    const auto p = read_speedup_pairs(pairs, "p.csv");
    REQUIRE(p.size() == 1);
    CHECK(p[0].t_little_s == 2.0);

    std::istringstream refs("label,time_s,energy_j\nondemand,3.5,20\n");
    const auto r = read_references(refs, "r.csv");
    REQUIRE(r.size() == 1);
    CHECK(r[0].label == "ondemand");
    CHECK(r[0].energy_j == 20.0);

    std::istringstream trace("t_s,power_w\n0,1\n1,2\n");
    CHECK(read_power_trace(trace, "t.csv").size() == 2);

    std::istringstream configs("b,l,fb_hz,fl_hz\n1,1,1000000000,x\n");
    CHECK_THROWS_AS(read_configurations(configs, "c.csv"), ParseError);
}

TEST_CASE("json parameter documents")
{
    const PlatformSpec odroid = odroid_xu3();
    CHECK(platform_from_json(platform_to_json(odroid)) == odroid);

    const PerfParams p = testing::perf_with(0.9384);
    CHECK(perf_params_from_json(perf_params_to_json(p)) == p);

    const PowerParams q = testing::odroid_power();
    CHECK(power_params_from_json(power_params_to_json(q), odroid) == q);

    CHECK_THROWS_AS(perf_params_from_json(json{{"f", 0.5}}), ParseError);
    CHECK_THROWS_AS(perf_params_from_json(json{{"f", "half"}, {"perf", 2}, {"tl_ref_s", 1}, {"f_ref_hz", 1e9}}),
                    ParseError);
    CHECK_THROWS_AS(perf_params_from_json(json{{"f", 1.5}, {"perf", 2}, {"tl_ref_s", 1}, {"f_ref_hz", 1e9}}),
                    ValidationError);
    json bad = platform_to_json(odroid);
    bad["big"]["core_count"] = 2.5;
    CHECK_THROWS_AS(platform_from_json(bad), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/params.json"), ParseError);

    FitReport<PerfParams> report{.params = p, .rmse = 0.25, .n_points = 7, .iterations = 3, .converged = true};
    const json doc = fit_report_to_json(report);
    CHECK(doc["f"] == 0.9384);
    CHECK(doc["n_points"] == 7);
    CHECK(doc["identifiable"] == true);
}
