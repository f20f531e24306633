// Copyright 2026 The qroute developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "qroute/bench.hpp"
#include "qroute/random_circuit.hpp"
#include "qroute/records_io.hpp"

using namespace qroute;

namespace {

SuiteConfig small_config() {
  SuiteConfig config;
  config.circuits.emplace_back("alpha", random_circuit(4, 20, 0.5, 11));
  config.circuits.emplace_back("beta", random_circuit(5, 25, 0.5, 12));
  config.repetitions = 3;
  config.seed_base = 7;
  config.jobs = 1;
  return config;
}

}  // namespace

TEST_CASE("quantiles interpolate linearly") {
  using detail::quantile;
  const std::vector<double> four{1.0, 2.0, 3.0, 4.0};
  REQUIRE(quantile(four, 0.5) == 2.5);
  REQUIRE(quantile(four, 0.25) == 1.75);
  REQUIRE(quantile(four, 0.75) == 3.25);
  REQUIRE(quantile(four, 0.0) == 1.0);
  REQUIRE(quantile(four, 1.0) == 4.0);
  REQUIRE(quantile({5.0}, 0.5) == 5.0);
  REQUIRE(quantile({}, 0.5) == 0.0);
  REQUIRE(quantile({2.0, 10.0}, 0.5) == 6.0);
}

TEST_CASE("a sweep runs the full grid in task order") {
  SuiteConfig config = small_config();
  config.grid.discounts = {0.0, 0.1};
  config.grid.horizons = {10, 40};
  const CouplingGraph g = make_grid(2, 3);
  const SuiteResult result = run_suite(config, g);

  // 2 circuits x 2 discounts x 2 horizons x 3 repetitions.
  REQUIRE(result.records.size() == 24);
  REQUIRE(result.aggregates.size() == 8);

  std::size_t i = 0;
  for (const char* name : {"alpha", "beta"}) {
    for (const double discount : {0.0, 0.1}) {
      for (const std::int32_t horizon : {10, 40}) {
        for (std::int32_t rep = 0; rep < 3; ++rep, ++i) {
          const RunRecord& rec = result.records[i];
          REQUIRE(rec.circuit == name);
          REQUIRE(rec.discount == discount);
          REQUIRE(rec.horizon == horizon);
          REQUIRE(rec.seed == config.seed_base + static_cast<std::uint64_t>(rep));
          REQUIRE(rec.swap_count >= 0);
          REQUIRE(rec.verified);
          REQUIRE(rec.error.empty());
          REQUIRE(rec.normalized_swaps ==
                  static_cast<double>(rec.swap_count) /
                      static_cast<double>(rec.gates));
        }
      }
    }
  }

  for (const AggregateRow& row : result.aggregates) {
    REQUIRE(row.runs == 3);
    REQUIRE(row.failures == 0);
    REQUIRE(row.q1_swaps <= row.median_swaps);
    REQUIRE(row.median_swaps <= row.q3_swaps);
    REQUIRE(row.iqr_swaps == row.q3_swaps - row.q1_swaps);
  }
}

TEST_CASE("records do not depend on the number of worker threads") {
  SuiteConfig config = small_config();
  const CouplingGraph g = make_grid(2, 3);
  const SuiteResult serial = run_suite(config, g);
  config.jobs = 3;
  const SuiteResult threaded = run_suite(config, g);
  REQUIRE(records_csv(serial.records) == records_csv(threaded.records));
  REQUIRE(aggregates_csv(serial.aggregates) ==
          aggregates_csv(threaded.aggregates));

  // And a rerun of the same configuration is byte-identical.
  const SuiteResult again = run_suite(config, g);
  REQUIRE(records_csv(again.records) == records_csv(serial.records));
}

TEST_CASE("failures are recorded instead of thrown") {
  SuiteConfig config;
  config.circuits.emplace_back("too-big", random_circuit(9, 15, 0.5, 3));
  config.circuits.emplace_back("fits", random_circuit(3, 15, 0.5, 4));
  config.repetitions = 2;
  config.jobs = 1;
  const CouplingGraph g = make_grid(2, 3);  // six vertices
  const SuiteResult result = run_suite(config, g);

  REQUIRE(result.records.size() == 4);
  for (std::size_t i = 0; i < 2; ++i) {
    REQUIRE(result.records[i].swap_count == -1);
    REQUIRE_FALSE(result.records[i].error.empty());
    REQUIRE_FALSE(result.records[i].verified);
  }
  for (std::size_t i = 2; i < 4; ++i) {
    REQUIRE(result.records[i].swap_count >= 0);
    REQUIRE(result.records[i].verified);
  }

  REQUIRE(result.aggregates.size() == 2);
  REQUIRE(result.aggregates[0].failures == 2);
  REQUIRE(result.aggregates[0].runs == 2);
  REQUIRE(result.aggregates[0].mean_swaps == 0.0);
  REQUIRE(result.aggregates[1].failures == 0);
}

TEST_CASE("sweep configurations are validated") {
  SuiteConfig config = small_config();
  config.repetitions = 0;
  REQUIRE_THROWS_AS(run_suite(config, make_grid(2, 3)), std::invalid_argument);
}

TEST_CASE("csv outputs carry stable headers and one line per row") {
  SuiteConfig config = small_config();
  config.circuits.resize(1);
  const SuiteResult result = run_suite(config, make_grid(2, 3));

  const std::string records = records_csv(result.records);
  std::istringstream rin(records);
  std::string header;
  std::getline(rin, header);
  REQUIRE(header ==
          "circuit,qubits,gates,discount,horizon,lookahead_depth,placement,"
          "layering,seed,swap_count,normalized_swaps,verified,error");
  std::size_t lines = 0;
  for (std::string line; std::getline(rin, line);) ++lines;
  REQUIRE(lines == result.records.size());

  const std::string aggregates = aggregates_csv(result.aggregates);
  std::istringstream ain(aggregates);
  std::getline(ain, header);
  REQUIRE(header ==
          "circuit,qubits,gates,discount,horizon,lookahead_depth,placement,"
          "layering,runs,failures,mean_swaps,median_swaps,q1_swaps,q3_swaps,"
          "iqr_swaps,median_normalized,iqr_normalized");
  lines = 0;
  for (std::string line; std::getline(ain, line);) ++lines;
  REQUIRE(lines == result.aggregates.size());
}

TEST_CASE("jsonl records parse back with their timing") {
  SuiteConfig config = small_config();
  config.circuits.resize(1);
  const SuiteResult result = run_suite(config, make_grid(2, 3));
  const std::string jsonl = records_jsonl(result.records);

  std::istringstream in(jsonl);
  std::size_t parsed = 0;
  for (std::string line; std::getline(in, line); ++parsed) {
    const nlohmann::json j = nlohmann::json::parse(line);
    REQUIRE(j.at("schema_version").get<int>() == 1);
    REQUIRE(j.at("circuit").get<std::string>() == "alpha");
    REQUIRE(j.at("swap_count").get<std::int64_t>() ==
            result.records[parsed].swap_count);
    REQUIRE(j.at("wall_ms").get<double>() >= 0.0);
    REQUIRE(j.at("verified").get<bool>());
  }
  REQUIRE(parsed == result.records.size());
}

TEST_CASE("placement records survive a disk round trip") {
  PlacementRecord rec;
  rec.num_qubits = 3;
  rec.num_vertices = 5;
  rec.initial = {4, 0, 2};
  rec.final = {2, 0, 4};
  rec.swap_count = 17;
  const std::string path = "/tmp/qroute_test_placement_record.json";
  write_placement_record(rec, path);
  const PlacementRecord back = read_placement_record(path);
  REQUIRE(back.num_qubits == rec.num_qubits);
  REQUIRE(back.num_vertices == rec.num_vertices);
  REQUIRE(back.initial == rec.initial);
  REQUIRE(back.final == rec.final);
  REQUIRE(back.swap_count == rec.swap_count);
  std::remove(path.c_str());
}

TEST_CASE("malformed placement records are rejected") {
  const std::string path = "/tmp/qroute_test_bad_record.json";

  SECTION("unsupported version") {
    std::ofstream(path) << R"({"format_version": 2, "num_qubits": 1,
      "num_vertices": 1, "initial": [0], "final": [0]})";
    REQUIRE_THROWS_AS(read_placement_record(path), std::runtime_error);
  }

  SECTION("array length mismatch") {
    std::ofstream(path) << R"({"format_version": 1, "num_qubits": 2,
      "num_vertices": 3, "initial": [0], "final": [0, 1]})";
    REQUIRE_THROWS_AS(read_placement_record(path), std::runtime_error);
  }

  SECTION("missing file") {
    REQUIRE_THROWS_AS(read_placement_record("/tmp/qroute_no_such_record.json"),
                      std::runtime_error);
  }

  std::remove(path.c_str());
}
