// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "qdc/config_io.hpp"
#include "qdc/csv.hpp"
#include "qdc/errors.hpp"
#include "qdc/report.hpp"
#include "qdc/svg.hpp"

using qdc::IntensityRecord;
using qdc::Mode;
using qdc::NoiseModel;
using qdc::Scheme;
using qdc::Series;
using qdc::SweepConfig;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qdc_io_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

// Tag-balance well-formedness scan, enough to catch broken emission.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    const bool closing = tag[0] == '/';
    const bool self_closing = tag.back() == '/';
    if (closing) tag = tag.substr(1);
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

IntensityRecord exact_record(double alpha, double phi, double e0) {
  IntensityRecord r;
  r.scheme = Scheme::Qdce;
  r.alpha = alpha;
  r.phi = phi;
  r.mode = Mode::Exact;
  r.e0 = e0;
  r.e1 = 1.0 - e0;
  return r;
}

SweepConfig sample_config() {
  SweepConfig config;
  config.scheme = Scheme::EaQdce;
  config.alpha_values = {0.0, kPi / 4};
  config.phi_values = {0.0, kPi, 2 * kPi};
  config.mode = Mode::Sampled;
  config.shots = 1024;
  config.repetitions = 2;
  config.seed = 99;
  config.noise = qdc::load_noise_model(std::string(QDC_CONFIG_DIR) + "/melbourne_q8_q9_q10.json");
  return config;
}

}  // namespace

TEST_CASE("csv golden row for the open interferometer") {
  const std::string text = qdc::format_records_csv({exact_record(0.0, 0.0, 0.5)});
  CHECK(text == std::string(qdc::kRecordCsvHeader) + "\n" + "QDCE,0,0,,exact,0.5,0.5,,,,,\n");
}

TEST_CASE("csv of an empty record list is header-only") {
  CHECK(qdc::format_records_csv({}) == std::string(qdc::kRecordCsvHeader) + "\n");
}

TEST_CASE("csv rows are sorted by alpha, phi and branch") {
  std::vector<IntensityRecord> records = {
      exact_record(1.0, 0.0, 0.5), exact_record(0.0, 1.0, 0.5), exact_record(0.0, 0.0, 0.5)};
  records[0].branch = 1;
  const std::string text = qdc::format_records_csv(records);
  const std::size_t first = text.find("QDCE,0,0,");
  const std::size_t second = text.find("QDCE,0,1,");
  const std::size_t third = text.find("QDCE,1,0,1,");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  REQUIRE(third != std::string::npos);
  CHECK(first < second);
  CHECK(second < third);
}

TEST_CASE("csv values carry 12 significant digits") {
  const std::string text = qdc::format_records_csv({exact_record(0.0, kPi, 0.5)});
  CHECK(text.find("3.14159265359") != std::string::npos);
}

TEST_CASE("csv round-trips through its own parser") {
  const auto records = qdc::run_sweep(sample_config());
  const std::string text = qdc::format_records_csv(records);
  const auto parsed = qdc::parse_records_csv(text);
  CHECK(qdc::format_records_csv(parsed) == text);
  REQUIRE(parsed.size() == records.size());
  CHECK(parsed.front().branch.has_value());
  CHECK(parsed.front().shots_used == records.front().shots_used);
}

TEST_CASE("csv parser rejects malformed documents") {
  CHECK_THROWS_AS(qdc::parse_records_csv(""), qdc::ParseError);
  CHECK_THROWS_AS(qdc::parse_records_csv("bogus,header\n"), qdc::ParseError);
  const std::string bad_row = std::string(qdc::kRecordCsvHeader) + "\nQDCE,0,0,,exact,0.5\n";
  CHECK_THROWS_AS(qdc::parse_records_csv(bad_row), qdc::ParseError);
}

TEST_CASE("exact csv bytes are reproducible") {
  SweepConfig config;
  config.scheme = Scheme::Qdce;
  config.alpha_values = {0.0, kPi / 2};
  config.phi_values = {0.0, kPi / 3, kPi};
  CHECK(qdc::format_records_csv(qdc::run_sweep(config)) ==
        qdc::format_records_csv(qdc::run_sweep(config)));
}

TEST_CASE("line plot svg is well formed and complete") {
  std::vector<Series> series(2);
  series[0].label = "α=0";
  series[1].label = "α=π/2";
  for (int k = 0; k <= 20; ++k) {
    const double phi = 2.0 * kPi * k / 20;
    series[0].points.emplace_back(phi, 0.5);
    series[1].points.emplace_back(phi, std::pow(std::cos(phi / 2), 2));
  }
  const std::string svg = qdc::render_svg_lineplot(series, "phi", "intensity", "fringes");
  CHECK(xml_well_formed(svg));
  CHECK(count_occurrences(svg, "<polyline") == 2);
  CHECK(svg.find("α=0") != std::string::npos);
  CHECK(svg.find("α=π/2") != std::string::npos);
  CHECK(svg.find("<svg") != std::string::npos);

  // The constant series maps to a horizontal polyline: one distinct y.
  const std::size_t poly = svg.find("<polyline");
  const std::size_t points = svg.find("points='", poly);
  const std::size_t end = svg.find("'", points + 8);
  std::string first_points = svg.substr(points + 8, end - points - 8);
  std::string first_y;
  bool all_equal = true;
  std::size_t pos = 0;
  while (pos < first_points.size()) {
    const std::size_t comma = first_points.find(',', pos);
    if (comma == std::string::npos) break;
    const std::size_t space = first_points.find(' ', comma);
    const std::string y = first_points.substr(comma + 1, space - comma - 1);
    if (first_y.empty()) first_y = y;
    if (y != first_y) all_equal = false;
    pos = space + 1;
  }
  CHECK(all_equal);
}

TEST_CASE("line plot rejects degenerate inputs") {
  CHECK_THROWS_AS(qdc::render_svg_lineplot({}, "x", "y", ""), qdc::DomainError);
  Series empty;
  empty.label = "empty";
  CHECK_THROWS_AS(qdc::render_svg_lineplot({empty}, "x", "y", ""), qdc::DomainError);
  Series bad;
  bad.label = "nan";
  bad.points.emplace_back(0.0, std::nan(""));
  CHECK_THROWS_AS(qdc::render_svg_lineplot({bad}, "x", "y", ""), qdc::DomainError);
}

TEST_CASE("heatmap svg colors cells by value") {
  const std::string single = qdc::render_svg_heatmap({{1.0}}, {0.0}, {0.0}, "phi", "alpha", "");
  CHECK(xml_well_formed(single));
  CHECK(single.find("#ffffff") != std::string::npos);

  const std::string gray =
      qdc::render_svg_heatmap({{0.5, 0.5, 0.5}}, {0.0}, {0.0, 1.0, 2.0}, "phi", "alpha", "");
  CHECK(count_occurrences(gray, "#808080") == 3);

  // one rect per cell + 32 color-bar bands + 1 background
  const std::string two_rows = qdc::render_svg_heatmap({{0.0, 1.0}, {0.25, 0.75}}, {0.0, 1.0},
                                                       {0.0, 1.0}, "phi", "alpha", "surface");
  CHECK(count_occurrences(two_rows, "<rect") == 4 + 32 + 1);
}

TEST_CASE("heatmap rejects ragged grids and out-of-range values") {
  CHECK_THROWS_AS(qdc::render_svg_heatmap({{0.1}, {0.1, 0.2}}, {0, 1}, {0}, "x", "y", ""),
                  qdc::DomainError);
  CHECK_THROWS_AS(qdc::render_svg_heatmap({{1.5}}, {0}, {0}, "x", "y", ""), qdc::DomainError);
  CHECK_THROWS_AS(qdc::render_svg_heatmap({{0.5}}, {0, 1}, {0}, "x", "y", ""), qdc::DomainError);
}

TEST_CASE("bundled device noise file carries the documented rates") {
  const NoiseModel noise =
      qdc::load_noise_model(std::string(QDC_CONFIG_DIR) + "/melbourne_q8_q9_q10.json");
  CHECK(noise.per_qubit.at(0).gate_error == 0.004);
  CHECK(noise.per_qubit.at(0).readout_error == 0.044);
  CHECK(noise.per_qubit.at(0).t1_us == 64.225);
  CHECK(noise.per_qubit.at(0).t2_us == 94.455);
  CHECK(noise.per_qubit.at(1).gate_error == 0.005);
  CHECK(noise.per_qubit.at(1).readout_error == 0.044);
  CHECK(noise.per_qubit.at(2).gate_error == 0.003);
  CHECK(noise.per_qubit.at(2).readout_error == 0.039);
  CHECK(noise.cnot_error.at({1, 0}) == 0.06);
  CHECK(noise.cnot_error.at({1, 2}) == 0.05);
}

TEST_CASE("noise model parsing is strict") {
  using nlohmann::json;
  CHECK_THROWS_WITH_AS(qdc::parse_noise_model(json{{"qubitz", json::object()}}),
                       doctest::Contains("unknown key"), qdc::ParseError);
  CHECK_THROWS_WITH_AS(
      qdc::parse_noise_model(json{{"qubits", {{"x", json::object()}}}}),
      doctest::Contains("qubit key"), qdc::ParseError);
  const json missing = {{"qubits", {{"0", {{"gate_error", 0.1}}}}}};
  CHECK_THROWS_WITH_AS(qdc::parse_noise_model(missing), doctest::Contains("readout_error"),
                       qdc::ParseError);
  const json bad_rate = {
      {"qubits", {{"0", {{"gate_error", 1.4}, {"readout_error", 0.0}}}}}};
  CHECK_THROWS_AS(qdc::parse_noise_model(bad_rate), qdc::DomainError);
  const json bad_pair = {{"qubits", json::object()}, {"cnot_error", {{"1-0", 0.1}}}};
  CHECK_THROWS_AS(qdc::parse_noise_model(bad_pair), qdc::ParseError);
}

TEST_CASE("sweep config loading validates schema and domains") {
  const auto path = temp_file("config.json");

  spit(path, R"({"alpha_values": [0], "phi_values": [0], "mode": "exact"})");
  CHECK_THROWS_WITH_AS(qdc::load_config(path.string()), doctest::Contains("scheme"),
                       qdc::ParseError);

  spit(path, R"({"scheme": "QDCE", "alpha_values": [0], "phi_values": [0],
                 "mode": "exact", "extra": 1})");
  CHECK_THROWS_WITH_AS(qdc::load_config(path.string()), doctest::Contains("extra"),
                       qdc::ParseError);

  spit(path, R"({"scheme": "QDCE", "alpha_values": [0], "phi_values": [0],
                 "mode": "sampled", "shots": 0})");
  CHECK_THROWS_WITH_AS(qdc::load_config(path.string()), doctest::Contains("shots"),
                       qdc::DomainError);

  spit(path, R"({"scheme": "QDCE", "alpha_values": [0], "phi_values": [0] "mode")");
  CHECK_THROWS_WITH_AS(qdc::load_config(path.string()), doctest::Contains("line"),
                       qdc::ParseError);

  spit(path, R"({"scheme": "QDCE", "alpha_values": [0, 0.5], "phi_values": [0, 1, 2],
                 "mode": "sampled", "shots": 64, "repetitions": 2, "seed": 7})");
  const SweepConfig config = qdc::load_config(path.string());
  CHECK(config.scheme == Scheme::Qdce);
  CHECK(config.alpha_values.size() == 2);
  CHECK(config.shots == 64);
  CHECK(config.seed == 7);
  CHECK(!config.noise.has_value());

  std::filesystem::remove(path);
  CHECK_THROWS_AS(qdc::load_config(path.string()), qdc::IoError);
}

TEST_CASE("config json round-trips") {
  const SweepConfig config = sample_config();
  const SweepConfig reloaded = qdc::parse_config(qdc::config_to_json(config));
  CHECK(reloaded == config);
  CHECK(qdc::config_hash(reloaded) == qdc::config_hash(config));
}

TEST_CASE("config hash is stable and format-tagged") {
  const std::string hash = qdc::config_hash(sample_config());
  CHECK(hash.rfind("fnv1a64:", 0) == 0);
  CHECK(hash.size() == 8 + 16);

  SweepConfig other = sample_config();
  other.seed += 1;
  CHECK(qdc::config_hash(other) != hash);
}

TEST_CASE("manifest lists provenance next to outputs") {
  const auto path = temp_file("manifest.json");
  qdc::write_manifest(sample_config(), {"a.csv", "a.svg"}, path.string());
  const nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("tool") == "qdc");
  CHECK(doc.at("version").get<std::string>().size() > 0);
  CHECK(doc.at("config_hash") == qdc::config_hash(sample_config()));
  CHECK(doc.at("outputs").size() == 2);
  CHECK(qdc::parse_config(doc.at("config")) == sample_config());
  std::filesystem::remove(path);
}

TEST_CASE("comparison csv and report include the closed-form discrepancy") {
  const std::vector<double> alphas = {0.0, kPi / 2};
  std::vector<double> phis;
  for (int k = 0; k < 9; ++k) phis.push_back(2.0 * kPi * k / 8);
  const qdc::QmHvComparison cmp = qdc::compare_qm_hv(alphas, phis);

  const std::string csv = qdc::format_comparison_csv(cmp);
  CHECK(csv.rfind("alpha,phi,qm_e0_branch0,hv_e0,abs_diff\n", 0) == 0);
  CHECK(count_occurrences(csv, "\n") == 1 + alphas.size() * phis.size());
  CHECK(csv.find("0.75") != std::string::npos);  // hv at phi=0

  const std::string report = qdc::format_comparison_report(cmp);
  CHECK(report.find("DISCREPANCY") != std::string::npos);
  CHECK(report.find(": 1\n") != std::string::npos);     // closed form at alpha=0
  CHECK(report.find(": 0.5\n") != std::string::npos);   // simulated conditional
  CHECK(report.find(": 0.25\n") != std::string::npos);  // simulated joint
}

TEST_CASE("file writers surface io failures") {
  const auto records = qdc::run_sweep(sample_config());
  CHECK_THROWS_AS(qdc::write_records_csv(records, "/nonexistent-dir/x.csv"), qdc::IoError);
  CHECK_THROWS_AS(qdc::write_svg_lineplot({Series{"s", {{0, 0}, {1, 1}}}},
                                          "/nonexistent-dir/x.svg", "x", "y", ""),
                  qdc::IoError);
}
