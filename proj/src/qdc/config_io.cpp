// SPDX-License-Identifier: Apache-2.0
#include "qdc/config_io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <string_view>

#include "qdc/errors.hpp"
#include "qdc/version.hpp"

namespace qdc {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  try {
    return json::parse(in);  // parse errors carry line/column
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (std::string_view k : allowed) {
      if (key == k) { known = true; break; }
    }
    if (!known) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing required field '" + key + "'");
  return obj.at(key);
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError(field + ": expected a number");
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ParseError(field + ": expected an integer");
  return v.get<long long>();
}

std::vector<double> as_number_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError(field + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_number(x, field));
  return out;
}

int parse_qubit_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const int q = std::stoi(key, &used);
    if (used != key.size() || q < 0) throw std::invalid_argument(key);
    return q;
  } catch (const std::exception&) {
    throw ParseError(where + ": bad qubit key '" + key + "'");
  }
}

std::pair<int, int> parse_cnot_key(const std::string& key) {
  const auto sep = key.find("->");
  if (sep == std::string::npos) {
    throw ParseError("cnot_error: key '" + key + "' is not of the form 'control->target'");
  }
  return {parse_qubit_key(key.substr(0, sep), "cnot_error"),
          parse_qubit_key(key.substr(sep + 2), "cnot_error")};
}

}  // namespace

NoiseModel parse_noise_model(const json& doc) {
  if (!doc.is_object()) throw ParseError("noise model: expected a JSON object");
  reject_unknown_keys(doc, {"qubits", "cnot_error"}, "noise model");
  NoiseModel model;

  const json& qubits = require_field(doc, "qubits", "noise model");
  if (!qubits.is_object()) throw ParseError("qubits: expected an object");
  for (const auto& [key, entry] : qubits.items()) {
    const int q = parse_qubit_key(key, "qubits");
    if (!entry.is_object()) throw ParseError("qubits." + key + ": expected an object");
    reject_unknown_keys(entry, {"gate_error", "readout_error", "t1_us", "t2_us"},
                        "qubits." + key);
    QubitNoise n;
    n.gate_error = as_number(require_field(entry, "gate_error", "qubits." + key),
                             "qubits." + key + ".gate_error");
    n.readout_error = as_number(require_field(entry, "readout_error", "qubits." + key),
                                "qubits." + key + ".readout_error");
    if (entry.contains("t1_us")) n.t1_us = as_number(entry.at("t1_us"), "t1_us");
    if (entry.contains("t2_us")) n.t2_us = as_number(entry.at("t2_us"), "t2_us");
    model.per_qubit[q] = n;
  }

  if (doc.contains("cnot_error")) {
    const json& cnot = doc.at("cnot_error");
    if (!cnot.is_object()) throw ParseError("cnot_error: expected an object");
    for (const auto& [key, value] : cnot.items()) {
      model.cnot_error[parse_cnot_key(key)] = as_number(value, "cnot_error." + key);
    }
  }

  model.validate();
  return model;
}

NoiseModel load_noise_model(const std::string& path) { return parse_noise_model(load_json(path)); }

SweepConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ParseError("config: expected a JSON object");
  reject_unknown_keys(doc,
                      {"scheme", "alpha_values", "phi_values", "mode", "shots", "repetitions",
                       "seed", "noise"},
                      "config");
  SweepConfig config;

  const json& scheme = require_field(doc, "scheme", "config");
  if (!scheme.is_string()) throw ParseError("scheme: expected a string");
  if (const auto s = scheme_from_name(scheme.get<std::string>())) {
    config.scheme = *s;
  } else {
    throw DomainError("scheme: must be 'QDCE' or 'EA-QDCE'");
  }

  config.alpha_values = as_number_array(require_field(doc, "alpha_values", "config"),
                                        "alpha_values");
  config.phi_values = as_number_array(require_field(doc, "phi_values", "config"), "phi_values");

  const json& mode = require_field(doc, "mode", "config");
  if (!mode.is_string()) throw ParseError("mode: expected a string");
  if (const auto m = mode_from_name(mode.get<std::string>())) {
    config.mode = *m;
  } else {
    throw DomainError("mode: must be 'exact' or 'sampled'");
  }

  if (doc.contains("shots")) config.shots = as_integer(doc.at("shots"), "shots");
  if (doc.contains("repetitions")) {
    config.repetitions = as_integer(doc.at("repetitions"), "repetitions");
  }
  if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    if (!seed.is_number_integer() || as_integer(seed, "seed") < 0) {
      throw ParseError("seed: expected a non-negative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("noise")) config.noise = parse_noise_model(doc.at("noise"));

  config.validate();  // DomainError on bad shots, empty grids, ...
  return config;
}

SweepConfig load_config(const std::string& path) { return parse_config(load_json(path)); }

json noise_to_json(const NoiseModel& noise) {
  json qubits = json::object();
  for (const auto& [q, n] : noise.per_qubit) {
    qubits[std::to_string(q)] = {{"gate_error", n.gate_error},
                                 {"readout_error", n.readout_error},
                                 {"t1_us", n.t1_us},
                                 {"t2_us", n.t2_us}};
  }
  json cnot = json::object();
  for (const auto& [pair, p] : noise.cnot_error) {
    cnot[std::to_string(pair.first) + "->" + std::to_string(pair.second)] = p;
  }
  return {{"qubits", std::move(qubits)}, {"cnot_error", std::move(cnot)}};
}

json config_to_json(const SweepConfig& config) {
  json doc = {{"scheme", scheme_name(config.scheme)},
              {"alpha_values", config.alpha_values},
              {"phi_values", config.phi_values},
              {"mode", mode_name(config.mode)},
              {"shots", config.shots},
              {"repetitions", config.repetitions},
              {"seed", config.seed}};
  if (config.noise) doc["noise"] = noise_to_json(*config.noise);
  return doc;
}

std::string config_hash(const SweepConfig& config) {
  const std::string canonical = config_to_json(config).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_manifest(const SweepConfig& config, const std::vector<std::string>& outputs,
                    const std::string& path) {
  char stamp[32] = "unknown";
  const std::time_t now = std::time(nullptr);
  if (std::tm tm_utc{}; gmtime_r(&now, &tm_utc) != nullptr) {
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  }
  const json doc = {{"tool", "qdc"},
                    {"version", kVersion},
                    {"generated_utc", stamp},
                    {"config", config_to_json(config)},
                    {"config_hash", config_hash(config)},
                    {"outputs", outputs}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << doc.dump(2) << '\n';
  if (!out.flush()) throw IoError("write failed: " + path);
}

}  // namespace qdc
