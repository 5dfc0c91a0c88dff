// SPDX-License-Identifier: Apache-2.0
//
// JSON documents: sweep configs, noise models, and the per-run manifest.
// Loaders are strict: unknown keys are rejected and domain violations name
// the offending field.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qdc/experiment.hpp"

namespace qdc {

SweepConfig parse_config(const nlohmann::json& doc);
SweepConfig load_config(const std::string& path);

NoiseModel parse_noise_model(const nlohmann::json& doc);
NoiseModel load_noise_model(const std::string& path);

nlohmann::json config_to_json(const SweepConfig& config);
nlohmann::json noise_to_json(const NoiseModel& noise);

/// FNV-1a 64 over the canonical config JSON, as "fnv1a64:<16 hex digits>".
std::string config_hash(const SweepConfig& config);

/// Provenance document written next to every output: tool version, UTC
/// timestamp, full config echo, config hash, and the produced files.
void write_manifest(const SweepConfig& config, const std::vector<std::string>& outputs,
                    const std::string& path);

}  // namespace qdc
