// SPDX-License-Identifier: Apache-2.0
#include "qdc/qdc.h"

#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "qdc/analytic.hpp"
#include "qdc/circuits.hpp"
#include "qdc/config_io.hpp"
#include "qdc/csv.hpp"
#include "qdc/errors.hpp"
#include "qdc/experiment.hpp"
#include "qdc/report.hpp"
#include "qdc/svg.hpp"
#include "qdc/version.hpp"

struct qdc_noise_model {
  qdc::NoiseModel model;
};

struct qdc_config {
  qdc::SweepConfig config;
};

struct qdc_records {
  std::vector<qdc::IntensityRecord> records;
};

struct qdc_comparison {
  qdc::QmHvComparison cmp;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename F>
qdc_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return QDC_OK;
  } catch (const qdc::ImpossibleBranchError& e) {
    set_error(e.what());
    return QDC_ERROR_IMPOSSIBLE_BRANCH;
  } catch (const qdc::DomainError& e) {
    set_error(e.what());
    return QDC_ERROR_DOMAIN;
  } catch (const qdc::ParseError& e) {
    set_error(e.what());
    return QDC_ERROR_PARSE;
  } catch (const qdc::IoError& e) {
    set_error(e.what());
    return QDC_ERROR_IO;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QDC_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QDC_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return QDC_ERROR_INTERNAL;
  }
}

qdc_status invalid(const char* message) {
  set_error(message);
  return QDC_ERROR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qdc_version(void) { return qdc::kVersion; }

const char* qdc_status_name(qdc_status status) {
  switch (status) {
    case QDC_OK: return "ok";
    case QDC_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case QDC_ERROR_DOMAIN: return "domain_error";
    case QDC_ERROR_PARSE: return "parse_error";
    case QDC_ERROR_IO: return "io_error";
    case QDC_ERROR_IMPOSSIBLE_BRANCH: return "impossible_branch";
    case QDC_ERROR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* qdc_last_error(void) { return g_last_error.c_str(); }

void qdc_string_free(char* s) { delete[] s; }

/* ---- analytic ---- */

qdc_status qdc_qm_single(double alpha, double phi, double* e0, double* e1) {
  if (e0 == nullptr || e1 == nullptr) return invalid("qdc_qm_single: null output");
  return guarded([&] {
    const qdc::IntensityPair p = qdc::qm_single(alpha, phi);
    *e0 = p.e0;
    *e1 = p.e1;
  });
}

qdc_status qdc_qm_entangled_closed_form(double alpha, double phi, int branch, double* e0) {
  if (e0 == nullptr) return invalid("qdc_qm_entangled_closed_form: null output");
  return guarded([&] { *e0 = qdc::qm_entangled_closed_form(alpha, phi, branch); });
}

qdc_status qdc_qm_entangled_simulated(double alpha, double phi, int branch,
                                      double* conditional_e0, double* conditional_e1,
                                      double* joint_e0, double* joint_e1,
                                      double* branch_prob) {
  return guarded([&] {
    const qdc::BranchIntensities b = qdc::qm_entangled_simulated(alpha, phi, branch);
    if (conditional_e0 != nullptr) *conditional_e0 = b.conditional.e0;
    if (conditional_e1 != nullptr) *conditional_e1 = b.conditional.e1;
    if (joint_e0 != nullptr) *joint_e0 = b.joint.e0;
    if (joint_e1 != nullptr) *joint_e1 = b.joint.e1;
    if (branch_prob != nullptr) *branch_prob = b.branch_prob;
  });
}

qdc_status qdc_hv_intensity(double phi, double* e) {
  if (e == nullptr) return invalid("qdc_hv_intensity: null output");
  return guarded([&] { *e = qdc::hv_intensity(phi); });
}

qdc_status qdc_hv_monte_carlo(double phi, uint64_t n_samples, uint64_t seed, double* e) {
  if (e == nullptr) return invalid("qdc_hv_monte_carlo: null output");
  return guarded([&] { *e = qdc::hv_monte_carlo(phi, n_samples, seed); });
}

qdc_status qdc_visibility(const double* phi, const double* intensity, size_t n,
                          double* visibility) {
  if (phi == nullptr || intensity == nullptr || visibility == nullptr) {
    return invalid("qdc_visibility: null argument");
  }
  return guarded([&] {
    std::vector<std::pair<double, double>> curve;
    curve.reserve(n);
    for (size_t i = 0; i < n; ++i) curve.emplace_back(phi[i], intensity[i]);
    *visibility = qdc::fringe_visibility(curve);
  });
}

/* ---- circuits ---- */

qdc_status qdc_circuit_json(const char* scheme, double alpha, double phi, char** json_out) {
  if (scheme == nullptr || json_out == nullptr) return invalid("qdc_circuit_json: null argument");
  return guarded([&] {
    const auto s = qdc::scheme_from_name(scheme);
    if (!s) throw qdc::DomainError(std::string("unknown scheme '") + scheme + "'");
    const qdc::Circuit circuit = *s == qdc::Scheme::Qdce ? qdc::build_qdce(phi, alpha)
                                                         : qdc::build_ea_qdce(phi, alpha);
    *json_out = copy_string(qdc::circuit_to_json(circuit));
  });
}

/* ---- noise model ---- */

qdc_status qdc_noise_model_load(const char* path, qdc_noise_model** out) {
  if (path == nullptr || out == nullptr) return invalid("qdc_noise_model_load: null argument");
  return guarded([&] { *out = new qdc_noise_model{qdc::load_noise_model(path)}; });
}

void qdc_noise_model_free(qdc_noise_model* noise) { delete noise; }

/* ---- config ---- */

qdc_status qdc_config_create(qdc_config** out) {
  if (out == nullptr) return invalid("qdc_config_create: null output");
  return guarded([&] { *out = new qdc_config{}; });
}

void qdc_config_free(qdc_config* config) { delete config; }

qdc_status qdc_config_load(const char* path, qdc_config** out) {
  if (path == nullptr || out == nullptr) return invalid("qdc_config_load: null argument");
  return guarded([&] { *out = new qdc_config{qdc::load_config(path)}; });
}

qdc_status qdc_config_set_scheme(qdc_config* config, const char* scheme) {
  if (config == nullptr || scheme == nullptr) return invalid("qdc_config_set_scheme: null argument");
  return guarded([&] {
    const auto s = qdc::scheme_from_name(scheme);
    if (!s) throw qdc::DomainError(std::string("unknown scheme '") + scheme + "'");
    config->config.scheme = *s;
  });
}

qdc_status qdc_config_set_alpha_values(qdc_config* config, const double* values, size_t n) {
  if (config == nullptr || values == nullptr) {
    return invalid("qdc_config_set_alpha_values: null argument");
  }
  return guarded([&] { config->config.alpha_values.assign(values, values + n); });
}

qdc_status qdc_config_set_phi_values(qdc_config* config, const double* values, size_t n) {
  if (config == nullptr || values == nullptr) {
    return invalid("qdc_config_set_phi_values: null argument");
  }
  return guarded([&] { config->config.phi_values.assign(values, values + n); });
}

qdc_status qdc_config_set_mode(qdc_config* config, const char* mode) {
  if (config == nullptr || mode == nullptr) return invalid("qdc_config_set_mode: null argument");
  return guarded([&] {
    const auto m = qdc::mode_from_name(mode);
    if (!m) throw qdc::DomainError(std::string("unknown mode '") + mode + "'");
    config->config.mode = *m;
  });
}

qdc_status qdc_config_set_shots(qdc_config* config, long long shots) {
  if (config == nullptr) return invalid("qdc_config_set_shots: null config");
  return guarded([&] {
    if (shots < 1) throw qdc::DomainError("shots: must be >= 1");
    config->config.shots = shots;
  });
}

qdc_status qdc_config_set_repetitions(qdc_config* config, long long repetitions) {
  if (config == nullptr) return invalid("qdc_config_set_repetitions: null config");
  return guarded([&] {
    if (repetitions < 1) throw qdc::DomainError("repetitions: must be >= 1");
    config->config.repetitions = repetitions;
  });
}

qdc_status qdc_config_set_seed(qdc_config* config, uint64_t seed) {
  if (config == nullptr) return invalid("qdc_config_set_seed: null config");
  return guarded([&] { config->config.seed = seed; });
}

qdc_status qdc_config_set_noise(qdc_config* config, const qdc_noise_model* noise) {
  if (config == nullptr) return invalid("qdc_config_set_noise: null config");
  return guarded([&] {
    if (noise == nullptr) {
      config->config.noise.reset();
    } else {
      config->config.noise = noise->model;
    }
  });
}

qdc_status qdc_config_to_json(const qdc_config* config, char** json_out) {
  if (config == nullptr || json_out == nullptr) return invalid("qdc_config_to_json: null argument");
  return guarded([&] { *json_out = copy_string(qdc::config_to_json(config->config).dump(2)); });
}

/* ---- sweeps ---- */

qdc_status qdc_run_sweep(const qdc_config* config, qdc_records** out) {
  if (config == nullptr || out == nullptr) return invalid("qdc_run_sweep: null argument");
  return guarded([&] { *out = new qdc_records{qdc::run_sweep(config->config)}; });
}

void qdc_records_free(qdc_records* records) { delete records; }

size_t qdc_records_count(const qdc_records* records) {
  return records == nullptr ? 0 : records->records.size();
}

qdc_status qdc_records_get(const qdc_records* records, size_t index, qdc_record* out) {
  if (records == nullptr || out == nullptr) return invalid("qdc_records_get: null argument");
  if (index >= records->records.size()) return invalid("qdc_records_get: index out of range");
  return guarded([&] {
    const qdc::IntensityRecord& r = records->records[index];
    out->scheme = qdc::scheme_name(r.scheme);
    out->alpha = r.alpha;
    out->phi = r.phi;
    out->branch = r.branch.value_or(-1);
    out->mode = qdc::mode_name(r.mode);
    out->e0 = r.e0;
    out->e1 = r.e1;
    out->has_branch_fields = r.joint_e0.has_value() ? 1 : 0;
    out->joint_e0 = r.joint_e0.value_or(0.0);
    out->branch_prob = r.branch_prob.value_or(0.0);
    out->has_shot_stats = r.shots_used.has_value() ? 1 : 0;
    out->shots = r.shots_used.value_or(0);
    out->stderr0 = r.stderr0.value_or(0.0);
    out->stderr1 = r.stderr1.value_or(0.0);
  });
}

qdc_status qdc_records_filter_branch(const qdc_records* records, int branch,
                                     qdc_records** out) {
  if (records == nullptr || out == nullptr) {
    return invalid("qdc_records_filter_branch: null argument");
  }
  return guarded([&] {
    if (branch != 0 && branch != 1) throw qdc::DomainError("branch must be 0 or 1");
    auto filtered = new qdc_records{};
    for (const auto& r : records->records) {
      if (r.branch && *r.branch == branch) filtered->records.push_back(r);
    }
    *out = filtered;
  });
}

qdc_status qdc_records_write_csv(const qdc_records* records, const char* path) {
  if (records == nullptr || path == nullptr) return invalid("qdc_records_write_csv: null argument");
  return guarded([&] { qdc::write_records_csv(records->records, path); });
}

qdc_status qdc_records_to_csv(const qdc_records* records, char** csv_out) {
  if (records == nullptr || csv_out == nullptr) return invalid("qdc_records_to_csv: null argument");
  return guarded([&] { *csv_out = copy_string(qdc::format_records_csv(records->records)); });
}

/* ---- comparison ---- */

qdc_status qdc_compare_qm_hv(const double* alpha_values, size_t n_alpha,
                             const double* phi_values, size_t n_phi, qdc_comparison** out) {
  if (alpha_values == nullptr || phi_values == nullptr || out == nullptr) {
    return invalid("qdc_compare_qm_hv: null argument");
  }
  return guarded([&] {
    *out = new qdc_comparison{
        qdc::compare_qm_hv(std::span(alpha_values, n_alpha), std::span(phi_values, n_phi))};
  });
}

void qdc_comparison_free(qdc_comparison* cmp) { delete cmp; }

qdc_status qdc_comparison_size(const qdc_comparison* cmp, size_t* n_alpha, size_t* n_phi) {
  if (cmp == nullptr) return invalid("qdc_comparison_size: null comparison");
  if (n_alpha != nullptr) *n_alpha = cmp->cmp.rows.size();
  if (n_phi != nullptr) *n_phi = cmp->cmp.phi_values.size();
  return QDC_OK;
}

qdc_status qdc_comparison_max_abs_diff(const qdc_comparison* cmp, size_t alpha_index,
                                       double* out) {
  if (cmp == nullptr || out == nullptr) return invalid("qdc_comparison_max_abs_diff: null argument");
  if (alpha_index >= cmp->cmp.rows.size()) {
    return invalid("qdc_comparison_max_abs_diff: index out of range");
  }
  *out = cmp->cmp.rows[alpha_index].max_abs_diff;
  return QDC_OK;
}

qdc_status qdc_comparison_hv_curve(const qdc_comparison* cmp, double* values, size_t n_phi) {
  if (cmp == nullptr || values == nullptr) return invalid("qdc_comparison_hv_curve: null argument");
  if (n_phi != cmp->cmp.hv.size()) return invalid("qdc_comparison_hv_curve: size mismatch");
  std::memcpy(values, cmp->cmp.hv.data(), n_phi * sizeof(double));
  return QDC_OK;
}

qdc_status qdc_comparison_qm_curve(const qdc_comparison* cmp, size_t alpha_index,
                                   double* values, size_t n_phi) {
  if (cmp == nullptr || values == nullptr) return invalid("qdc_comparison_qm_curve: null argument");
  if (alpha_index >= cmp->cmp.rows.size()) {
    return invalid("qdc_comparison_qm_curve: index out of range");
  }
  const auto& curve = cmp->cmp.rows[alpha_index].qm_conditional_e0;
  if (n_phi != curve.size()) return invalid("qdc_comparison_qm_curve: size mismatch");
  std::memcpy(values, curve.data(), n_phi * sizeof(double));
  return QDC_OK;
}

qdc_status qdc_comparison_write_csv(const qdc_comparison* cmp, const char* path) {
  if (cmp == nullptr || path == nullptr) return invalid("qdc_comparison_write_csv: null argument");
  return guarded([&] { qdc::write_comparison_csv(cmp->cmp, path); });
}

qdc_status qdc_comparison_write_report(const qdc_comparison* cmp, const char* path) {
  if (cmp == nullptr || path == nullptr) {
    return invalid("qdc_comparison_write_report: null argument");
  }
  return guarded([&] { qdc::write_comparison_report(cmp->cmp, path); });
}

/* ---- plots and manifests ---- */

qdc_status qdc_svg_write_lineplot(const char* path, const char* title, const char* x_label,
                                  const char* y_label, const qdc_series* series,
                                  size_t n_series) {
  if (path == nullptr || series == nullptr) return invalid("qdc_svg_write_lineplot: null argument");
  return guarded([&] {
    std::vector<qdc::Series> converted;
    converted.reserve(n_series);
    for (size_t i = 0; i < n_series; ++i) {
      const qdc_series& s = series[i];
      if (s.x == nullptr || s.y == nullptr) {
        throw qdc::DomainError("svg lineplot: null series data");
      }
      qdc::Series out;
      out.label = s.label != nullptr ? s.label : "";
      out.points.reserve(s.n);
      for (size_t k = 0; k < s.n; ++k) out.points.emplace_back(s.x[k], s.y[k]);
      converted.push_back(std::move(out));
    }
    qdc::write_svg_lineplot(converted, path, x_label != nullptr ? x_label : "",
                            y_label != nullptr ? y_label : "", title != nullptr ? title : "");
  });
}

qdc_status qdc_svg_write_heatmap(const char* path, const char* title, const char* x_label,
                                 const char* y_label, const double* values, size_t n_rows,
                                 size_t n_cols, const double* row_coords,
                                 const double* col_coords) {
  if (path == nullptr || values == nullptr || row_coords == nullptr || col_coords == nullptr) {
    return invalid("qdc_svg_write_heatmap: null argument");
  }
  return guarded([&] {
    std::vector<std::vector<double>> grid(n_rows, std::vector<double>(n_cols));
    for (size_t r = 0; r < n_rows; ++r) {
      for (size_t c = 0; c < n_cols; ++c) grid[r][c] = values[r * n_cols + c];
    }
    qdc::write_svg_heatmap(grid, std::vector<double>(row_coords, row_coords + n_rows),
                           std::vector<double>(col_coords, col_coords + n_cols), path,
                           x_label != nullptr ? x_label : "", y_label != nullptr ? y_label : "",
                           title != nullptr ? title : "");
  });
}

qdc_status qdc_manifest_write(const qdc_config* config, const char* const* output_paths,
                              size_t n_outputs, const char* path) {
  if (config == nullptr || path == nullptr || (output_paths == nullptr && n_outputs > 0)) {
    return invalid("qdc_manifest_write: null argument");
  }
  return guarded([&] {
    std::vector<std::string> outputs;
    outputs.reserve(n_outputs);
    for (size_t i = 0; i < n_outputs; ++i) {
      outputs.emplace_back(output_paths[i] != nullptr ? output_paths[i] : "");
    }
    qdc::write_manifest(config->config, outputs, path);
  });
}

}  // extern "C"
