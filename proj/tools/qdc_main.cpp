// SPDX-License-Identifier: Apache-2.0
//
// qdc command line front end. Links the public C API only; all simulation,
// formatting and file emission happen behind qdc.h.
//
// Subcommands: qdce, ea-qdce, visibility, compare-hv, hv-mc.
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <ctime>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdc/qdc.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

int fail(qdc_status status) {
  std::fprintf(stderr, "qdc: %s: %s\n", qdc_status_name(status), qdc_last_error());
  return 1;
}

#define QDC_TRY(expr)                                   \
  do {                                                  \
    const qdc_status qdc_try_status = (expr);           \
    if (qdc_try_status != QDC_OK) return fail(qdc_try_status); \
  } while (0)

struct ConfigDeleter { void operator()(qdc_config* p) const { qdc_config_free(p); } };
struct NoiseDeleter { void operator()(qdc_noise_model* p) const { qdc_noise_model_free(p); } };
struct RecordsDeleter { void operator()(qdc_records* p) const { qdc_records_free(p); } };
struct ComparisonDeleter { void operator()(qdc_comparison* p) const { qdc_comparison_free(p); } };

using ConfigPtr = std::unique_ptr<qdc_config, ConfigDeleter>;
using NoisePtr = std::unique_ptr<qdc_noise_model, NoiseDeleter>;
using RecordsPtr = std::unique_ptr<qdc_records, RecordsDeleter>;
using ComparisonPtr = std::unique_ptr<qdc_comparison, ComparisonDeleter>;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (int k = 0; k < n; ++k) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1));
  }
  return grid;
}

// One full phase period sampled at n equally spaced points starting at 0
// (excludes the duplicate 2*pi endpoint, and hits pi exactly for even n).
std::vector<double> periodic_phase_grid(int n) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    grid.push_back(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return grid;
}

std::vector<double> default_alphas() { return {0.0, kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2}; }

std::string g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Options shared by the sweep-style subcommands.
struct SweepArgs {
  std::vector<double> alphas;
  int alpha_steps = 0;
  int phi_steps = 21;
  std::string mode = "exact";
  long long shots = 8192;
  long long reps = 3;
  std::uint64_t seed = 1;
  std::string noise_path;
  std::string config_path;
  std::string out;
  std::string svg;
  std::string heatmap;
  int branch = -1;
  bool degrees = false;
};

void add_common_options(CLI::App* cmd, SweepArgs& args, bool is_sweep) {
  cmd->add_option("--alpha", args.alphas,
                  "Ancilla rotation angle in radians (repeatable)");
  cmd->add_option("--alpha-steps", args.alpha_steps,
                  "Evenly spaced alpha grid over [0, pi/2] (overrides the default set)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--phi-steps", args.phi_steps, "Number of phase points over [0, 2*pi]")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--degrees", args.degrees, "Interpret --alpha values as degrees");
  cmd->add_option("--out", args.out, "Output CSV path")->required();
  cmd->add_option("--svg", args.svg, "Also render an SVG line plot to this path");
  if (is_sweep) {
    cmd->add_option("--mode", args.mode, "exact | sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    cmd->add_option("--shots", args.shots, "Shots per repetition in sampled mode")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--reps", args.reps, "Sampled-mode repetitions to pool")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "Base RNG seed (sampled mode)");
    cmd->add_option("--noise", args.noise_path, "Noise model JSON (device error rates)");
    cmd->add_option("--config", args.config_path,
                    "Sweep config JSON; explicit flags override its fields");
  }
}

std::vector<double> resolve_alphas(const SweepArgs& args) {
  if (!args.alphas.empty()) {
    std::vector<double> out = args.alphas;
    if (args.degrees) {
      for (double& a : out) a *= kPi / 180.0;
    }
    return out;
  }
  if (args.alpha_steps > 0) return linspace(0.0, kPi / 2, args.alpha_steps);
  return default_alphas();
}

int build_config(const CLI::App* cmd, const SweepArgs& args, const char* scheme,
                 ConfigPtr& config) {
  qdc_config* raw = nullptr;
  const bool from_file = !args.config_path.empty();
  if (from_file) {
    QDC_TRY(qdc_config_load(args.config_path.c_str(), &raw));
  } else {
    QDC_TRY(qdc_config_create(&raw));
  }
  config.reset(raw);
  QDC_TRY(qdc_config_set_scheme(raw, scheme));

  const bool alphas_given = cmd->count("--alpha") > 0 || cmd->count("--alpha-steps") > 0;
  if (!from_file || alphas_given) {
    const auto alphas = resolve_alphas(args);
    QDC_TRY(qdc_config_set_alpha_values(raw, alphas.data(), alphas.size()));
  }
  if (!from_file || cmd->count("--phi-steps") > 0) {
    const auto phis = linspace(0.0, 2.0 * kPi, args.phi_steps);
    QDC_TRY(qdc_config_set_phi_values(raw, phis.data(), phis.size()));
  }
  if (!from_file || cmd->count("--mode") > 0) QDC_TRY(qdc_config_set_mode(raw, args.mode.c_str()));
  if (!from_file || cmd->count("--shots") > 0) QDC_TRY(qdc_config_set_shots(raw, args.shots));
  if (!from_file || cmd->count("--reps") > 0) QDC_TRY(qdc_config_set_repetitions(raw, args.reps));
  if (!from_file || cmd->count("--seed") > 0) QDC_TRY(qdc_config_set_seed(raw, args.seed));
  if (!args.noise_path.empty()) {
    qdc_noise_model* noise = nullptr;
    QDC_TRY(qdc_noise_model_load(args.noise_path.c_str(), &noise));
    NoisePtr holder(noise);
    QDC_TRY(qdc_config_set_noise(raw, noise));
  }
  return 0;
}

int fetch_records(const qdc_records* records, std::vector<qdc_record>& out) {
  out.resize(qdc_records_count(records));
  for (std::size_t i = 0; i < out.size(); ++i) {
    QDC_TRY(qdc_records_get(records, i, &out[i]));
  }
  return 0;
}

// Polyline per alpha (and per branch for EA records), in first-seen order.
struct CurveKey {
  double alpha;
  int branch;
  bool operator==(const CurveKey&) const = default;
};

int write_lineplot(const std::vector<qdc_record>& records, const std::string& path,
                   const std::string& title) {
  std::vector<CurveKey> keys;
  for (const auto& r : records) {
    const CurveKey key{r.alpha, r.branch};
    bool seen = false;
    for (const auto& k : keys) {
      if (k == key) { seen = true; break; }
    }
    if (!seen) keys.push_back(key);
  }
  std::vector<std::string> labels(keys.size());
  std::vector<std::vector<double>> xs(keys.size());
  std::vector<std::vector<double>> ys(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    labels[k] = "\xce\xb1=" + short_num(keys[k].alpha);  // "α="
    if (keys[k].branch >= 0) labels[k] += " q2=" + std::to_string(keys[k].branch);
    for (const auto& r : records) {
      if (CurveKey{r.alpha, r.branch} == keys[k]) {
        xs[k].push_back(r.phi);
        ys[k].push_back(r.e0);
      }
    }
  }
  std::vector<qdc_series> series(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    series[k] = qdc_series{labels[k].c_str(), xs[k].data(), ys[k].data(), xs[k].size()};
  }
  QDC_TRY(qdc_svg_write_lineplot(path.c_str(), title.c_str(), "phi (rad)", "intensity E0",
                                 series.data(), series.size()));
  return 0;
}

int write_heatmap(const std::vector<qdc_record>& records, const std::string& path,
                  const std::string& title) {
  // Rows follow the records' alpha order, columns the phi order.
  std::vector<double> alphas;
  std::vector<double> phis;
  for (const auto& r : records) {
    if (alphas.empty() || alphas.back() != r.alpha) {
      bool seen = false;
      for (double a : alphas) {
        if (a == r.alpha) { seen = true; break; }
      }
      if (!seen) alphas.push_back(r.alpha);
    }
  }
  for (const auto& r : records) {
    if (r.alpha == alphas.front()) phis.push_back(r.phi);
  }
  std::vector<double> values;
  values.reserve(alphas.size() * phis.size());
  for (const auto& r : records) values.push_back(r.e0);
  if (values.size() != alphas.size() * phis.size()) {
    std::fprintf(stderr, "qdc: heatmap needs a full alpha x phi grid\n");
    return 1;
  }
  QDC_TRY(qdc_svg_write_heatmap(path.c_str(), title.c_str(), "phi (rad)", "alpha (rad)",
                                values.data(), alphas.size(), phis.size(), alphas.data(),
                                phis.data()));
  return 0;
}

int write_manifest_for(const ConfigPtr& config, const std::vector<std::string>& outputs,
                       const std::string& out_path) {
  std::vector<const char*> raw;
  raw.reserve(outputs.size());
  for (const auto& o : outputs) raw.push_back(o.c_str());
  const std::string manifest_path = out_path + ".manifest.json";
  QDC_TRY(qdc_manifest_write(config.get(), raw.data(), raw.size(), manifest_path.c_str()));
  return 0;
}

// Minimal hand-written manifest for subcommands that have no sweep config.
int write_args_manifest(const std::string& subcommand, const std::vector<std::string>& args,
                        const std::vector<std::string>& outputs, const std::string& out_path) {
  const std::string path = out_path + ".manifest.json";
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "qdc: cannot open for writing: %s\n", path.c_str());
    return 1;
  }
  char stamp[32] = "unknown";
  const std::time_t now = std::time(nullptr);
  if (std::tm tm_utc{}; gmtime_r(&now, &tm_utc) != nullptr) {
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  }
  std::fprintf(f, "{\n  \"tool\": \"qdc\",\n  \"version\": \"%s\",\n", qdc_version());
  std::fprintf(f, "  \"generated_utc\": \"%s\",\n  \"subcommand\": \"%s\",\n", stamp,
               subcommand.c_str());
  std::fprintf(f, "  \"args\": [");
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::fprintf(f, "%s\"%s\"", i == 0 ? "" : ", ", args[i].c_str());
  }
  std::fprintf(f, "],\n  \"outputs\": [");
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    std::fprintf(f, "%s\"%s\"", i == 0 ? "" : ", ", outputs[i].c_str());
  }
  std::fprintf(f, "]\n}\n");
  std::fclose(f);
  return 0;
}

int run_sweep_command(const CLI::App* cmd, const SweepArgs& args, const char* scheme) {
  ConfigPtr config;
  if (const int rc = build_config(cmd, args, scheme, config); rc != 0) return rc;

  qdc_records* raw = nullptr;
  QDC_TRY(qdc_run_sweep(config.get(), &raw));
  RecordsPtr records(raw);

  if (args.branch >= 0) {
    qdc_records* filtered = nullptr;
    QDC_TRY(qdc_records_filter_branch(records.get(), args.branch, &filtered));
    records.reset(filtered);
  }

  QDC_TRY(qdc_records_write_csv(records.get(), args.out.c_str()));
  std::vector<std::string> outputs{args.out};

  std::vector<qdc_record> rows;
  if (const int rc = fetch_records(records.get(), rows); rc != 0) return rc;
  if (!args.svg.empty()) {
    const std::string title =
        std::string(scheme) + (args.mode == "sampled" ? " sampled intensities" : " intensities");
    if (const int rc = write_lineplot(rows, args.svg, title); rc != 0) return rc;
    outputs.push_back(args.svg);
  }
  if (!args.heatmap.empty()) {
    if (const int rc = write_heatmap(rows, args.heatmap, "intensity E0"); rc != 0) return rc;
    outputs.push_back(args.heatmap);
  }
  return write_manifest_for(config, outputs, args.out);
}

int run_visibility(const CLI::App* cmd, const SweepArgs& args) {
  std::vector<double> alphas = args.alphas;
  if (!alphas.empty() && args.degrees) {
    for (double& a : alphas) a *= kPi / 180.0;
  }
  if (alphas.empty()) {
    alphas = linspace(0.0, kPi / 2, args.alpha_steps > 0 ? args.alpha_steps : 9);
  }
  const std::vector<double> phis = periodic_phase_grid(args.phi_steps);

  ConfigPtr config;
  {
    qdc_config* raw = nullptr;
    QDC_TRY(qdc_config_create(&raw));
    config.reset(raw);
    QDC_TRY(qdc_config_set_scheme(raw, "QDCE"));
    QDC_TRY(qdc_config_set_alpha_values(raw, alphas.data(), alphas.size()));
    QDC_TRY(qdc_config_set_phi_values(raw, phis.data(), phis.size()));
    QDC_TRY(qdc_config_set_mode(raw, "exact"));
  }
  qdc_records* raw_records = nullptr;
  QDC_TRY(qdc_run_sweep(config.get(), &raw_records));
  RecordsPtr records(raw_records);
  std::vector<qdc_record> rows;
  if (const int rc = fetch_records(records.get(), rows); rc != 0) return rc;

  std::vector<double> visibilities;
  visibilities.reserve(alphas.size());
  for (double alpha : alphas) {
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
      if (r.alpha == alpha) {
        xs.push_back(r.phi);
        ys.push_back(r.e0);
      }
    }
    double v = 0.0;
    QDC_TRY(qdc_visibility(xs.data(), ys.data(), xs.size(), &v));
    visibilities.push_back(v);
  }

  std::FILE* f = std::fopen(args.out.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "qdc: cannot open for writing: %s\n", args.out.c_str());
    return 1;
  }
  std::fprintf(f, "alpha,visibility\n");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    std::fprintf(f, "%s,%s\n", g12(alphas[i]).c_str(), g12(visibilities[i]).c_str());
  }
  std::fclose(f);
  std::vector<std::string> outputs{args.out};

  if (!args.svg.empty()) {
    const qdc_series series{"visibility", alphas.data(), visibilities.data(), alphas.size()};
    QDC_TRY(qdc_svg_write_lineplot(args.svg.c_str(), "Fringe visibility vs alpha",
                                   "alpha (rad)", "visibility", &series, 1));
    outputs.push_back(args.svg);
  }
  (void)cmd;
  return write_manifest_for(config, outputs, args.out);
}

int run_compare_hv(const SweepArgs& args) {
  const std::vector<double> alphas = resolve_alphas(args);
  const std::vector<double> phis = linspace(0.0, 2.0 * kPi, args.phi_steps);

  qdc_comparison* raw = nullptr;
  QDC_TRY(qdc_compare_qm_hv(alphas.data(), alphas.size(), phis.data(), phis.size(), &raw));
  ComparisonPtr cmp(raw);

  QDC_TRY(qdc_comparison_write_csv(cmp.get(), args.out.c_str()));
  const std::string report_path = args.out + ".report.txt";
  QDC_TRY(qdc_comparison_write_report(cmp.get(), report_path.c_str()));
  std::vector<std::string> outputs{args.out, report_path};

  if (!args.svg.empty()) {
    std::vector<double> hv(phis.size());
    QDC_TRY(qdc_comparison_hv_curve(cmp.get(), hv.data(), hv.size()));
    std::vector<std::vector<double>> qm(alphas.size(), std::vector<double>(phis.size()));
    std::vector<std::string> labels;
    std::vector<qdc_series> series;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      QDC_TRY(qdc_comparison_qm_curve(cmp.get(), i, qm[i].data(), qm[i].size()));
      labels.push_back("QM \xce\xb1=" + short_num(alphas[i]));
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      series.push_back(qdc_series{labels[i].c_str(), phis.data(), qm[i].data(), phis.size()});
    }
    series.push_back(qdc_series{"HV", phis.data(), hv.data(), phis.size()});
    QDC_TRY(qdc_svg_write_lineplot(args.svg.c_str(), "QM vs hidden-variable intensities",
                                   "phi (rad)", "intensity E0", series.data(), series.size()));
    outputs.push_back(args.svg);
  }

  std::vector<std::string> echo{"--phi-steps", std::to_string(args.phi_steps)};
  for (double a : alphas) {
    echo.push_back("--alpha");
    echo.push_back(short_num(a));
  }
  return write_args_manifest("compare-hv", echo, outputs, args.out);
}

int run_hv_mc(const SweepArgs& args) {
  const std::vector<double> phis = linspace(0.0, 2.0 * kPi, args.phi_steps);
  std::vector<double> estimates(phis.size());
  std::vector<double> exact(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    QDC_TRY(qdc_hv_monte_carlo(phis[i], static_cast<std::uint64_t>(args.shots),
                               args.seed + i, &estimates[i]));
    QDC_TRY(qdc_hv_intensity(phis[i], &exact[i]));
  }

  std::FILE* f = std::fopen(args.out.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "qdc: cannot open for writing: %s\n", args.out.c_str());
    return 1;
  }
  std::fprintf(f, "phi,hv_monte_carlo,hv_analytic\n");
  for (std::size_t i = 0; i < phis.size(); ++i) {
    std::fprintf(f, "%s,%s,%s\n", g12(phis[i]).c_str(), g12(estimates[i]).c_str(),
                 g12(exact[i]).c_str());
  }
  std::fclose(f);
  std::vector<std::string> outputs{args.out};

  if (!args.svg.empty()) {
    const qdc_series series[2] = {
        {"Monte Carlo", phis.data(), estimates.data(), phis.size()},
        {"analytic", phis.data(), exact.data(), phis.size()},
    };
    QDC_TRY(qdc_svg_write_lineplot(args.svg.c_str(), "Hidden-variable intensity", "phi (rad)",
                                   "intensity", series, 2));
    outputs.push_back(args.svg);
  }
  return write_args_manifest(
      "hv-mc",
      {"--phi-steps", std::to_string(args.phi_steps), "--shots", std::to_string(args.shots),
       "--seed", std::to_string(args.seed)},
      outputs, args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delayed-choice interferometer simulator (version " +
               std::string(qdc_version()) + ")"};
  app.require_subcommand(1);

  SweepArgs qdce_args;
  CLI::App* qdce = app.add_subcommand(
      "qdce", "Single-ancilla delayed-choice sweep (2-qubit circuit)");
  add_common_options(qdce, qdce_args, true);
  qdce->add_option("--heatmap", qdce_args.heatmap,
                   "Also render the alpha x phi intensity surface to this SVG path");

  SweepArgs ea_args;
  CLI::App* ea = app.add_subcommand(
      "ea-qdce", "Entanglement-assisted sweep with post-selected ancilla (3-qubit circuit)");
  add_common_options(ea, ea_args, true);
  ea->add_option("--branch", ea_args.branch, "Keep only one post-selection branch (0 or 1)")
      ->check(CLI::Range(0, 1));

  SweepArgs vis_args;
  vis_args.phi_steps = 256;
  CLI::App* vis = app.add_subcommand(
      "visibility", "Fringe visibility vs alpha from exact single-ancilla sweeps");
  add_common_options(vis, vis_args, false);

  SweepArgs cmp_args;
  CLI::App* cmp = app.add_subcommand(
      "compare-hv", "Simulated QM intensities vs the hidden-variable prediction");
  add_common_options(cmp, cmp_args, false);

  SweepArgs mc_args;
  mc_args.shots = 1000000;
  CLI::App* mc = app.add_subcommand("hv-mc", "Monte-Carlo hidden-variable intensities");
  mc->add_option("--phi-steps", mc_args.phi_steps, "Number of phase points over [0, 2*pi]")
      ->check(CLI::PositiveNumber);
  mc->add_option("--shots", mc_args.shots, "Samples per phase point")
      ->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_args.seed, "Base RNG seed");
  mc->add_option("--out", mc_args.out, "Output CSV path")->required();
  mc->add_option("--svg", mc_args.svg, "Also render an SVG line plot to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic and usage pointer
    return 2;
  }

  if (qdce->parsed()) return run_sweep_command(qdce, qdce_args, "QDCE");
  if (ea->parsed()) return run_sweep_command(ea, ea_args, "EA-QDCE");
  if (vis->parsed()) return run_visibility(vis, vis_args);
  if (cmp->parsed()) return run_compare_hv(cmp_args);
  if (mc->parsed()) return run_hv_mc(mc_args);
  return 2;
}
