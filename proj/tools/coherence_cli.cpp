// Copyright 2026 The coherence-toolkit developers
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Builds measurement families, computes coherence
// reports, runs the verification suite, estimates the Haar average by Monte
// Carlo and emits the pure-state curve CSV. Everything goes through the
// extern-C library surface in coherence/coherence.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <coherence/coherence.h>

namespace {

using nlohmann::json;

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel g_log_level = LogLevel::info;

void init_log_level() {
  const char* env = std::getenv("COHERENCE_LOG");
  if (!env) return;
  const std::string value(env);
  if (value == "quiet") g_log_level = LogLevel::quiet;
  else if (value == "info") g_log_level = LogLevel::info;
  else if (value == "debug") g_log_level = LogLevel::debug;
}

void log_info(const std::string& message) {
  if (g_log_level >= LogLevel::info) std::fprintf(stderr, "%s\n", message.c_str());
}

void log_debug(const std::string& message) {
  if (g_log_level >= LogLevel::debug)
    std::fprintf(stderr, "debug: %s\n", message.c_str());
}

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(2);
}

void check(coh_status status, const std::string& what) {
  if (status == COH_OK) return;
  die(what + ": " + coh_last_error() + " [" + coh_status_name(status) + "]");
}

std::string take_string(char* text) {
  std::string out = text ? text : "";
  coh_string_free(text);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path);
  out << content;
  if (!out.flush()) die("short write to " + path);
  log_debug("wrote " + path);
}

// Move-only owners for the C handles.
template <typename T, void (*FreeFn)(T*)>
struct Handle {
  T* ptr = nullptr;

  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& other) noexcept : ptr(std::exchange(other.ptr, nullptr)) {}
  Handle& operator=(Handle&& other) noexcept {
    if (this != &other) {
      FreeFn(ptr);
      ptr = std::exchange(other.ptr, nullptr);
    }
    return *this;
  }
  ~Handle() { FreeFn(ptr); }
};

using MatrixHandle = Handle<coh_matrix, coh_matrix_free>;
using MeasurementHandle = Handle<coh_measurement, coh_measurement_free>;
using BasisHandle = Handle<coh_basis, coh_basis_free>;

// ---- shared option bundles -------------------------------------------------

struct StateSpec {
  std::string state_file;
  std::string random_spec;  // "rank=R,seed=S[,stream=T]"
  bool maximally_mixed = false;
  int pure_index = -1;
  bool has_pure = false;

  void add_options(CLI::App* cmd) {
    auto* file =
        cmd->add_option("--state", state_file, "Density matrix JSON file");
    auto* random = cmd->add_option(
        "--random-state", random_spec,
        "Seeded random state, e.g. rank=2,seed=7[,stream=0]");
    auto* mixed = cmd->add_flag("--maximally-mixed", maximally_mixed,
                                "Use the maximally mixed state");
    auto* pure = cmd->add_option("--pure", pure_index,
                                 "Projector onto computational basis state K");
    pure->each([this](const std::string&) { has_pure = true; });
    file->excludes(random)->excludes(mixed)->excludes(pure);
    random->excludes(mixed)->excludes(pure);
    mixed->excludes(pure);
  }

  // dim_hint comes from measurement files; 0 means unknown.
  MatrixHandle realize(int dim_hint, int dim_flag, std::string& state_id) const {
    MatrixHandle rho;
    if (!state_file.empty()) {
      const std::string text = read_file(state_file);
      check(coh_matrix_from_json(text.c_str(), &rho.ptr), state_file);
      check(coh_density_validate(rho.ptr), state_file);
      state_id = state_file;
      return rho;
    }

    const int dim = dim_flag > 0 ? dim_flag : dim_hint;
    if (dim <= 0)
      die("state dimension unknown: pass --dim or a measurement file");

    if (!random_spec.empty()) {
      int rank = 0;
      bool has_seed = false;
      std::uint64_t seed = 0;
      std::uint64_t stream = 0;
      std::stringstream fields(random_spec);
      std::string item;
      while (std::getline(fields, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) die("bad --random-state field: " + item);
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
          if (key == "rank") {
            rank = std::stoi(value);
          } else if (key == "seed") {
            seed = std::stoull(value);
            has_seed = true;
          } else if (key == "stream") {
            stream = std::stoull(value);
          } else {
            die("unknown --random-state key: " + key);
          }
        } catch (const std::exception&) {
          die("bad --random-state value: " + item);
        }
      }
      if (rank <= 0) die("--random-state needs rank=R with R >= 1");
      if (!has_seed) die("--random-state needs an explicit seed=S");
      check(coh_density_random(dim, rank, seed, stream, &rho.ptr),
            "random state");
      std::ostringstream id;
      id << "random(d=" << dim << ",rank=" << rank << ",seed=" << seed
         << ",stream=" << stream << ")";
      state_id = id.str();
      return rho;
    }
    if (maximally_mixed) {
      check(coh_density_maximally_mixed(dim, &rho.ptr), "maximally mixed");
      std::ostringstream id;
      id << "maximally-mixed(d=" << dim << ")";
      state_id = id.str();
      return rho;
    }
    if (has_pure) {
      check(coh_density_pure_basis(dim, pure_index, &rho.ptr), "pure state");
      std::ostringstream id;
      id << "pure-basis(d=" << dim << ",k=" << pure_index << ")";
      state_id = id.str();
      return rho;
    }
    die("no state given: pass --state, --random-state, --maximally-mixed or --pure");
  }
};

MeasurementHandle load_measurement(const std::string& path,
                                   coh_measurement_kind expected,
                                   const char* what) {
  MeasurementHandle m;
  const std::string text = read_file(path);
  check(coh_measurement_from_json(text.c_str(), &m.ptr), path);
  coh_measurement_kind kind;
  coh_measurement_get_kind(m.ptr, &kind);
  if (kind != expected)
    die(path + " holds a different measurement kind than --" +
        std::string(what));
  return m;
}

std::pair<int, int> parse_dims(const std::string& spec) {
  const auto sep = spec.find("..");
  try {
    if (sep == std::string::npos) {
      const int d = std::stoi(spec);
      return {d, d};
    }
    return {std::stoi(spec.substr(0, sep)), std::stoi(spec.substr(sep + 2))};
  } catch (const std::exception&) {
    die("bad --dims range: " + spec + " (expected LO..HI)");
  }
}

// ---- build ------------------------------------------------------------------

struct BuildConfig {
  int dim = 0;
  double t = 0.0;
  bool max_t = false;
  std::string out;
};

void run_build(const std::string& kind, const BuildConfig& config,
               bool has_t) {
  MeasurementHandle m;

  if (kind == "mum" || kind == "gsm") {
    if (config.max_t == has_t) die("pass exactly one of --t or --max-t");
    BasisHandle basis;
    check(coh_basis_create(config.dim, &basis.ptr), "operator basis");
    double t = config.t;
    if (config.max_t) {
      check(kind == "mum" ? coh_max_positive_t_mum(basis.ptr, &t)
                          : coh_max_positive_t_gsm(basis.ptr, &t),
            "positivity search");
      log_debug("maximal positive t = " + std::to_string(t));
    }
    check(kind == "mum" ? coh_mum_build(basis.ptr, t, &m.ptr)
                        : coh_gsm_build(basis.ptr, t, &m.ptr),
          "build " + kind);
  } else if (kind == "mub") {
    check(coh_mub_build(config.dim, &m.ptr), "build mub");
  } else {
    check(coh_sic_builtin(config.dim, &m.ptr), "build sic");
  }

  char* json_text = nullptr;
  check(coh_measurement_to_json(m.ptr, &json_text), "serialize measurement");
  const std::string out_path =
      config.out.empty() ? kind + "-d" + std::to_string(config.dim) + ".json"
                         : config.out;
  write_file(out_path, take_string(json_text));

  double t_val = 0.0, efficiency = 0.0;
  coh_measurement_params(m.ptr, &t_val, &efficiency);
  if (kind == "mum")
    std::printf("kappa = %.12g\n", efficiency);
  else if (kind == "gsm" || kind == "sic")
    std::printf("a = %.12g\n", efficiency);
  else
    std::printf("bases = %d\n", config.dim + 1);
  log_info("wrote " + out_path);
}

// ---- compute -----------------------------------------------------------------

struct ComputeConfig {
  StateSpec state;
  std::string mum_file, gsm_file, mub_file, sic_file;
  double alpha = 0.5;
  int cu_samples = 0;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  int dim = 0;
  std::string out;
};

void print_report_summary(const json& report) {
  std::printf("dim=%d alpha=%g", report.at("dim").get<int>(),
              report.at("alpha").get<double>());
  if (report.contains("state_id"))
    std::printf(" state=%s", report.at("state_id").get<std::string>().c_str());
  std::printf("\n%-8s %-18s %-18s %-12s\n", "quantity", "brute", "closed",
              "residual");
  for (const auto& [name, entry] : report.at("quantities").items()) {
    auto field = [&](const char* key) -> std::string {
      if (!entry.contains(key)) return "-";
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.12g",
                    entry.at(key).get<double>());
      return buffer;
    };
    const std::string brute =
        entry.contains("estimate") ? field("estimate") : field("brute");
    std::printf("%-8s %-18s %-18s %-12s\n", name.c_str(), brute.c_str(),
                field("closed").c_str(), field("residual").c_str());
  }
  std::printf("relations:\n");
  for (const auto& [name, entry] : report.at("relations").items()) {
    if (!entry.is_object()) continue;
    std::printf("  %-20s lhs=%.12g rhs=%.12g residual=%.3e\n", name.c_str(),
                entry.at("lhs").get<double>(), entry.at("rhs").get<double>(),
                entry.at("residual").get<double>());
  }
  const bool degenerate =
      report.at("relations").value("ordering_degenerate", false);
  std::printf("ordering: %s\n",
              degenerate
                  ? "degenerate (maximally mixed)"
                  : (report.at("relations").at("ordering_ok").get<bool>()
                         ? "ok"
                         : "VIOLATED"));
}

void run_compute(const ComputeConfig& config) {
  MeasurementHandle mum, gsm, mub, sic;
  int dim_hint = 0;
  auto track_dim = [&](const coh_measurement* m, const std::string& path) {
    const int d = coh_measurement_dim(m);
    if (dim_hint == 0) dim_hint = d;
    if (d != dim_hint) die("measurement dimension mismatch in " + path);
  };

  if (!config.mum_file.empty()) {
    mum = load_measurement(config.mum_file, COH_MEASUREMENT_MUM, "mum");
    track_dim(mum.ptr, config.mum_file);
  }
  if (!config.gsm_file.empty()) {
    gsm = load_measurement(config.gsm_file, COH_MEASUREMENT_GSM, "gsm");
    track_dim(gsm.ptr, config.gsm_file);
  }
  if (!config.mub_file.empty()) {
    mub = load_measurement(config.mub_file, COH_MEASUREMENT_MUB, "mub");
    track_dim(mub.ptr, config.mub_file);
  }
  if (!config.sic_file.empty()) {
    sic = load_measurement(config.sic_file, COH_MEASUREMENT_SIC, "sic");
    track_dim(sic.ptr, config.sic_file);
  }
  if (config.dim > 0 && dim_hint > 0 && config.dim != dim_hint)
    die("--dim contradicts the measurement files");

  std::string state_id;
  const MatrixHandle rho = config.state.realize(dim_hint, config.dim, state_id);

  char* report_text = nullptr;
  check(coh_relations_report(rho.ptr, mum.ptr, gsm.ptr, mub.ptr, sic.ptr,
                             config.alpha, config.cu_samples, config.seed,
                             config.stream, state_id.c_str(), &report_text),
        "coherence report");
  const std::string text = take_string(report_text);
  write_file(config.out, text);
  print_report_summary(json::parse(text));
  log_info("wrote " + config.out);
}

// ---- verify -------------------------------------------------------------------

int run_verify(const std::string& dims, int trials, std::uint64_t seed,
               double tol) {
  const auto [lo, hi] = parse_dims(dims);
  char* table_text = nullptr;
  int32_t ok = 0;
  check(coh_verify_suite(lo, hi, trials, seed, tol, &table_text, &ok),
        "verification suite");
  const json table = json::parse(take_string(table_text));

  std::printf("%-28s %-8s %-14s %-10s %s\n", "identity", "checks",
              "max residual", "tolerance", "status");
  for (const auto& row : table.at("identities")) {
    std::printf("%-28s %-8ld %-14.3e %-10.1e %s\n",
                row.at("name").get<std::string>().c_str(),
                row.at("count").get<long>(),
                row.at("max_residual").get<double>(),
                row.at("tolerance").get<double>(),
                row.at("pass").get<bool>() ? "ok" : "FAIL");
  }
  std::printf("verification %s (dims %d..%d, trials %d, seed %llu)\n",
              ok ? "passed" : "FAILED", lo, hi, trials,
              static_cast<unsigned long long>(seed));
  return ok ? 0 : 1;
}

// ---- cu-estimate ---------------------------------------------------------------

struct CuConfig {
  StateSpec state;
  int dim = 0;
  int samples = 10000;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::string out;
};

int run_cu_estimate(const CuConfig& config) {
  std::string state_id;
  const MatrixHandle rho = config.state.realize(0, config.dim, state_id);

  double estimate = 0.0, std_error = 0.0, closed = 0.0;
  check(coh_cu_monte_carlo(rho.ptr, config.samples, config.seed, config.stream,
                           &estimate, &std_error, &closed),
        "Monte Carlo estimate");

  double z = 0.0;
  if (std_error > 0.0 && std::abs(estimate - closed) > 1e-12)
    z = (estimate - closed) / std_error;

  std::printf("state      %s\n", state_id.c_str());
  std::printf("samples    %d\n", config.samples);
  std::printf("estimate   %.12g\n", estimate);
  std::printf("std_error  %.12g\n", std_error);
  std::printf("closed     %.12g\n", closed);
  std::printf("z          %.6g\n", z);

  if (!config.out.empty()) {
    const json j{{"state_id", state_id}, {"samples", config.samples},
                 {"estimate", estimate}, {"std_error", std_error},
                 {"closed", closed},     {"z", z}};
    write_file(config.out, j.dump());
  }

  if (std::abs(z) > 4.0) {
    std::fprintf(stderr,
                 "|z| > 4: either a bug or a ~1-in-16000 fluctuation; rerun "
                 "with a different --seed to discriminate\n");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  init_log_level();

  CLI::App app{"coherence: complementary-measurement coherence toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(coh_version()));

  // build
  auto* build = app.add_subcommand("build", "Construct a measurement family");
  build->require_subcommand(1);
  BuildConfig build_config;
  std::string build_kind;
  bool build_has_t = false;
  for (const std::string kind : {"mum", "gsm", "mub", "sic"}) {
    auto* cmd = build->add_subcommand(kind);
    cmd->add_option("--dim", build_config.dim, "Hilbert space dimension")
        ->required();
    if (kind == "mum" || kind == "gsm") {
      cmd->add_option("--t", build_config.t, "Construction strength t")
          ->each([&build_has_t](const std::string&) { build_has_t = true; });
      cmd->add_flag("--max-t", build_config.max_t,
                    "Use the largest positivity-preserving t");
    }
    cmd->add_option("--out", build_config.out, "Output JSON path");
    cmd->callback([kind, &build_kind] { build_kind = kind; });
  }

  // basis export
  auto* basis = app.add_subcommand("basis", "Operator basis utilities");
  auto* basis_export =
      basis->add_subcommand("export", "Write the partitioned basis as JSON");
  int basis_dim = 0;
  std::string basis_out;
  basis_export->add_option("--dim", basis_dim, "Hilbert space dimension")
      ->required();
  basis_export->add_option("--out", basis_out, "Output JSON path")->required();

  // compute
  auto* compute = app.add_subcommand("compute", "Coherence report for a state");
  ComputeConfig compute_config;
  compute_config.state.add_options(compute);
  compute->add_option("--mum", compute_config.mum_file, "MUM JSON file");
  compute->add_option("--gsm", compute_config.gsm_file, "GSM JSON file");
  compute->add_option("--mub", compute_config.mub_file, "MUB JSON file");
  compute->add_option("--sic", compute_config.sic_file, "SIC JSON file");
  compute->add_option("--alpha", compute_config.alpha,
                      "WYD order in (0, 1), default 0.5");
  compute->add_option("--cu-samples", compute_config.cu_samples,
                      "Monte Carlo samples for the Haar average (0 = skip)");
  compute->add_option("--seed", compute_config.seed, "Monte Carlo seed");
  compute->add_option("--stream", compute_config.stream, "Monte Carlo stream");
  compute->add_option("--dim", compute_config.dim,
                      "State dimension when no measurement file fixes it");
  compute->add_option("--out", compute_config.out, "Report JSON path")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  std::string verify_dims = "2..4";
  int verify_trials = 50;
  std::uint64_t verify_seed = 7;
  double verify_tol = 1e-9;
  verify->add_option("--dims", verify_dims,
                     "Dimension range LO..HI within 2..6");
  verify->add_option("--trials", verify_trials, "Random states per dimension");
  verify->add_option("--seed", verify_seed, "Base seed");
  verify->add_option("--tol", verify_tol,
                     "Identity tolerance; condition and exact-formula gates "
                     "scale along with it");

  // figure1
  auto* figure1 = app.add_subcommand(
      "figure1", "Pure-state coherence curves CSV (c_max, c_mub, c_sic)");
  int figure_dmax = 50;
  std::string figure_out;
  figure1->add_option("--dmax", figure_dmax, "Largest dimension, >= 2");
  figure1->add_option("--out", figure_out, "Output CSV path")->required();

  // cu-estimate
  auto* cu = app.add_subcommand(
      "cu-estimate", "Monte Carlo Haar-averaged coherence vs closed form");
  CuConfig cu_config;
  cu_config.state.add_options(cu);
  cu->add_option("--dim", cu_config.dim, "State dimension");
  cu->add_option("--samples", cu_config.samples, "Haar samples, >= 100");
  cu->add_option("--seed", cu_config.seed, "Sampling seed");
  cu->add_option("--stream", cu_config.stream, "Sampling stream");
  cu->add_option("--out", cu_config.out, "Optional JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    run_build(build_kind, build_config, build_has_t);
    return 0;
  }
  if (basis->parsed()) {
    BasisHandle handle;
    check(coh_basis_create(basis_dim, &handle.ptr), "operator basis");
    char* text = nullptr;
    check(coh_basis_export_json(handle.ptr, &text), "basis export");
    write_file(basis_out, take_string(text));
    std::printf("operators = %d\n", basis_dim * basis_dim - 1);
    return 0;
  }
  if (compute->parsed()) {
    run_compute(compute_config);
    return 0;
  }
  if (verify->parsed())
    return run_verify(verify_dims, verify_trials, verify_seed, verify_tol);
  if (figure1->parsed()) {
    char* csv = nullptr;
    check(coh_figure1_csv(figure_dmax, &csv), "figure1");
    write_file(figure_out, take_string(csv));
    std::printf("rows = %d\n", figure_dmax - 1);
    return 0;
  }
  if (cu->parsed()) return run_cu_estimate(cu_config);
  return 2;
}
