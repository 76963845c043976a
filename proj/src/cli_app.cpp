#include "qumode/cli_app.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "qumode/estimation.hpp"
#include "qumode/factoring.hpp"
#include "qumode/fourier_check.hpp"
#include "qumode/mixture.hpp"
#include "qumode/resources.hpp"
#include "qumode/sampling.hpp"
#include "qumode/serialize.hpp"
#include "qumode/spectrum.hpp"
#include "qumode/trace_estimation.hpp"

namespace qumode {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNoPeaks = 3;
constexpr int kRejected = 4;
constexpr int kExhausted = 5;

// Config files are flat JSON objects keyed by long option name, one file
// per subcommand: {"N": 15, "q": 2, "samples": 1000}. The keys are applied
// to whichever subcommand was chosen on the command line, so the option
// lives on the root app (subcommand-level config files are dead weight in
// CLI11: only the root's config is ever processed).
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root = nullptr) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override {
    Json j = Json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
      const std::string& name = opt->get_lnames()[0];
      if (!opt->results().empty()) {
        j[name] = opt->results().size() == 1 ? Json(opt->results()[0])
                                             : Json(opt->results());
      } else if (default_also) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    const Json j = Json::parse(input);
    if (!j.is_object()) {
      throw CLI::ConfigError("config file must hold a JSON object");
    }
    // By the time the root app reads its config the subcommand is known;
    // address every key to it so unknown keys still error out.
    std::vector<std::string> parents;
    if (root_ != nullptr) {
      const auto parsed = root_->get_subcommands();
      if (!parsed.empty()) parents.push_back(parsed.front()->get_name());
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const Json& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number() || v.is_null()) return v.dump();
    throw CLI::ConfigError("config values must be scalars or arrays of them");
  }

  const CLI::App* root_;
};

std::string iso_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path resolve_out(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("QUMODE_OUT_DIR")) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void write_file(const std::string& path, const std::string& text) {
  const auto p = resolve_out(path);
  std::ofstream f(p, std::ios::binary);
  f << text;
  if (!f) {
    throw std::invalid_argument("cannot write " + p.string());
  }
}

// Flags shared by every subcommand that emits a JSON report.
struct OutputOpts {
  std::string out;
  bool no_timestamp = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--out", o.out,
                  "Also write the JSON report to this file (relative paths "
                  "resolve under $QUMODE_OUT_DIR)");
  cmd->add_flag("--no-timestamp", o.no_timestamp,
                "Omit the timestamp so repeated runs are byte-identical");
}

int emit(Json j, const OutputOpts& o) {
  if (!o.no_timestamp) j["timestamp"] = iso_now();
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!o.out.empty()) write_file(o.out, text);
  return kOk;
}

// Either a spectrum file or a modular (N, q) pair.
struct SpectrumSource {
  std::string spec_file;
  std::int64_t N = 0;
  std::int64_t q = 0;
};

void add_spectrum_source(CLI::App* cmd, SpectrumSource& s) {
  cmd->add_option("--spec-file", s.spec_file, "Spectrum JSON file");
  cmd->add_option("--N", s.N, "Modulus of the modular-multiplication spectrum");
  cmd->add_option("--q", s.q, "Base of the modular-multiplication spectrum");
}

void check_coprime(std::int64_t N, std::int64_t q) {
  if (N >= 2 && q >= 2) {
    const std::int64_t g = std::gcd(N, q);
    if (g > 1) {
      throw std::invalid_argument(
          "gcd(" + std::to_string(q) + ", " + std::to_string(N) + ") = " +
          std::to_string(g) + ": already a nontrivial factor of N, " +
          "no sampling needed");
    }
  }
}

PhaseSpectrum resolve_spectrum(const SpectrumSource& s, Json& config) {
  if (!s.spec_file.empty()) {
    config["spec_file"] = s.spec_file;
    return load_spectrum(s.spec_file);
  }
  if (s.N != 0 || s.q != 0) {
    config["N"] = s.N;
    config["q"] = s.q;
    check_coprime(s.N, s.q);
    return modular_spectrum(s.N, s.q);
  }
  throw std::invalid_argument("provide --spec-file or --N with --q");
}

Json complex_json(std::complex<double> z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

// spectrum --N --q [--out]
void setup_spectrum(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand(
      "spectrum", "Write the eigenphase spectrum of l -> l*q mod N");
  auto opts = std::make_shared<std::pair<SpectrumSource, OutputOpts>>();
  cmd->add_option("--N", opts->first.N, "Modulus")->required();
  cmd->add_option("--q", opts->first.q, "Base, coprime to N")->required();
  add_output_opts(cmd, opts->second);
  cmd->callback([opts, &code] {
    const auto& [src, out] = *opts;
    check_coprime(src.N, src.q);
    const PhaseSpectrum spec = modular_spectrum(src.N, src.q);
    Json j;
    j["config"] = Json{{"command", "spectrum"}, {"N", src.N}, {"q", src.q}};
    j["order"] = multiplicative_order(src.N, src.q);
    j["spectrum"] = to_json(spec);
    j["normalized_trace"] = complex_json(exact_normalized_trace(spec));
    code = emit(std::move(j), out);
  });
}

struct PhaseEstOpts {
  SpectrumSource src;
  OutputOpts out;
  ExperimentConfig cfg;
  double s0 = 0.0;  // 0 = auto from the resolution criterion
  double threshold = 0.01;
  std::string histogram_csv_path;
  std::string density_csv_path;
  std::string dump_samples_path;
};

// phase-est: sample the squeezed-input mixture and report peaks.
void setup_phase_est(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand(
      "phase-est", "Estimate eigenphases from sampled momenta");
  auto o = std::make_shared<PhaseEstOpts>();
  add_spectrum_source(cmd, o->src);
  cmd->add_option("--s0", o->s0,
                  "Squeezing; 0 picks the smallest s0 meeting "
                  "t_bound*tau*s0*delta_E = 1")
      ->capture_default_str();
  cmd->add_option("--tau", o->cfg.tau, "Interaction time")
      ->capture_default_str();
  cmd->add_option("--samples", o->cfg.samples, "Number of draws")
      ->capture_default_str();
  cmd->add_option("--delta-E", o->cfg.delta_E, "Target resolution")
      ->capture_default_str();
  cmd->add_option("--t-bound", o->cfg.t_bound, "Measurement budget")
      ->capture_default_str();
  cmd->add_option("--seed", o->cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--threads", o->cfg.threads, "Sampling threads")
      ->capture_default_str();
  cmd->add_option("--peak-threshold", o->threshold,
                  "Minimum mass fraction for a reported peak")
      ->capture_default_str();
  cmd->add_option("--histogram-csv", o->histogram_csv_path,
                  "Write bin_center,mass rows here");
  cmd->add_option("--density-csv", o->density_csv_path,
                  "Write p_E,density rows of the exact mixture here");
  cmd->add_option("--dump-samples", o->dump_samples_path,
                  "Write the raw draws here, one per row");
  add_output_opts(cmd, o->out);
  cmd->callback([o, &code] {
    Json config{{"command", "phase-est"}};
    const PhaseSpectrum spec = resolve_spectrum(o->src, config);
    ExperimentConfig cfg = o->cfg;
    cfg.s0 = o->s0 > 0.0
                 ? o->s0
                 : std::max(1.0, 1.0 / (static_cast<double>(cfg.t_bound) *
                                        cfg.tau * cfg.delta_E));
    validate(cfg);
    config["s0"] = cfg.s0;
    config["tau"] = cfg.tau;
    config["samples"] = cfg.samples;
    config["delta_E"] = cfg.delta_E;
    config["t_bound"] = cfg.t_bound;
    config["seed"] = cfg.seed;
    config["threads"] = cfg.threads;
    config["peak_threshold"] = o->threshold;

    const GaussianMixture mix =
        momentum_distribution(spec, squeezed_state(cfg.s0, cfg.x0), cfg.tau);
    const std::vector<double> draws = sample_momentum(
        mix, static_cast<std::size_t>(cfg.samples), cfg.seed, cfg.threads);

    const TimeEnergyReport te = time_energy_check(cfg);
    if (!te.satisfied) {
      std::cerr << "warning: t_bound * erf(tau*s0*delta_E) = " << te.erf_margin
                << " < 1; the budget cannot resolve delta_E\n";
    }
    const PhaseEstimateReport report =
        estimate_phases(draws, cfg, o->threshold);

    if (!o->histogram_csv_path.empty()) {
      write_file(o->histogram_csv_path, histogram_csv(report));
    }
    if (!o->density_csv_path.empty()) {
      write_file(o->density_csv_path,
                 density_csv(mix, default_density_grid(mix)));
    }
    if (!o->dump_samples_path.empty()) {
      write_file(o->dump_samples_path, samples_csv(draws));
    }

    Json j;
    j["config"] = std::move(config);
    j["time_energy"] = to_json(te);
    j["success_probability"] = success_probability(spec, cfg);
    j["report"] = to_json(report);
    code = emit(std::move(j), o->out);
    if (report.peaks.empty()) code = kNoPeaks;
  });
}

struct TraceOpts {
  SpectrumSource src;
  OutputOpts out;
  double s0 = 1.0;
  double delta_re = 0.05;
  double delta_im = 0.05;
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool no_correction = false;
  std::string dump_samples_path;
};

// trace: normalized-trace estimation at tau = 1.
void setup_trace(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand(
      "trace", "Estimate the normalized trace from sampled momenta (tau = 1)");
  auto o = std::make_shared<TraceOpts>();
  add_spectrum_source(cmd, o->src);
  cmd->add_option("--s0", o->s0, "Squeezing")->capture_default_str();
  cmd->add_option("--delta-re", o->delta_re, "Target error, real part")
      ->capture_default_str();
  cmd->add_option("--delta-im", o->delta_im, "Target error, imaginary part")
      ->capture_default_str();
  cmd->add_option("--samples", o->samples, "Number of draws")
      ->capture_default_str();
  cmd->add_option("--seed", o->seed, "RNG seed")->capture_default_str();
  cmd->add_option("--threads", o->threads, "Sampling threads")
      ->capture_default_str();
  cmd->add_flag("--no-correction", o->no_correction,
                "Report the raw damped mean instead of the de-biased value");
  cmd->add_option("--dump-samples", o->dump_samples_path,
                  "Write the raw draws here, one per row");
  add_output_opts(cmd, o->out);
  cmd->callback([o, &code] {
    Json config{{"command", "trace"}};
    const PhaseSpectrum spec = resolve_spectrum(o->src, config);
    const std::complex<double> delta{o->delta_re, o->delta_im};
    config["s0"] = o->s0;
    config["tau"] = 1.0;
    config["delta_re"] = o->delta_re;
    config["delta_im"] = o->delta_im;
    config["samples"] = o->samples;
    config["seed"] = o->seed;
    config["threads"] = o->threads;
    config["correction"] = !o->no_correction;
    if (o->samples < 1) {
      throw std::invalid_argument("trace: samples must be >= 1");
    }

    const GaussianMixture mix =
        momentum_distribution(spec, squeezed_state(o->s0), 1.0);
    const std::vector<double> draws = sample_momentum(
        mix, static_cast<std::size_t>(o->samples), o->seed, o->threads);
    if (!o->dump_samples_path.empty()) {
      write_file(o->dump_samples_path, samples_csv(draws));
    }

    TraceEstimate est = estimate_trace(draws, o->s0, !o->no_correction);
    est.target_delta = delta;
    const VarianceBounds vb = variance_bounds(spec, o->s0);

    Json j;
    j["config"] = std::move(config);
    j["estimate"] = to_json(est);
    j["required_samples"] = required_samples(delta, o->s0);
    j["overhead_factor"] = sample_overhead_factor(o->s0);
    j["variance_bound"] = vb.bound;
    j["analytic_value"] = complex_json(exact_normalized_trace(spec));
    code = emit(std::move(j), o->out);
  });
}

struct FactorOpts {
  OutputOpts out;
  std::int64_t N = 0;
  double s0 = 0.0;  // 0 = auto: s0*tau = 2^{2n}
  double tau = 1.0;
  std::int64_t t_bound = 100;
  std::uint64_t seed = 0;
  int threads = 1;
};

// factor: the full order-finding factorization loop.
void setup_factor(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("factor", "Factor an odd composite N");
  auto o = std::make_shared<FactorOpts>();
  cmd->add_option("--N", o->N, "Odd composite to factor")->required();
  cmd->add_option("--s0", o->s0, "Squeezing; 0 picks s0 = 2^{2n}/tau")
      ->capture_default_str();
  cmd->add_option("--tau", o->tau, "Interaction time")->capture_default_str();
  cmd->add_option("--t-bound", o->t_bound, "Total measurement budget")
      ->capture_default_str();
  cmd->add_option("--seed", o->seed, "RNG seed")->capture_default_str();
  cmd->add_option("--threads", o->threads, "Sampling threads")
      ->capture_default_str();
  add_output_opts(cmd, o->out);
  cmd->callback([o, &code] {
    if (o->N < 2) throw std::invalid_argument("factor: N must be >= 2");
    const auto n = static_cast<int>(
        std::bit_width(static_cast<std::uint64_t>(o->N - 1)));
    ExperimentConfig cfg;
    cfg.s0 = o->s0 > 0.0 ? o->s0 : std::ldexp(1.0, 2 * n) / o->tau;
    cfg.tau = o->tau;
    cfg.t_bound = o->t_bound;
    cfg.seed = o->seed;
    cfg.threads = o->threads;
    validate(cfg);

    const FactorResult result = factor(o->N, cfg, o->seed);

    Json diagnostics;
    diagnostics["run_bound"] = run_bound(o->N, cfg.s0, cfg.tau);
    if (std::gcd(result.q_used, o->N) == 1) {
      const ModularProblem problem = make_modular_problem(o->N, result.q_used);
      diagnostics["exact_P_r"] = analytic_run_success(problem, cfg.s0, cfg.tau);
      diagnostics["diagonal_P_r"] =
          diagonal_run_success(problem, cfg.s0, cfg.tau);
    } else {
      diagnostics["exact_P_r"] = nullptr;  // lucky gcd draw, nothing sampled
      diagnostics["diagonal_P_r"] = nullptr;
    }

    Json j;
    j["config"] = Json{{"command", "factor"},     {"N", o->N},
                       {"s0", cfg.s0},            {"tau", cfg.tau},
                       {"t_bound", cfg.t_bound},  {"seed", o->seed},
                       {"threads", cfg.threads}};
    j["result"] = to_json(result);
    j["bound_diagnostics"] = std::move(diagnostics);
    code = emit(std::move(j), o->out);
  });
}

struct ResourcesOpts {
  OutputOpts out;
  std::string context;
  std::int64_t N = 0;
  double delta_E = 0.1;
  std::int64_t t_bound = 100;
  double tau = 1.0;
};

// resources: squeezing/energy/qudit accounting tables.
void setup_resources(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand(
      "resources", "Report squeezing, photon number, and qudit dimension");
  auto o = std::make_shared<ResourcesOpts>();
  cmd->add_option("--context", o->context, "dqc1 | factoring | phase-est")
      ->required()
      ->check(CLI::IsMember({"dqc1", "factoring", "phase-est"}));
  cmd->add_option("--N", o->N, "Modulus (factoring context)");
  cmd->add_option("--delta-E", o->delta_E, "Resolution (phase-est context)")
      ->capture_default_str();
  cmd->add_option("--t-bound", o->t_bound, "Budget (phase-est context)")
      ->capture_default_str();
  cmd->add_option("--tau", o->tau, "Interaction time (phase-est context)")
      ->capture_default_str();
  add_output_opts(cmd, o->out);
  cmd->callback([o, &code] {
    ResourceReport report;
    if (o->context == "dqc1") {
      report = dqc1_report();
    } else if (o->context == "factoring") {
      report = factoring_report(o->N);
    } else {
      report = phase_estimation_report(o->delta_E, o->t_bound, o->tau);
    }
    std::cout << format_table(report);
    Json j;
    j["config"] =
        Json{{"command", "resources"}, {"context", o->context}, {"N", o->N},
             {"delta_E", o->delta_E},  {"t_bound", o->t_bound}, {"tau", o->tau}};
    j["report"] = to_json(report);
    // The table is the stdout payload; JSON goes to --out only.
    if (!o->out.out.empty()) {
      if (!o->out.no_timestamp) j["timestamp"] = iso_now();
      write_file(o->out.out, j.dump(2) + "\n");
    }
    code = kOk;
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Desk-scale simulator of a single bosonic control mode driving "
      "maximally mixed qubits: exact momentum mixtures, phase estimation, "
      "normalized-trace estimation, and order-finding factorization"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --config appear after the subcommand name
  app.set_config("--config", "",
                 "Flat JSON object of long option names for the chosen "
                 "subcommand");
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  int code = kOk;
  setup_spectrum(app, code);
  setup_phase_est(app, code);
  setup_trace(app, code);
  setup_factor(app, code);
  setup_resources(app, code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e);
    return c == 0 ? kOk : kUsage;
  } catch (const ClassicalRejection& e) {
    std::cerr << e.what() << '\n';
    return kRejected;
  } catch (const BudgetExhausted& e) {
    std::cerr << e.what() << '\n';
    return kExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("qumode");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace qumode
