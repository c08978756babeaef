// Command-line front end: outage sweeps, method comparison, rate regions,
// correlated gain samples and the built-in scenario presets.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "swmac/errors.hpp"
#include "swmac/experiment.hpp"
#include "swmac/kernels.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct SweepFlags {
  std::string config_path;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::string methods;
  std::optional<double> tol;
  std::string out;
  unsigned threads = 0;
  std::string kernel = "auto";
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  auto* config = cmd->add_option("--config", f.config_path, "Experiment configuration file")->check(CLI::ExistingFile);
  auto* preset = cmd->add_option("--preset", f.preset, "Built-in scenario: fig2, fig3 or fig4");
  config->excludes(preset);
  cmd->add_option("--seed", f.seed, "Master seed for Monte Carlo substreams");
  cmd->add_option("--samples", f.samples, "Monte Carlo samples per point");
  cmd->add_option("--methods", f.methods, "Comma list of paper-closed-form, quadrature, monte-carlo");
  cmd->add_option("--tol", f.tol, "Absolute quadrature tolerance");
  cmd->add_option("--out", f.out, "Output CSV path ('-' for stdout)");
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all hardware threads, 1 = serial)");
  cmd->add_option("--kernel", f.kernel, "Simulation kernels: auto, scalar or avx2");
}

swmac::ExperimentConfig resolve_config(const SweepFlags& f) {
  swmac::ExperimentConfig config;
  if (!f.config_path.empty()) {
    config = swmac::load_config(f.config_path);
  } else if (!f.preset.empty()) {
    config = swmac::load_preset(f.preset);
  } else {
    throw swmac::ValidationError("one of --config or --preset is required");
  }
  if (f.seed) config.seed = *f.seed;
  if (f.samples) config.mc_samples = *f.samples;
  if (f.tol) config.quad_tol = *f.tol;
  if (!f.methods.empty()) {
    // Reuse the config grammar for the list.
    const auto parsed = swmac::parse_config("methods = " + f.methods + "\n[budget]\np1 = 1\np2 = 1\n");
    config.methods = parsed.methods;
  }
  if (!f.out.empty()) config.output_path = f.out;
  swmac::validate(config);
  return config;
}

template <class Writer>
void write_output(const std::filesystem::path& path, Writer&& writer) {
  if (path == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw swmac::IoError("cannot open " + path.string() + " for writing");
  writer(out);
  if (!out.flush()) throw swmac::IoError("failed writing " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outage probability and rate regions for a two-user MAC with FGM-dependent Rayleigh fading"};
  app.require_subcommand(1);

  SweepFlags outage_flags;
  auto* outage = app.add_subcommand("outage", "Run an outage sweep and write CSV");
  add_sweep_flags(outage, outage_flags);

  SweepFlags compare_flags;
  auto* compare = app.add_subcommand("compare", "Compare outage evaluators; CSV plus a summary on stdout");
  add_sweep_flags(compare, compare_flags);

  double p0 = 0.0, p1 = 1.0, p2 = 1.0, noise = 1.0, r0 = 0.0;
  std::optional<double> g1, g2;
  std::string region_out = "-";
  auto* region = app.add_subcommand("region", "Write the (R1, R2) vertices of the rate region at common rate r0");
  region->add_option("--p0", p0, "Common-message power")->capture_default_str();
  region->add_option("--p1", p1, "Power cap of transmitter 1")->capture_default_str();
  region->add_option("--p2", p2, "Power cap of transmitter 2")->capture_default_str();
  region->add_option("--noise", noise, "Noise variance")->capture_default_str();
  auto* g1_opt = region->add_option("--g1", g1, "Power gain |h1|^2 (omit both for the Gaussian region)");
  auto* g2_opt = region->add_option("--g2", g2, "Power gain |h2|^2");
  g1_opt->needs(g2_opt);
  g2_opt->needs(g1_opt);
  region->add_option("--r0", r0, "Common-message rate")->capture_default_str();
  region->add_option("--out", region_out, "Output CSV path ('-' for stdout)");

  double theta = 0.0, sigma1_sq = 0.5, sigma2_sq = 0.5;
  std::uint64_t sample_count = 1000, sample_seed = 1;
  std::string sample_out = "-";
  auto* sample = app.add_subcommand("sample", "Emit correlated power-gain pairs as CSV");
  sample->add_option("--theta", theta, "FGM dependence parameter in [-1, 1]")->capture_default_str();
  sample->add_option("--sigma1-sq", sigma1_sq, "sigma_1^2 (lambda_1 = 1 / (2 sigma_1^2))")->capture_default_str();
  sample->add_option("--sigma2-sq", sigma2_sq, "sigma_2^2")->capture_default_str();
  sample->add_option("--samples", sample_count, "Number of pairs")->capture_default_str();
  sample->add_option("--seed", sample_seed, "Stream seed")->capture_default_str();
  sample->add_option("--out", sample_out, "Output CSV path ('-' for stdout)");

  auto* preset = app.add_subcommand("preset", "Inspect built-in scenario presets");
  preset->require_subcommand(1);
  auto* preset_list = preset->add_subcommand("list", "List preset names");
  std::string show_name;
  auto* preset_show = preset->add_subcommand("show", "Print a preset in config-file syntax");
  preset_show->add_option("name", show_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  swmac::ExperimentConfig config;
  try {
    if (*outage || *compare) {
      const SweepFlags& f = *outage ? outage_flags : compare_flags;
      config = resolve_config(f);
    }
  } catch (const swmac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*outage) {
      swmac::RunOptions opts{outage_flags.threads, &swmac::sim::kernels_by_name(outage_flags.kernel)};
      const auto rows = swmac::run_outage_sweep(config, opts);
      write_output(config.output_path, [&](std::ostream& os) { swmac::write_sweep_csv(os, rows); });
    } else if (*compare) {
      swmac::RunOptions opts{compare_flags.threads, &swmac::sim::kernels_by_name(compare_flags.kernel)};
      const auto report = swmac::compare_methods(config, opts);
      const std::filesystem::path out = compare_flags.out.empty() ? "compare.csv" : compare_flags.out;
      write_output(out, [&](std::ostream& os) { swmac::write_comparison_csv(os, report); });
      swmac::write_comparison_summary(out == "-" ? std::cerr : std::cout, report);
    } else if (*region) {
      const swmac::PowerBudget budget(p0, p1, p2, noise);
      std::optional<swmac::GainPair> gains;
      if (g1) gains = swmac::make_gain_pair(*g1, *g2);
      if (region_out == "-") {
        const auto bounds = gains ? swmac::wireless_region_bounds(budget, *gains) : swmac::gaussian_region_bounds(budget);
        std::cout << swmac::kRegionCsvHeader << '\n';
        for (const auto& v : swmac::region_vertices(bounds, r0)) std::cout << fmt::format("{},{}\n", v.r1, v.r2);
      } else {
        swmac::emit_region(budget, gains, r0, region_out);
      }
    } else if (*sample) {
      const swmac::DependenceParameter dep(theta);
      const auto marginals = swmac::FadingMarginals::from_sigma_sq(sigma1_sq, sigma2_sq);
      swmac::CounterStream stream(swmac::derive_key(sample_seed, {}));
      write_output(sample_out, [&](std::ostream& os) {
        os << "g1,g2\n";
        for (std::uint64_t i = 0; i < sample_count; ++i) {
          const auto g = swmac::sample_gain_pair(dep, marginals, stream);
          os << fmt::format("{},{}\n", g.g1, g.g2);
        }
      });
    } else if (*preset_list) {
      for (const auto& p : swmac::presets()) std::cout << fmt::format("{:<6} {}\n", p.name, p.description);
    } else if (*preset_show) {
      for (const auto& p : swmac::presets()) {
        if (p.name == show_name) {
          std::cout << p.text;
          return 0;
        }
      }
      std::cerr << "error: unknown preset '" << show_name << "'\n";
      return kExitConfig;
    }
  } catch (const swmac::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const swmac::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const swmac::EmptyRegion& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
