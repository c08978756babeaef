#pragma once

// Configuration-driven outage sweeps, method comparison and CSV emission.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swmac/outage.hpp"
#include "swmac/regions.hpp"

namespace swmac {

struct RateGrid {
  double start = 0.1;
  double stop = 3.0;
  double step = 0.1;

  /// start + i * step for i = 0 .. floor((stop - start) / step + 1e-9).
  std::vector<double> values() const;
};

struct ExperimentConfig {
  std::vector<PowerBudget> budgets;
  std::vector<DependenceParameter> thetas;
  RateGrid rate_grid;
  FadingMarginals marginals = FadingMarginals::from_sigma_sq(0.5, 0.5);
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  std::vector<OutageMethod> methods;
  double quad_tol = kDefaultQuadratureTolerance;
  std::filesystem::path output_path;
  /// Inert metadata carried from the channel-parameter table.
  std::vector<std::string> annotations;
};

/// Parses the key/value format documented in README.md. Throws ParseError
/// (with line number) on malformed input and ValidationError on invariant
/// violations.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Throws ValidationError naming the first violated invariant.
void validate(const ExperimentConfig& config);

struct PresetInfo {
  std::string_view name;
  std::string_view description;
  std::string_view text;
};

const std::vector<PresetInfo>& presets();
/// Throws ValidationError for unknown names.
ExperimentConfig load_preset(std::string_view name);

enum class RowFlag { kOk, kOutOfRange, kDegenerateDenominator, kQuadratureNonConvergence };
std::string_view to_string(RowFlag flag) noexcept;

struct SweepRow {
  std::size_t budget_id;
  double theta;
  double rate;
  OutageMethod method;
  std::optional<double> op;  // absent when flag is an error annotation
  std::optional<double> std_error;
  RowFlag flag;
};

struct RunOptions {
  /// Rows evaluated concurrently; 0 selects hardware concurrency.
  unsigned threads = 1;
  const sim::KernelSet* kernels = nullptr;
};

/// One row per (budget, theta, rate, method) in that lexicographic order.
/// Monte Carlo rows draw from derive_key(seed, {budget, theta, rate}).
std::vector<SweepRow> run_outage_sweep(const ExperimentConfig& config, const RunOptions& options = {});

inline constexpr std::string_view kSweepCsvHeader = "budget_id,theta,rate,method,op,std_err,flag";

/// %.12g decimal formatting, LF line endings, fixed header.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

struct ComparisonPoint {
  std::size_t budget_id;
  double theta;
  double rate;
  std::optional<double> paper;
  std::optional<double> quadrature;
  std::optional<double> monte_carlo;
  std::optional<double> mc_std_error;
  std::optional<double> paper_minus_quadrature;
  std::optional<double> quadrature_minus_mc;
  std::optional<double> z_score;
  /// Closed-form deviation predicted at theta = 0 (absent otherwise).
  std::optional<double> expected_residual;
  bool paper_deviates = false;
  bool mc_outlier = false;
};

struct ComparisonReport {
  std::vector<ComparisonPoint> points;
  std::size_t paper_deviations = 0;
  std::size_t paper_out_of_range = 0;
  std::size_t mc_outliers = 0;
  std::size_t errors = 0;
  double quad_tol = kDefaultQuadratureTolerance;
};

/// Evaluates every selected method per point and reports the pairwise
/// differences. Throws ValidationError when fewer than two methods are set.
ComparisonReport compare_methods(const ExperimentConfig& config, const RunOptions& options = {});

inline constexpr std::string_view kCompareCsvHeader =
    "budget_id,theta,rate,paper,quadrature,monte_carlo,mc_std_err,paper_minus_quad,quad_minus_mc,z_score,"
    "expected_residual,flags";

void write_comparison_csv(std::ostream& out, const ComparisonReport& report);
void write_comparison_summary(std::ostream& out, const ComparisonReport& report);

/// Residual lambda1 P e^{-lambda2 gamma / B} / (lambda2 - lambda1 P) by which the
/// closed form undershoots the exact outage at theta = 0.
double independent_closed_form_residual(const OutageQuery& query);

inline constexpr std::string_view kRegionCsvHeader = "r1,r2";

/// Writes region_vertices as CSV with shortest round-trip decimal output.
/// Gaussian region when gains is empty.
void emit_region(const PowerBudget& budget, std::optional<GainPair> gains, double r0,
                 const std::filesystem::path& path);
std::vector<RatePair> read_region_csv(const std::filesystem::path& path);

}  // namespace swmac
