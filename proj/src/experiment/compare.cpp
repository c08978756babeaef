#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <ostream>

#include "swmac/errors.hpp"
#include "swmac/experiment.hpp"

namespace swmac {

namespace {

constexpr double kZCritical = 3.29;  // two-sided 0.1 %

std::string cell(const std::optional<double>& v) { return v ? fmt::format("{:.12g}", *v) : std::string(); }

}  // namespace

double independent_closed_form_residual(const OutageQuery& query) {
  validate(query);
  const double l1 = query.marginals.lambda1();
  const double l2 = query.marginals.lambda2();
  const double b = query.budget.private2();
  const double p = b / query.budget.private1();
  const double gamma = gamma_threshold(query.rate_threshold, query.budget.noise());
  return l1 * p * std::exp(-l2 * gamma / b) / (l2 - l1 * p);
}

ComparisonReport compare_methods(const ExperimentConfig& config, const RunOptions& options) {
  if (config.methods.size() < 2) throw ValidationError("comparison requires at least two methods");
  const std::vector<SweepRow> rows = run_outage_sweep(config, options);

  ComparisonReport report;
  report.quad_tol = config.quad_tol;
  const std::size_t nm = config.methods.size();
  for (std::size_t i = 0; i < rows.size(); i += nm) {
    ComparisonPoint pt{};
    pt.budget_id = rows[i].budget_id;
    pt.theta = rows[i].theta;
    pt.rate = rows[i].rate;
    for (std::size_t m = 0; m < nm; ++m) {
      const SweepRow& row = rows[i + m];
      if (!row.op) {
        ++report.errors;
        continue;
      }
      switch (row.method) {
        case OutageMethod::kPaperClosedForm:
          pt.paper = row.op;
          if (row.flag == RowFlag::kOutOfRange) ++report.paper_out_of_range;
          break;
        case OutageMethod::kQuadrature:
          pt.quadrature = row.op;
          break;
        case OutageMethod::kMonteCarlo:
          pt.monte_carlo = row.op;
          pt.mc_std_error = row.std_error;
          break;
      }
    }
    if (pt.paper && pt.quadrature) {
      pt.paper_minus_quadrature = *pt.paper - *pt.quadrature;
      pt.paper_deviates = std::abs(*pt.paper_minus_quadrature) > 10.0 * config.quad_tol;
      if (pt.paper_deviates) ++report.paper_deviations;
    }
    if (pt.quadrature && pt.monte_carlo) {
      const double diff = *pt.quadrature - *pt.monte_carlo;
      pt.quadrature_minus_mc = diff;
      const double se = pt.mc_std_error.value_or(0.0);
      pt.z_score = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff));
      pt.mc_outlier = std::abs(*pt.z_score) > kZCritical;
      if (pt.mc_outlier) ++report.mc_outliers;
    }
    if (pt.theta == 0.0) {
      const OutageQuery query{pt.rate, config.budgets[pt.budget_id], config.marginals, DependenceParameter(0.0)};
      pt.expected_residual = independent_closed_form_residual(query);
    }
    report.points.push_back(pt);
  }
  return report;
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
  out << kCompareCsvHeader << '\n';
  for (const ComparisonPoint& p : report.points) {
    std::string flags;
    if (p.paper_deviates) flags = "paper-deviates";
    if (p.mc_outlier) flags += flags.empty() ? "mc-outlier" : ";mc-outlier";
    if (flags.empty()) flags = "ok";
    out << fmt::format("{},{:.12g},{:.12g},{},{},{},{},{},{},{},{},{}\n", p.budget_id, p.theta, p.rate, cell(p.paper),
                       cell(p.quadrature), cell(p.monte_carlo), cell(p.mc_std_error), cell(p.paper_minus_quadrature),
                       cell(p.quadrature_minus_mc), cell(p.z_score), cell(p.expected_residual), flags);
  }
}

void write_comparison_summary(std::ostream& out, const ComparisonReport& report) {
  std::size_t with_mc = 0, with_paper = 0;
  double worst_paper = 0.0, worst_z = 0.0;
  for (const ComparisonPoint& p : report.points) {
    if (p.z_score) {
      ++with_mc;
      worst_z = std::max(worst_z, std::abs(*p.z_score));
    }
    if (p.paper_minus_quadrature) {
      ++with_paper;
      worst_paper = std::max(worst_paper, std::abs(*p.paper_minus_quadrature));
    }
  }
  out << fmt::format("points compared:            {}\n", report.points.size());
  out << fmt::format("closed form vs quadrature:  {} of {} deviate by more than {:.3g} (max |diff| {:.6g})\n",
                     report.paper_deviations, with_paper, 10.0 * report.quad_tol, worst_paper);
  out << fmt::format("closed form out of [0, 1]:  {}\n", report.paper_out_of_range);
  out << fmt::format("quadrature vs Monte Carlo:  {} of {} with |z| > {} (max |z| {:.3f})\n", report.mc_outliers,
                     with_mc, kZCritical, worst_z);
  out << fmt::format("evaluator errors:           {}\n", report.errors);
}

}  // namespace swmac
