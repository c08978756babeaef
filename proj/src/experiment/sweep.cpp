#include <algorithm>
#include <atomic>
#include <exception>
#include <fmt/format.h>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "swmac/errors.hpp"
#include "swmac/experiment.hpp"
#include "swmac/random.hpp"

namespace swmac {

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

SweepRow evaluate(const ExperimentConfig& config, const RunOptions& options, std::size_t b, std::size_t t,
                  std::size_t r, double rate, OutageMethod method) {
  const OutageQuery query{rate, config.budgets[b], config.marginals, config.thetas[t]};
  SweepRow row{b, config.thetas[t].value(), rate, method, std::nullopt, std::nullopt, RowFlag::kOk};
  try {
    OutageEstimate est{};
    switch (method) {
      case OutageMethod::kPaperClosedForm:
        est = outage_paper_closed_form(query);
        break;
      case OutageMethod::kQuadrature:
        est = outage_quadrature(query, config.quad_tol);
        break;
      case OutageMethod::kMonteCarlo:
        est = outage_monte_carlo(query, config.mc_samples, derive_key(config.seed, {b, t, r}),
                                 MonteCarloOptions{1, options.kernels});
        break;
    }
    row.op = est.value;
    row.std_error = est.std_error;
    if (est.out_of_range) row.flag = RowFlag::kOutOfRange;
  } catch (const DegenerateDenominator&) {
    row.flag = RowFlag::kDegenerateDenominator;
  } catch (const QuadratureNonConvergence&) {
    row.flag = RowFlag::kQuadratureNonConvergence;
  }
  return row;
}

}  // namespace

std::string_view to_string(RowFlag flag) noexcept {
  switch (flag) {
    case RowFlag::kOk:
      return "ok";
    case RowFlag::kOutOfRange:
      return "out-of-range";
    case RowFlag::kDegenerateDenominator:
      return "degenerate-denominator";
    case RowFlag::kQuadratureNonConvergence:
      return "quadrature-nonconvergence";
  }
  return "unknown";
}

std::vector<SweepRow> run_outage_sweep(const ExperimentConfig& config, const RunOptions& options) {
  validate(config);
  const std::vector<double> rates = config.rate_grid.values();
  const std::size_t nb = config.budgets.size(), nt = config.thetas.size(), nr = rates.size();
  const std::size_t nm = config.methods.size();
  std::vector<SweepRow> rows(nb * nt * nr * nm);
  parallel_for(nb * nt * nr, options.threads, [&](std::size_t point) {
    const std::size_t b = point / (nt * nr);
    const std::size_t t = (point / nr) % nt;
    const std::size_t r = point % nr;
    for (std::size_t m = 0; m < nm; ++m) {
      rows[point * nm + m] = evaluate(config, options, b, t, r, rates[r], config.methods[m]);
    }
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << fmt::format("{},{:.12g},{:.12g},{},{},{},{}\n", row.budget_id, row.theta, row.rate, to_string(row.method),
                       row.op ? fmt::format("{:.12g}", *row.op) : std::string(),
                       row.std_error ? fmt::format("{:.12g}", *row.std_error) : std::string(), to_string(row.flag));
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_sweep_csv(out, rows);
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

}  // namespace swmac
