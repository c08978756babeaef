#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "swmac/errors.hpp"
#include "swmac/experiment.hpp"

namespace swmac {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double parse_real(std::size_t line, std::string_view key, std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty() || !std::isfinite(value)) {
    throw ParseError(line, std::string(key), "expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::size_t line, std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    // Accept integral values written in exponent form, e.g. 1e6.
    const double real = parse_real(line, key, text);
    if (real < 0.0 || real != std::floor(real) || real > 1.8e19) {
      throw ParseError(line, std::string(key), "expected a nonnegative integer, got '" + std::string(text) + "'");
    }
    return static_cast<std::uint64_t>(real);
  }
  return value;
}

struct BudgetDraft {
  std::size_t line = 0;
  double p0 = 0.0;
  std::optional<double> p1, p2;
  double noise = 1e-5;
};

PowerBudget finish_budget(const BudgetDraft& d, std::size_t index) {
  const std::string where = "budget " + std::to_string(index) + " (line " + std::to_string(d.line) + ")";
  if (!d.p1 || !d.p2) throw ValidationError(where + ": p1 and p2 are required");
  try {
    return PowerBudget(d.p0, *d.p1, *d.p2, d.noise);
  } catch (const InvalidArgument& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

}  // namespace

std::vector<double> RateGrid::values() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::optional<ExperimentConfig> base;
  std::vector<double> thetas{-1.0, -0.5, 0.0, 0.5, 1.0};
  std::vector<OutageMethod> methods{OutageMethod::kPaperClosedForm, OutageMethod::kQuadrature,
                                    OutageMethod::kMonteCarlo};
  double sigma1_sq = 0.5, sigma2_sq = 0.5;
  std::vector<BudgetDraft> budgets;
  std::set<std::string, std::less<>> seen;
  std::vector<std::string> annotations;
  config.output_path = "outage.csv";

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line != "[budget]") throw ParseError(line_no, std::string(line), "unknown section (only [budget] is allowed)");
      budgets.emplace_back().line = line_no;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "", "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "", "missing key before '='");

    if (!budgets.empty()) {
      BudgetDraft& b = budgets.back();
      if (key == "p0") b.p0 = parse_real(line_no, key, value);
      else if (key == "p1") b.p1 = parse_real(line_no, key, value);
      else if (key == "p2") b.p2 = parse_real(line_no, key, value);
      else if (key == "noise") b.noise = parse_real(line_no, key, value);
      else throw ParseError(line_no, std::string(key), "unknown budget key (expected p0, p1, p2, noise)");
      continue;
    }

    if (key == "annotation") {
      annotations.emplace_back(value);
      continue;
    }
    if (!seen.insert(std::string(key)).second) throw ParseError(line_no, std::string(key), "duplicate key");

    if (key == "preset") {
      if (seen.size() != 1) throw ParseError(line_no, "preset", "preset must precede other keys");
      try {
        base = load_preset(value);
      } catch (const ValidationError& e) {
        throw ParseError(line_no, "preset", e.what());
      }
      thetas.clear();
      for (auto t : base->thetas) thetas.push_back(t.value());
      methods = base->methods;
      config = *base;
      sigma1_sq = 1.0 / (2.0 * base->marginals.lambda1());
      sigma2_sq = 1.0 / (2.0 * base->marginals.lambda2());
      annotations = base->annotations;
    } else if (key == "thetas" || key == "theta") {
      thetas.clear();
      for (auto item : split_list(value)) thetas.push_back(parse_real(line_no, key, item));
    } else if (key == "rate_start") {
      config.rate_grid.start = parse_real(line_no, key, value);
    } else if (key == "rate_stop") {
      config.rate_grid.stop = parse_real(line_no, key, value);
    } else if (key == "rate_step") {
      config.rate_grid.step = parse_real(line_no, key, value);
    } else if (key == "sigma1_sq") {
      sigma1_sq = parse_real(line_no, key, value);
    } else if (key == "sigma2_sq") {
      sigma2_sq = parse_real(line_no, key, value);
    } else if (key == "mc_samples") {
      config.mc_samples = parse_count(line_no, key, value);
    } else if (key == "seed") {
      config.seed = parse_count(line_no, key, value);
    } else if (key == "methods") {
      methods.clear();
      for (auto item : split_list(value)) {
        const auto m = parse_outage_method(item);
        if (!m) throw ParseError(line_no, "methods", "unknown method '" + std::string(item) + "'");
        methods.push_back(*m);
      }
    } else if (key == "quad_tol") {
      config.quad_tol = parse_real(line_no, key, value);
    } else if (key == "output") {
      config.output_path = std::string(value);
    } else {
      throw ParseError(line_no, std::string(key), "unknown key");
    }
  }

  if (!budgets.empty() || !base) {
    config.budgets.clear();
    for (std::size_t i = 0; i < budgets.size(); ++i) config.budgets.push_back(finish_budget(budgets[i], i));
  }
  config.thetas.clear();
  for (double t : thetas) {
    try {
      config.thetas.emplace_back(t);
    } catch (const InvalidArgument& e) {
      throw ValidationError(std::string("thetas: ") + e.what());
    }
  }
  try {
    config.marginals = FadingMarginals::from_sigma_sq(sigma1_sq, sigma2_sq);
  } catch (const InvalidArgument& e) {
    throw ValidationError(std::string("sigma1_sq/sigma2_sq: ") + e.what());
  }
  config.methods = methods;
  config.annotations = annotations;
  validate(config);
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate(const ExperimentConfig& config) {
  if (config.budgets.empty()) throw ValidationError("budgets: at least one [budget] section is required");
  for (std::size_t i = 0; i < config.budgets.size(); ++i) {
    const PowerBudget& b = config.budgets[i];
    if (!(b.p0() < std::min(b.p1(), b.p2()))) {
      throw ValidationError("budget " + std::to_string(i) + ": outage sweeps require p0 < min(p1, p2)");
    }
  }
  if (config.thetas.empty()) throw ValidationError("thetas: at least one value is required");
  const RateGrid& g = config.rate_grid;
  if (!(g.step > 0.0)) throw ValidationError("rate_step must be > 0");
  if (!(g.start <= g.stop)) throw ValidationError("rate_start must be <= rate_stop");
  if (!(g.start >= 0.0)) throw ValidationError("rate_start must be >= 0");
  if (config.methods.empty()) throw ValidationError("methods: at least one method is required");
  for (std::size_t i = 0; i < config.methods.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (config.methods[i] == config.methods[j]) throw ValidationError("methods: duplicate entry");
    }
  }
  const bool monte_carlo =
      std::find(config.methods.begin(), config.methods.end(), OutageMethod::kMonteCarlo) != config.methods.end();
  if (monte_carlo && config.mc_samples < 1000) throw ValidationError("mc_samples must be >= 1000 for monte-carlo");
  if (!(config.quad_tol > 0.0 && config.quad_tol <= 1e-2)) throw ValidationError("quad_tol must lie in (0, 1e-2]");
}

}  // namespace swmac
