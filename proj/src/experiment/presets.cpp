#include <string>

#include "swmac/errors.hpp"
#include "swmac/experiment.hpp"

namespace swmac {

namespace {

// Common header: noise power 1e-5 W, P0 = 0 (sum-rate outage with no common
// message), the default theta grid and rate axis. The path-loss exponent and
// the per-user Mbps rates from the channel-parameter table enter no formula;
// without a bandwidth they are kept as annotations only.
constexpr std::string_view kFig2 = R"(# P1 = 1 W against P2 = 5 W and 10 W.
# sigma^2 is not published for this scenario; unit-mean gains are assumed.
annotation = path-loss exponent alpha = 2.8 (inert)
annotation = R1 = 0.44 Mbps, R2 = 1.75 Mbps (inert)
thetas = -1, -0.5, 0, 0.5, 1
rate_start = 0.1
rate_stop = 3
rate_step = 0.1
sigma1_sq = 0.5
sigma2_sq = 0.5

[budget]
p0 = 0
p1 = 1
p2 = 5
noise = 1e-5

[budget]
p0 = 0
p1 = 1
p2 = 10
noise = 1e-5
)";

constexpr std::string_view kFig3 = R"(# Equal powers, P1 = P2 = 1 W.
# With P = (P2 - P0) / (P1 - P0) = 1 the closed form is singular whenever
# lambda2 is lambda1, 2 lambda1 or lambda1 / 2, so unit-mean gains on both
# links are not usable here. sigma2^2 = 0.2 (lambda2 = 2.5) keeps all three
# denominators away from zero; override sigma*_sq to explore other values.
annotation = path-loss exponent alpha = 2.8 (inert)
annotation = R1 = 0.44 Mbps, R2 = 1.75 Mbps (inert)
thetas = -1, -0.5, 0, 0.5, 1
rate_start = 0.1
rate_stop = 3
rate_step = 0.1
sigma1_sq = 0.5
sigma2_sq = 0.2

[budget]
p0 = 0
p1 = 1
p2 = 1
noise = 1e-5
)";

constexpr std::string_view kFig4 = R"(# P2 = 1 W against P1 = 5 W and 10 W.
# sigma^2 is not published for this scenario; unit-mean gains are assumed.
annotation = path-loss exponent alpha = 2.8 (inert)
annotation = R1 = 0.44 Mbps, R2 = 1.75 Mbps (inert)
thetas = -1, -0.5, 0, 0.5, 1
rate_start = 0.1
rate_stop = 3
rate_step = 0.1
sigma1_sq = 0.5
sigma2_sq = 0.5

[budget]
p0 = 0
p1 = 5
p2 = 1
noise = 1e-5

[budget]
p0 = 0
p1 = 10
p2 = 1
noise = 1e-5
)";

}  // namespace

const std::vector<PresetInfo>& presets() {
  static const std::vector<PresetInfo> kPresets{
      {"fig2", "P1 = 1 W, P2 in {5, 10} W, N = 1e-5", kFig2},
      {"fig3", "P1 = P2 = 1 W, N = 1e-5 (sigma2^2 = 0.2)", kFig3},
      {"fig4", "P1 in {5, 10} W, P2 = 1 W, N = 1e-5", kFig4},
  };
  return kPresets;
}

ExperimentConfig load_preset(std::string_view name) {
  for (const PresetInfo& p : presets()) {
    if (p.name == name) return parse_config(p.text);
  }
  throw ValidationError("unknown preset '" + std::string(name) + "' (expected fig2, fig3 or fig4)");
}

}  // namespace swmac
