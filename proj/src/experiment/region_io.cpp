#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <string>

#include "swmac/errors.hpp"
#include "swmac/experiment.hpp"

namespace swmac {

void emit_region(const PowerBudget& budget, std::optional<GainPair> gains, double r0,
                 const std::filesystem::path& path) {
  const RegionBounds bounds = gains ? wireless_region_bounds(budget, *gains) : gaussian_region_bounds(budget);
  const std::vector<RatePair> vertices = region_vertices(bounds, r0);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << kRegionCsvHeader << '\n';
  // {} is the shortest representation that parses back to the same double.
  for (const RatePair& v : vertices) out << fmt::format("{},{}\n", v.r1, v.r2);
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

std::vector<RatePair> read_region_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kRegionCsvHeader) throw IoError(path.string() + ": missing r1,r2 header");
  std::vector<RatePair> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError(path.string() + ": malformed vertex line '" + line + "'");
    RatePair v{};
    const char* end = line.data() + line.size();
    const auto first = std::from_chars(line.data(), line.data() + comma, v.r1);
    const auto second = std::from_chars(line.data() + comma + 1, end, v.r2);
    if (first.ec != std::errc{} || second.ec != std::errc{} || second.ptr != end) {
      throw IoError(path.string() + ": malformed vertex line '" + line + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace swmac
