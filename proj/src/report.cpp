#include "rmt/report.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rmt/errors.hpp"

namespace rmt {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + tmp + " for writing");
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw ConfigError("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ConfigError("rename to " + path + " failed: " +
                      std::strerror(errno));
}

namespace {
constexpr const char* kCurveHeader = "mass,value,stderr,n_samples,seed";
}

std::string curve_to_csv(const CurveEstimate& curve) {
  std::ostringstream out;
  out << kCurveHeader << "\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const Estimate& e = curve.points[i];
    out << format_g17(curve.masses[i]) << ',' << format_g17(e.value) << ','
        << format_g17(e.std_err) << ',' << e.n_samples << ',' << e.seed
        << "\n";
  }
  return out.str();
}

CurveEstimate curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader)
    throw ConfigError("unexpected CSV header; want '" +
                      std::string(kCurveHeader) + "'");
  CurveEstimate curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5)
      throw ConfigError("CSV row with " + std::to_string(cells.size()) +
                        " cells; want 5");
    try {
      Estimate e;
      curve.masses.push_back(std::stod(cells[0]));
      e.value = std::stod(cells[1]);
      e.std_err = std::stod(cells[2]);
      e.n_samples = std::stoll(cells[3]);
      e.seed = std::stoull(cells[4]);
      curve.points.push_back(e);
    } catch (const std::exception& ex) {
      throw ConfigError(std::string("bad CSV cell: ") + ex.what());
    }
  }
  const auto p = static_cast<Eigen::Index>(curve.points.size());
  curve.mean_covariance = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    double s = curve.points[static_cast<std::size_t>(i)].std_err;
    curve.mean_covariance(i, i) = s * s;
  }
  return curve;
}

}  // namespace rmt
