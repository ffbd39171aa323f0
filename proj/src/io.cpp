#include "tda/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

namespace tda {

PointCloud generate_annulus(const AnnulusSpec& spec) {
  if (spec.n_points < 1) throw parameter_error("generate_annulus: need at least one point");
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius))
    throw parameter_error("generate_annulus: radius must be positive");
  if (!(spec.spread >= 0.0) || !std::isfinite(spec.spread))
    throw parameter_error("generate_annulus: spread must be >= 0");

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> noise(0.0, spec.spread > 0.0 ? spec.spread : 1.0);
  PointCloud cloud(spec.n_points, 2);
  for (Index i = 0; i < spec.n_points; ++i) {
    const double theta = angle(rng);
    const double eps = spec.spread > 0.0 ? noise(rng) : 0.0;
    const double r = spec.radius + eps;
    cloud(i, 0) = r * std::cos(theta);
    cloud(i, 1) = r * std::sin(theta);
  }
  return cloud;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> to_double(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) return std::nullopt;
  return value;
}

}  // namespace

PointCloud parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  std::size_t line_no = 0;
  bool first_content = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto fields = split(line);
    std::vector<double> values;
    values.reserve(fields.size());
    bool numeric = true;
    for (auto f : fields) {
      const auto v = to_double(f);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (!numeric) {
      if (first_content) {
        first_content = false;
        continue;  // header
      }
      throw parse_error(line_no, "non-numeric value");
    }
    first_content = false;
    for (double v : values)
      if (!std::isfinite(v)) throw parse_error(line_no, "non-finite value");
    if (rows.empty()) {
      width = values.size();
    } else if (values.size() != width) {
      throw parse_error(line_no, "expected " + std::to_string(width) + " columns, found " +
                                     std::to_string(values.size()));
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw input_error("csv contains no data rows");

  PointCloud cloud(static_cast<Index>(rows.size()), static_cast<Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < width; ++k) cloud(static_cast<Index>(i), static_cast<Index>(k)) = rows[i][k];
  return cloud;
}

PointCloud load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

std::string to_csv(const PointCloud& cloud) {
  std::string out;
  char buf[32];
  for (Index i = 0; i < cloud.rows(); ++i) {
    for (Index k = 0; k < cloud.cols(); ++k) {
      if (k > 0) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", cloud(i, k));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace tda
