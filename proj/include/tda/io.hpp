#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "tda/geometry.hpp"

namespace tda {

struct AnnulusSpec {
  Index n_points = 100;
  double radius = 1.0;  // centre-line radius
  double spread = 0.05; // standard deviation of the radial noise
  std::uint64_t seed = 0;
};

/// Points (R + e)(cos t, sin t) with t uniform on [0, 2 pi) and e ~ N(0, spread^2).
/// Output depends only on the spec.
PointCloud generate_annulus(const AnnulusSpec& spec);

/// Comma-separated rows of finite reals with a uniform column count. A first
/// row that does not parse as numbers is treated as a header. Row numbers in
/// errors are 1-based lines of the input.
PointCloud parse_csv(std::string_view text);
PointCloud load_csv(const std::filesystem::path& path);

/// One row per point, 17 significant digits so that parse_csv round-trips exactly.
std::string to_csv(const PointCloud& cloud);

}  // namespace tda
