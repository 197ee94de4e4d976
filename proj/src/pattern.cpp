#include "blackline/pattern.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "blackline/geometry.hpp"

namespace blackline {

const char* to_string(PatternKind k) {
  return k == PatternKind::kSingleLine ? "single_line" : "double_line";
}

PatternKind pattern_kind_from_string(const std::string& name) {
  if (name == "single_line") return PatternKind::kSingleLine;
  if (name == "double_line") return PatternKind::kDoubleLine;
  throw std::invalid_argument("unknown pattern kind: " + name);
}

bool PatternParams::valid() const {
  if (position < 0.0 || position > kPatternCells) return false;
  if (rotation < 0.0 || rotation >= 180.0) return false;
  if (width < 1.0) return false;
  if (kind == PatternKind::kSingleLine && gap.has_value()) return false;
  if (kind == PatternKind::kDoubleLine && (!gap.has_value() || *gap < 0.0)) return false;
  return true;
}

int PatternRaster::painted_count() const {
  return std::accumulate(cells_.begin(), cells_.end(), 0);
}

Image PatternRaster::to_image(Rgb8 color) const {
  Image img(kPatternCells, kPatternCells);
  for (int y = 0; y < kPatternCells; ++y)
    for (int x = 0; x < kPatternCells; ++x)
      img.set(x, y, painted(x, y) ? color : Rgb8{255, 255, 255});
  return img;
}

PatternRaster rasterize(const PatternParams& params) {
  if (!params.valid()) throw std::invalid_argument("rasterize: invalid pattern params");

  const double theta = deg2rad(params.rotation);
  const Vec2 dir{std::cos(theta), std::sin(theta)};
  const Vec2 anchor{params.position, kPatternCells / 2.0};
  const double half_width = params.width / 2.0;
  const double half_gap = params.kind == PatternKind::kDoubleLine ? *params.gap / 2.0 : 0.0;

  PatternRaster raster;
  for (int y = 0; y < kPatternCells; ++y) {
    for (int x = 0; x < kPatternCells; ++x) {
      const Vec2 rel{x + 0.5 - anchor.x, y + 0.5 - anchor.y};
      // Perpendicular offset of the cell center from the anchor line.
      const double c = dir.cross(rel);
      bool hit;
      if (params.kind == PatternKind::kSingleLine) {
        hit = std::abs(c) <= half_width;
      } else {
        hit = std::abs(c - half_gap) <= half_width || std::abs(c + half_gap) <= half_width;
      }
      if (hit) raster.set(x, y, true);
    }
  }
  return raster;
}

PatternGrid enumerate_grid(PatternKind kind, double position_step, double rotation_step,
                           const std::vector<double>& widths, const std::vector<double>& gaps) {
  if (position_step <= 0.0 || rotation_step <= 0.0)
    throw std::invalid_argument("enumerate_grid: steps must be positive");
  if (widths.empty()) throw std::invalid_argument("enumerate_grid: empty width axis");
  if (kind == PatternKind::kDoubleLine && gaps.empty())
    throw std::invalid_argument("enumerate_grid: empty gap axis");

  std::vector<double> positions;
  for (double p = 0.0; p <= kPatternCells + 1e-9; p += position_step) positions.push_back(p);
  std::vector<double> rotations;
  for (double r = 0.0; r < 180.0 - 1e-9; r += rotation_step) rotations.push_back(r);

  PatternGrid grid;
  grid.kind = kind;
  const std::vector<double> gap_axis =
      kind == PatternKind::kDoubleLine ? gaps : std::vector<double>{0.0};
  for (double pos : positions)
    for (double rot : rotations)
      for (double w : widths)
        for (double g : gap_axis) {
          PatternParams p;
          p.kind = kind;
          p.position = pos;
          p.rotation = rot;
          p.width = w;
          if (kind == PatternKind::kDoubleLine) p.gap = g;
          grid.entries.push_back(p);
        }
  return grid;
}

}  // namespace blackline
