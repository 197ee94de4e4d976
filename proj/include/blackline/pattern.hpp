#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blackline/image.hpp"

namespace blackline {

inline constexpr int kPatternCells = 200;

enum class PatternKind { kSingleLine, kDoubleLine };

const char* to_string(PatternKind k);
PatternKind pattern_kind_from_string(const std::string& name);

// Parameter tuple of one painted-line pattern on the canvas. position slides
// the line anchor along the canvas x-axis at mid-height; rotation is measured
// from the x-axis in degrees, half-open [0, 180).
struct PatternParams {
  PatternKind kind = PatternKind::kSingleLine;
  double position = 0.0;      // cells, [0, 200]
  double rotation = 0.0;      // degrees, [0, 180)
  double width = 4.0;         // cells, >= 1
  std::optional<double> gap;  // cells, center-to-center; DoubleLine only
  Rgb8 color{0, 0, 0};

  bool valid() const;
};

// 200x200 boolean occupancy grid; true = painted.
class PatternRaster {
 public:
  PatternRaster() : cells_(kPatternCells * kPatternCells, 0) {}

  bool painted(int x, int y) const {
    return cells_[static_cast<std::size_t>(y) * kPatternCells + x] != 0;
  }
  void set(int x, int y, bool v) {
    cells_[static_cast<std::size_t>(y) * kPatternCells + x] = v ? 1 : 0;
  }
  int painted_count() const;
  bool operator==(const PatternRaster&) const = default;

  // White background, pattern cells in the pattern color.
  Image to_image(Rgb8 color = {0, 0, 0}) const;

 private:
  std::vector<std::uint8_t> cells_;
};

struct PatternGrid {
  PatternKind kind = PatternKind::kSingleLine;
  std::vector<PatternParams> entries;  // pattern_id = index

  std::size_t size() const { return entries.size(); }
};

// Throws std::invalid_argument on invalid params.
PatternRaster rasterize(const PatternParams& params);

// Cartesian sweep: positions 0..200 inclusive by position_step, rotations
// 0..<180 by rotation_step, then widths, then gaps (innermost). The gap axis
// applies to DoubleLine only and must be non-empty for it; it is ignored for
// SingleLine. Throws std::invalid_argument on non-positive steps/empty axes.
PatternGrid enumerate_grid(PatternKind kind, double position_step, double rotation_step,
                           const std::vector<double>& widths, const std::vector<double>& gaps);

}  // namespace blackline
