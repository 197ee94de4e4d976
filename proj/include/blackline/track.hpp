#pragma once

#include <memory>
#include <vector>

#include "blackline/geometry.hpp"
#include "blackline/image.hpp"
#include "blackline/pattern.hpp"

namespace blackline {

enum class Scenario { kStraight, kRightCorner, kLeftCorner };

const char* to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

enum class SegmentKind { kLine, kArc };

struct Segment {
  SegmentKind kind = SegmentKind::kLine;
  double length = 0.0;     // meters, > 0
  double curvature = 0.0;  // 1/m, signed, + for left turn; 0 for lines
};

struct LaneMarkingSpec {
  Rgb8 center_color{205, 175, 40};  // double yellow center line
  double center_width_m = 0.12;     // each line of the pair
  Rgb8 edge_color{210, 210, 212};
  double edge_width_m = 0.12;
};

struct RoadTexture {
  Rgb8 base_color{66, 66, 70};
  LaneMarkingSpec markings;
  Rgb8 curb_color{152, 150, 148};
  Rgb8 offroad_color{88, 118, 66};
};

// Road shoulder: curb strip then grass, then out-of-bounds.
inline constexpr double kShoulderWidth = 1.5;
inline constexpr double kCurbWidth = 0.35;

struct TrackSpec {
  Scenario scenario = Scenario::kStraight;
  std::vector<Segment> segments;
  double lane_width = 3.5;  // per driving lane; full road is two lanes
  double total_length = 0.0;
  RoadTexture texture;
};

// Road-frame coordinates: s along the centerline, d signed lateral offset
// (positive = left of travel direction; the own lane is d < 0).
struct RoadCoords {
  double s = 0.0;
  double d = 0.0;
};

enum class Region { kOwnLane, kOppositeLane, kOffroad, kOutOfBounds };

const char* to_string(Region r);

struct SurfaceSample {
  Rgb8 color;
  Region region = Region::kOwnLane;
};

// The 200x200-cell square road patch that patterns are painted onto. The
// cell x-axis spans the full road width (d in [-lane_width, +lane_width]),
// the y-axis spans side_meters of arc length from location_s.
struct CanvasRegion {
  double location_s = 0.0;
  double side_meters = 0.0;
  int resolution = kPatternCells;
  std::shared_ptr<const PatternRaster> content;  // null = empty canvas

  CanvasRegion() = default;
  // Throws std::invalid_argument if the footprint does not fit the track.
  CanvasRegion(const TrackSpec& track, double location_s,
               std::shared_ptr<const PatternRaster> raster);

  double end_s() const { return location_s + side_meters; }
};

// Entry/exit straights around the scenario feature.
inline constexpr double kApproachLength = 30.0;

TrackSpec build_track(Scenario scenario, double lane_width, double corner_radius);

// Pose of the centerline at arc length s in [0, total_length]; throws
// std::out_of_range otherwise.
Pose2 centerline_pose(const TrackSpec& track, double s);

// Like centerline_pose but extends the first/last segment linearly beyond
// the track ends (lookahead targets, projections near the ends).
Pose2 centerline_pose_extended(const TrackSpec& track, double s);

// Nearest road-frame coordinates of an arbitrary world point. Defined for
// every point; s may fall outside [0, total_length] beyond the track ends.
RoadCoords project_to_road(const TrackSpec& track, const Vec2& world_point);

Region classify_region(double lateral_offset, double lane_width);

SurfaceSample sample_surface(const TrackSpec& track, const CanvasRegion* canvas,
                             const Vec2& world_point);

}  // namespace blackline
