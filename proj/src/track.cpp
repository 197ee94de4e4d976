#include "blackline/track.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blackline {

namespace {

// Pose after traversing the whole segment from `start`.
Pose2 advance(const Pose2& start, const Segment& seg) {
  if (seg.kind == SegmentKind::kLine || seg.curvature == 0.0) {
    return {start.position + start.tangent() * seg.length, start.heading};
  }
  const double radius = 1.0 / seg.curvature;  // signed; center on the left for +
  const Vec2 center = start.position + start.left_normal() * radius;
  const double sweep = seg.curvature * seg.length;
  const Vec2 rel = start.position - center;
  const double c = std::cos(sweep), s = std::sin(sweep);
  return {{center.x + rel.x * c - rel.y * s, center.y + rel.x * s + rel.y * c},
          start.heading + sweep};
}

Pose2 pose_within(const Pose2& start, const Segment& seg, double ds) {
  Segment part = seg;
  part.length = ds;
  return advance(start, part);
}

void validate(const TrackSpec& track) {
  if (track.segments.empty()) throw std::invalid_argument("track: no segments");
  if (track.lane_width <= 0.0) throw std::invalid_argument("track: lane_width must be > 0");
  const auto& m = track.texture.markings;
  if (m.center_width_m <= 0.0 || m.center_width_m >= track.lane_width ||
      m.edge_width_m <= 0.0 || m.edge_width_m >= track.lane_width)
    throw std::invalid_argument("track: marking widths must be in (0, lane_width)");
  for (const auto& seg : track.segments) {
    if (seg.length <= 0.0) throw std::invalid_argument("track: segment length must be > 0");
    if (seg.kind == SegmentKind::kLine && seg.curvature != 0.0)
      throw std::invalid_argument("track: line segment with nonzero curvature");
  }
}

}  // namespace

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::kStraight: return "straight";
    case Scenario::kRightCorner: return "right_corner";
    case Scenario::kLeftCorner: return "left_corner";
  }
  return "?";
}

Scenario scenario_from_string(const std::string& name) {
  if (name == "straight") return Scenario::kStraight;
  if (name == "right_corner") return Scenario::kRightCorner;
  if (name == "left_corner") return Scenario::kLeftCorner;
  throw std::invalid_argument("unknown scenario: " + name);
}

const char* to_string(Region r) {
  switch (r) {
    case Region::kOwnLane: return "own_lane";
    case Region::kOppositeLane: return "opposite_lane";
    case Region::kOffroad: return "offroad";
    case Region::kOutOfBounds: return "out_of_bounds";
  }
  return "?";
}

TrackSpec build_track(Scenario scenario, double lane_width, double corner_radius) {
  if (lane_width <= 0.0) throw std::invalid_argument("build_track: lane_width must be > 0");
  TrackSpec track;
  track.scenario = scenario;
  track.lane_width = lane_width;

  track.segments.push_back({SegmentKind::kLine, kApproachLength, 0.0});
  if (scenario != Scenario::kStraight) {
    if (corner_radius <= lane_width)
      throw std::invalid_argument("build_track: corner_radius must exceed lane_width");
    const double sign = scenario == Scenario::kLeftCorner ? 1.0 : -1.0;
    track.segments.push_back(
        {SegmentKind::kArc, M_PI_2 * corner_radius, sign / corner_radius});
  }
  track.segments.push_back({SegmentKind::kLine, kApproachLength, 0.0});

  track.total_length = 0.0;
  for (const auto& seg : track.segments) track.total_length += seg.length;
  validate(track);
  return track;
}

Pose2 centerline_pose(const TrackSpec& track, double s) {
  if (s < 0.0 || s > track.total_length)
    throw std::out_of_range("centerline_pose: s outside [0, total_length]");
  Pose2 pose;
  for (const auto& seg : track.segments) {
    if (s <= seg.length) return pose_within(pose, seg, s);
    pose = advance(pose, seg);
    s -= seg.length;
  }
  return pose;
}

Pose2 centerline_pose_extended(const TrackSpec& track, double s) {
  if (s < 0.0) {
    Pose2 start;
    return {start.position + start.tangent() * s, start.heading};
  }
  if (s > track.total_length) {
    Pose2 end;
    for (const auto& seg : track.segments) end = advance(end, seg);
    return {end.position + end.tangent() * (s - track.total_length), end.heading};
  }
  return centerline_pose(track, s);
}

RoadCoords project_to_road(const TrackSpec& track, const Vec2& p) {
  RoadCoords best{0.0, std::numeric_limits<double>::infinity()};
  Pose2 pose;
  double s0 = 0.0;
  const std::size_t n = track.segments.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment& seg = track.segments[i];
    if (seg.kind == SegmentKind::kLine || seg.curvature == 0.0) {
      const Vec2 rel = p - pose.position;
      const double u = rel.dot(pose.tangent());
      const double d = rel.dot(pose.left_normal());
      const double lo = i == 0 ? -std::numeric_limits<double>::infinity() : 0.0;
      const double hi = i + 1 == n ? std::numeric_limits<double>::infinity() : seg.length;
      if (u >= lo && u <= hi && std::abs(d) < std::abs(best.d)) best = {s0 + u, d};
    } else {
      const double radius = 1.0 / seg.curvature;
      const Vec2 center = pose.position + pose.left_normal() * radius;
      const Vec2 va = pose.position - center;
      const Vec2 vp = p - center;
      const double r = vp.norm();
      const double sign = seg.curvature > 0.0 ? 1.0 : -1.0;
      const double d = sign * (std::abs(radius) - r);
      // Angle traveled from segment start to the point, in travel direction.
      double delta = std::atan2(va.cross(vp), va.dot(vp)) * sign;
      if (delta < 0.0) delta += 2.0 * M_PI;
      const double sweep = seg.length * std::abs(seg.curvature);
      if (delta <= sweep && std::abs(d) < std::abs(best.d))
        best = {s0 + delta * std::abs(radius), d};
    }
    pose = advance(pose, seg);
    s0 += seg.length;
  }
  return best;
}

Region classify_region(double d, double lane_width) {
  const double a = std::abs(d);
  if (a <= lane_width) return d <= 0.0 ? Region::kOwnLane : Region::kOppositeLane;
  if (a <= lane_width + kShoulderWidth) return Region::kOffroad;
  return Region::kOutOfBounds;
}

CanvasRegion::CanvasRegion(const TrackSpec& track, double loc_s,
                           std::shared_ptr<const PatternRaster> raster)
    : location_s(loc_s), side_meters(2.0 * track.lane_width), content(std::move(raster)) {
  if (location_s < 0.0 || location_s > track.total_length - side_meters)
    throw std::invalid_argument("canvas: footprint outside the track");
}

SurfaceSample sample_surface(const TrackSpec& track, const CanvasRegion* canvas,
                             const Vec2& p) {
  const RoadCoords rc = project_to_road(track, p);
  const double w = track.lane_width;
  const double a = std::abs(rc.d);
  const Region region = classify_region(rc.d, w);

  Rgb8 color;
  const auto& tex = track.texture;
  if (a <= w) {
    color = tex.base_color;
    // Double yellow center line: two bands around the centerline.
    const double cw = tex.markings.center_width_m;
    const double center_line_offset = cw / 2.0 + 0.05;
    if (std::abs(a - center_line_offset) <= cw / 2.0) color = tex.markings.center_color;
    // White edge lines just inside each lane edge.
    const double ew = tex.markings.edge_width_m;
    if (std::abs(a - (w - ew / 2.0 - 0.09)) <= ew / 2.0) color = tex.markings.edge_color;
  } else if (a <= w + kCurbWidth) {
    color = tex.curb_color;
  } else {
    color = tex.offroad_color;
  }

  // Painted canvas cells override road colors, never out-of-road regions.
  if (canvas != nullptr && canvas->content != nullptr && a <= w && rc.s >= canvas->location_s &&
      rc.s <= canvas->end_s()) {
    const int res = canvas->resolution;
    int cx = static_cast<int>((rc.d + w) / (2.0 * w) * res);
    int cy = static_cast<int>((rc.s - canvas->location_s) / canvas->side_meters * res);
    cx = cx < 0 ? 0 : (cx >= res ? res - 1 : cx);
    cy = cy < 0 ? 0 : (cy >= res ? res - 1 : cy);
    if (canvas->content->painted(cx, cy)) color = Rgb8{0, 0, 0};
  }
  return {color, region};
}

}  // namespace blackline
