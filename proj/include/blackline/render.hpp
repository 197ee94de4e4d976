#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blackline/geometry.hpp"
#include "blackline/image.hpp"
#include "blackline/track.hpp"

namespace blackline {

// Pinhole camera looking down the vehicle heading, pitched toward the road.
struct CameraModel {
  double mount_height = 1.4;
  double pitch = deg2rad(8.0);  // radians, downward positive
  double horizontal_fov = deg2rad(100.0);
  int image_width = 200;
  int image_height = 88;

  // Derived: focal length in pixels and the first image row whose view ray
  // intersects the ground plane.
  double focal_px = 0.0;
  int horizon_row = 0;

  CameraModel() { finalize(); }
  CameraModel(double height, double pitch_rad, double hfov_rad, int width, int height_px);

  void finalize();
};

enum class WeatherKind { kClear, kRain, kSunset };

const char* to_string(WeatherKind w);
WeatherKind weather_from_string(const std::string& name);

struct WeatherPreset {
  WeatherKind name = WeatherKind::kClear;
  double brightness_scale = 1.0;     // (0, 1.5]
  double additive_noise_sigma = 0.0; // 8-bit levels
  double tint[3] = {1.0, 1.0, 1.0};  // RGB multiplier
};

WeatherPreset weather_preset(WeatherKind kind);

inline constexpr Rgb8 kSkyColor{150, 190, 235};

// Digitized front-camera view of the (possibly painted) track from a pose.
// Rows above horizon_row are sky; every other pixel is the ground-plane
// intersection of its view ray, colored by sample_surface, then the weather
// transform (tint * brightness + seeded Gaussian noise). If pattern_pixels is
// non-null it receives the number of pixels that sampled a painted canvas
// cell.
Image render_frame(const TrackSpec& track, const CanvasRegion* canvas, const Pose2& vehicle_pose,
                   const CameraModel& camera, const WeatherPreset& weather,
                   std::uint64_t frame_seed, int* pattern_pixels = nullptr);

// Per-frame pose plan of an episode, for visibility analysis.
struct EpisodePlan {
  CameraModel camera;
  WeatherPreset weather;
  std::vector<Pose2> poses;
};

struct VisibilityWindow {
  std::optional<int> first_frame;  // f_l; empty if the canvas is never visible
  int visible_count = 0;           // number of frames with any visible canvas pixel
};

// First frame whose render differs from the pattern-free render, and the
// count of (not necessarily consecutive) frames in which any canvas pixel is
// visible. Noise-free renders are compared so the result is weather-invariant.
VisibilityWindow frames_in_view(const TrackSpec& track, const CanvasRegion& canvas,
                                const EpisodePlan& plan);

}  // namespace blackline
