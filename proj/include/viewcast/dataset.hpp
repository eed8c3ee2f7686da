#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "viewcast/kv.hpp"

namespace viewcast {

enum class Metric { views, likes, comments, shares };

inline constexpr std::array<Metric, 4> kAllMetrics{Metric::views, Metric::likes, Metric::comments,
                                                   Metric::shares};
// Fixed concatenation order for social feature blocks.
inline constexpr std::array<Metric, 3> kSocialMetrics{Metric::likes, Metric::comments,
                                                      Metric::shares};

std::string to_string(Metric m);
std::optional<Metric> metric_from_string(std::string_view s);

// One point of a cumulative counter: value at `t` seconds after publication.
struct Sample {
  std::int64_t t = 0;
  double value = 0.0;
  friend bool operator==(const Sample&, const Sample&) = default;
};

inline constexpr int kDeepDims = 1000;

// Per-video descriptors computable before publication. Flattening order for
// design matrices is fixed: video_characteristics, color, face, text,
// scene_dynamics, clutter, rigidity, thumbnail, deep.
struct VisualFeatures {
  // video_characteristics
  double length_s = 0;
  double frame_count = 0;
  double resolution_class = 0;
  double frame_width = 0;
  double frame_height = 0;
  // color: dominant-color histogram over 10 classes plus the dominant class index
  std::array<double, 10> color_hist{};
  double dominant_color = 0;
  // face
  double faces_per_frame = 0;
  double face_frame_fraction = 0;
  double face_area_ratio = 0;
  // text
  double text_frame_fraction = 0;
  double text_area_ratio = 0;
  // scene_dynamics
  double shot_count = 0;
  double mean_shot_length_s = 0;
  double hard_cuts = 0;
  double soft_cuts = 0;
  // clutter
  double edge_pixel_ratio = 0;
  // rigidity
  double valid_homography_fraction = 0;
  // thumbnail
  double thumbnail_score = 0;
  // deep: CNN class-probability vector, kDeepDims entries
  std::vector<double> deep;

  void validate(const std::string& video_id) const;
  friend bool operator==(const VisualFeatures&, const VisualFeatures&) = default;
};

struct VideoRecord {
  std::string id;
  std::int64_t published_at = 0;  // epoch seconds
  std::map<Metric, std::vector<Sample>> series;
  std::optional<VisualFeatures> visual;
  std::string archetype;  // synthetic-generator label; empty for real data

  bool has(Metric m) const { return series.find(m) != series.end(); }
  const std::vector<Sample>& samples(Metric m) const;
  // Last sample time of the metric, or -1 when the series is absent/empty.
  std::int64_t span(Metric m) const;
  void validate() const;
  friend bool operator==(const VideoRecord&, const VideoRecord&) = default;
};

enum class Resolution { hour, day };

std::int64_t resolution_seconds(Resolution r);
std::string to_string(Resolution r);
std::optional<Resolution> resolution_from_string(std::string_view s);

struct Dataset {
  std::string name;
  Resolution resolution = Resolution::day;
  std::vector<VideoRecord> records;

  std::size_t size() const { return records.size(); }
  const VideoRecord& by_id(const std::string& id) const;
  void validate() const;
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct LoadDiagnostic {
  std::size_t line = 0;
  std::string video_id;
  std::string metric;
  std::string message;
};

inline constexpr const char* kSchemaTimeseries = "timeseries";
inline constexpr const char* kSchemaFacebookWide = "facebook_wide";

// Loads a time-series CSV. Schemas:
//   timeseries:     video_id,published_at_epoch,metric,t_offset_seconds,value
//   facebook_wide:  video_id,published_at_epoch,t_offset_seconds,views,likes,comments,shares
// Samples that break cumulative monotonicity are rejected row-by-row and
// reported through `diagnostics`; parse failures throw DataError with the
// offending line and field.
Dataset load_dataset(const std::filesystem::path& path, const std::string& schema,
                     std::vector<LoadDiagnostic>* diagnostics = nullptr);

void save_dataset(const Dataset& d, const std::filesystem::path& path, const std::string& schema);

// Wide visual-features CSV: video_id,<group>.<field>,...,deep.0000..deep.0999.
void load_visual_csv(Dataset& d, const std::filesystem::path& path);
void save_visual_csv(const Dataset& d, const std::filesystem::path& path);

// Keeps records whose views series reaches min_horizon with no sampling gap
// larger than twice the dataset resolution (counting from publication).
Dataset preprocess(const Dataset& d, std::int64_t min_horizon_s);

// Cumulative count at offset t, linearly interpolated between samples.
// Refuses extrapolation beyond the last sample.
double sample_at(const VideoRecord& r, Metric m, std::int64_t t);

struct SynthConfig {
  std::size_t n = 0;
  double horizon_days = 30.0;
  // archetype name -> mixture weight; names: power_law, logistic, linear
  std::vector<std::pair<std::string, double>> archetypes{{"power_law", 1.0}};
  double noise = 0.0;
  Resolution resolution = Resolution::day;
  bool visual = false;
  bool social = true;
  std::string name = "synthetic";

  void validate() const;
  static SynthConfig from_kv(const kv::Map& m);
  kv::Map to_kv() const;
};

// Deterministic synthetic dataset. Growth curves per archetype (u = offset in
// resolution units, all strictly increasing from N(0) = 0):
//   power_law: 1 + N(u) = (1 + u)^b, so ln(1+N) is exactly linear in ln(1+u)
//   logistic:  N(u) = L * (s(u) - s(0)),  s(u) = 1/(1+exp(-k(u-u0)))
//   linear:    N(u) = c * u
// Noise multiplies per-interval increments by exp(noise * z), preserving
// monotonicity. The planted power-law coefficient between offsets u_r < u_t
// is ln(1+u_t)/ln(1+u_r) for every video.
Dataset synthesize(const SynthConfig& cfg, std::uint64_t seed);

// The exact log-space growth ratio the power_law archetype plants.
double power_law_alpha(double u_r, double u_t);

}  // namespace viewcast
