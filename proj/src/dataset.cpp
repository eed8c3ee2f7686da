#include "viewcast/dataset.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "viewcast/errors.hpp"
#include "viewcast/rng.hpp"

namespace viewcast {

std::string to_string(Metric m) {
  switch (m) {
    case Metric::views: return "views";
    case Metric::likes: return "likes";
    case Metric::comments: return "comments";
    case Metric::shares: return "shares";
  }
  return "?";
}

std::optional<Metric> metric_from_string(std::string_view s) {
  if (s == "views") return Metric::views;
  if (s == "likes") return Metric::likes;
  if (s == "comments") return Metric::comments;
  if (s == "shares") return Metric::shares;
  return std::nullopt;
}

std::int64_t resolution_seconds(Resolution r) { return r == Resolution::hour ? 3600 : 86400; }

std::string to_string(Resolution r) { return r == Resolution::hour ? "hour" : "day"; }

std::optional<Resolution> resolution_from_string(std::string_view s) {
  if (s == "hour") return Resolution::hour;
  if (s == "day") return Resolution::day;
  return std::nullopt;
}

void VisualFeatures::validate(const std::string& video_id) const {
  const auto fail = [&](const std::string& what) {
    throw DataError("visual features for '" + video_id + "': " + what);
  };
  double hist_sum = 0.0;
  for (double h : color_hist) {
    if (!(h >= 0.0)) fail("color histogram entry negative");
    hist_sum += h;
  }
  if (std::abs(hist_sum - 1.0) > 1e-6) fail("color histogram does not sum to 1");
  const std::pair<const char*, double> fractions[] = {
      {"face.frame_fraction", face_frame_fraction},
      {"face.area_ratio", face_area_ratio},
      {"text.frame_fraction", text_frame_fraction},
      {"text.area_ratio", text_area_ratio},
      {"clutter.edge_ratio", edge_pixel_ratio},
      {"rigidity.valid_homography_fraction", valid_homography_fraction},
  };
  for (const auto& [label, v] : fractions) {
    if (!(v >= 0.0 && v <= 1.0)) fail(std::string(label) + " outside [0, 1]");
  }
  if (deep.size() != static_cast<std::size_t>(kDeepDims)) {
    fail("deep vector has " + std::to_string(deep.size()) + " entries, expected " +
         std::to_string(kDeepDims));
  }
  for (double v : deep) {
    if (!(v >= 0.0)) fail("deep vector entry negative");
  }
}

const std::vector<Sample>& VideoRecord::samples(Metric m) const {
  const auto it = series.find(m);
  if (it == series.end()) {
    throw std::invalid_argument("record '" + id + "' has no " + to_string(m) + " series");
  }
  return it->second;
}

std::int64_t VideoRecord::span(Metric m) const {
  const auto it = series.find(m);
  if (it == series.end() || it->second.empty()) return -1;
  return it->second.back().t;
}

void VideoRecord::validate() const {
  for (const auto& [metric, samples] : series) {
    const Sample* prev = nullptr;
    for (const Sample& s : samples) {
      if (s.t < 0) throw DataError("record '" + id + "' " + to_string(metric) + ": negative t");
      if (!(s.value >= 0.0)) {
        throw DataError("record '" + id + "' " + to_string(metric) + ": negative value");
      }
      if (prev) {
        if (s.t <= prev->t) {
          throw DataError("record '" + id + "' " + to_string(metric) + ": t not strictly increasing");
        }
        if (s.value < prev->value) {
          throw DataError("record '" + id + "' " + to_string(metric) + ": cumulative value decreases");
        }
      }
      prev = &s;
    }
  }
  if (visual) visual->validate(id);
}

const VideoRecord& Dataset::by_id(const std::string& id) const {
  for (const auto& r : records) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("no record with id '" + id + "'");
}

void Dataset::validate() const {
  std::unordered_set<std::string> ids;
  for (const auto& r : records) {
    if (!ids.insert(r.id).second) throw DataError("duplicate record id '" + r.id + "'");
    r.validate();
  }
}

// ---------------------------------------------------------------------------
// CSV IO

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_value(const std::string& field, std::size_t line, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw DataError("line " + std::to_string(line) + ": malformed " + what + " '" + field + "'");
  }
  return v;
}

std::int64_t parse_i64(const std::string& field, std::size_t line, const char* what) {
  char* end = nullptr;
  const long long v = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0') {
    throw DataError("line " + std::to_string(line) + ": malformed " + what + " '" + field + "'");
  }
  return v;
}

void format_value(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

struct RowSink {
  std::unordered_map<std::string, std::size_t> index;
  std::vector<VideoRecord> records;
  std::vector<LoadDiagnostic>* diagnostics;

  VideoRecord& record_for(const std::string& id, std::int64_t published_at, std::size_t line) {
    const auto it = index.find(id);
    if (it != index.end()) {
      VideoRecord& r = records[it->second];
      if (r.published_at != published_at) {
        throw DataError("line " + std::to_string(line) + ": malformed published_at_epoch (video '" +
                        id + "' previously declared " + std::to_string(r.published_at) + ")");
      }
      return r;
    }
    index.emplace(id, records.size());
    VideoRecord r;
    r.id = id;
    r.published_at = published_at;
    records.push_back(std::move(r));
    return records.back();
  }

  void reject(std::size_t line, const std::string& id, Metric m, const std::string& message) {
    if (diagnostics) diagnostics->push_back({line, id, to_string(m), message});
  }

  // Appends one cumulative sample, dropping rows that violate the
  // non-negative / strictly-increasing-t / non-decreasing-value contract.
  void add_sample(std::size_t line, const std::string& id, std::int64_t published_at, Metric m,
                  std::int64_t t, double value) {
    if (t < 0) {
      reject(line, id, m, "negative t_offset");
      return;
    }
    if (value < 0.0) {
      reject(line, id, m, "negative value");
      return;
    }
    VideoRecord& r = record_for(id, published_at, line);
    auto& samples = r.series[m];
    if (!samples.empty()) {
      if (t <= samples.back().t) {
        reject(line, id, m, "t_offset not strictly increasing");
        return;
      }
      if (value < samples.back().value) {
        reject(line, id, m, to_string(m) + " decreases between samples");
        return;
      }
    }
    samples.push_back({t, value});
  }
};

Resolution infer_resolution(const std::vector<VideoRecord>& records) {
  std::int64_t min_gap = std::numeric_limits<std::int64_t>::max();
  for (const auto& r : records) {
    for (const auto& [metric, samples] : r.series) {
      for (std::size_t i = 1; i < samples.size(); ++i) {
        min_gap = std::min(min_gap, samples[i].t - samples[i - 1].t);
      }
    }
  }
  return min_gap < resolution_seconds(Resolution::day) ? Resolution::hour : Resolution::day;
}

void check_header(const std::vector<std::string>& got, const std::vector<std::string>& want,
                  const std::string& schema) {
  if (got != want) {
    std::string expect;
    for (std::size_t i = 0; i < want.size(); ++i) expect += (i ? "," : "") + want[i];
    throw DataError("header does not match schema '" + schema + "' (expected: " + expect + ")");
  }
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, const std::string& schema,
                     std::vector<LoadDiagnostic>* diagnostics) {
  if (schema != kSchemaTimeseries && schema != kSchemaFacebookWide) {
    throw DataError("unknown schema id '" + schema + "'");
  }
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: " + path.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();

  RowSink sink;
  sink.diagnostics = diagnostics;
  std::size_t lineno = 1;
  bool any_row = false;

  if (schema == kSchemaTimeseries) {
    check_header(split_csv(line), {"video_id", "published_at_epoch", "metric", "t_offset_seconds", "value"}, schema);
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      any_row = true;
      const auto f = split_csv(line);
      if (f.size() != 5) {
        throw DataError("line " + std::to_string(lineno) + ": expected 5 fields, got " +
                        std::to_string(f.size()));
      }
      const auto metric = metric_from_string(f[2]);
      if (!metric) {
        throw DataError("line " + std::to_string(lineno) + ": malformed metric '" + f[2] + "'");
      }
      sink.add_sample(lineno, f[0], parse_i64(f[1], lineno, "published_at_epoch"), *metric,
                      parse_i64(f[3], lineno, "t_offset_seconds"), parse_value(f[4], lineno, "value"));
    }
  } else {
    check_header(split_csv(line),
                 {"video_id", "published_at_epoch", "t_offset_seconds", "views", "likes", "comments", "shares"},
                 schema);
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      any_row = true;
      const auto f = split_csv(line);
      if (f.size() != 7) {
        throw DataError("line " + std::to_string(lineno) + ": expected 7 fields, got " +
                        std::to_string(f.size()));
      }
      const std::int64_t published = parse_i64(f[1], lineno, "published_at_epoch");
      const std::int64_t t = parse_i64(f[2], lineno, "t_offset_seconds");
      const char* names[] = {"views", "likes", "comments", "shares"};
      for (std::size_t m = 0; m < 4; ++m) {
        sink.add_sample(lineno, f[0], published, kAllMetrics[m], t, parse_value(f[3 + m], lineno, names[m]));
      }
    }
  }
  if (!any_row) throw DataError("empty file: " + path.string());

  Dataset d;
  d.name = path.stem().string();
  d.records = std::move(sink.records);
  d.resolution = infer_resolution(d.records);
  d.validate();
  return d;
}

void save_dataset(const Dataset& d, const std::filesystem::path& path, const std::string& schema) {
  if (schema != kSchemaTimeseries && schema != kSchemaFacebookWide) {
    throw DataError("unknown schema id '" + schema + "'");
  }
  std::string out;
  if (schema == kSchemaTimeseries) {
    out += "video_id,published_at_epoch,metric,t_offset_seconds,value\n";
    for (const auto& r : d.records) {
      for (Metric m : kAllMetrics) {
        const auto it = r.series.find(m);
        if (it == r.series.end()) continue;
        for (const Sample& s : it->second) {
          out += r.id;
          out += ',';
          out += std::to_string(r.published_at);
          out += ',';
          out += to_string(m);
          out += ',';
          out += std::to_string(s.t);
          out += ',';
          format_value(out, s.value);
          out += '\n';
        }
      }
    }
  } else {
    out += "video_id,published_at_epoch,t_offset_seconds,views,likes,comments,shares\n";
    for (const auto& r : d.records) {
      const auto& views = r.samples(Metric::views);
      for (Metric m : kSocialMetrics) {
        const auto& s = r.samples(m);
        for (std::size_t i = 0; i < std::max(s.size(), views.size()); ++i) {
          if (i >= s.size() || i >= views.size() || s[i].t != views[i].t) {
            throw DataError("record '" + r.id + "': " + to_string(m) +
                            " series is not aligned with views; cannot write facebook_wide");
          }
        }
      }
      for (std::size_t i = 0; i < views.size(); ++i) {
        out += r.id;
        out += ',';
        out += std::to_string(r.published_at);
        out += ',';
        out += std::to_string(views[i].t);
        for (Metric m : kAllMetrics) {
          out += ',';
          format_value(out, r.samples(m)[i].value);
        }
        out += '\n';
      }
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write dataset file: " + path.string());
  f << out;
}

// ---------------------------------------------------------------------------
// Visual-features CSV

namespace {

// Scalar columns in flattening order; deep.#### columns follow.
const std::vector<std::pair<std::string, double VisualFeatures::*>>& visual_scalar_fields() {
  static const std::vector<std::pair<std::string, double VisualFeatures::*>> fields = {
      {"video_characteristics.length_s", &VisualFeatures::length_s},
      {"video_characteristics.frame_count", &VisualFeatures::frame_count},
      {"video_characteristics.resolution_class", &VisualFeatures::resolution_class},
      {"video_characteristics.frame_width", &VisualFeatures::frame_width},
      {"video_characteristics.frame_height", &VisualFeatures::frame_height},
      // color histogram handled separately
      {"color.dominant", &VisualFeatures::dominant_color},
      {"face.faces_per_frame", &VisualFeatures::faces_per_frame},
      {"face.frame_fraction", &VisualFeatures::face_frame_fraction},
      {"face.area_ratio", &VisualFeatures::face_area_ratio},
      {"text.frame_fraction", &VisualFeatures::text_frame_fraction},
      {"text.area_ratio", &VisualFeatures::text_area_ratio},
      {"scene_dynamics.shot_count", &VisualFeatures::shot_count},
      {"scene_dynamics.mean_shot_length_s", &VisualFeatures::mean_shot_length_s},
      {"scene_dynamics.hard_cuts", &VisualFeatures::hard_cuts},
      {"scene_dynamics.soft_cuts", &VisualFeatures::soft_cuts},
      {"clutter.edge_ratio", &VisualFeatures::edge_pixel_ratio},
      {"rigidity.valid_homography_fraction", &VisualFeatures::valid_homography_fraction},
      {"thumbnail.score", &VisualFeatures::thumbnail_score},
  };
  return fields;
}

}  // namespace

std::vector<std::string> visual_csv_columns() {
  std::vector<std::string> cols;
  const auto& fields = visual_scalar_fields();
  // histogram right after the video_characteristics block, before color.dominant
  for (std::size_t i = 0; i < 5; ++i) cols.push_back(fields[i].first);
  for (int i = 0; i < 10; ++i) cols.push_back("color.hist_" + std::to_string(i));
  for (std::size_t i = 5; i < fields.size(); ++i) cols.push_back(fields[i].first);
  for (int i = 0; i < kDeepDims; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "deep.%04d", i);
    cols.emplace_back(buf);
  }
  return cols;
}

void load_visual_csv(Dataset& d, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open visual features file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: " + path.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> want = visual_csv_columns();
  want.insert(want.begin(), "video_id");
  check_header(split_csv(line), want, "visual");

  std::unordered_map<std::string, VideoRecord*> by_id;
  for (auto& r : d.records) by_id[r.id] = &r;

  const auto& fields = visual_scalar_fields();
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != want.size()) {
      throw DataError("line " + std::to_string(lineno) + ": expected " + std::to_string(want.size()) +
                      " fields, got " + std::to_string(f.size()));
    }
    const auto it = by_id.find(f[0]);
    if (it == by_id.end()) {
      throw DataError("line " + std::to_string(lineno) + ": unknown video_id '" + f[0] + "'");
    }
    VisualFeatures v;
    std::size_t col = 1;
    for (std::size_t i = 0; i < 5; ++i) v.*(fields[i].second) = parse_value(f[col++], lineno, "value");
    for (int i = 0; i < 10; ++i) v.color_hist[i] = parse_value(f[col++], lineno, "value");
    for (std::size_t i = 5; i < fields.size(); ++i) v.*(fields[i].second) = parse_value(f[col++], lineno, "value");
    v.deep.resize(kDeepDims);
    for (int i = 0; i < kDeepDims; ++i) v.deep[i] = parse_value(f[col++], lineno, "value");
    v.validate(f[0]);
    it->second->visual = std::move(v);
  }
}

void save_visual_csv(const Dataset& d, const std::filesystem::path& path) {
  std::string out = "video_id";
  for (const auto& c : visual_csv_columns()) {
    out += ',';
    out += c;
  }
  out += '\n';
  const auto& fields = visual_scalar_fields();
  for (const auto& r : d.records) {
    if (!r.visual) continue;
    const VisualFeatures& v = *r.visual;
    out += r.id;
    const auto emit = [&](double x) {
      out += ',';
      format_value(out, x);
    };
    for (std::size_t i = 0; i < 5; ++i) emit(v.*(fields[i].second));
    for (int i = 0; i < 10; ++i) emit(v.color_hist[i]);
    for (std::size_t i = 5; i < fields.size(); ++i) emit(v.*(fields[i].second));
    for (int i = 0; i < kDeepDims; ++i) emit(v.deep[i]);
    out += '\n';
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write visual features file: " + path.string());
  f << out;
}

// ---------------------------------------------------------------------------

Dataset preprocess(const Dataset& d, std::int64_t min_horizon_s) {
  if (min_horizon_s <= 0) throw std::invalid_argument("min_horizon must be positive");
  const std::int64_t max_gap = 2 * resolution_seconds(d.resolution);
  Dataset out;
  out.name = d.name;
  out.resolution = d.resolution;
  for (const auto& r : d.records) {
    const auto it = r.series.find(Metric::views);
    if (it == r.series.end() || it->second.empty()) continue;
    const auto& samples = it->second;
    if (samples.back().t < min_horizon_s) continue;
    bool gap_ok = true;
    std::int64_t prev = 0;  // publication counts as time zero
    for (const Sample& s : samples) {
      if (s.t - prev > max_gap) {
        gap_ok = false;
        break;
      }
      prev = s.t;
    }
    if (gap_ok) out.records.push_back(r);
  }
  return out;
}

double sample_at(const VideoRecord& r, Metric m, std::int64_t t) {
  const auto& samples = r.samples(m);  // throws when the metric is absent
  if (samples.empty()) throw std::invalid_argument("record '" + r.id + "': empty " + to_string(m) + " series");
  if (t < 0) throw std::out_of_range("sample_at: negative t");
  if (t > samples.back().t) {
    throw std::out_of_range("sample_at: t=" + std::to_string(t) + " beyond last sample t=" +
                            std::to_string(samples.back().t) + " of record '" + r.id + "'");
  }
  const auto it = std::lower_bound(samples.begin(), samples.end(), t,
                                   [](const Sample& s, std::int64_t v) { return s.t < v; });
  if (it != samples.end() && it->t == t) return it->value;
  // Cumulative counters start at zero at publication, so queries before the
  // first stored sample interpolate from the (0, 0) origin.
  const std::int64_t t0 = it == samples.begin() ? 0 : std::prev(it)->t;
  const double v0 = it == samples.begin() ? 0.0 : std::prev(it)->value;
  const double frac = static_cast<double>(t - t0) / static_cast<double>(it->t - t0);
  return v0 + (it->value - v0) * frac;
}

// ---------------------------------------------------------------------------
// Synthetic datasets

void SynthConfig::validate() const {
  if (n == 0) throw ConfigError("synth: n must be positive");
  if (horizon_days <= 0) throw ConfigError("synth: horizon_days must be positive");
  if (noise < 0) throw ConfigError("synth: noise must be non-negative");
  if (archetypes.empty()) throw ConfigError("synth: no archetypes given");
  double total = 0;
  for (const auto& [name, w] : archetypes) {
    if (name != "power_law" && name != "logistic" && name != "linear") {
      throw ConfigError("synth: unknown archetype '" + name + "'");
    }
    if (w < 0) throw ConfigError("synth: negative weight for archetype '" + name + "'");
    total += w;
  }
  if (total <= 0) throw ConfigError("synth: archetype weights sum to zero");
}

SynthConfig SynthConfig::from_kv(const kv::Map& m) {
  SynthConfig cfg;
  cfg.n = static_cast<std::size_t>(kv::get_int(m, "n"));
  cfg.horizon_days = kv::get_double(m, "horizon_days", cfg.horizon_days);
  cfg.noise = kv::get_double(m, "noise", cfg.noise);
  cfg.visual = kv::get_bool(m, "visual", cfg.visual);
  cfg.social = kv::get_bool(m, "social", cfg.social);
  cfg.name = kv::get_str(m, "name", cfg.name);
  const auto res = resolution_from_string(kv::get_str(m, "resolution", "day"));
  if (!res) throw ConfigError("synth: resolution must be 'hour' or 'day'");
  cfg.resolution = *res;
  if (kv::has(m, "archetypes")) {
    cfg.archetypes.clear();
    for (const auto& item : kv::split_list(kv::get_str(m, "archetypes"))) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        cfg.archetypes.emplace_back(item, 1.0);
      } else {
        char* end = nullptr;
        const std::string ws = kv::trim(item.substr(colon + 1));
        const double w = std::strtod(ws.c_str(), &end);
        if (end == ws.c_str() || *end != '\0') {
          throw ConfigError("synth: malformed archetype weight '" + item + "'");
        }
        cfg.archetypes.emplace_back(kv::trim(item.substr(0, colon)), w);
      }
    }
  }
  cfg.validate();
  return cfg;
}

kv::Map SynthConfig::to_kv() const {
  kv::Map m;
  m["n"] = std::to_string(n);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", horizon_days);
  m["horizon_days"] = buf;
  std::snprintf(buf, sizeof(buf), "%.17g", noise);
  m["noise"] = buf;
  m["resolution"] = to_string(resolution);
  m["visual"] = visual ? "true" : "false";
  m["social"] = social ? "true" : "false";
  m["name"] = name;
  std::string arch;
  for (const auto& [a, w] : archetypes) {
    if (!arch.empty()) arch += ',';
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    arch += a + ":" + buf;
  }
  m["archetypes"] = arch;
  return m;
}

double power_law_alpha(double u_r, double u_t) { return std::log1p(u_t) / std::log1p(u_r); }

namespace {

VisualFeatures synth_visual(Rng& rng, double final_count) {
  VisualFeatures v;
  v.length_s = rng.uniform(5, 600);
  v.frame_count = std::floor(v.length_s * 25);
  v.resolution_class = std::floor(rng.uniform(0, 4));
  v.frame_width = 320 * (1 + v.resolution_class);
  v.frame_height = 180 * (1 + v.resolution_class);
  double hist_total = 0;
  for (double& h : v.color_hist) {
    h = -std::log(1.0 - rng.uniform());
    hist_total += h;
  }
  int dominant = 0;
  for (int i = 0; i < 10; ++i) {
    v.color_hist[i] /= hist_total;
    if (v.color_hist[i] > v.color_hist[dominant]) dominant = i;
  }
  // renormalize exactly so the stored histogram passes the 1e-6 sum check
  double s = 0;
  for (double h : v.color_hist) s += h;
  for (double& h : v.color_hist) h /= s;
  v.dominant_color = dominant;
  v.faces_per_frame = rng.uniform(0, 3);
  v.face_frame_fraction = rng.uniform();
  v.face_area_ratio = rng.uniform() * 0.4;
  v.text_frame_fraction = rng.uniform();
  v.text_area_ratio = rng.uniform() * 0.2;
  v.shot_count = std::floor(rng.uniform(1, 80));
  v.mean_shot_length_s = v.length_s / v.shot_count;
  v.hard_cuts = std::floor(rng.uniform(0, v.shot_count));
  v.soft_cuts = v.shot_count - 1 - v.hard_cuts;
  v.edge_pixel_ratio = rng.uniform();
  v.valid_homography_fraction = rng.uniform();
  // weakly tied to eventual popularity so visual-inclusive runs have signal
  v.thumbnail_score = 1.0 / (1.0 + std::exp(-(std::log1p(final_count) - 6.0) / 3.0)) + 0.05 * rng.normal();
  v.thumbnail_score = std::min(1.0, std::max(0.0, v.thumbnail_score));
  v.deep.resize(kDeepDims);
  double deep_total = 0;
  for (double& x : v.deep) {
    x = -std::log(1.0 - rng.uniform());
    deep_total += x;
  }
  for (double& x : v.deep) x /= deep_total;
  return v;
}

}  // namespace

Dataset synthesize(const SynthConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const std::int64_t res_s = resolution_seconds(cfg.resolution);
  const std::int64_t steps =
      std::max<std::int64_t>(1, std::llround(cfg.horizon_days * 86400.0 / static_cast<double>(res_s)));

  double weight_total = 0;
  for (const auto& [a, w] : cfg.archetypes) weight_total += w;

  Dataset d;
  d.name = cfg.name;
  d.resolution = cfg.resolution;
  d.records.reserve(cfg.n);

  const Rng root(seed);
  for (std::size_t v = 0; v < cfg.n; ++v) {
    Rng rng = root.derive(v);

    double pick = rng.uniform() * weight_total;
    std::string archetype = cfg.archetypes.back().first;
    for (const auto& [a, w] : cfg.archetypes) {
      if (pick < w) {
        archetype = a;
        break;
      }
      pick -= w;
    }

    // base cumulative curve at u = 0..steps
    std::vector<double> base(static_cast<std::size_t>(steps) + 1, 0.0);
    if (archetype == "power_law") {
      const double b = rng.uniform(0.4, 1.6);
      for (std::int64_t u = 0; u <= steps; ++u) {
        base[u] = std::expm1(b * std::log1p(static_cast<double>(u)));
      }
    } else if (archetype == "logistic") {
      const double scale = rng.log_uniform(10.0, 1e5);
      const double rate = rng.uniform(0.2, 1.2);
      const double midpoint = rng.uniform(0.15, 0.7) * static_cast<double>(steps);
      const auto s = [&](double u) { return 1.0 / (1.0 + std::exp(-rate * (u - midpoint))); };
      const double s0 = s(0.0);
      for (std::int64_t u = 0; u <= steps; ++u) base[u] = scale * (s(static_cast<double>(u)) - s0);
    } else {  // linear
      const double slope = rng.log_uniform(1.0, 1e4);
      for (std::int64_t u = 0; u <= steps; ++u) base[u] = slope * static_cast<double>(u);
    }

    std::vector<double> views(base.size(), 0.0);
    if (cfg.noise > 0) {
      double acc = 0.0;
      for (std::size_t u = 1; u < base.size(); ++u) {
        acc += (base[u] - base[u - 1]) * std::exp(cfg.noise * rng.normal());
        views[u] = acc;
      }
    } else {
      views = base;
    }

    VideoRecord r;
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "%s_%06zu", "v", v);
    r.id = cfg.name + "_" + std::string(idbuf);
    r.published_at = 1438387200 + static_cast<std::int64_t>(v) * 60;
    r.archetype = archetype;

    auto& vs = r.series[Metric::views];
    vs.reserve(views.size());
    for (std::size_t u = 0; u < views.size(); ++u) {
      vs.push_back({static_cast<std::int64_t>(u) * res_s, views[u]});
    }

    if (cfg.social) {
      // social counters as distinct sublinear transforms of views, with their
      // own noise so the columns are correlated but never exactly collinear
      const struct {
        Metric metric;
        double exponent;
        double ratio_lo, ratio_hi;
      } social_specs[] = {
          {Metric::likes, 0.95, 0.005, 0.2},
          {Metric::comments, 0.80, 0.001, 0.05},
          {Metric::shares, 0.70, 0.001, 0.1},
      };
      for (const auto& spec : social_specs) {
        const double ratio = rng.log_uniform(spec.ratio_lo, spec.ratio_hi);
        std::vector<double> counter(views.size(), 0.0);
        double acc = 0.0;
        for (std::size_t u = 1; u < views.size(); ++u) {
          const double target = ratio * std::pow(views[u], spec.exponent);
          double inc = std::max(0.0, target - acc);
          if (cfg.noise > 0) inc *= std::exp(cfg.noise * rng.normal());
          acc += inc;
          counter[u] = acc;
        }
        auto& ss = r.series[spec.metric];
        ss.reserve(counter.size());
        for (std::size_t u = 0; u < counter.size(); ++u) {
          ss.push_back({static_cast<std::int64_t>(u) * res_s, counter[u]});
        }
      }
    }

    if (cfg.visual) r.visual = synth_visual(rng, views.back());

    d.records.push_back(std::move(r));
  }
  d.validate();
  return d;
}

}  // namespace viewcast
