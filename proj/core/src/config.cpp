#include "pactsc/config.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace pactsc {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("SimConfig: " + what);
}

}  // namespace

void SimConfig::validate() const {
  require(sound_speed > 0, "sound_speed must be positive");
  require(sample_rate > 0, "sample_rate must be positive");
  require(samples_per_channel > 0, "samples_per_channel must be positive");
  require(n_sensors > 0, "n_sensors must be positive");
  require(ring_radius > 0, "ring_radius must be positive");
  require(roi_side > 0, "roi_side must be positive");
  require(grid_size > 0, "grid_size must be positive");
  require(center_freq > 0, "center_freq must be positive");
  require(fractional_bandwidth > 0, "fractional_bandwidth must be positive");
  require(group_size > 0, "group_size must be positive");
  require(n_sensors % group_size == 0, "n_sensors must be divisible by group_size");
  require(roi_side * std::numbers::sqrt2 / 2.0 < ring_radius,
          "ROI must be inscribed in the sensor ring");
  require(center_freq < sample_rate / 2.0, "center_freq must be below Nyquist");
}

SimConfig SimConfig::desk() {
  SimConfig cfg;
  cfg.sample_rate = 10e6;
  cfg.samples_per_channel = 512;
  cfg.grid_size = 64;
  cfg.center_freq = 2e6;
  return cfg;
}

KvDoc SimConfig::to_kv() const {
  KvDoc doc;
  doc.set_double("sound_speed", sound_speed);
  doc.set_double("sample_rate", sample_rate);
  doc.set_int("samples_per_channel", samples_per_channel);
  doc.set_int("n_sensors", n_sensors);
  doc.set_double("ring_radius", ring_radius);
  doc.set_double("roi_side", roi_side);
  doc.set_int("grid_size", grid_size);
  doc.set_double("center_freq", center_freq);
  doc.set_double("fractional_bandwidth", fractional_bandwidth);
  doc.set_int("group_size", group_size);
  return doc;
}

SimConfig SimConfig::from_kv(const KvDoc& doc) { return from_kv(doc, SimConfig()); }

SimConfig SimConfig::from_kv(const KvDoc& doc, const SimConfig& base) {
  SimConfig cfg = base;
  if (doc.has("sound_speed")) cfg.sound_speed = doc.get_double("sound_speed");
  if (doc.has("sample_rate")) cfg.sample_rate = doc.get_double("sample_rate");
  if (doc.has("samples_per_channel"))
    cfg.samples_per_channel = static_cast<int>(doc.get_int("samples_per_channel"));
  if (doc.has("n_sensors")) cfg.n_sensors = static_cast<int>(doc.get_int("n_sensors"));
  if (doc.has("ring_radius")) cfg.ring_radius = doc.get_double("ring_radius");
  if (doc.has("roi_side")) cfg.roi_side = doc.get_double("roi_side");
  if (doc.has("grid_size")) cfg.grid_size = static_cast<int>(doc.get_int("grid_size"));
  if (doc.has("center_freq")) cfg.center_freq = doc.get_double("center_freq");
  if (doc.has("fractional_bandwidth"))
    cfg.fractional_bandwidth = doc.get_double("fractional_bandwidth");
  if (doc.has("group_size")) cfg.group_size = static_cast<int>(doc.get_int("group_size"));
  cfg.validate();
  return cfg;
}

}  // namespace pactsc
