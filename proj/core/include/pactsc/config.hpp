#pragma once

#include "pactsc/kvtext.hpp"

namespace pactsc {

// Global acquisition and simulation parameters. Defaults describe the
// full-scale system: 120 sensors on a 30 mm ring sampled at 40 MS/s,
// 7.5 MHz transducers with 80% fractional bandwidth, 2048 samples per
// channel, 38.4 mm square region of interest on a 128x128 grid.
struct SimConfig {
  double sound_speed = 1500.0;        // m/s
  double sample_rate = 40e6;          // samples/s
  int samples_per_channel = 2048;
  int n_sensors = 120;
  double ring_radius = 0.030;         // m
  double roi_side = 0.0384;           // m
  int grid_size = 128;
  double center_freq = 7.5e6;         // Hz
  double fractional_bandwidth = 0.8;  // -6 dB width / center_freq
  int group_size = 30;                // channels per composite

  double pixel_pitch() const { return roi_side / grid_size; }
  int n_groups() const { return n_sensors / group_size; }

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;

  // Reduced-scale preset for fast CPU experiments: 10 MS/s, 512 samples,
  // 2 MHz transducers, 64x64 grid. Geometry is unchanged.
  static SimConfig desk();

  KvDoc to_kv() const;
  // Keys present in the document override the corresponding fields of
  // base (the defaults above for the one-argument form); everything else
  // is kept, so a file may hold a partial overlay.
  static SimConfig from_kv(const KvDoc& doc);
  static SimConfig from_kv(const KvDoc& doc, const SimConfig& base);
};

}  // namespace pactsc
