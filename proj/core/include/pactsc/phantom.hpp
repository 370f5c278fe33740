#pragma once

#include <cstdint>
#include <vector>

#include "pactsc/config.hpp"
#include "pactsc/image.hpp"
#include "pactsc/kvtext.hpp"

namespace pactsc {

// Absorbing disc in ROI coordinates (origin at ring center), meters.
struct Disc {
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 0.0;
  double amplitude = 1.0;
};

struct Phantom {
  std::vector<Disc> discs;
};

// Whether the sampled "size" in [min_size, max_size] is applied as the
// disc radius or its diameter. Radius is the default interpretation.
enum class DiscSizeMeaning { kRadius, kDiameter };

struct PhantomSamplerOptions {
  int n_discs = 4;
  double min_size = 0.75e-3;  // m
  double max_size = 2.25e-3;  // m
  DiscSizeMeaning size_meaning = DiscSizeMeaning::kRadius;
  bool random_amplitude = false;  // amplitude uniform in [0.5, 1] when set
};

// Draws discs with size uniform in [min_size, max_size] and centers
// uniform over positions that keep each disc fully inside the ROI.
// Pure function of (seed, config, options).
Phantom sample_random_phantom(std::uint64_t seed, const SimConfig& config,
                              const PhantomSamplerOptions& options = {});

KvDoc sampler_options_to_kv(const PhantomSamplerOptions& options);
// Missing keys fall back to the defaults above.
PhantomSamplerOptions sampler_options_from_kv(const KvDoc& doc);

// Paints discs onto the grid: a pixel takes a disc's amplitude when its
// center lies inside the disc; on overlap the later disc wins.
Image rasterize_phantom(const Phantom& phantom, const SimConfig& config);

KvDoc phantom_to_kv(const Phantom& phantom);
Phantom phantom_from_kv(const KvDoc& doc);

}  // namespace pactsc
