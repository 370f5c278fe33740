#include "pactsc/phantom.hpp"

#include <stdexcept>
#include <string>

#include "pactsc/rng.hpp"

namespace pactsc {

Phantom sample_random_phantom(std::uint64_t seed, const SimConfig& config,
                              const PhantomSamplerOptions& options) {
  config.validate();
  if (options.n_discs < 0)
    throw std::invalid_argument("sample_random_phantom: n_discs must be >= 0");
  if (!(options.min_size > 0) || options.max_size < options.min_size)
    throw std::invalid_argument("sample_random_phantom: bad size range");

  Rng rng(seed);
  Phantom phantom;
  phantom.discs.reserve(options.n_discs);
  const double half = config.roi_side / 2.0;
  for (int i = 0; i < options.n_discs; ++i) {
    Disc d;
    const double size = rng.uniform(options.min_size, options.max_size);
    d.radius = options.size_meaning == DiscSizeMeaning::kRadius ? size : size / 2.0;
    // Centers uniform over the square shrunk by the radius, so the disc
    // stays fully inside the ROI.
    d.center_x = rng.uniform(-(half - d.radius), half - d.radius);
    d.center_y = rng.uniform(-(half - d.radius), half - d.radius);
    d.amplitude = options.random_amplitude ? rng.uniform(0.5, 1.0) : 1.0;
    phantom.discs.push_back(d);
  }
  return phantom;
}

Image rasterize_phantom(const Phantom& phantom, const SimConfig& config) {
  config.validate();
  Image image(config.grid_size);
  for (const Disc& d : phantom.discs) {
    if (d.radius <= 0) throw std::invalid_argument("rasterize_phantom: disc radius must be > 0");
    const double r2 = d.radius * d.radius;
    for (int iy = 0; iy < config.grid_size; ++iy) {
      const double py = pixel_center(iy, config.grid_size, config.roi_side);
      const double dy = py - d.center_y;
      if (dy * dy > r2) continue;
      for (int ix = 0; ix < config.grid_size; ++ix) {
        const double px = pixel_center(ix, config.grid_size, config.roi_side);
        const double dx = px - d.center_x;
        if (dx * dx + dy * dy <= r2) image.at(ix, iy) = d.amplitude;
      }
    }
  }
  return image;
}

KvDoc sampler_options_to_kv(const PhantomSamplerOptions& options) {
  KvDoc doc;
  doc.set_int("sampler.n_discs", options.n_discs);
  doc.set_double("sampler.min_size", options.min_size);
  doc.set_double("sampler.max_size", options.max_size);
  doc.set("sampler.size_meaning",
          options.size_meaning == DiscSizeMeaning::kRadius ? "radius" : "diameter");
  doc.set_int("sampler.random_amplitude", options.random_amplitude ? 1 : 0);
  return doc;
}

PhantomSamplerOptions sampler_options_from_kv(const KvDoc& doc) {
  PhantomSamplerOptions options;
  if (doc.has("sampler.n_discs"))
    options.n_discs = static_cast<int>(doc.get_int("sampler.n_discs"));
  if (doc.has("sampler.min_size")) options.min_size = doc.get_double("sampler.min_size");
  if (doc.has("sampler.max_size")) options.max_size = doc.get_double("sampler.max_size");
  if (doc.has("sampler.size_meaning")) {
    const std::string& meaning = doc.get("sampler.size_meaning");
    if (meaning == "radius") {
      options.size_meaning = DiscSizeMeaning::kRadius;
    } else if (meaning == "diameter") {
      options.size_meaning = DiscSizeMeaning::kDiameter;
    } else {
      throw std::runtime_error("sampler_options_from_kv: unknown size meaning '" + meaning + "'");
    }
  }
  if (doc.has("sampler.random_amplitude"))
    options.random_amplitude = doc.get_int("sampler.random_amplitude") != 0;
  return options;
}

KvDoc phantom_to_kv(const Phantom& phantom) {
  KvDoc doc;
  doc.set_int("phantom.n_discs", static_cast<std::int64_t>(phantom.discs.size()));
  for (std::size_t i = 0; i < phantom.discs.size(); ++i) {
    const std::string prefix = "disc." + std::to_string(i) + ".";
    doc.set_double(prefix + "center_x", phantom.discs[i].center_x);
    doc.set_double(prefix + "center_y", phantom.discs[i].center_y);
    doc.set_double(prefix + "radius", phantom.discs[i].radius);
    doc.set_double(prefix + "amplitude", phantom.discs[i].amplitude);
  }
  return doc;
}

Phantom phantom_from_kv(const KvDoc& doc) {
  Phantom phantom;
  const std::int64_t n = doc.get_int("phantom.n_discs");
  if (n < 0) throw std::runtime_error("phantom_from_kv: negative disc count");
  for (std::int64_t i = 0; i < n; ++i) {
    const std::string prefix = "disc." + std::to_string(i) + ".";
    Disc d;
    d.center_x = doc.get_double(prefix + "center_x");
    d.center_y = doc.get_double(prefix + "center_y");
    d.radius = doc.get_double(prefix + "radius");
    d.amplitude = doc.has(prefix + "amplitude") ? doc.get_double(prefix + "amplitude") : 1.0;
    phantom.discs.push_back(d);
  }
  return phantom;
}

}  // namespace pactsc
