#include "pactsc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pactsc {

RingGeometry build_ring_geometry(int n_sensors, double ring_radius) {
  if (n_sensors < 1) throw std::invalid_argument("build_ring_geometry: n_sensors must be >= 1");
  if (ring_radius <= 0) throw std::invalid_argument("build_ring_geometry: ring_radius must be > 0");
  RingGeometry geo;
  geo.positions.resize(n_sensors);
  for (int i = 0; i < n_sensors; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n_sensors;
    geo.positions[i] = {ring_radius * std::cos(angle), ring_radius * std::sin(angle)};
  }
  return geo;
}

}  // namespace pactsc
