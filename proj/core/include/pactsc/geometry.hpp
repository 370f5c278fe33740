#pragma once

#include <array>
#include <vector>

namespace pactsc {

// Sensor positions on a ring centered at the origin. Sensor 0 sits at
// angle 0, indices increase counterclockwise with uniform spacing.
struct RingGeometry {
  std::vector<std::array<double, 2>> positions;  // (x, y) in meters

  int size() const { return static_cast<int>(positions.size()); }
};

RingGeometry build_ring_geometry(int n_sensors, double ring_radius);

}  // namespace pactsc
