#include "pactsc/image.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace pactsc {

double Image::max_value() const {
  double m = 0.0;
  for (double v : pixels) m = std::max(m, v);
  return m;
}

void write_pgm(const Image& image, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("write_pgm: cannot open '" + tmp.string() + "'");
    os << "P5\n" << image.side << " " << image.side << "\n255\n";
    const double peak = image.max_value();
    const double scale = peak > 0 ? 255.0 / peak : 0.0;
    std::vector<std::uint8_t> row(image.side);
    for (int iy = 0; iy < image.side; ++iy) {
      for (int ix = 0; ix < image.side; ++ix) {
        const double v = std::clamp(image.at(ix, iy) * scale, 0.0, 255.0);
        row[ix] = static_cast<std::uint8_t>(v + 0.5);
      }
      os.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
    if (!os) throw std::runtime_error("write_pgm: write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pactsc
