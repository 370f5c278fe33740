#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pactsc {

// Dense row-major tensor of 64-bit floats with an optional gradient buffer
// of the same shape. The gradient is empty until ensure_grad() allocates
// it; layers accumulate into it during the backward pass.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> values;
  std::vector<double> grad;

  Tensor() = default;
  explicit Tensor(std::vector<int> shape_);

  static Tensor zeros(std::vector<int> shape);
  static Tensor from_values(std::vector<int> shape, std::vector<double> values);

  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
  int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
  int rank() const { return static_cast<int>(shape.size()); }

  double& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }

  void ensure_grad();            // allocate (zeroed) gradient if absent
  void zero_grad();              // zero the gradient if allocated
  bool has_grad() const { return !grad.empty(); }

  std::string shape_string() const;  // e.g. "4x2048", for error messages
};

// Element count implied by a shape; rejects non-positive dimensions.
std::int64_t shape_size(const std::vector<int>& shape);

}  // namespace pactsc
