#include "pactsc/tensor.hpp"

#include <stdexcept>

namespace pactsc {

std::int64_t shape_size(const std::vector<int>& shape) {
  std::int64_t n = 1;
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("Tensor: dimensions must be positive");
    n *= d;
  }
  return n;
}

Tensor::Tensor(std::vector<int> shape_) : shape(std::move(shape_)) {
  values.assign(static_cast<std::size_t>(shape_size(shape)), 0.0);
}

Tensor Tensor::zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::from_values(std::vector<int> shape, std::vector<double> values_in) {
  if (shape_size(shape) != static_cast<std::int64_t>(values_in.size()))
    throw std::invalid_argument("Tensor: value count does not match shape");
  Tensor t;
  t.shape = std::move(shape);
  t.values = std::move(values_in);
  return t;
}

void Tensor::ensure_grad() {
  if (grad.empty()) grad.assign(values.size(), 0.0);
}

void Tensor::zero_grad() {
  if (!grad.empty()) grad.assign(values.size(), 0.0);
}

std::string Tensor::shape_string() const {
  std::string out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(shape[i]);
  }
  return out.empty() ? "scalar" : out;
}

}  // namespace pactsc
