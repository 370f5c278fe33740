#include "pactsc/nn_layers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pactsc {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// c[i, j] (+)= dot(a[i, :], b[j, :]) with a: n x k, b: m x k, c: n x m.
// Both inner ranges are contiguous, so the dot vectorizes.
void gemm_nt(const double* a, const double* b, double* c, int n, int m, int k, bool accumulate) {
  for (int i = 0; i < n; ++i) {
    const double* ai = a + static_cast<std::size_t>(i) * k;
    double* ci = c + static_cast<std::size_t>(i) * m;
    for (int j = 0; j < m; ++j) {
      const double* bj = b + static_cast<std::size_t>(j) * k;
      double acc = accumulate ? ci[j] : 0.0;
      for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
      ci[j] = acc;
    }
  }
}

void axpy(double* y, const double* x, double a, int n) {
  for (int i = 0; i < n; ++i) y[i] += a * x[i];
}

Tensor uniform_tensor(std::vector<int> shape, double bound, Rng& rng) {
  Tensor t(std::move(shape));
  for (auto& v : t.values) v = rng.uniform(-bound, bound);
  return t;
}

void check_rank(const Tensor& x, int rank, const char* where) {
  if (x.rank() != rank)
    throw std::invalid_argument(std::string(where) + ": expected rank " + std::to_string(rank) +
                                " input, got " + x.shape_string());
}

}  // namespace

void leaky_relu_forward(const std::vector<double>& x, std::vector<double>& y, double slope) {
  y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] > 0.0 ? x[i] : slope * x[i];
}

void leaky_relu_backward(const std::vector<double>& x, const std::vector<double>& dy,
                         std::vector<double>& dx, double slope) {
  dx.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) dx[i] = x[i] > 0.0 ? dy[i] : slope * dy[i];
}

Tensor LeakyRelu::forward(const Tensor& x) {
  input_ = x;
  Tensor y;
  y.shape = x.shape;
  leaky_relu_forward(x.values, y.values, slope);
  return y;
}

Tensor LeakyRelu::backward(const Tensor& dy) {
  Tensor dx;
  dx.shape = input_.shape;
  leaky_relu_backward(input_.values, dy.values, dx.values, slope);
  return dx;
}

Linear::Linear(int in, int out, Rng& rng) : in_features(in), out_features(out) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  weight = uniform_tensor({out, in}, bound, rng);
  bias = Tensor::zeros({out});
}

Tensor Linear::forward(const Tensor& x) {
  check_rank(x, 2, "Linear");
  if (x.dim(1) != in_features)
    throw std::invalid_argument("Linear: input width " + std::to_string(x.dim(1)) +
                                " != " + std::to_string(in_features));
  input_ = x;
  const int n = x.dim(0);
  Tensor y({n, out_features});
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < out_features; ++o) y.values[static_cast<std::size_t>(i) * out_features + o] = bias.values[o];
  gemm_nt(x.values.data(), weight.values.data(), y.values.data(), n, out_features, in_features,
          true);
  return y;
}

Tensor Linear::backward(const Tensor& dy) {
  weight.ensure_grad();
  bias.ensure_grad();
  const int n = input_.dim(0);
  Tensor dx({n, in_features});
  for (int i = 0; i < n; ++i) {
    const double* dyi = dy.values.data() + static_cast<std::size_t>(i) * out_features;
    const double* xi = input_.values.data() + static_cast<std::size_t>(i) * in_features;
    double* dxi = dx.values.data() + static_cast<std::size_t>(i) * in_features;
    for (int o = 0; o < out_features; ++o) {
      const double g = dyi[o];
      bias.grad[o] += g;
      axpy(weight.grad.data() + static_cast<std::size_t>(o) * in_features, xi, g, in_features);
      axpy(dxi, weight.values.data() + static_cast<std::size_t>(o) * in_features, g, in_features);
    }
  }
  return dx;
}

Conv3x3::Conv3x3(int in, int out, Rng& rng) : in_channels(in), out_channels(out) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in) * 9.0);
  weight = uniform_tensor({out, in, 3, 3}, bound, rng);
}

Tensor Conv3x3::forward(const Tensor& x) {
  check_rank(x, 4, "Conv3x3");
  if (x.dim(1) != in_channels)
    throw std::invalid_argument("Conv3x3: input channels " + std::to_string(x.dim(1)) +
                                " != " + std::to_string(in_channels));
  input_ = x;
  const int n = x.dim(0), h = x.dim(2), w = x.dim(3);
  Tensor y({n, out_channels, h, w});
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  for (int b = 0; b < n; ++b) {
    for (int co = 0; co < out_channels; ++co) {
      double* ybase = y.values.data() + (static_cast<std::size_t>(b) * out_channels + co) * plane;
      for (int ci = 0; ci < in_channels; ++ci) {
        const double* xbase =
            x.values.data() + (static_cast<std::size_t>(b) * in_channels + ci) * plane;
        const double* wk =
            weight.values.data() + (static_cast<std::size_t>(co) * in_channels + ci) * 9;
        for (int u = 0; u < 3; ++u) {
          const int di = u - 1;
          const int i0 = std::max(0, -di), i1 = std::min(h, h - di);
          for (int v = 0; v < 3; ++v) {
            const int dj = v - 1;
            const double wv = wk[u * 3 + v];
            const int j0 = std::max(0, -dj), j1 = std::min(w, w - dj);
            for (int i = i0; i < i1; ++i) {
              const double* xr = xbase + static_cast<std::size_t>(i + di) * w + dj;
              double* yr = ybase + static_cast<std::size_t>(i) * w;
              for (int j = j0; j < j1; ++j) yr[j] += wv * xr[j];
            }
          }
        }
      }
    }
  }
  return y;
}

Tensor Conv3x3::backward(const Tensor& dy) {
  weight.ensure_grad();
  const int n = input_.dim(0), h = input_.dim(2), w = input_.dim(3);
  Tensor dx({n, in_channels, h, w});
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  for (int b = 0; b < n; ++b) {
    for (int co = 0; co < out_channels; ++co) {
      const double* dybase =
          dy.values.data() + (static_cast<std::size_t>(b) * out_channels + co) * plane;
      for (int ci = 0; ci < in_channels; ++ci) {
        const double* xbase =
            input_.values.data() + (static_cast<std::size_t>(b) * in_channels + ci) * plane;
        double* dxbase = dx.values.data() + (static_cast<std::size_t>(b) * in_channels + ci) * plane;
        const double* wk =
            weight.values.data() + (static_cast<std::size_t>(co) * in_channels + ci) * 9;
        double* dwk = weight.grad.data() + (static_cast<std::size_t>(co) * in_channels + ci) * 9;
        for (int u = 0; u < 3; ++u) {
          const int di = u - 1;
          const int i0 = std::max(0, -di), i1 = std::min(h, h - di);
          for (int v = 0; v < 3; ++v) {
            const int dj = v - 1;
            const double wv = wk[u * 3 + v];
            const int j0 = std::max(0, -dj), j1 = std::min(w, w - dj);
            double dw = 0.0;
            for (int i = i0; i < i1; ++i) {
              const double* xr = xbase + static_cast<std::size_t>(i + di) * w + dj;
              double* dxr = dxbase + static_cast<std::size_t>(i + di) * w + dj;
              const double* dyr = dybase + static_cast<std::size_t>(i) * w;
              for (int j = j0; j < j1; ++j) {
                dw += dyr[j] * xr[j];
                dxr[j] += wv * dyr[j];
              }
            }
            dwk[u * 3 + v] += dw;
          }
        }
      }
    }
  }
  return dx;
}

BatchNorm2d::BatchNorm2d(int channels_) : channels(channels_) {
  gamma = Tensor({channels});
  for (auto& v : gamma.values) v = 1.0;
  beta = Tensor::zeros({channels});
  running_mean = Tensor::zeros({channels});
  running_var = Tensor({channels});
  for (auto& v : running_var.values) v = 1.0;
}

Tensor BatchNorm2d::forward(const Tensor& x, bool training) {
  check_rank(x, 4, "BatchNorm2d");
  if (x.dim(1) != channels)
    throw std::invalid_argument("BatchNorm2d: channel mismatch " + x.shape_string());
  training_ = training;
  const int n = x.dim(0), h = x.dim(2), w = x.dim(3);
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  count_ = n * h * w;
  inv_std_.assign(static_cast<std::size_t>(channels), 0.0);
  xhat_.shape = x.shape;
  xhat_.values.assign(x.values.size(), 0.0);

  Tensor y;
  y.shape = x.shape;
  y.values.assign(x.values.size(), 0.0);

  for (int c = 0; c < channels; ++c) {
    double mean, var;
    if (training) {
      double sum = 0.0;
      for (int b = 0; b < n; ++b) {
        const double* xp = x.values.data() + (static_cast<std::size_t>(b) * channels + c) * plane;
        for (std::size_t i = 0; i < plane; ++i) sum += xp[i];
      }
      mean = sum / count_;
      double sq = 0.0;
      for (int b = 0; b < n; ++b) {
        const double* xp = x.values.data() + (static_cast<std::size_t>(b) * channels + c) * plane;
        for (std::size_t i = 0; i < plane; ++i) {
          const double d = xp[i] - mean;
          sq += d * d;
        }
      }
      var = sq / count_;
      const double var_unbiased = count_ > 1 ? sq / (count_ - 1) : var;
      running_mean.values[c] = (1.0 - momentum) * running_mean.values[c] + momentum * mean;
      running_var.values[c] = (1.0 - momentum) * running_var.values[c] + momentum * var_unbiased;
    } else {
      mean = running_mean.values[c];
      var = running_var.values[c];
    }
    const double inv_std = 1.0 / std::sqrt(var + eps);
    inv_std_[c] = inv_std;
    const double g = gamma.values[c], bb = beta.values[c];
    for (int b = 0; b < n; ++b) {
      const std::size_t base = (static_cast<std::size_t>(b) * channels + c) * plane;
      const double* xp = x.values.data() + base;
      double* xh = xhat_.values.data() + base;
      double* yp = y.values.data() + base;
      for (std::size_t i = 0; i < plane; ++i) {
        xh[i] = (xp[i] - mean) * inv_std;
        yp[i] = g * xh[i] + bb;
      }
    }
  }
  return y;
}

Tensor BatchNorm2d::backward(const Tensor& dy) {
  gamma.ensure_grad();
  beta.ensure_grad();
  const int n = dy.dim(0), h = dy.dim(2), w = dy.dim(3);
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  Tensor dx;
  dx.shape = dy.shape;
  dx.values.assign(dy.values.size(), 0.0);

  for (int c = 0; c < channels; ++c) {
    double sum_dy = 0.0, sum_dy_xhat = 0.0;
    for (int b = 0; b < n; ++b) {
      const std::size_t base = (static_cast<std::size_t>(b) * channels + c) * plane;
      const double* dyp = dy.values.data() + base;
      const double* xh = xhat_.values.data() + base;
      for (std::size_t i = 0; i < plane; ++i) {
        sum_dy += dyp[i];
        sum_dy_xhat += dyp[i] * xh[i];
      }
    }
    gamma.grad[c] += sum_dy_xhat;
    beta.grad[c] += sum_dy;
    const double g = gamma.values[c], inv_std = inv_std_[c];
    if (training_) {
      const double scale = g * inv_std / count_;
      for (int b = 0; b < n; ++b) {
        const std::size_t base = (static_cast<std::size_t>(b) * channels + c) * plane;
        const double* dyp = dy.values.data() + base;
        const double* xh = xhat_.values.data() + base;
        double* dxp = dx.values.data() + base;
        for (std::size_t i = 0; i < plane; ++i)
          dxp[i] = scale * (count_ * dyp[i] - sum_dy - xh[i] * sum_dy_xhat);
      }
    } else {
      const double scale = g * inv_std;
      for (int b = 0; b < n; ++b) {
        const std::size_t base = (static_cast<std::size_t>(b) * channels + c) * plane;
        const double* dyp = dy.values.data() + base;
        double* dxp = dx.values.data() + base;
        for (std::size_t i = 0; i < plane; ++i) dxp[i] = scale * dyp[i];
      }
    }
  }
  return dx;
}

Tensor nearest_upsample2(const Tensor& x) {
  if (x.rank() != 4) throw std::invalid_argument("nearest_upsample2: expected rank 4 input");
  const int n = x.dim(0), c = x.dim(1), h = x.dim(2), w = x.dim(3);
  Tensor y({n, c, 2 * h, 2 * w});
  for (int b = 0; b < n * c; ++b) {
    const double* xp = x.values.data() + static_cast<std::size_t>(b) * h * w;
    double* yp = y.values.data() + static_cast<std::size_t>(b) * 4 * h * w;
    for (int i = 0; i < h; ++i) {
      const double* xr = xp + static_cast<std::size_t>(i) * w;
      double* y0 = yp + static_cast<std::size_t>(2 * i) * 2 * w;
      double* y1 = y0 + static_cast<std::size_t>(2) * w;
      for (int j = 0; j < w; ++j) {
        y0[2 * j] = y0[2 * j + 1] = xr[j];
        y1[2 * j] = y1[2 * j + 1] = xr[j];
      }
    }
  }
  return y;
}

Tensor nearest_upsample2_backward(const Tensor& dy) {
  if (dy.rank() != 4) throw std::invalid_argument("nearest_upsample2_backward: expected rank 4");
  const int n = dy.dim(0), c = dy.dim(1), h2 = dy.dim(2), w2 = dy.dim(3);
  if (h2 % 2 || w2 % 2)
    throw std::invalid_argument("nearest_upsample2_backward: odd spatial size");
  const int h = h2 / 2, w = w2 / 2;
  Tensor dx({n, c, h, w});
  for (int b = 0; b < n * c; ++b) {
    const double* dyp = dy.values.data() + static_cast<std::size_t>(b) * h2 * w2;
    double* dxp = dx.values.data() + static_cast<std::size_t>(b) * h * w;
    for (int i = 0; i < h; ++i) {
      const double* y0 = dyp + static_cast<std::size_t>(2 * i) * w2;
      const double* y1 = y0 + w2;
      double* dxr = dxp + static_cast<std::size_t>(i) * w;
      for (int j = 0; j < w; ++j)
        dxr[j] = y0[2 * j] + y0[2 * j + 1] + y1[2 * j] + y1[2 * j + 1];
    }
  }
  return dx;
}

UpsampleBlock::UpsampleBlock(int in_channels, int out_channels, double slope, Rng& rng)
    : conv1(in_channels, out_channels, rng),
      bn1(out_channels),
      act1{slope},
      conv2(out_channels, out_channels, rng),
      bn2(out_channels),
      act2{slope} {}

Tensor UpsampleBlock::forward(const Tensor& x, bool training) {
  Tensor t = nearest_upsample2(x);
  t = act1.forward(bn1.forward(conv1.forward(t), training));
  t = act2.forward(bn2.forward(conv2.forward(t), training));
  return t;
}

Tensor UpsampleBlock::backward(const Tensor& dy) {
  Tensor d = conv2.backward(bn2.backward(act2.backward(dy)));
  d = conv1.backward(bn1.backward(act1.backward(d)));
  return nearest_upsample2_backward(d);
}

ResBlock::ResBlock(int channels, double slope, Rng& rng)
    : conv1(channels, channels, rng),
      conv2(channels, channels, rng),
      conv3(channels, 1, rng),
      act_inner{slope},
      act_out{slope} {}

Tensor ResBlock::forward(const Tensor& x) {
  Tensor inner = conv2.forward(act_inner.forward(conv1.forward(x)));
  Tensor sum;
  sum.shape = x.shape;
  sum.values.resize(x.values.size());
  for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] = x.values[i] + inner.values[i];
  return act_out.forward(conv3.forward(sum));
}

Tensor ResBlock::backward(const Tensor& dy) {
  Tensor dsum = conv3.backward(act_out.backward(dy));
  Tensor dinner = conv1.backward(act_inner.backward(conv2.backward(dsum)));
  for (std::size_t i = 0; i < dsum.values.size(); ++i) dsum.values[i] += dinner.values[i];
  return dsum;
}

LstmEncoder::LstmEncoder(int input, int hidden, int horizon, Rng& rng)
    : input_size(input), hidden_size(hidden) {
  const double bx = 1.0 / std::sqrt(static_cast<double>(input));
  const double bh = 1.0 / std::sqrt(static_cast<double>(hidden));
  wx = uniform_tensor({4 * hidden, input}, bx, rng);
  wh = uniform_tensor({4 * hidden, hidden}, bh, rng);
  b = Tensor::zeros({4 * hidden});
  // Forget biases linearly spaced in [0, log(horizon)] give memory
  // horizons log-spaced from a few steps up to the record length; input
  // biases mirror them negatively so long-memory cells start selective.
  const double top = std::log(std::max(2.0, static_cast<double>(horizon)));
  for (int i = 0; i < hidden; ++i) {
    const double bf = hidden > 1 ? top * i / (hidden - 1) : 1.0;
    b.values[static_cast<std::size_t>(hidden) + i] = bf;
    b.values[i] = -bf;
  }
}

Tensor LstmEncoder::forward(const Tensor& x) {
  check_rank(x, 3, "LstmEncoder");
  if (x.dim(1) != input_size)
    throw std::invalid_argument("LstmEncoder: input channels " + std::to_string(x.dim(1)) +
                                " != " + std::to_string(input_size));
  const int n = x.dim(0), t_steps = x.dim(2);
  batch_ = n;
  steps_ = t_steps;
  const int hs = hidden_size, is = input_size;
  const std::size_t nh = static_cast<std::size_t>(n) * hs;
  const std::size_t ni = static_cast<std::size_t>(n) * is;

  x_.assign(static_cast<std::size_t>(t_steps) * ni, 0.0);
  h_.assign(static_cast<std::size_t>(t_steps + 1) * nh, 0.0);
  c_.assign(static_cast<std::size_t>(t_steps + 1) * nh, 0.0);
  gi_.assign(static_cast<std::size_t>(t_steps) * nh, 0.0);
  gf_.assign(static_cast<std::size_t>(t_steps) * nh, 0.0);
  gg_.assign(static_cast<std::size_t>(t_steps) * nh, 0.0);
  go_.assign(static_cast<std::size_t>(t_steps) * nh, 0.0);
  tanh_c_.assign(static_cast<std::size_t>(t_steps) * nh, 0.0);

  // Re-pack the input time-major so each step's N x input block is
  // contiguous (shared with the backward pass).
  for (int bi = 0; bi < n; ++bi)
    for (int ch = 0; ch < is; ++ch) {
      const double* src =
          x.values.data() + (static_cast<std::size_t>(bi) * is + ch) * t_steps;
      for (int t = 0; t < t_steps; ++t) x_[static_cast<std::size_t>(t) * ni + bi * is + ch] = src[t];
    }

  std::vector<double> a(static_cast<std::size_t>(n) * 4 * hs);
  for (int t = 0; t < t_steps; ++t) {
    const double* xt = x_.data() + static_cast<std::size_t>(t) * ni;
    const double* h_prev = h_.data() + static_cast<std::size_t>(t) * nh;
    const double* c_prev = c_.data() + static_cast<std::size_t>(t) * nh;
    for (int bi = 0; bi < n; ++bi)
      std::copy(b.values.begin(), b.values.end(), a.begin() + static_cast<std::size_t>(bi) * 4 * hs);
    gemm_nt(xt, wx.values.data(), a.data(), n, 4 * hs, is, true);
    gemm_nt(h_prev, wh.values.data(), a.data(), n, 4 * hs, hs, true);

    const std::size_t base = static_cast<std::size_t>(t) * nh;
    for (int bi = 0; bi < n; ++bi) {
      const double* ab = a.data() + static_cast<std::size_t>(bi) * 4 * hs;
      const std::size_t row = base + static_cast<std::size_t>(bi) * hs;
      double* h_new = h_.data() + base + nh + static_cast<std::size_t>(bi) * hs;
      double* c_new = c_.data() + base + nh + static_cast<std::size_t>(bi) * hs;
      const double* cp = c_prev + static_cast<std::size_t>(bi) * hs;
      for (int k = 0; k < hs; ++k) {
        const double ig = sigmoid(ab[k]);
        const double fg = sigmoid(ab[hs + k]);
        const double gg = std::tanh(ab[2 * hs + k]);
        const double og = sigmoid(ab[3 * hs + k]);
        const double cv = fg * cp[k] + ig * gg;
        const double tc = std::tanh(cv);
        gi_[row + k] = ig;
        gf_[row + k] = fg;
        gg_[row + k] = gg;
        go_[row + k] = og;
        tanh_c_[row + k] = tc;
        c_new[k] = cv;
        h_new[k] = og * tc;
      }
    }
  }

  Tensor out({n, hs});
  std::copy(h_.end() - static_cast<std::ptrdiff_t>(nh), h_.end(), out.values.begin());
  return out;
}

Tensor LstmEncoder::backward(const Tensor& dy) {
  wx.ensure_grad();
  wh.ensure_grad();
  b.ensure_grad();
  const int n = batch_, t_steps = steps_, hs = hidden_size, is = input_size;
  const std::size_t nh = static_cast<std::size_t>(n) * hs;
  const std::size_t ni = static_cast<std::size_t>(n) * is;

  Tensor dx({n, is, t_steps});
  std::vector<double> dh(dy.values.begin(), dy.values.end());  // N x H
  std::vector<double> dc(nh, 0.0);
  std::vector<double> da(static_cast<std::size_t>(n) * 4 * hs);
  std::vector<double> dh_prev(nh);

  for (int t = t_steps - 1; t >= 0; --t) {
    const std::size_t base = static_cast<std::size_t>(t) * nh;
    const double* c_prev = c_.data() + base;
    for (int bi = 0; bi < n; ++bi) {
      const std::size_t row = base + static_cast<std::size_t>(bi) * hs;
      const std::size_t brow = static_cast<std::size_t>(bi) * hs;
      double* dab = da.data() + static_cast<std::size_t>(bi) * 4 * hs;
      for (int k = 0; k < hs; ++k) {
        const double ig = gi_[row + k], fg = gf_[row + k], gg = gg_[row + k], og = go_[row + k];
        const double tc = tanh_c_[row + k];
        const double dhv = dh[brow + k];
        const double dov = dhv * tc;
        const double dcv = dc[brow + k] + dhv * og * (1.0 - tc * tc);
        const double div = dcv * gg;
        const double dgv = dcv * ig;
        const double dfv = dcv * c_prev[brow + k];
        dc[brow + k] = dcv * fg;  // becomes dc_prev
        dab[k] = div * ig * (1.0 - ig);
        dab[hs + k] = dfv * fg * (1.0 - fg);
        dab[2 * hs + k] = dgv * (1.0 - gg * gg);
        dab[3 * hs + k] = dov * og * (1.0 - og);
      }
    }

    const double* xt = x_.data() + static_cast<std::size_t>(t) * ni;
    const double* h_prev = h_.data() + base;
    std::fill(dh_prev.begin(), dh_prev.end(), 0.0);
    for (int bi = 0; bi < n; ++bi) {
      const double* dab = da.data() + static_cast<std::size_t>(bi) * 4 * hs;
      const double* xrow = xt + static_cast<std::size_t>(bi) * is;
      const double* hrow = h_prev + static_cast<std::size_t>(bi) * hs;
      double* dhp = dh_prev.data() + static_cast<std::size_t>(bi) * hs;
      for (int g = 0; g < 4 * hs; ++g) {
        const double gv = dab[g];
        if (gv == 0.0) continue;
        b.grad[g] += gv;
        axpy(wx.grad.data() + static_cast<std::size_t>(g) * is, xrow, gv, is);
        axpy(wh.grad.data() + static_cast<std::size_t>(g) * hs, hrow, gv, hs);
        axpy(dhp, wh.values.data() + static_cast<std::size_t>(g) * hs, gv, hs);
        // dx for this step, scattered back to the N x input x T layout
        const double* wxr = wx.values.data() + static_cast<std::size_t>(g) * is;
        double* dxrow = dx.values.data() + static_cast<std::size_t>(bi) * is * t_steps;
        for (int ch = 0; ch < is; ++ch) dxrow[static_cast<std::size_t>(ch) * t_steps + t] += gv * wxr[ch];
      }
    }
    std::swap(dh, dh_prev);
  }
  return dx;
}

double mse_loss(const Tensor& y, const Tensor& gt, LossReduction reduction) {
  if (y.shape != gt.shape)
    throw std::invalid_argument("mse_loss: shape mismatch " + y.shape_string() + " vs " +
                                gt.shape_string());
  double sum = 0.0;
  for (std::size_t i = 0; i < y.values.size(); ++i) {
    const double d = y.values[i] - gt.values[i];
    sum += d * d;
  }
  const double loss = 0.5 * sum;
  return reduction == LossReduction::kSum ? loss : loss / static_cast<double>(y.size());
}

Tensor mse_loss_grad(const Tensor& y, const Tensor& gt, LossReduction reduction) {
  if (y.shape != gt.shape)
    throw std::invalid_argument("mse_loss_grad: shape mismatch " + y.shape_string() + " vs " +
                                gt.shape_string());
  Tensor dy;
  dy.shape = y.shape;
  dy.values.resize(y.values.size());
  const double scale =
      reduction == LossReduction::kSum ? 1.0 : 1.0 / static_cast<double>(y.size());
  for (std::size_t i = 0; i < y.values.size(); ++i)
    dy.values[i] = scale * (y.values[i] - gt.values[i]);
  return dy;
}

}  // namespace pactsc
