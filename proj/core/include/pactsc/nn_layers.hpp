#pragma once

#include <cstdint>
#include <vector>

#include "pactsc/rng.hpp"
#include "pactsc/tensor.hpp"

namespace pactsc {

// Layers hold their parameters and the activations cached by the last
// forward() call; backward() consumes those caches, accumulates into the
// parameters' grad buffers, and returns the gradient w.r.t. the layer
// input. Every forward() must be paired with at most one backward()
// before the next forward() overwrites the caches. All activations are
// batched: vectors are N x F, feature maps are N x C x H x W.

// y = x for x > 0, slope*x otherwise (slope used as the subgradient at 0).
void leaky_relu_forward(const std::vector<double>& x, std::vector<double>& y, double slope);
void leaky_relu_backward(const std::vector<double>& x, const std::vector<double>& dy,
                         std::vector<double>& dx, double slope);

struct LeakyRelu {
  double slope = 0.2;

  LeakyRelu() = default;
  explicit LeakyRelu(double slope_) : slope(slope_) {}

  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& dy);

 private:
  Tensor input_;
};

// Fully connected layer, y = x W^T + b.
struct Linear {
  int in_features = 0;
  int out_features = 0;
  Tensor weight;  // out x in
  Tensor bias;    // out

  Linear() = default;
  Linear(int in, int out, Rng& rng);

  Tensor forward(const Tensor& x);   // N x in -> N x out
  Tensor backward(const Tensor& dy);

 private:
  Tensor input_;
};

// 3x3 convolution, stride 1, zero padding 1, no bias.
struct Conv3x3 {
  int in_channels = 0;
  int out_channels = 0;
  Tensor weight;  // out x in x 3 x 3

  Conv3x3() = default;
  Conv3x3(int in, int out, Rng& rng);

  Tensor forward(const Tensor& x);   // N x in x H x W -> N x out x H x W
  Tensor backward(const Tensor& dy);

 private:
  Tensor input_;
};

// Per-channel batch normalization over (N, H, W). Training mode
// normalizes with batch statistics and updates the running estimates
// (exponential average, unbiased variance); inference mode uses the
// stored running estimates.
struct BatchNorm2d {
  int channels = 0;
  double eps = 1e-5;
  double momentum = 0.1;
  Tensor gamma;  // scale, init 1
  Tensor beta;   // shift, init 0
  Tensor running_mean;
  Tensor running_var;

  BatchNorm2d() = default;
  explicit BatchNorm2d(int channels_);

  Tensor forward(const Tensor& x, bool training);
  Tensor backward(const Tensor& dy);

 private:
  bool training_ = false;
  int count_ = 0;              // N*H*W of the cached batch
  std::vector<double> inv_std_;  // per channel
  Tensor xhat_;
};

// Nearest-neighbor x2 upsampling: each pixel becomes a 2x2 block.
Tensor nearest_upsample2(const Tensor& x);            // N x C x H x W -> N x C x 2H x 2W
Tensor nearest_upsample2_backward(const Tensor& dy);  // sums each 2x2 block

// One decoder stage: nearest x2, then twice (conv 3x3 -> batch norm ->
// leaky ReLU).
struct UpsampleBlock {
  Conv3x3 conv1;
  BatchNorm2d bn1;
  LeakyRelu act1;
  Conv3x3 conv2;
  BatchNorm2d bn2;
  LeakyRelu act2;

  UpsampleBlock() = default;
  UpsampleBlock(int in_channels, int out_channels, double slope, Rng& rng);

  Tensor forward(const Tensor& x, bool training);
  Tensor backward(const Tensor& dy);
};

// Final stage mapping C channels to the 1-channel image:
// y = leaky{w3 * [x + w2 * leaky(w1 * x)]}.
struct ResBlock {
  Conv3x3 conv1;  // C -> C
  Conv3x3 conv2;  // C -> C
  Conv3x3 conv3;  // C -> 1
  LeakyRelu act_inner;
  LeakyRelu act_out;

  ResBlock() = default;
  ResBlock(int channels, double slope, Rng& rng);

  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& dy);
};

// Single-layer LSTM scanned over the time axis; returns the final hidden
// state. Gate order in the stacked weight rows: input, forget, cell
// candidate, output. The forget-gate biases are initialized log-spaced so
// the units' memory horizons cover the record length.
struct LstmEncoder {
  int input_size = 0;
  int hidden_size = 0;
  Tensor wx;  // 4H x input
  Tensor wh;  // 4H x H
  Tensor b;   // 4H

  LstmEncoder() = default;
  LstmEncoder(int input, int hidden, int horizon, Rng& rng);

  Tensor forward(const Tensor& x);   // N x input x T -> N x hidden
  Tensor backward(const Tensor& dy); // dy: N x hidden -> dx: N x input x T

 private:
  int batch_ = 0;
  int steps_ = 0;
  std::vector<double> x_;     // T*N*input, time-major steps
  std::vector<double> h_;     // (T+1)*N*H, h_[0] = 0
  std::vector<double> c_;     // (T+1)*N*H
  std::vector<double> gi_, gf_, gg_, go_;  // T*N*H gate activations
  std::vector<double> tanh_c_;             // T*N*H
};

enum class LossReduction { kSum, kMean };

// Half squared error: sum mode is 0.5*sum((y-gt)^2); mean mode divides
// by the element count.
double mse_loss(const Tensor& y, const Tensor& gt, LossReduction reduction = LossReduction::kSum);
Tensor mse_loss_grad(const Tensor& y, const Tensor& gt,
                     LossReduction reduction = LossReduction::kSum);

}  // namespace pactsc
