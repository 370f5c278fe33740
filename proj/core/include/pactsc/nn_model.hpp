#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pactsc/image.hpp"
#include "pactsc/kvtext.hpp"
#include "pactsc/nn_layers.hpp"
#include "pactsc/signal.hpp"
#include "pactsc/tensor.hpp"

namespace pactsc {

// Architecture hyper-parameters of the reconstruction network. The
// decoder doubles the spatial side once per upsample block, so the output
// side is feature_side * 2^n_upsample_blocks.
struct ModelConfig {
  int input_channels = 4;
  int input_length = 2048;
  // Optional input conditioning in front of the recurrent encoder: when
  // envelope_input is set each channel is rectified and smoothed with a
  // centered envelope_window-sample boxcar (an amplitude-envelope
  // detector); decimation then keeps every decimation-th sample, so the
  // encoder scans input_length / decimation steps. Defaults leave the
  // signal untouched.
  bool envelope_input = false;
  int envelope_window = 1;  // odd
  int decimation = 1;
  // Scales each record's conditioned sequence (all channels and steps
  // jointly) to unit mean magnitude, so the recurrent gates see the same
  // input statistics regardless of source strength. All-zero records are
  // left untouched.
  bool envelope_normalize = false;
  int encoder_hidden = 128;
  int feature_size = 64;
  int feature_side = 8;
  int n_upsample_blocks = 4;
  std::vector<int> conv_channels = {64, 32, 16, 8};
  double leaky_slope = 0.2;

  int output_side() const { return feature_side << n_upsample_blocks; }
  int encoder_steps() const { return input_length / decimation; }
  void validate() const;

  // Small variant sized for CPU training: 4 x 512 in, 64 x 64 out.
  static ModelConfig desk();

  KvDoc to_kv() const;
  // Keys present in the document override the corresponding fields of
  // base (the defaults above for the one-argument form); everything else
  // is kept, so a file may hold a partial overlay.
  static ModelConfig from_kv(const KvDoc& doc);
  static ModelConfig from_kv(const KvDoc& doc, const ModelConfig& base);
};

// Named handle to one trainable tensor of the model.
struct Param {
  std::string name;
  Tensor* tensor;
};

// Encoder-decoder reconstruction network: LSTM over the time axis ->
// fully connected layer to the latent features -> reshape to a 1-channel
// feature map -> upsample blocks -> residual output block.
class ReconModel {
 public:
  ReconModel(const ModelConfig& config, std::uint64_t seed);

  const ModelConfig& config() const { return config_; }

  // x: N x input_channels x input_length -> N x side x side.
  Tensor forward(const Tensor& x, bool training);
  // dy: N x side x side; accumulates parameter gradients, returns dx.
  Tensor backward(const Tensor& dy);

  // Convenience single-sample inference (batch-norm in inference mode).
  Image infer(const CompositeSignals& composites);

  std::vector<Param> parameters();        // trainable tensors, fixed order
  std::vector<Param> state_tensors();     // parameters + running statistics
  void zero_grad();

  // Persists all state tensors to <path> and the config next to it
  // (same path with a ".txt" extension).
  void save(const std::filesystem::path& path);
  static ReconModel load(const std::filesystem::path& path);

 private:
  // Applies (and backpropagates through) the configured input
  // conditioning; pass-through when no conditioning is set.
  Tensor condition_forward(const Tensor& x);
  Tensor condition_backward(const Tensor& d_cond) const;

  ModelConfig config_;
  LstmEncoder lstm_;
  Linear fc_;
  std::vector<UpsampleBlock> blocks_;
  ResBlock res_;
  int batch_ = 0;
  std::vector<double> input_sign_;  // sign of the cached raw input (rectifier backward)
  std::vector<double> norm_scale_;  // per-record normalization factors
  std::vector<double> norm_out_;    // normalized conditioned values (for the scale backward)
};

}  // namespace pactsc
