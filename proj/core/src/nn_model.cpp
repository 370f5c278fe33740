#include "pactsc/nn_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pactsc/tensor_io.hpp"

namespace pactsc {
namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

void ModelConfig::validate() const {
  if (input_channels < 1 || input_length < 1 || encoder_hidden < 1 || feature_size < 1 ||
      feature_side < 1 || n_upsample_blocks < 0)
    throw std::invalid_argument("ModelConfig: sizes must be positive");
  if (envelope_window < 1 || envelope_window % 2 == 0)
    throw std::invalid_argument("ModelConfig: envelope_window must be odd and >= 1");
  if (decimation < 1 || input_length % decimation != 0)
    throw std::invalid_argument("ModelConfig: decimation must divide input_length");
  if (feature_side * feature_side != feature_size)
    throw std::invalid_argument("ModelConfig: feature_size must equal feature_side^2");
  if (static_cast<int>(conv_channels.size()) != n_upsample_blocks)
    throw std::invalid_argument("ModelConfig: conv_channels must list one width per block");
  for (int c : conv_channels)
    if (c < 1) throw std::invalid_argument("ModelConfig: conv channel widths must be positive");
  if (!(leaky_slope >= 0.0 && leaky_slope < 1.0))
    throw std::invalid_argument("ModelConfig: leaky_slope must be in [0, 1)");
}

ModelConfig ModelConfig::desk() {
  ModelConfig config;
  config.input_length = 512;
  // Envelope conditioning: training at this scale on a CPU budget leaves
  // the encoder too few updates to learn carrier demodulation from raw
  // RF, and the decimation keeps the recurrence short enough to train
  // through while its timing resolution (0.8 mm of range per step) stays
  // well inside a pixel pitch.
  config.envelope_input = true;
  config.envelope_window = 5;
  config.decimation = 8;
  config.encoder_hidden = 64;
  config.n_upsample_blocks = 3;
  config.conv_channels = {16, 8, 4};
  return config;
}

KvDoc ModelConfig::to_kv() const {
  KvDoc doc;
  doc.set_int("model.input_channels", input_channels);
  doc.set_int("model.input_length", input_length);
  doc.set_int("model.envelope_input", envelope_input ? 1 : 0);
  doc.set_int("model.envelope_window", envelope_window);
  doc.set_int("model.decimation", decimation);
  doc.set_int("model.envelope_normalize", envelope_normalize ? 1 : 0);
  doc.set_int("model.encoder_hidden", encoder_hidden);
  doc.set_int("model.feature_size", feature_size);
  doc.set_int("model.feature_side", feature_side);
  doc.set_int("model.n_upsample_blocks", n_upsample_blocks);
  doc.set("model.conv_channels", join_ints(conv_channels));
  doc.set_double("model.leaky_slope", leaky_slope);
  return doc;
}

ModelConfig ModelConfig::from_kv(const KvDoc& doc) { return from_kv(doc, ModelConfig()); }

ModelConfig ModelConfig::from_kv(const KvDoc& doc, const ModelConfig& base) {
  ModelConfig config = base;
  if (doc.has("model.input_channels"))
    config.input_channels = static_cast<int>(doc.get_int("model.input_channels"));
  if (doc.has("model.input_length"))
    config.input_length = static_cast<int>(doc.get_int("model.input_length"));
  if (doc.has("model.envelope_input"))
    config.envelope_input = doc.get_int("model.envelope_input") != 0;
  if (doc.has("model.envelope_window"))
    config.envelope_window = static_cast<int>(doc.get_int("model.envelope_window"));
  if (doc.has("model.decimation"))
    config.decimation = static_cast<int>(doc.get_int("model.decimation"));
  if (doc.has("model.envelope_normalize"))
    config.envelope_normalize = doc.get_int("model.envelope_normalize") != 0;
  if (doc.has("model.encoder_hidden"))
    config.encoder_hidden = static_cast<int>(doc.get_int("model.encoder_hidden"));
  if (doc.has("model.feature_size"))
    config.feature_size = static_cast<int>(doc.get_int("model.feature_size"));
  if (doc.has("model.feature_side"))
    config.feature_side = static_cast<int>(doc.get_int("model.feature_side"));
  if (doc.has("model.n_upsample_blocks"))
    config.n_upsample_blocks = static_cast<int>(doc.get_int("model.n_upsample_blocks"));
  if (doc.has("model.conv_channels")) config.conv_channels = split_ints(doc.get("model.conv_channels"));
  if (doc.has("model.leaky_slope")) config.leaky_slope = doc.get_double("model.leaky_slope");
  config.validate();
  return config;
}

ReconModel::ReconModel(const ModelConfig& config, std::uint64_t seed) : config_(config) {
  config_.validate();
  Rng rng(seed);
  lstm_ = LstmEncoder(config_.input_channels, config_.encoder_hidden, config_.encoder_steps(), rng);
  fc_ = Linear(config_.encoder_hidden, config_.feature_size, rng);
  int channels = 1;
  for (int i = 0; i < config_.n_upsample_blocks; ++i) {
    blocks_.emplace_back(channels, config_.conv_channels[i], config_.leaky_slope, rng);
    channels = config_.conv_channels[i];
  }
  res_ = ResBlock(channels, config_.leaky_slope, rng);
}

Tensor ReconModel::condition_forward(const Tensor& x) {
  const int dec = config_.decimation;
  if (!config_.envelope_input && dec == 1 && !config_.envelope_normalize) {
    input_sign_.clear();
    norm_scale_.clear();
    norm_out_.clear();
    return x;
  }
  const int n = x.dim(0);
  const int channels = x.dim(1);
  const int len = x.dim(2);
  const int steps = config_.encoder_steps();
  const int half = config_.envelope_window / 2;

  if (config_.envelope_input) {
    input_sign_.resize(x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i)
      input_sign_[i] = x.values[i] > 0.0 ? 1.0 : (x.values[i] < 0.0 ? -1.0 : 0.0);
  } else {
    input_sign_.clear();
  }

  Tensor out({n, channels, steps});
  for (int b = 0; b < n; ++b) {
    for (int ch = 0; ch < channels; ++ch) {
      const double* in = x.values.data() + (static_cast<std::size_t>(b) * channels + ch) * len;
      double* dst = out.values.data() + (static_cast<std::size_t>(b) * channels + ch) * steps;
      for (int j = 0; j < steps; ++j) {
        const int center = j * dec + dec / 2;
        if (!config_.envelope_input) {
          dst[j] = in[center];
          continue;
        }
        const int lo = std::max(0, center - half);
        const int hi = std::min(len - 1, center + half);
        double acc = 0.0;
        for (int k = lo; k <= hi; ++k) acc += std::abs(in[k]);
        dst[j] = acc / (hi - lo + 1);
      }
    }
  }

  if (config_.envelope_normalize) {
    const std::size_t per_record = static_cast<std::size_t>(channels) * steps;
    norm_scale_.assign(static_cast<std::size_t>(n), 1.0);
    for (int b = 0; b < n; ++b) {
      double* rec = out.values.data() + b * per_record;
      double mean = 0.0;
      for (std::size_t i = 0; i < per_record; ++i) mean += std::abs(rec[i]);
      mean /= static_cast<double>(per_record);
      const double scale = mean > 0.0 ? 1.0 / (mean + 1e-8) : 1.0;
      norm_scale_[static_cast<std::size_t>(b)] = scale;
      for (std::size_t i = 0; i < per_record; ++i) rec[i] *= scale;
    }
    norm_out_ = out.values;
  } else {
    norm_scale_.clear();
    norm_out_.clear();
  }
  return out;
}

Tensor ReconModel::condition_backward(const Tensor& d_cond) const {
  const int dec = config_.decimation;
  if (!config_.envelope_input && dec == 1 && !config_.envelope_normalize) return d_cond;
  const int n = d_cond.dim(0);
  const int channels = d_cond.dim(1);
  const int steps = d_cond.dim(2);
  const int len = config_.input_length;
  const int half = config_.envelope_window / 2;

  // Backward through the per-record scaling y = e / (mean|e| + eps): the
  // scale itself depends on every element, so the gradient picks up a
  // rank-one correction alongside the plain scaling.
  Tensor d_scaled = d_cond;
  if (config_.envelope_normalize) {
    const std::size_t per_record = static_cast<std::size_t>(channels) * steps;
    for (int b = 0; b < n; ++b) {
      const double s = norm_scale_[static_cast<std::size_t>(b)];
      const double* y = norm_out_.data() + b * per_record;
      double* g = d_scaled.values.data() + b * per_record;
      double dot = 0.0;
      for (std::size_t i = 0; i < per_record; ++i) dot += g[i] * y[i];
      const double correction = s * dot / static_cast<double>(per_record);
      for (std::size_t i = 0; i < per_record; ++i) {
        const double sgn = y[i] > 0.0 ? 1.0 : (y[i] < 0.0 ? -1.0 : 0.0);
        g[i] = s * g[i] - correction * sgn;
      }
    }
  }

  Tensor dx = Tensor::zeros({n, channels, len});
  for (int b = 0; b < n; ++b) {
    for (int ch = 0; ch < channels; ++ch) {
      const double* dj =
          d_scaled.values.data() + (static_cast<std::size_t>(b) * channels + ch) * steps;
      double* dst = dx.values.data() + (static_cast<std::size_t>(b) * channels + ch) * len;
      for (int j = 0; j < steps; ++j) {
        const int center = j * dec + dec / 2;
        if (!config_.envelope_input) {
          dst[center] += dj[j];
          continue;
        }
        const int lo = std::max(0, center - half);
        const int hi = std::min(len - 1, center + half);
        const double share = dj[j] / (hi - lo + 1);
        for (int k = lo; k <= hi; ++k) dst[k] += share;
      }
    }
  }
  if (config_.envelope_input) {
    for (std::size_t i = 0; i < dx.values.size(); ++i) dx.values[i] *= input_sign_[i];
  }
  return dx;
}

Tensor ReconModel::forward(const Tensor& x, bool training) {
  if (x.rank() != 3 || x.dim(1) != config_.input_channels || x.dim(2) != config_.input_length)
    throw std::invalid_argument("ReconModel: expected N x " +
                                std::to_string(config_.input_channels) + " x " +
                                std::to_string(config_.input_length) + " input, got " +
                                x.shape_string());
  batch_ = x.dim(0);
  Tensor t = fc_.forward(lstm_.forward(condition_forward(x)));
  t.shape = {batch_, 1, config_.feature_side, config_.feature_side};
  for (auto& block : blocks_) t = block.forward(t, training);
  t = res_.forward(t);
  t.shape = {batch_, t.dim(2), t.dim(3)};
  return t;
}

Tensor ReconModel::backward(const Tensor& dy) {
  if (dy.rank() != 3 || dy.dim(0) != batch_)
    throw std::invalid_argument("ReconModel: gradient shape mismatch " + dy.shape_string());
  Tensor d = dy;
  d.shape = {batch_, 1, dy.dim(1), dy.dim(2)};
  d = res_.backward(d);
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) d = it->backward(d);
  d.shape = {batch_, config_.feature_size};
  d = lstm_.backward(fc_.backward(d));
  return condition_backward(d);
}

Image ReconModel::infer(const CompositeSignals& composites) {
  if (composites.groups != config_.input_channels ||
      composites.samples != config_.input_length)
    throw std::invalid_argument("ReconModel: composites are " + std::to_string(composites.groups) +
                                " x " + std::to_string(composites.samples) + ", model expects " +
                                std::to_string(config_.input_channels) + " x " +
                                std::to_string(config_.input_length));
  Tensor x = Tensor::from_values({1, composites.groups, composites.samples}, composites.data);
  const Tensor y = forward(x, false);
  Image image(config_.output_side());
  image.pixels = y.values;
  return image;
}

std::vector<Param> ReconModel::parameters() {
  std::vector<Param> params{{"lstm.wx", &lstm_.wx}, {"lstm.wh", &lstm_.wh}, {"lstm.b", &lstm_.b},
                            {"fc.weight", &fc_.weight}, {"fc.bias", &fc_.bias}};
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const std::string p = "up" + std::to_string(i) + ".";
    params.push_back({p + "conv1.weight", &blocks_[i].conv1.weight});
    params.push_back({p + "bn1.gamma", &blocks_[i].bn1.gamma});
    params.push_back({p + "bn1.beta", &blocks_[i].bn1.beta});
    params.push_back({p + "conv2.weight", &blocks_[i].conv2.weight});
    params.push_back({p + "bn2.gamma", &blocks_[i].bn2.gamma});
    params.push_back({p + "bn2.beta", &blocks_[i].bn2.beta});
  }
  params.push_back({"res.conv1.weight", &res_.conv1.weight});
  params.push_back({"res.conv2.weight", &res_.conv2.weight});
  params.push_back({"res.conv3.weight", &res_.conv3.weight});
  return params;
}

std::vector<Param> ReconModel::state_tensors() {
  std::vector<Param> all = parameters();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const std::string p = "up" + std::to_string(i) + ".";
    all.push_back({p + "bn1.running_mean", &blocks_[i].bn1.running_mean});
    all.push_back({p + "bn1.running_var", &blocks_[i].bn1.running_var});
    all.push_back({p + "bn2.running_mean", &blocks_[i].bn2.running_mean});
    all.push_back({p + "bn2.running_var", &blocks_[i].bn2.running_var});
  }
  return all;
}

void ReconModel::zero_grad() {
  for (auto& param : parameters()) {
    param.tensor->ensure_grad();
    param.tensor->zero_grad();
  }
}

void ReconModel::save(const std::filesystem::path& path) {
  TensorTable table;
  for (auto& entry : state_tensors()) {
    Tensor copy;
    copy.shape = entry.tensor->shape;
    copy.values = entry.tensor->values;
    table[entry.name] = std::move(copy);
  }
  save_tensors(table, path);
  std::filesystem::path config_path = path;
  config_path.replace_extension(".txt");
  config_.to_kv().save(config_path);
}

ReconModel ReconModel::load(const std::filesystem::path& path) {
  std::filesystem::path config_path = path;
  config_path.replace_extension(".txt");
  const ModelConfig config = ModelConfig::from_kv(KvDoc::load(config_path));
  ReconModel model(config, 0);
  TensorTable table = load_tensors(path);
  for (auto& entry : model.state_tensors()) {
    auto it = table.find(entry.name);
    if (it == table.end())
      throw std::runtime_error(path.string() + ": missing model tensor '" + entry.name + "'");
    if (it->second.shape != entry.tensor->shape)
      throw std::runtime_error(path.string() + ": shape mismatch for '" + entry.name + "' (" +
                               it->second.shape_string() + " vs " +
                               entry.tensor->shape_string() + ")");
    entry.tensor->values = std::move(it->second.values);
  }
  return model;
}

}  // namespace pactsc
