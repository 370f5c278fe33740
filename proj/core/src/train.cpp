#include "pactsc/train.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "pactsc/rng.hpp"

namespace pactsc {
namespace {

void fisher_yates(std::vector<int>& order, Rng& rng) {
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.bounded(i)]);
}

}  // namespace

Tensor batch_inputs(const std::vector<DatasetRecord>& records, std::span<const int> indices) {
  const CompositeSignals& first = records[static_cast<std::size_t>(indices[0])].composites;
  Tensor x({static_cast<int>(indices.size()), first.groups, first.samples});
  const std::size_t stride = first.data.size();
  for (std::size_t b = 0; b < indices.size(); ++b) {
    const CompositeSignals& c = records[static_cast<std::size_t>(indices[b])].composites;
    if (c.groups != first.groups || c.samples != first.samples)
      throw std::invalid_argument("batch_inputs: inconsistent record shapes");
    std::copy(c.data.begin(), c.data.end(), x.values.begin() + static_cast<std::ptrdiff_t>(b * stride));
  }
  return x;
}

Tensor batch_targets(const std::vector<DatasetRecord>& records, std::span<const int> indices) {
  const Image& first = records[static_cast<std::size_t>(indices[0])].target;
  Tensor t({static_cast<int>(indices.size()), first.side, first.side});
  const std::size_t stride = first.pixels.size();
  for (std::size_t b = 0; b < indices.size(); ++b) {
    const Image& img = records[static_cast<std::size_t>(indices[b])].target;
    if (img.side != first.side)
      throw std::invalid_argument("batch_targets: inconsistent target shapes");
    std::copy(img.pixels.begin(), img.pixels.end(),
              t.values.begin() + static_cast<std::ptrdiff_t>(b * stride));
  }
  return t;
}

TrainResult train(ReconModel& model, const std::vector<DatasetRecord>& records,
                  const TrainConfig& config) {
  if (records.empty()) throw std::invalid_argument("train: empty dataset");
  if (config.epochs < 1 || config.batch_size < 1)
    throw std::invalid_argument("train: epochs and batch_size must be >= 1");
  const ModelConfig& mc = model.config();
  for (const auto& record : records) {
    if (record.composites.groups != mc.input_channels ||
        record.composites.samples != mc.input_length ||
        record.target.side != mc.output_side())
      throw std::invalid_argument("train: record shapes do not match the model");
  }

  const int n = static_cast<int>(records.size());
  std::vector<int> order(records.size());
  std::iota(order.begin(), order.end(), 0);

  AdamOptimizer optimizer(model.parameters(), config.adam);
  TrainResult result;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(epoch)));
    fisher_yates(order, rng);

    double weighted_loss = 0.0;
    for (int start = 0; start < n; start += config.batch_size) {
      const int count = std::min(config.batch_size, n - start);
      const std::span<const int> indices(order.data() + start, static_cast<std::size_t>(count));
      const Tensor x = batch_inputs(records, indices);
      const Tensor gt = batch_targets(records, indices);

      model.zero_grad();
      const Tensor y = model.forward(x, true);
      const double loss = mse_loss(y, gt, config.reduction);
      model.backward(mse_loss_grad(y, gt, config.reduction));
      const std::vector<Param> params = model.parameters();
      optimizer.step(params);
      weighted_loss += loss * count;
    }
    result.epoch_loss.push_back(weighted_loss / n);
    if (config.verbose)
      std::fprintf(stderr, "epoch %3d/%d  loss %.6g\n", epoch + 1, config.epochs,
                   result.epoch_loss.back());
  }
  return result;
}

}  // namespace pactsc
