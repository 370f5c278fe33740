#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pactsc/dataset.hpp"
#include "pactsc/nn_model.hpp"
#include "pactsc/optimizer.hpp"

namespace pactsc {

struct TrainConfig {
  int epochs = 30;
  int batch_size = 64;
  std::uint64_t seed = 0;
  AdamConfig adam;  // lr 0.005, beta 0.9/0.999, eps 1e-8
  LossReduction reduction = LossReduction::kMean;
  bool verbose = false;  // one line per epoch on stderr
};

struct TrainResult {
  std::vector<double> epoch_loss;  // per-epoch loss, averaged over the samples
};

// Stacks the selected records into an N x channels x samples input tensor
// and an N x side x side target tensor.
Tensor batch_inputs(const std::vector<DatasetRecord>& records, std::span<const int> indices);
Tensor batch_targets(const std::vector<DatasetRecord>& records, std::span<const int> indices);

// Mini-batch Adam training. The pass over the data is reshuffled with a
// generator seeded by (seed, epoch), so a run is reproducible and each
// epoch's order is fixed regardless of how many epochs precede it.
// Batch norm runs in training mode here; evaluation afterwards uses the
// accumulated running statistics.
TrainResult train(ReconModel& model, const std::vector<DatasetRecord>& records,
                  const TrainConfig& config);

}  // namespace pactsc
