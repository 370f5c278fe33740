#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pactsc/config.hpp"
#include "pactsc/image.hpp"
#include "pactsc/phantom.hpp"
#include "pactsc/signal.hpp"

namespace pactsc {

// What the training target of a record is: the rasterized phantom (the
// synthetic ground truth) or the full-ring delay-and-sum image (the
// stand-in used when no exact ground truth exists).
enum class TargetMode { kRasterTarget, kDasTarget };

const char* target_mode_name(TargetMode mode);          // "raster" / "das"
TargetMode target_mode_from_name(const std::string& s);

// One training example: the four composite input traces, the target
// image, and the phantom plus seed it was generated from.
struct DatasetRecord {
  CompositeSignals composites;
  Image target;
  Phantom phantom;
  std::uint64_t seed = 0;
};

// Summary written next to the record files.
struct DatasetManifest {
  int n_train = 0;
  int n_test = 0;
  std::uint64_t seed = 0;
  TargetMode mode = TargetMode::kRasterTarget;
  SimConfig config;
  PhantomSamplerOptions sampler;
};

// Seed of the i-th record overall (test items continue the numbering
// after the training items), chosen so generation order does not matter.
std::uint64_t record_seed(std::uint64_t dataset_seed, std::int64_t global_index);

// Builds one record from its seed: phantom -> per-sensor traces ->
// composites, with the target per mode.
DatasetRecord make_record(std::uint64_t item_seed, const SimConfig& config, TargetMode mode,
                          const PhantomSamplerOptions& sampler = {});

// File layout: <dir>/manifest.txt, <dir>/train/record_00000.patd, ...,
// <dir>/test/record_00000.patd, ... Rewrites the directory contents.
void generate_dataset(const std::filesystem::path& dir, int n_train, int n_test,
                      std::uint64_t seed, const SimConfig& config, TargetMode mode,
                      const PhantomSamplerOptions& sampler = {});

std::filesystem::path record_path(const std::filesystem::path& split_dir, int index);

void save_record(const DatasetRecord& record, const std::filesystem::path& path);
DatasetRecord load_record(const std::filesystem::path& path);

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);
DatasetManifest load_manifest(const std::filesystem::path& path);

// Loads every record of one split ("train" or "test") in index order.
std::vector<DatasetRecord> load_split(const std::filesystem::path& dir, const std::string& split);

}  // namespace pactsc
