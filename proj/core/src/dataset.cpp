#include "pactsc/dataset.hpp"

#include <cstdio>
#include <stdexcept>

#include "pactsc/das.hpp"
#include "pactsc/forward.hpp"
#include "pactsc/frontend.hpp"
#include "pactsc/geometry.hpp"
#include "pactsc/tensor_io.hpp"

namespace pactsc {

const char* target_mode_name(TargetMode mode) {
  return mode == TargetMode::kRasterTarget ? "raster" : "das";
}

TargetMode target_mode_from_name(const std::string& s) {
  if (s == "raster") return TargetMode::kRasterTarget;
  if (s == "das") return TargetMode::kDasTarget;
  throw std::invalid_argument("unknown target mode '" + s + "' (expected raster or das)");
}

std::uint64_t record_seed(std::uint64_t dataset_seed, std::int64_t global_index) {
  return dataset_seed ^ static_cast<std::uint64_t>(global_index);
}

DatasetRecord make_record(std::uint64_t item_seed, const SimConfig& config, TargetMode mode,
                          const PhantomSamplerOptions& sampler) {
  config.validate();
  DatasetRecord record;
  record.seed = item_seed;
  record.phantom = sample_random_phantom(item_seed, config, sampler);
  const RingGeometry geometry = build_ring_geometry(config.n_sensors, config.ring_radius);
  const MultiChannelSignal signals = simulate_channels(record.phantom, geometry, config);
  record.composites = superimpose(signals, config.group_size);
  record.target = mode == TargetMode::kRasterTarget ? rasterize_phantom(record.phantom, config)
                                                    : das_reconstruct(signals, geometry, config);
  return record;
}

std::filesystem::path record_path(const std::filesystem::path& split_dir, int index) {
  char name[32];
  std::snprintf(name, sizeof(name), "record_%05d.patd", index);
  return split_dir / name;
}

void save_record(const DatasetRecord& record, const std::filesystem::path& path) {
  TensorTable table;
  table["input"] = Tensor::from_values({record.composites.groups, record.composites.samples},
                                       record.composites.data);
  table["target"] = Tensor::from_values({record.target.side, record.target.side},
                                        record.target.pixels);
  if (!record.phantom.discs.empty()) {
    Tensor discs({static_cast<int>(record.phantom.discs.size()), 4});
    for (std::size_t i = 0; i < record.phantom.discs.size(); ++i) {
      const Disc& d = record.phantom.discs[i];
      discs.values[4 * i + 0] = d.center_x;
      discs.values[4 * i + 1] = d.center_y;
      discs.values[4 * i + 2] = d.radius;
      discs.values[4 * i + 3] = d.amplitude;
    }
    table["phantom"] = std::move(discs);
  }
  table["meta"] = Tensor::from_values(
      {4}, {static_cast<double>(record.seed & 0xffffffffu),
            static_cast<double>(record.seed >> 32), record.composites.sample_rate,
            static_cast<double>(record.composites.group_size)});
  save_tensors(table, path);
}

DatasetRecord load_record(const std::filesystem::path& path) {
  TensorTable table = load_tensors(path);
  const auto need = [&](const char* name) -> Tensor& {
    auto it = table.find(name);
    if (it == table.end())
      throw std::runtime_error(path.string() + ": missing tensor '" + name + "'");
    return it->second;
  };

  DatasetRecord record;
  Tensor& meta = need("meta");
  if (meta.size() != 4) throw std::runtime_error(path.string() + ": malformed meta tensor");
  record.seed = static_cast<std::uint64_t>(meta.values[0]) |
                (static_cast<std::uint64_t>(meta.values[1]) << 32);

  Tensor& input = need("input");
  if (input.rank() != 2) throw std::runtime_error(path.string() + ": input tensor must be rank 2");
  record.composites = CompositeSignals(input.dim(0), input.dim(1), meta.values[2],
                                       static_cast<int>(meta.values[3]));
  record.composites.data = std::move(input.values);

  Tensor& target = need("target");
  if (target.rank() != 2 || target.dim(0) != target.dim(1))
    throw std::runtime_error(path.string() + ": target tensor must be square");
  record.target.side = target.dim(0);
  record.target.pixels = std::move(target.values);

  if (auto it = table.find("phantom"); it != table.end()) {
    const Tensor& discs = it->second;
    if (discs.rank() != 2 || discs.dim(1) != 4)
      throw std::runtime_error(path.string() + ": phantom tensor must be n x 4");
    for (int i = 0; i < discs.dim(0); ++i) {
      Disc d;
      d.center_x = discs.values[4 * i + 0];
      d.center_y = discs.values[4 * i + 1];
      d.radius = discs.values[4 * i + 2];
      d.amplitude = discs.values[4 * i + 3];
      record.phantom.discs.push_back(d);
    }
  }
  return record;
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
  KvDoc doc;
  doc.set_int("dataset.n_train", manifest.n_train);
  doc.set_int("dataset.n_test", manifest.n_test);
  doc.set_u64("dataset.seed", manifest.seed);
  doc.set("dataset.mode", target_mode_name(manifest.mode));
  doc.set_int("dataset.format_version", 1);
  const KvDoc config = manifest.config.to_kv();
  for (const auto& key : config.keys()) doc.set(key, config.get(key));
  const KvDoc sampler = sampler_options_to_kv(manifest.sampler);
  for (const auto& key : sampler.keys()) doc.set(key, sampler.get(key));
  doc.save(path);
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  const KvDoc doc = KvDoc::load(path);
  DatasetManifest manifest;
  manifest.n_train = static_cast<int>(doc.get_int("dataset.n_train"));
  manifest.n_test = static_cast<int>(doc.get_int("dataset.n_test"));
  manifest.seed = doc.get_u64("dataset.seed");
  manifest.mode = target_mode_from_name(doc.get("dataset.mode"));
  manifest.config = SimConfig::from_kv(doc);
  manifest.sampler = sampler_options_from_kv(doc);
  return manifest;
}

void generate_dataset(const std::filesystem::path& dir, int n_train, int n_test,
                      std::uint64_t seed, const SimConfig& config, TargetMode mode,
                      const PhantomSamplerOptions& sampler) {
  if (n_train < 0 || n_test < 0)
    throw std::invalid_argument("generate_dataset: counts must be non-negative");
  config.validate();

  std::error_code ec;
  std::filesystem::create_directories(dir / "train", ec);
  std::filesystem::create_directories(dir / "test", ec);
  if (!std::filesystem::is_directory(dir / "train") || !std::filesystem::is_directory(dir / "test"))
    throw std::runtime_error("generate_dataset: cannot create directories under " + dir.string());

  for (int i = 0; i < n_train; ++i) {
    const DatasetRecord record = make_record(record_seed(seed, i), config, mode, sampler);
    save_record(record, record_path(dir / "train", i));
  }
  for (int j = 0; j < n_test; ++j) {
    const DatasetRecord record = make_record(record_seed(seed, n_train + j), config, mode, sampler);
    save_record(record, record_path(dir / "test", j));
  }

  DatasetManifest manifest{n_train, n_test, seed, mode, config, sampler};
  save_manifest(manifest, dir / "manifest.txt");
}

std::vector<DatasetRecord> load_split(const std::filesystem::path& dir, const std::string& split) {
  const DatasetManifest manifest = load_manifest(dir / "manifest.txt");
  const int count = split == "train"  ? manifest.n_train
                    : split == "test" ? manifest.n_test
                                      : throw std::invalid_argument("unknown split '" + split + "'");
  std::vector<DatasetRecord> records;
  records.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) records.push_back(load_record(record_path(dir / split, i)));
  return records;
}

}  // namespace pactsc
