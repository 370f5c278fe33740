// pactsc — command-line front end for the single-channel PACT toolkit.
//
// Every subcommand is a thin shim over one library operation: it builds
// the configuration from --config / --desk / flags, loads the input
// files, calls the operation, and writes the result. Unknown commands or
// flags print the usage text and exit with 2; failures inside an
// operation print a single diagnostic line and exit with 1.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pactsc/bench.hpp"
#include "pactsc/config.hpp"
#include "pactsc/das.hpp"
#include "pactsc/dataset.hpp"
#include "pactsc/delay_line.hpp"
#include "pactsc/demux.hpp"
#include "pactsc/forward.hpp"
#include "pactsc/frontend.hpp"
#include "pactsc/geometry.hpp"
#include "pactsc/image.hpp"
#include "pactsc/kvtext.hpp"
#include "pactsc/nn_model.hpp"
#include "pactsc/phantom.hpp"
#include "pactsc/pipeline.hpp"
#include "pactsc/signal.hpp"
#include "pactsc/tensor.hpp"
#include "pactsc/tensor_io.hpp"
#include "pactsc/train.hpp"

namespace {

using namespace pactsc;

// A problem with how the tool was invoked (missing file argument,
// malformed value) as opposed to a failure of the requested operation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small parsers

// "60us", "1.5ms", "0.0002s", "250ns" or a bare number of seconds.
double parse_time(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  double scale = 1.0;
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "ns") == 0) {
    scale = 1e-9;
    s.resize(s.size() - 2);
  } else if (s.size() > 2 && s.compare(s.size() - 2, 2, "us") == 0) {
    scale = 1e-6;
    s.resize(s.size() - 2);
  } else if (s.size() > 2 && s.compare(s.size() - 2, 2, "ms") == 0) {
    scale = 1e-3;
    s.resize(s.size() - 2);
  } else if (s.size() > 1 && s.back() == 's') {
    s.resize(s.size() - 1);
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw UsageError("bad time value '" + text + "' (expected e.g. 60us, 1.5ms, 0.0002s)");
  return value * scale;
}

// ---------------------------------------------------------------------------
// Shared option bundles

struct CommonOptions {
  std::string config_path;
  bool desk = false;
  std::uint64_t seed = 1;
  std::string out;
};

struct ScheduleOptions {
  std::vector<std::string> table1;  // tokens like "T=60us" "b=0"
  std::string schedule_path;        // key-value schedule file
  double rho = 0.0;
  int echoes = -1;  // <0: keep the schedule's own count
};

// Configuration assembled from the preset and the optional --config file.
struct Project {
  SimConfig sim;
  PhantomSamplerOptions sampler;
  KvDoc doc;  // raw document, for model.* overlays
};

Project load_project(const CommonOptions& common) {
  Project p;
  p.sim = common.desk ? SimConfig::desk() : SimConfig();
  if (!common.config_path.empty()) p.doc = KvDoc::load(common.config_path);
  p.sim = SimConfig::from_kv(p.doc, p.sim);
  p.sampler = sampler_options_from_kv(p.doc);
  return p;
}

DelaySchedule make_schedule(const ScheduleOptions& opts) {
  if (!opts.table1.empty() && !opts.schedule_path.empty())
    throw UsageError("--table1 and --schedule are mutually exclusive");
  DelaySchedule schedule;
  if (!opts.table1.empty()) {
    std::optional<double> T;
    double b = 0.0;
    for (const std::string& token : opts.table1) {
      const std::size_t eq = token.find('=');
      const std::string key = token.substr(0, eq == std::string::npos ? token.size() : eq);
      if (eq == std::string::npos)
        throw UsageError("--table1 expects T=<time> and b=<time> tokens, got '" + token + "'");
      const std::string value = token.substr(eq + 1);
      if (key == "T")
        T = parse_time(value);
      else if (key == "b")
        b = parse_time(value);
      else
        throw UsageError("--table1 expects T=<time> and b=<time> tokens, got '" + token + "'");
    }
    if (!T) throw UsageError("--table1 requires a T=<time> token");
    schedule = schedule_from_table1(*T, b, opts.rho);
  } else if (!opts.schedule_path.empty()) {
    schedule = DelaySchedule::from_kv(KvDoc::load(opts.schedule_path));
  } else {
    schedule = paper_schedule();
  }
  if (opts.rho > 0.0) {
    schedule.echo_coeff = opts.rho;
    if (schedule.n_echoes < 1) schedule.n_echoes = 1;
  }
  if (opts.echoes >= 0) {
    schedule.n_echoes = opts.echoes;
    if (opts.echoes == 0) schedule.echo_coeff = 0.0;
  }
  schedule.validate();
  return schedule;
}

// Model configuration for a simulation: the desk preset when the desk
// dimensions match, otherwise defaults adapted to the grid, with model.*
// keys from the config file applied on top.
ModelConfig model_for_sim(const SimConfig& sim, const KvDoc& doc) {
  const SimConfig desk = SimConfig::desk();
  ModelConfig base;
  if (sim.grid_size == desk.grid_size && sim.samples_per_channel == desk.samples_per_channel &&
      sim.n_groups() == 4) {
    base = ModelConfig::desk();
  } else {
    base.input_channels = sim.n_groups();
    base.input_length = sim.samples_per_channel;
    if (base.output_side() != sim.grid_size) {
      int side = base.feature_side, n = 0;
      while (side < sim.grid_size) {
        side <<= 1;
        ++n;
      }
      if (side != sim.grid_size)
        throw std::runtime_error("grid size " + std::to_string(sim.grid_size) +
                                 " is not a power-of-two multiple of the feature side " +
                                 std::to_string(base.feature_side));
      base.n_upsample_blocks = n;
      base.conv_channels.clear();
      for (int i = 0; i < n; ++i) base.conv_channels.push_back(4 << (n - i));
    }
    if (base.input_length % base.decimation != 0) base.decimation = 1;
  }
  ModelConfig config = ModelConfig::from_kv(doc, base);
  if (config.input_length != sim.samples_per_channel)
    throw std::runtime_error("model input length " + std::to_string(config.input_length) +
                             " does not match samples_per_channel " +
                             std::to_string(sim.samples_per_channel));
  if (config.output_side() != sim.grid_size)
    throw std::runtime_error("model output side " + std::to_string(config.output_side()) +
                             " does not match grid_size " + std::to_string(sim.grid_size));
  if (config.input_channels != sim.n_groups())
    throw std::runtime_error("model input channels " + std::to_string(config.input_channels) +
                             " does not match the composite count " +
                             std::to_string(sim.n_groups()));
  return config;
}

// ---------------------------------------------------------------------------
// Tensor-table bridges

const Tensor& require_tensor(const TensorTable& table, const std::string& name,
                             const std::string& path) {
  const auto it = table.find(name);
  if (it == table.end())
    throw std::runtime_error("no '" + name + "' tensor in " + path);
  return it->second;
}

Tensor matrix_tensor(int rows, int cols, const std::vector<double>& data) {
  return Tensor::from_values({rows, cols}, data);
}

MultiChannelSignal channels_from_tensor(const Tensor& t, double sample_rate,
                                        const std::string& path) {
  if (t.rank() != 2)
    throw std::runtime_error("'channels' tensor in " + path + " must be rank 2, got " +
                             t.shape_string());
  MultiChannelSignal s(t.dim(0), t.dim(1), sample_rate);
  s.data = t.values;
  return s;
}

CompositeSignals composites_from_tensor(const Tensor& t, double sample_rate, int group_size,
                                        const std::string& path) {
  if (t.rank() != 2)
    throw std::runtime_error("'composites' tensor in " + path + " must be rank 2, got " +
                             t.shape_string());
  CompositeSignals s(t.dim(0), t.dim(1), sample_rate, group_size);
  s.data = t.values;
  return s;
}

Tensor image_tensor(const Image& image) {
  return Tensor::from_values({image.side, image.side}, image.pixels);
}

void write_image_outputs(const Image& image, const CommonOptions& common,
                         const std::string& pgm_path) {
  if (common.out.empty() && pgm_path.empty())
    throw UsageError("--out (tensor file) or --pgm (preview) is required");
  if (!common.out.empty()) {
    TensorTable table;
    table["image"] = image_tensor(image);
    save_tensors(table, common.out);
    std::printf("wrote %s (image %dx%d)\n", common.out.c_str(), image.side, image.side);
  }
  if (!pgm_path.empty()) {
    write_pgm(image, pgm_path);
    std::printf("wrote %s (pgm preview)\n", pgm_path.c_str());
  }
}

// ---------------------------------------------------------------------------
// Subcommand runners

struct SimulateOptions {
  std::string phantom_path;
  std::string phantom_out;
  double noise_db = 0.0;
  bool noise_set = false;
};

int run_simulate(const CommonOptions& common, const SimulateOptions& opts) {
  const Project p = load_project(common);
  if (common.out.empty()) throw UsageError("simulate: --out <file.patd> is required");
  const Phantom phantom = opts.phantom_path.empty()
                              ? sample_random_phantom(common.seed, p.sim, p.sampler)
                              : phantom_from_kv(KvDoc::load(opts.phantom_path));
  const RingGeometry geometry = build_ring_geometry(p.sim.n_sensors, p.sim.ring_radius);
  MultiChannelSignal channels = simulate_channels(phantom, geometry, p.sim);
  if (opts.noise_set) channels = add_noise(channels, opts.noise_db, common.seed);
  const CompositeSignals composites = superimpose(channels, p.sim.group_size);

  TensorTable table;
  table["channels"] = matrix_tensor(channels.channels, channels.samples, channels.data);
  table["composites"] = matrix_tensor(composites.groups, composites.samples, composites.data);
  save_tensors(table, common.out);
  if (!opts.phantom_out.empty()) phantom_to_kv(phantom).save(opts.phantom_out);
  std::printf("wrote %s (channels %dx%d, composites %dx%d)\n", common.out.c_str(),
              channels.channels, channels.samples, composites.groups, composites.samples);
  return 0;
}

struct GenDatasetOptions {
  int n_train = 300;
  int n_test = 60;
  std::string mode = "raster";
  int n_discs = 0;  // 0: keep the sampler's count
};

int run_gen_dataset(const CommonOptions& common, const GenDatasetOptions& opts) {
  const Project p = load_project(common);
  if (common.out.empty()) throw UsageError("gen-dataset: --out <directory> is required");
  PhantomSamplerOptions sampler = p.sampler;
  if (opts.n_discs > 0) sampler.n_discs = opts.n_discs;
  generate_dataset(common.out, opts.n_train, opts.n_test, common.seed, p.sim,
                   target_mode_from_name(opts.mode), sampler);
  std::printf("wrote %d train / %d test records to %s\n", opts.n_train, opts.n_test,
              common.out.c_str());
  return 0;
}

struct MuxOptions {
  std::string in;
  std::string schedule_out;
};

int run_mux(const CommonOptions& common, const ScheduleOptions& sched_opts,
            const MuxOptions& opts) {
  const Project p = load_project(common);
  if (opts.in.empty()) throw UsageError("mux: --in <file.patd> is required");
  if (common.out.empty()) throw UsageError("mux: --out <file.patd> is required");
  const DelaySchedule schedule = make_schedule(sched_opts);
  const TensorTable table = load_tensors(opts.in);
  const CompositeSignals composites = composites_from_tensor(
      require_tensor(table, "composites", opts.in), p.sim.sample_rate, p.sim.group_size, opts.in);
  const CombinedRecord record = mux(composites, schedule);

  TensorTable out;
  out["record"] = Tensor::from_values({static_cast<int>(record.data.size())}, record.data);
  save_tensors(out, common.out);
  if (!opts.schedule_out.empty() && record.schedule)
    record.schedule->to_kv().save(opts.schedule_out);
  std::printf("wrote %s (record of %zu samples, %.6g us)\n", common.out.c_str(),
              record.data.size(), 1e6 * record.data.size() / record.sample_rate);
  return 0;
}

struct DemuxOptions {
  std::string in;
  int samples = 0;  // window override; 0 picks the default
};

int run_demux(const CommonOptions& common, const ScheduleOptions& sched_opts,
              const DemuxOptions& opts) {
  const Project p = load_project(common);
  if (opts.in.empty()) throw UsageError("demux: --in <file.patd> is required");
  if (common.out.empty()) throw UsageError("demux: --out <file.patd> is required");
  const DelaySchedule schedule = make_schedule(sched_opts);
  const TensorTable table = load_tensors(opts.in);
  const Tensor& t = require_tensor(table, "record", opts.in);
  if (t.rank() != 1)
    throw std::runtime_error("'record' tensor in " + opts.in + " must be rank 1, got " +
                             t.shape_string());
  CombinedRecord record;
  record.data = t.values;
  record.sample_rate = p.sim.sample_rate;
  record.source_group_size = p.sim.group_size;
  record.schedule = schedule;
  const std::int64_t window =
      opts.samples > 0
          ? opts.samples
          : default_window_len(schedule, p.sim.sample_rate, p.sim.samples_per_channel);
  const DemuxResult result = demux(record, window);

  TensorTable out;
  out["composites"] = matrix_tensor(result.composites.groups, result.composites.samples,
                                    result.composites.data);
  save_tensors(out, common.out);
  std::printf("wrote %s (composites %dx%d; kept %lld/%lld/%lld/%lld samples)\n",
              common.out.c_str(), result.composites.groups, result.composites.samples,
              static_cast<long long>(result.kept_samples[0]),
              static_cast<long long>(result.kept_samples[1]),
              static_cast<long long>(result.kept_samples[2]),
              static_cast<long long>(result.kept_samples[3]));
  return 0;
}

struct ReconOptions {
  std::string method = "das";
  std::string in;
  std::string model_path;
  std::string pgm;
};

int run_recon(const CommonOptions& common, const ReconOptions& opts) {
  const Project p = load_project(common);
  if (opts.in.empty()) throw UsageError("recon: --in <file.patd> is required");
  const ReconMethod method = recon_method_from_name(opts.method);
  const TensorTable table = load_tensors(opts.in);

  Image image;
  if (method == ReconMethod::kDas) {
    const MultiChannelSignal channels = channels_from_tensor(
        require_tensor(table, "channels", opts.in), p.sim.sample_rate, opts.in);
    const RingGeometry geometry = build_ring_geometry(p.sim.n_sensors, p.sim.ring_radius);
    image = das_reconstruct(channels, geometry, p.sim);
  } else if (method == ReconMethod::kDasComposite) {
    const CompositeSignals composites =
        composites_from_tensor(require_tensor(table, "composites", opts.in), p.sim.sample_rate,
                               p.sim.group_size, opts.in);
    const RingGeometry geometry = build_ring_geometry(p.sim.n_sensors, p.sim.ring_radius);
    image = das_on_composites(composites, geometry, p.sim);
  } else {
    if (opts.model_path.empty()) throw UsageError("recon --method nn requires --model <file>");
    ReconModel model = ReconModel::load(opts.model_path);
    const CompositeSignals composites =
        composites_from_tensor(require_tensor(table, "composites", opts.in), p.sim.sample_rate,
                               p.sim.group_size, opts.in);
    image = model.infer(pad_composites(composites, model.config().input_length));
  }
  write_image_outputs(image, common, opts.pgm);
  return 0;
}

struct TrainOptions {
  std::string data;
  int epochs = 30;
  int batch = 64;
  double lr = 0.005;
  std::uint64_t shuffle_seed = 17;
  bool sum_loss = false;
  bool verbose = false;
};

int run_train(const CommonOptions& common, const TrainOptions& opts) {
  const Project p = load_project(common);
  if (opts.data.empty()) throw UsageError("train: --data <dataset dir> is required");
  if (common.out.empty()) throw UsageError("train: --out <model file> is required");
  const std::filesystem::path dir(opts.data);
  const DatasetManifest manifest = load_manifest(dir / "manifest.txt");
  const std::vector<DatasetRecord> records = load_split(dir, "train");

  // The dataset dictates the shapes; --config may still override the
  // architecture knobs (model.* keys).
  const ModelConfig model_config = model_for_sim(manifest.config, p.doc);
  ReconModel model(model_config, common.seed);

  TrainConfig tc;
  tc.epochs = opts.epochs;
  tc.batch_size = opts.batch;
  tc.seed = opts.shuffle_seed;
  tc.adam.lr = opts.lr;
  tc.reduction = opts.sum_loss ? LossReduction::kSum : LossReduction::kMean;
  tc.verbose = opts.verbose;
  const TrainResult result = train(model, records, tc);

  model.save(common.out);
  std::printf("trained %d epochs on %zu records: first-epoch loss %.6g, final loss %.6g\n",
              opts.epochs, records.size(), result.epoch_loss.front(), result.epoch_loss.back());
  std::printf("wrote %s\n", common.out.c_str());
  return 0;
}

struct InferOptions {
  std::string in;
  std::string model_path;
  std::string pgm;
};

int run_infer(const CommonOptions& common, const InferOptions& opts) {
  ReconOptions recon;
  recon.method = "nn";
  recon.in = opts.in;
  recon.model_path = opts.model_path;
  recon.pgm = opts.pgm;
  return run_recon(common, recon);
}

struct BenchOptions {
  std::string model_path;
  double laser_hz = 10.0;
};

int run_bench_cmd(const CommonOptions& common, const ScheduleOptions& sched_opts,
                  const BenchOptions& opts) {
  const Project p = load_project(common);
  const DelaySchedule schedule = make_schedule(sched_opts);
  std::optional<ReconModel> model;
  if (!opts.model_path.empty()) model = ReconModel::load(opts.model_path);
  if (opts.laser_hz <= 0.0) throw UsageError("bench: --laser-hz must be positive");
  const BenchReport report = run_bench(p.sim, schedule, model ? &*model : nullptr,
                                       1.0 / opts.laser_hz, common.seed);
  const std::string text = report.to_kv().serialize();
  std::fputs(text.c_str(), stdout);
  if (!common.out.empty()) {
    report.to_kv().save(common.out);
    std::printf("wrote %s\n", common.out.c_str());
  }
  return 0;
}

struct CheckScheduleOptions {
  std::string duration;
};

int run_check_schedule(const CommonOptions& common, const ScheduleOptions& sched_opts,
                       const CheckScheduleOptions& opts) {
  const Project p = load_project(common);
  const DelaySchedule schedule = make_schedule(sched_opts);
  const double duration = opts.duration.empty()
                              ? p.sim.samples_per_channel / p.sim.sample_rate
                              : parse_time(opts.duration);
  const AliasReport report = check_alias_free(schedule, duration);
  std::printf("alias_free: %s\n", report.alias_free ? "true" : "false");
  for (const auto& overlap : report.overlapping_pairs)
    std::printf("overlap: %s with %s by %.6g us\n", overlap.first.c_str(),
                overlap.second.c_str(), overlap.seconds * 1e6);
  return 0;
}

void add_schedule_options(CLI::App* cmd, ScheduleOptions& opts) {
  cmd->add_option("--table1", opts.table1,
                  "Delay-period table entry, e.g. --table1 T=60us b=0")
      ->expected(1, 2);
  cmd->add_option("--schedule", opts.schedule_path, "Schedule key-value file");
  cmd->add_option("--rho", opts.rho, "Echo reflection coefficient in [0,1)");
  cmd->add_option("--echoes", opts.echoes, "Echoes modeled per delayed input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-channel photoacoustic tomography toolkit"};
  app.name("pactsc");
  app.require_subcommand(0, 1);

  CommonOptions common;
  app.add_option("--config", common.config_path,
                 "Key-value configuration file (partial overlay over the preset)");
  app.add_flag("--desk", common.desk, "Start from the reduced desk-scale preset");
  app.add_option("--seed", common.seed, "Random seed for sampling and initialization");
  app.add_option("--out", common.out, "Output file (or directory for gen-dataset)");

  ScheduleOptions mux_sched, demux_sched, bench_sched, check_sched;
  SimulateOptions simulate_opts;
  GenDatasetOptions gen_opts;
  MuxOptions mux_opts;
  DemuxOptions demux_opts;
  ReconOptions recon_opts;
  TrainOptions train_opts;
  InferOptions infer_opts;
  BenchOptions bench_opts;
  CheckScheduleOptions check_opts;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Simulate per-sensor traces and composites for a phantom");
  simulate->add_option("--phantom", simulate_opts.phantom_path,
                       "Phantom key-value file (default: sample one with --seed)");
  simulate->add_option("--phantom-out", simulate_opts.phantom_out,
                       "Write the simulated phantom to this key-value file");
  CLI::Option* noise_opt =
      simulate->add_option("--noise-db", simulate_opts.noise_db, "Add white noise at this SNR (dB)");

  CLI::App* gen = app.add_subcommand("gen-dataset", "Generate a synthetic train/test dataset");
  gen->add_option("--n-train", gen_opts.n_train, "Training records (default 300)");
  gen->add_option("--n-test", gen_opts.n_test, "Test records (default 60)");
  gen->add_option("--mode", gen_opts.mode, "Target mode: raster or das");
  gen->add_option("--n-discs", gen_opts.n_discs, "Discs per phantom (default: sampler setting)");

  CLI::App* mux_cmd =
      app.add_subcommand("mux", "Delay and sum four composites into one record");
  mux_cmd->add_option("--in", mux_opts.in, "Input tensor file with 'composites'");
  mux_cmd->add_option("--schedule-out", mux_opts.schedule_out,
                      "Write the applied schedule (with quantization residuals)");
  add_schedule_options(mux_cmd, mux_sched);

  CLI::App* demux_cmd =
      app.add_subcommand("demux", "Separate a combined record back into composites");
  demux_cmd->add_option("--in", demux_opts.in, "Input tensor file with 'record'");
  demux_cmd->add_option("--samples", demux_opts.samples,
                        "Window length in samples (default: schedule spacing)");
  add_schedule_options(demux_cmd, demux_sched);

  CLI::App* recon =
      app.add_subcommand("recon", "Reconstruct an image from simulated signals");
  recon->add_option("--method", recon_opts.method, "das, nn, or das-composite");
  recon->add_option("--in", recon_opts.in, "Input tensor file");
  recon->add_option("--model", recon_opts.model_path, "Trained model file (for --method nn)");
  recon->add_option("--pgm", recon_opts.pgm, "Also write an 8-bit graymap preview");

  CLI::App* train_cmd =
      app.add_subcommand("train", "Train the reconstruction network on a dataset");
  train_cmd->add_option("--data", train_opts.data, "Dataset directory from gen-dataset");
  train_cmd->add_option("--epochs", train_opts.epochs, "Training epochs (default 30)");
  train_cmd->add_option("--batch", train_opts.batch, "Mini-batch size (default 64)");
  train_cmd->add_option("--lr", train_opts.lr, "Adam learning rate (default 0.005)");
  train_cmd->add_option("--shuffle-seed", train_opts.shuffle_seed,
                        "Epoch shuffling seed (default 17; --seed controls initialization)");
  train_cmd->add_flag("--sum-loss", train_opts.sum_loss,
                      "Use sum-reduced half squared error instead of the mean");
  train_cmd->add_flag("--verbose", train_opts.verbose, "Print one line per epoch");

  CLI::App* infer =
      app.add_subcommand("infer", "Run the trained network on composite signals");
  infer->add_option("--in", infer_opts.in, "Input tensor file with 'composites'");
  infer->add_option("--model", infer_opts.model_path, "Trained model file")->required();
  infer->add_option("--pgm", infer_opts.pgm, "Also write an 8-bit graymap preview");

  CLI::App* bench =
      app.add_subcommand("bench", "Time the pipeline stages and report reference values");
  bench->add_option("--model", bench_opts.model_path, "Trained model to time inference with");
  bench->add_option("--laser-hz", bench_opts.laser_hz,
                    "Laser repetition rate for the modeled scan (default 10)");
  add_schedule_options(bench, bench_sched);

  CLI::App* check =
      app.add_subcommand("check-schedule", "Check a delay schedule for aliasing");
  check->add_option("--duration", check_opts.duration,
                    "Signal window duration, e.g. 50us (default: samples/rate)");
  add_schedule_options(check, check_sched);

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    simulate_opts.noise_set = noise_opt->count() > 0;
    if (app.got_subcommand(simulate)) return run_simulate(common, simulate_opts);
    if (app.got_subcommand(gen)) return run_gen_dataset(common, gen_opts);
    if (app.got_subcommand(mux_cmd)) return run_mux(common, mux_sched, mux_opts);
    if (app.got_subcommand(demux_cmd)) return run_demux(common, demux_sched, demux_opts);
    if (app.got_subcommand(recon)) return run_recon(common, recon_opts);
    if (app.got_subcommand(train_cmd)) return run_train(common, train_opts);
    if (app.got_subcommand(infer)) return run_infer(common, infer_opts);
    if (app.got_subcommand(bench)) return run_bench_cmd(common, bench_sched, bench_opts);
    if (app.got_subcommand(check)) return run_check_schedule(common, check_sched, check_opts);
    std::cerr << app.help() << std::flush;
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "pactsc: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pactsc: %s\n", e.what());
    return 1;
  }
}
