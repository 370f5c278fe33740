#include "pactsc/demux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pactsc {

std::int64_t default_window_len(const DelaySchedule& schedule, double sample_rate,
                                std::int64_t samples_per_channel) {
  if (!(sample_rate > 0)) throw std::invalid_argument("default_window_len: sample_rate must be > 0");
  if (samples_per_channel < 1)
    throw std::invalid_argument("default_window_len: samples_per_channel must be >= 1");
  const auto off = schedule.offsets(sample_rate);
  std::int64_t spacing = std::numeric_limits<std::int64_t>::max();
  for (int k = 0; k < 3; ++k) spacing = std::min(spacing, off[k + 1] - off[k]);
  return std::min(spacing, samples_per_channel);
}

DemuxResult demux(const CombinedRecord& record, std::int64_t window_len) {
  if (!record.schedule) throw std::invalid_argument("demux: record carries no schedule");
  if (window_len < 1) throw std::invalid_argument("demux: window_len must be >= 1");
  const DelaySchedule& schedule = *record.schedule;
  schedule.validate();

  const auto off = schedule.offsets(record.sample_rate);
  const auto length = static_cast<std::int64_t>(record.data.size());
  if (length < off[3] + 1)
    throw std::invalid_argument("demux: record shorter than the last window offset");

  DemuxResult result;
  result.composites = CompositeSignals(4, static_cast<int>(window_len), record.sample_rate,
                                       record.source_group_size);
  for (int k = 0; k < 4; ++k) {
    std::int64_t end = off[k] + window_len;
    if (k < 3) end = std::min(end, off[k + 1]);  // cut where the next window begins
    end = std::min(end, length);
    const std::int64_t kept = std::max<std::int64_t>(end - off[k], 0);
    result.kept_samples[k] = kept;
    const double inv_gain = 1.0 / schedule.gains[k];
    double* dst = result.composites.row(k);
    const double* src = record.data.data() + off[k];
    for (std::int64_t t = 0; t < kept; ++t) dst[t] = src[t] * inv_gain;
  }
  return result;
}

double roundtrip_error(const CompositeSignals& composites, const DelaySchedule& schedule,
                       std::int64_t window_len) {
  const CombinedRecord record = mux(composites, schedule);
  const DemuxResult recovered = demux(record, window_len);

  double diff_sq = 0.0;
  double ref_sq = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double* rec = recovered.composites.row(k);
    const double* ref = composites.row(k);
    for (std::int64_t t = 0; t < window_len; ++t) {
      const double x = t < composites.samples ? ref[t] : 0.0;
      const double d = rec[t] - x;
      diff_sq += d * d;
      ref_sq += x * x;
    }
  }
  if (ref_sq == 0.0)
    return diff_sq == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(diff_sq / ref_sq);
}

}  // namespace pactsc
