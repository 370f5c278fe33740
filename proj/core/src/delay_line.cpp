#include "pactsc/delay_line.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pactsc {

std::array<std::int64_t, 4> DelaySchedule::offsets(double sample_rate) const {
  std::array<std::int64_t, 4> off{};
  for (int k = 0; k < 4; ++k) off[k] = std::llround(delays[k] * sample_rate);
  return off;
}

void DelaySchedule::validate() const {
  if (delays[0] != 0.0) throw std::invalid_argument("DelaySchedule: delays[0] must be 0");
  for (int k = 1; k < 4; ++k)
    if (!(delays[k] > delays[k - 1]))
      throw std::invalid_argument("DelaySchedule: delays must be strictly increasing");
  for (double g : gains)
    if (!(g > 0)) throw std::invalid_argument("DelaySchedule: gains must be positive");
  if (echo_coeff < 0.0 || echo_coeff >= 1.0)
    throw std::invalid_argument("DelaySchedule: echo_coeff must be in [0, 1)");
  if (echo_coeff > 0.0 && n_echoes < 1)
    throw std::invalid_argument("DelaySchedule: n_echoes must be >= 1 when echo_coeff > 0");
  if (n_echoes < 0) throw std::invalid_argument("DelaySchedule: n_echoes must be >= 0");
}

KvDoc DelaySchedule::to_kv() const {
  KvDoc doc;
  for (int k = 0; k < 4; ++k)
    doc.set_double("schedule.delay_us." + std::to_string(k), delays[k] * 1e6);
  for (int k = 0; k < 4; ++k) doc.set_double("schedule.gain." + std::to_string(k), gains[k]);
  doc.set_double("schedule.echo_coeff", echo_coeff);
  doc.set_int("schedule.n_echoes", n_echoes);
  if (table_T) doc.set_double("schedule.table1.T_us", *table_T * 1e6);
  if (table_b) doc.set_double("schedule.table1.b_us", *table_b * 1e6);
  return doc;
}

DelaySchedule DelaySchedule::from_kv(const KvDoc& doc) {
  DelaySchedule s;
  for (int k = 0; k < 4; ++k)
    s.delays[k] = doc.get_double("schedule.delay_us." + std::to_string(k)) * 1e-6;
  for (int k = 0; k < 4; ++k) {
    const std::string key = "schedule.gain." + std::to_string(k);
    if (doc.has(key)) s.gains[k] = doc.get_double(key);
  }
  if (doc.has("schedule.echo_coeff")) s.echo_coeff = doc.get_double("schedule.echo_coeff");
  if (doc.has("schedule.n_echoes")) s.n_echoes = static_cast<int>(doc.get_int("schedule.n_echoes"));
  if (doc.has("schedule.table1.T_us")) s.table_T = doc.get_double("schedule.table1.T_us") * 1e-6;
  if (doc.has("schedule.table1.b_us")) s.table_b = doc.get_double("schedule.table1.b_us") * 1e-6;
  s.validate();
  return s;
}

DelaySchedule schedule_from_table1(double T, double b, double echo_coeff) {
  if (!(T > 0)) throw std::invalid_argument("schedule_from_table1: T must be > 0");
  if (b < 0) throw std::invalid_argument("schedule_from_table1: b must be non-negative");
  DelaySchedule s;
  s.delays = {0.0, 1.5 * T + b, 2.5 * T + b, 3.5 * T + b};
  s.echo_coeff = echo_coeff;
  s.n_echoes = echo_coeff > 0.0 ? 1 : 0;
  s.table_T = T;
  s.table_b = b;
  s.validate();
  return s;
}

DelaySchedule paper_schedule() {
  DelaySchedule s;
  s.delays = {0.0, 50e-6, 100e-6, 150e-6};
  return s;
}

AliasReport check_alias_free(const DelaySchedule& schedule, double signal_duration) {
  if (!(signal_duration > 0))
    throw std::invalid_argument("check_alias_free: signal_duration must be > 0");
  schedule.validate();

  struct Window {
    std::string label;
    double start;
  };
  std::vector<Window> windows;
  for (int k = 0; k < 4; ++k)
    windows.push_back({"input " + std::to_string(k + 1), schedule.delays[k]});
  if (schedule.echo_coeff > 0.0) {
    for (int k = 1; k < 4; ++k)
      for (int e = 1; e <= schedule.n_echoes; ++e)
        windows.push_back({"echo " + std::to_string(e) + " of input " + std::to_string(k + 1),
                           (2.0 * e + 1.0) * schedule.delays[k]});
  }

  AliasReport report;
  for (std::size_t a = 0; a < windows.size(); ++a) {
    for (std::size_t b = a + 1; b < windows.size(); ++b) {
      const double lo = std::max(windows[a].start, windows[b].start);
      const double hi =
          std::min(windows[a].start + signal_duration, windows[b].start + signal_duration);
      if (hi > lo)
        report.overlapping_pairs.push_back({windows[a].label, windows[b].label, hi - lo});
    }
  }
  report.alias_free = report.overlapping_pairs.empty();
  return report;
}

CombinedRecord mux(const CompositeSignals& composites, const DelaySchedule& schedule) {
  if (composites.groups != 4)
    throw std::invalid_argument("mux: expected exactly 4 composite signals, got " +
                                std::to_string(composites.groups));
  schedule.validate();

  const double fs = composites.sample_rate;
  const auto off = schedule.offsets(fs);
  const std::int64_t n = composites.samples;

  std::int64_t length = off[3] + n;
  if (schedule.echo_coeff > 0.0)
    length = std::max<std::int64_t>(length, (2 * std::int64_t{schedule.n_echoes} + 1) * off[3] + n);

  CombinedRecord record;
  record.sample_rate = fs;
  record.source_group_size = composites.group_size;
  record.data.assign(static_cast<std::size_t>(length), 0.0);

  for (int k = 0; k < 4; ++k) {
    const double* src = composites.row(k);
    double* dst = record.data.data() + off[k];
    for (std::int64_t t = 0; t < n; ++t) dst[t] += schedule.gains[k] * src[t];
  }
  if (schedule.echo_coeff > 0.0) {
    for (int k = 1; k < 4; ++k) {
      const double* src = composites.row(k);
      double echo_gain = schedule.gains[k];
      for (int e = 1; e <= schedule.n_echoes; ++e) {
        echo_gain *= schedule.echo_coeff;
        double* dst = record.data.data() + (2 * std::int64_t{e} + 1) * off[k];
        for (std::int64_t t = 0; t < n; ++t) dst[t] += echo_gain * src[t];
      }
    }
  }

  DelaySchedule used = schedule;
  for (int k = 0; k < 4; ++k)
    used.quantization_residual[k] = schedule.delays[k] - static_cast<double>(off[k]) / fs;
  record.schedule = used;
  return record;
}

}  // namespace pactsc
