#pragma once

#include <array>
#include <cstdint>

#include "pactsc/delay_line.hpp"
#include "pactsc/signal.hpp"

namespace pactsc {

// Result of separating a combined record back into its four composite
// signals. kept_samples[k] counts how many samples of window k came from
// the record before the window was truncated (at the start of window k+1,
// or at the end of the record) and zero-padding took over.
struct DemuxResult {
  CompositeSignals composites;
  std::array<std::int64_t, 4> kept_samples{0, 0, 0, 0};
};

// Picks the window length used by the standard pipeline: the smallest
// inter-window spacing in samples, capped at samples_per_channel.
std::int64_t default_window_len(const DelaySchedule& schedule, double sample_rate,
                                std::int64_t samples_per_channel);

// Recovers the four composites by window extraction and time-shifting.
// Window k starts at the schedule's k-th offset, runs for window_len
// samples, and is divided by gains[k]; it is cut short where window k+1
// begins or the record ends, and zero-padded back to window_len.
DemuxResult demux(const CombinedRecord& record, std::int64_t window_len);

// Relative L2 error of demux(mux(x)) against x truncated/padded to
// window_len. Returns 0 when both the reference and the recovered signal
// are identically zero.
double roundtrip_error(const CompositeSignals& composites, const DelaySchedule& schedule,
                       std::int64_t window_len);

}  // namespace pactsc
