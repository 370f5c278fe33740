#pragma once

#include <cstdint>
#include <span>

#include "pactsc/signal.hpp"

namespace pactsc {

// Analog adder bank: channels [g*group_size, (g+1)*group_size) sum into
// composite g, in ascending channel order. gains is either empty
// (unit gain) or one entry per channel.
CompositeSignals superimpose(const MultiChannelSignal& signals, int group_size,
                             std::span<const double> gains = {});

// Adds white Gaussian noise at the requested SNR relative to the input
// RMS. snr_db = +infinity returns the input unchanged; all-zero input
// with finite snr_db is rejected. Deterministic per seed.
std::vector<double> add_noise(std::span<const double> data, double snr_db, std::uint64_t seed);
MultiChannelSignal add_noise(const MultiChannelSignal& signals, double snr_db, std::uint64_t seed);
CompositeSignals add_noise(const CompositeSignals& signals, double snr_db, std::uint64_t seed);

}  // namespace pactsc
