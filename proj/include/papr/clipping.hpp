#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <vector>

namespace papr {

struct ClipConfig {
    double clip_ratio_db = 5.0;  // A relative to the RMS amplitude of the unclipped symbol
    std::size_t oversampling = 4;
    std::size_t iterations = 1;

    /// Throws std::invalid_argument.
    void validate() const;
};

/// A = rms(|s|) * 10^(ratio_db / 20).
double clip_level(const TimeSignal& signal, double ratio_db);

/// Envelope limiter: samples above A keep their phase and are scaled to magnitude A.
TimeSignal clip(const TimeSignal& signal, double level);

struct FilterResult {
    TimeSignal signal;
    bool applied = false;  // false at L = 1, where there are no out-of-band bins
};

/// Zeroes every bin outside the N occupied subcarriers.
FilterResult filter_oob(const TimeSignal& signal);

struct ClipResult {
    TimeSignal signal;
    PaprReport report;  // aux holds ClipInfo
};

/// Repeats clip-at-A then filter_oob, starting from idft(freq, L). A is fixed from the
/// initial symbol.
ClipResult clip_and_filter(const FreqSymbols& freq, const ClipConfig& cfg);

/// RMS in-band error of `signal` against `reference`, relative to the reference RMS.
double in_band_evm(const FreqSymbols& reference, const TimeSignal& signal);

}  // namespace papr
