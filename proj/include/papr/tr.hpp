#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace papr {

enum class TonePlacement {
    equispaced,  // k = floor(i N / R)
    random,      // seeded sample without replacement
    edge         // R tones around N/2, the band edge
};

/// Subcarriers carrying no data, reserved for the peak-cancelling correction.
struct ReservedToneSet {
    std::vector<std::size_t> indices;  // sorted
    TonePlacement placement = TonePlacement::equispaced;

    bool contains(std::size_t k) const;
};

/// Requires 1 <= R < N.
ReservedToneSet reserve_tones(std::size_t n_subcarriers, std::size_t r_count, TonePlacement placement,
                              std::uint64_t seed = 0);

/// Frequency-domain correction, exactly zero on every data tone.
struct Correction {
    std::vector<Complex> freq_values;
    double per_tone_cap = std::numeric_limits<double>::infinity();
};

struct TrConfig {
    double target_db = 6.0;  // peak target relative to the RMS of the uncorrected symbol
    std::size_t max_iters = 32;
    double cap = std::numeric_limits<double>::infinity();  // per-tone amplitude bound
};

/// Twice the mean amplitude of the data tones.
double default_tone_cap(const FreqSymbols& freq, const ReservedToneSet& tones);

/// Zeroes the reserved tones of a data symbol.
FreqSymbols clear_tones(FreqSymbols freq, const ReservedToneSet& tones);

struct TrResult {
    TimeSignal signal;
    Correction correction;
    PaprReport report;  // aux holds TrInfo
};

/// Clipping-projection: clip the corrected signal at the target, project the clipping
/// residual onto the reserved tones, subtract it from the correction and clamp each
/// tone to the cap. Stops once the peak is under the target or after max_iters
/// updates, and returns the lowest-PAPR iterate (the uncorrected symbol if none
/// improves on it).
/// Throws std::invalid_argument if the data is nonzero on a reserved tone.
TrResult tr_iterative(const FreqSymbols& freq, const ReservedToneSet& tones, std::size_t oversampling,
                      const TrConfig& cfg);

/// max_n max(|Re s[n]|, |Im s[n]|), the box surrogate of the peak amplitude. Lies in
/// [peak / sqrt(2), peak].
double peak_box_norm(const TimeSignal& signal);

struct LpCorrection {
    Correction correction;
    double objective = 0.0;  // peak_box_norm of the corrected signal
};

/// Exact minimiser of peak_box_norm(idft(S + C, L)) over corrections C supported on the
/// reserved tones, solved as a linear program in the real and imaginary parts of C.
/// Desk-scale reference only: throws std::invalid_argument when N > max_n.
LpCorrection tr_lp_oracle(const FreqSymbols& freq, const ReservedToneSet& tones, std::size_t oversampling,
                          std::size_t max_n = 32);

}  // namespace papr
