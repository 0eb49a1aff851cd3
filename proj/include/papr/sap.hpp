#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <vector>

namespace papr {

struct SapConfig {
    double alpha = 1.55;        // scaling factor, > 1
    std::size_t l_count = 0;    // symbols to predistort; 0 selects N/16
    double p_exponent = 2.0;    // weight |s[n]|^p
    double threshold_db = 6.0;  // peak set: |s[n]|^2 above mean power + threshold_db
    std::size_t k_cap = 8;      // at most this many peak samples

    std::size_t resolved_l_count(std::size_t n_subcarriers) const;
    /// Throws std::invalid_argument.
    void validate(std::size_t n_subcarriers) const;
};

struct MetricVector {
    std::vector<double> mu;
    std::vector<std::size_t> peak_set;  // T_K, largest sample first
};

/// Peak set T_K: samples above the threshold, at most k_cap of them, largest first;
/// the single largest sample when none clears the threshold.
std::vector<std::size_t> peak_set(const TimeSignal& signal, const SapConfig& cfg);

/// mu_k = sum over n in T_K of |s[n]|^p * (-cos phi_nk), phi_nk being the angle between
/// s[n] and the contribution S(k) exp(j 2 pi f_k n / (L N)) / sqrt(N) of subcarrier k.
/// Terms with a zero sample or zero contribution are skipped.
MetricVector sap_metric(const FreqSymbols& freq, const TimeSignal& signal, const SapConfig& cfg);

struct SapResult {
    TimeSignal signal;
    FreqSymbols symbols;
    PaprReport report;  // aux holds SapInfo
};

/// Scales by alpha the (at most l_count) symbols with the largest strictly positive
/// metric. Single pass.
SapResult sap_predistort(const FreqSymbols& freq, const SapConfig& cfg, std::size_t oversampling);

}  // namespace papr
