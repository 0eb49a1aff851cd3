#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace papr {

/// Empirical exceedance probabilities P(PAPR > threshold) on a dB grid.
struct CcdfCurve {
    std::vector<double> thresholds_db;
    std::vector<double> probabilities;
    std::size_t n_symbols = 0;
};

/// Evenly spaced grid from start to stop inclusive.
std::vector<double> make_grid(double start_db, double stop_db, double step_db);
/// 4.0 to 13.0 dB in 0.1 dB steps.
std::vector<double> default_grid();

/// probabilities[i] = #{values > thresholds_db[i]} / #values.
/// Throws std::invalid_argument on empty input or a grid that is not strictly increasing.
CcdfCurve ccdf_estimate(std::span<const double> papr_db, std::span<const double> thresholds_db);

/// 1 - (1 - exp(-x))^N with x the threshold in linear units. Valid for Nyquist-rate sampling.
double ccdf_analytic(double threshold_db, std::size_t n_subcarriers);

/// Threshold at which the curve falls to `probability`, interpolating linearly in
/// log(probability) between neighbouring grid points. Exact when a grid point sits on
/// the probability. Empty when the curve never reaches it inside the grid.
std::optional<double> papr_at_probability(const CcdfCurve& curve, double probability);

/// Same quantity from the analytic curve, by bisection on the threshold.
double analytic_papr_at_probability(double probability, std::size_t n_subcarriers);

}  // namespace papr
