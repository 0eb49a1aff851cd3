#include "papr/ccdf.hpp"

#include "papr/ofdm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace papr {

std::vector<double> make_grid(double start_db, double stop_db, double step_db)
{
    if (!(step_db > 0.0) || !(stop_db >= start_db))
        throw std::invalid_argument("grid needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    std::vector<double> grid(count);
    // Rounding to 1e-9 dB puts each point on the double nearest its decimal value.
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = std::round((start_db + static_cast<double>(i) * step_db) * 1e9) / 1e9;
    return grid;
}

std::vector<double> default_grid() { return make_grid(4.0, 13.0, 0.1); }

CcdfCurve ccdf_estimate(std::span<const double> papr_db, std::span<const double> thresholds_db)
{
    if (papr_db.empty()) throw std::invalid_argument("CCDF needs at least one PAPR value");
    if (thresholds_db.empty()) throw std::invalid_argument("CCDF needs at least one threshold");
    for (std::size_t i = 1; i < thresholds_db.size(); ++i)
        if (!(thresholds_db[i] > thresholds_db[i - 1]))
            throw std::invalid_argument("CCDF thresholds must be strictly increasing");

    std::vector<double> sorted(papr_db.begin(), papr_db.end());
    std::sort(sorted.begin(), sorted.end());

    CcdfCurve curve;
    curve.n_symbols = sorted.size();
    curve.thresholds_db.assign(thresholds_db.begin(), thresholds_db.end());
    curve.probabilities.reserve(thresholds_db.size());
    const auto total = static_cast<double>(sorted.size());
    for (double t : thresholds_db) {
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
        curve.probabilities.push_back(static_cast<double>(above) / total);
    }
    return curve;
}

double ccdf_analytic(double threshold_db, std::size_t n_subcarriers)
{
    if (n_subcarriers < 2) throw std::invalid_argument("analytic CCDF needs N >= 2");
    const double x = from_db(threshold_db);
    // 1 - (1 - e^-x)^N without cancellation in either tail.
    return -std::expm1(static_cast<double>(n_subcarriers) * std::log1p(-std::exp(-x)));
}

std::optional<double> papr_at_probability(const CcdfCurve& curve, double probability)
{
    const auto& x = curve.thresholds_db;
    const auto& p = curve.probabilities;
    if (x.empty() || !(probability > 0.0) || p.front() < probability) return std::nullopt;

    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == probability) return x[i];
        if (p[i] < probability) {
            // p[i-1] > probability here, i >= 1 because p[0] >= probability.
            const double p0 = p[i - 1];
            const double p1 = p[i];
            double t = 0.0;
            if (p1 > 0.0)
                t = (std::log(probability) - std::log(p0)) / (std::log(p1) - std::log(p0));
            else
                t = (p0 - probability) / p0;
            return x[i - 1] + t * (x[i] - x[i - 1]);
        }
    }
    return std::nullopt;
}

double analytic_papr_at_probability(double probability, std::size_t n_subcarriers)
{
    double lo = -10.0;
    double hi = 30.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ccdf_analytic(mid, n_subcarriers) > probability)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace papr
