#include "papr/sap.hpp"

#include "papr/ofdm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace papr {

std::size_t SapConfig::resolved_l_count(std::size_t n_subcarriers) const
{
    return l_count != 0 ? l_count : std::max<std::size_t>(1, n_subcarriers / 16);
}

void SapConfig::validate(std::size_t n_subcarriers) const
{
    if (!(alpha > 1.0)) throw std::invalid_argument("SAP scaling factor alpha must exceed 1");
    const std::size_t l = resolved_l_count(n_subcarriers);
    if (l < 1 || l > n_subcarriers)
        throw std::invalid_argument("SAP l_count must lie in [1, N], got " + std::to_string(l));
    if (k_cap < 1) throw std::invalid_argument("SAP k_cap must be at least 1");
    if (!std::isfinite(p_exponent) || !std::isfinite(threshold_db))
        throw std::invalid_argument("SAP exponent and threshold must be finite");
}

std::vector<std::size_t> peak_set(const TimeSignal& signal, const SapConfig& cfg)
{
    const auto& s = signal.samples();
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t keep = std::min(cfg.k_cap, s.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<long>(keep), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          const double pa = std::norm(s[a]);
                          const double pb = std::norm(s[b]);
                          return pa > pb || (pa == pb && a < b);
                      });

    const double threshold = signal.mean_power() * from_db(cfg.threshold_db);
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < keep && std::norm(s[order[i]]) > threshold; ++i) peaks.push_back(order[i]);
    if (peaks.empty() && !order.empty()) peaks.push_back(order.front());
    return peaks;
}

MetricVector sap_metric(const FreqSymbols& freq, const TimeSignal& signal, const SapConfig& cfg)
{
    const std::size_t n = freq.size();
    if (n == 0 || signal.size() % n != 0)
        throw std::invalid_argument("SAP metric: signal length is not a multiple of the symbol length");
    const std::size_t len = signal.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    MetricVector out;
    out.mu.assign(n, 0.0);
    out.peak_set = peak_set(signal, cfg);
    for (std::size_t idx : out.peak_set) {
        const Complex sample = signal[idx];
        const double mag = std::abs(sample);
        if (mag == 0.0) continue;
        const double weight = std::pow(mag, cfg.p_exponent);
        for (std::size_t k = 0; k < n; ++k) {
            const long f = signed_frequency(k, n);
            const auto phase_index = (f * static_cast<long>(idx)) % static_cast<long>(len);
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(phase_index) / static_cast<double>(len);
            const Complex contribution = freq[k] * std::polar(scale, theta);
            const double cmag = std::abs(contribution);
            if (cmag == 0.0) continue;
            const double cosine = (sample * std::conj(contribution)).real() / (mag * cmag);
            out.mu[k] -= weight * cosine;
        }
    }
    return out;
}

SapResult sap_predistort(const FreqSymbols& freq, const SapConfig& cfg, std::size_t oversampling)
{
    cfg.validate(freq.size());
    const TimeSignal original = idft(freq, oversampling);
    const MetricVector metric = sap_metric(freq, original, cfg);

    std::vector<std::size_t> order(freq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return metric.mu[a] > metric.mu[b]; });

    SapInfo info;
    const std::size_t l = cfg.resolved_l_count(freq.size());
    for (std::size_t i = 0; i < l && metric.mu[order[i]] > 0.0; ++i) info.scaled.push_back(order[i]);
    std::sort(info.scaled.begin(), info.scaled.end());

    if (info.scaled.empty()) {
        SapResult same{original, freq, papr(original, Technique::sap)};
        same.report.aux = std::move(info);
        return same;
    }

    FreqSymbols modified = freq;
    for (std::size_t k : info.scaled) {
        info.energy_increase += (cfg.alpha * cfg.alpha - 1.0) * std::norm(freq[k]);
        modified[k] *= cfg.alpha;
    }
    TimeSignal signal = idft(modified, oversampling);
    PaprReport report = papr(signal, Technique::sap);
    report.aux = std::move(info);
    return {std::move(signal), std::move(modified), std::move(report)};
}

}  // namespace papr
