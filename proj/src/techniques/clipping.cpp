#include "papr/clipping.hpp"

#include "papr/ofdm.hpp"

#include <cmath>
#include <stdexcept>

namespace papr {

void ClipConfig::validate() const
{
    if (iterations < 1) throw std::invalid_argument("clipping needs at least one iteration");
    if (oversampling < 1) throw std::invalid_argument("clipping needs L >= 1");
    if (!std::isfinite(clip_ratio_db)) throw std::invalid_argument("clip ratio must be finite");
}

double clip_level(const TimeSignal& signal, double ratio_db)
{
    return std::sqrt(signal.mean_power()) * std::pow(10.0, ratio_db / 20.0);
}

TimeSignal clip(const TimeSignal& signal, double level)
{
    if (!(level > 0.0)) throw std::invalid_argument("clip level must be positive");
    std::vector<Complex> out = signal.samples();
    for (auto& s : out) {
        const double mag = std::abs(s);
        if (mag <= level) continue;
        double factor = level / mag;
        Complex scaled = s * factor;
        // Rounding can leave |scaled| an ulp above the level; step down so a second pass is a no-op.
        while (std::abs(scaled) > level) {
            factor = std::nextafter(factor, 0.0);
            scaled = s * factor;
        }
        s = scaled;
    }
    return TimeSignal{std::move(out), signal.oversampling()};
}

FilterResult filter_oob(const TimeSignal& signal)
{
    const std::size_t l = signal.oversampling();
    if (l == 1) return {signal, false};

    const std::size_t n = signal.n_subcarriers();
    auto spectrum = full_spectrum(signal);
    // Occupied bins are [0, N/2) and [LN - N/2, LN).
    for (std::size_t m = n / 2; m < spectrum.size() - n / 2; ++m) spectrum[m] = 0.0;
    return {synthesize(std::move(spectrum), n, l), true};
}

ClipResult clip_and_filter(const FreqSymbols& freq, const ClipConfig& cfg)
{
    cfg.validate();
    TimeSignal current = idft(freq, cfg.oversampling);

    ClipInfo info;
    info.level = clip_level(current, cfg.clip_ratio_db);
    info.max_amplitude.push_back(current.peak_amplitude());
    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        current = filter_oob(clip(current, info.level)).signal;
        info.max_amplitude.push_back(current.peak_amplitude());
    }

    ClipResult result{current, papr(current, Technique::clipping)};
    result.report.aux = std::move(info);
    return result;
}

double in_band_evm(const FreqSymbols& reference, const TimeSignal& signal)
{
    const FreqSymbols received = dft(signal);
    if (received.size() != reference.size()) throw std::invalid_argument("EVM size mismatch");
    double err = 0.0;
    for (std::size_t k = 0; k < reference.size(); ++k) err += std::norm(received[k] - reference[k]);
    const double ref = reference.energy();
    if (!(ref > 0.0)) throw std::invalid_argument("EVM reference has no energy");
    return std::sqrt(err / ref);
}

}  // namespace papr
