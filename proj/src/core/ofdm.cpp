#include "papr/ofdm.hpp"

#include "papr/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace papr {

double FreqSymbols::energy() const noexcept
{
    double e = 0.0;
    for (const auto& v : values) e += std::norm(v);
    return e;
}

TimeSignal::TimeSignal(std::vector<Complex> samples, std::size_t oversampling)
    : samples_(std::move(samples)), oversampling_(oversampling)
{
    if (oversampling_ == 0) throw std::invalid_argument("oversampling factor must be at least 1");
    if (samples_.size() % oversampling_ != 0)
        throw std::invalid_argument("sample count " + std::to_string(samples_.size()) +
                                    " is not a multiple of the oversampling factor");
}

double TimeSignal::energy() const noexcept
{
    double e = 0.0;
    for (const auto& s : samples_) e += std::norm(s);
    return e / static_cast<double>(oversampling_);
}

double TimeSignal::mean_power() const noexcept
{
    if (samples_.empty()) return 0.0;
    return energy() * static_cast<double>(oversampling_) / static_cast<double>(samples_.size());
}

double TimeSignal::peak_power() const noexcept
{
    double p = 0.0;
    for (const auto& s : samples_) p = std::max(p, std::norm(s));
    return p;
}

double TimeSignal::peak_amplitude() const noexcept { return std::sqrt(peak_power()); }

std::string_view to_string(Technique t) noexcept
{
    switch (t) {
    case Technique::none: return "none";
    case Technique::clipping: return "clipping";
    case Technique::slm: return "slm";
    case Technique::pts: return "pts";
    case Technique::tr: return "tr";
    case Technique::sap: return "sap";
    case Technique::ops: return "ops";
    }
    return "unknown";
}

namespace {

void check_dimensions(std::size_t n, std::size_t l)
{
    if (n < 2 || !is_power_of_two(n))
        throw std::invalid_argument("subcarrier count must be a power of two >= 2, got " + std::to_string(n));
    if (l == 0 || !is_power_of_two(l))
        throw std::invalid_argument("oversampling factor must be a power of two >= 1, got " + std::to_string(l));
}

}  // namespace

TimeSignal synthesize(std::vector<Complex> spectrum, std::size_t n_subcarriers, std::size_t oversampling)
{
    check_dimensions(n_subcarriers, oversampling);
    if (spectrum.size() != n_subcarriers * oversampling)
        throw std::invalid_argument("spectrum length must equal L*N");
    cached_plan(spectrum.size()).inverse(spectrum);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_subcarriers));
    for (auto& s : spectrum) s *= scale;
    return TimeSignal{std::move(spectrum), oversampling};
}

TimeSignal idft(const FreqSymbols& freq, std::size_t oversampling)
{
    const std::size_t n = freq.size();
    check_dimensions(n, oversampling);
    std::vector<Complex> padded(n * oversampling);
    for (std::size_t k = 0; k < n; ++k) padded[padded_bin(k, n, oversampling)] = freq[k];
    return synthesize(std::move(padded), n, oversampling);
}

std::vector<Complex> full_spectrum(const TimeSignal& signal)
{
    const std::size_t n = signal.n_subcarriers();
    const std::size_t l = signal.oversampling();
    check_dimensions(n, l);
    std::vector<Complex> spectrum = signal.samples();
    cached_plan(spectrum.size()).forward(spectrum);
    const double scale = std::sqrt(static_cast<double>(n)) / static_cast<double>(spectrum.size());
    for (auto& v : spectrum) v *= scale;
    return spectrum;
}

FreqSymbols dft(const TimeSignal& signal)
{
    const std::size_t n = signal.n_subcarriers();
    const std::size_t l = signal.oversampling();
    const auto spectrum = full_spectrum(signal);
    FreqSymbols freq(n);
    for (std::size_t k = 0; k < n; ++k) freq[k] = spectrum[padded_bin(k, n, l)];
    return freq;
}

FreqSymbols qpsk_map(const Bits& bits)
{
    if (bits.size() % 2 != 0)
        throw std::invalid_argument("QPSK mapping needs an even bit count, got " + std::to_string(bits.size()));
    const double a = 1.0 / std::numbers::sqrt2;
    FreqSymbols out(bits.size() / 2);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double i = bits[2 * k] ? -a : a;
        const double q = bits[2 * k + 1] ? -a : a;
        out[k] = {i, q};
    }
    return out;
}

Bits qpsk_demap(const FreqSymbols& symbols)
{
    Bits bits(2 * symbols.size());
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        bits[2 * k] = symbols[k].real() < 0.0 ? 1 : 0;
        bits[2 * k + 1] = symbols[k].imag() < 0.0 ? 1 : 0;
    }
    return bits;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

PaprReport papr(const TimeSignal& signal, Technique technique)
{
    const double mean = signal.mean_power();
    if (!(mean > 0.0)) throw std::domain_error("PAPR is undefined for an all-zero signal");
    PaprReport r;
    r.papr_linear = signal.peak_power() / mean;
    r.papr_db = to_db(r.papr_linear);
    r.technique = technique;
    return r;
}

}  // namespace papr
