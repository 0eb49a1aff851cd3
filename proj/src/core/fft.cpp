#include "papr/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace papr {

FftPlan::FftPlan(std::size_t n) : n_(n)
{
    if (!is_power_of_two(n)) throw std::invalid_argument("FFT size must be a power of two");

    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        bitrev_[i] = r;
    }

    twiddles_.resize(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i)
        twiddles_[i] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
}

void FftPlan::forward(std::span<Complex> data) const { transform(data, false); }
void FftPlan::inverse(std::span<Complex> data) const { transform(data, true); }

void FftPlan::transform(std::span<Complex> data, bool inverse) const
{
    if (data.size() != n_) throw std::invalid_argument("FFT input length does not match plan");

    for (std::size_t i = 0; i < n_; ++i)
        if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);

    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t j = 0; j < half; ++j) {
                Complex w = twiddles_[j * stride];
                if (inverse) w = std::conj(w);
                const Complex t = w * data[start + j + half];
                data[start + j + half] = data[start + j] - t;
                data[start + j] += t;
            }
        }
    }
}

const FftPlan& cached_plan(std::size_t n)
{
    thread_local std::unordered_map<std::size_t, FftPlan> plans;
    auto it = plans.find(n);
    if (it == plans.end()) it = plans.emplace(n, FftPlan{n}).first;
    return it->second;
}

}  // namespace papr
