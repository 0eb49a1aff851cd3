#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace papr {

using Complex = std::complex<double>;
using Bits = std::vector<std::uint8_t>;

/// Frequency-domain content of one OFDM symbol, one value per subcarrier.
/// Subcarrier k < N/2 is the positive-frequency half, k >= N/2 the negative half.
struct FreqSymbols {
    std::vector<Complex> values;

    FreqSymbols() = default;
    explicit FreqSymbols(std::size_t n) : values(n) {}
    explicit FreqSymbols(std::vector<Complex> v) : values(std::move(v)) {}

    std::size_t size() const noexcept { return values.size(); }
    Complex& operator[](std::size_t k) { return values[k]; }
    const Complex& operator[](std::size_t k) const { return values[k]; }

    double energy() const noexcept;
};

/// Time-domain samples of one OFDM symbol at L times the Nyquist rate.
/// Samples are scaled by 1/sqrt(N) so the mean sample power does not depend on L.
class TimeSignal {
public:
    TimeSignal() = default;
    /// Throws std::invalid_argument if L is zero or does not divide the sample count.
    TimeSignal(std::vector<Complex> samples, std::size_t oversampling);

    const std::vector<Complex>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    std::size_t oversampling() const noexcept { return oversampling_; }
    std::size_t n_subcarriers() const noexcept { return samples_.size() / oversampling_; }
    const Complex& operator[](std::size_t n) const { return samples_[n]; }

    /// Sum of |s[n]|^2 divided by L, equal to the energy of the generating spectrum.
    double energy() const noexcept;
    double mean_power() const noexcept;
    double peak_power() const noexcept;
    double peak_amplitude() const noexcept;

private:
    std::vector<Complex> samples_;
    std::size_t oversampling_ = 1;
};

enum class Technique { none, clipping, slm, pts, tr, sap, ops };

std::string_view to_string(Technique t) noexcept;

struct ClipInfo {
    double level = 0.0;
    std::vector<double> max_amplitude;  // initial, then after each clip+filter pass
};

struct SlmInfo {
    std::size_t chosen_u = 0;
    std::size_t candidates = 0;
};

struct PtsInfo {
    std::vector<unsigned> phase_index;  // b_v = exp(j*2*pi*index/W)
    std::size_t candidates = 0;
};

struct TrInfo {
    std::size_t iterations = 0;
    bool fell_back = false;
};

struct SapInfo {
    std::vector<std::size_t> scaled;
    double energy_increase = 0.0;
};

struct OpsInfo {
    std::size_t chosen_m = 0;
    std::size_t candidates = 0;
};

using TechniqueInfo = std::variant<std::monostate, ClipInfo, SlmInfo, PtsInfo, TrInfo, SapInfo, OpsInfo>;

struct PaprReport {
    double papr_linear = 1.0;
    double papr_db = 0.0;
    Technique technique = Technique::none;
    TechniqueInfo aux;
};

}  // namespace papr
