#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <vector>

namespace papr {

/// Signed frequency of subcarrier k: k for the lower half, k - N for the upper half.
constexpr long signed_frequency(std::size_t k, std::size_t n) noexcept
{
    return k < n - n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

/// Position of subcarrier k in the zero-padded length L*N spectrum.
constexpr std::size_t padded_bin(std::size_t k, std::size_t n, std::size_t l) noexcept
{
    return k < n / 2 ? k : k + (l - 1) * n;
}

/// s[n] = 1/sqrt(N) * sum_k S(k) exp(j 2 pi f_k n / (L N)), realized by inserting
/// (L-1) N zeros at the centre of the spectrum.
/// Requires N >= 2 and N, L powers of two; throws std::invalid_argument otherwise.
TimeSignal idft(const FreqSymbols& freq, std::size_t oversampling = 1);

/// Exact inverse of idft at the signal's own oversampling factor (occupied bins only).
FreqSymbols dft(const TimeSignal& signal);

/// All L*N bins of the signal, scaled so that the occupied bins equal dft(signal).
std::vector<Complex> full_spectrum(const TimeSignal& signal);

/// Inverse of full_spectrum.
TimeSignal synthesize(std::vector<Complex> spectrum, std::size_t n_subcarriers, std::size_t oversampling);

/// Gray-mapped QPSK: bit pair (b0, b1) -> ((b0 ? -1 : 1) + j (b1 ? -1 : 1)) / sqrt(2).
FreqSymbols qpsk_map(const Bits& bits);
/// Hard decision by quadrant; ignores magnitude.
Bits qpsk_demap(const FreqSymbols& symbols);

/// max |s|^2 / mean |s|^2 over the samples of one symbol.
/// Throws std::domain_error for an all-zero signal.
PaprReport papr(const TimeSignal& signal, Technique technique = Technique::none);

/// a is below b by more than rounding noise. Selection loops use it so candidates with
/// mathematically equal PAPR tie and the smallest index wins.
constexpr bool clearly_less(double a, double b) noexcept { return a < b - 1e-12 * b; }

double to_db(double linear);
double from_db(double db);

}  // namespace papr
