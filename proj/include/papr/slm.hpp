#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace papr {

enum class PhaseAlphabet {
    binary,      // {+1, -1}
    quadrature,  // {(+-1 +- j) / sqrt(2)}
    random_phase // exp(j theta), theta uniform on [0, 2 pi)
};

/// U candidate phase sequences; sequence 0 is all ones so the original symbol is
/// always a candidate. Banks drawn with the same seed are nested: the first U
/// sequences of a larger bank equal the smaller bank.
struct PhaseSequenceBank {
    std::vector<std::vector<Complex>> sequences;

    std::size_t u_count() const noexcept { return sequences.size(); }
    std::size_t n_subcarriers() const noexcept { return sequences.empty() ? 0 : sequences.front().size(); }
};

PhaseSequenceBank generate_bank(std::size_t u_count, std::size_t n_subcarriers, PhaseAlphabet alphabet,
                                std::uint64_t seed);

struct SlmResult {
    TimeSignal signal;
    std::size_t chosen_u = 0;
    PaprReport report;  // aux holds SlmInfo
};

/// Lowest-PAPR candidate idft(S * B_u, L); ties go to the smallest u.
SlmResult slm_select(const FreqSymbols& freq, const PhaseSequenceBank& bank, std::size_t oversampling);

/// Divides out sequence `chosen_u`.
FreqSymbols slm_recover(const FreqSymbols& received, const PhaseSequenceBank& bank, std::size_t chosen_u);

}  // namespace papr
