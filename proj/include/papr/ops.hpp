#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <vector>

namespace papr {

/// Pilot positions Upsilon; every other subcarrier carries data.
struct PilotGrid {
    std::vector<std::size_t> positions;  // sorted

    std::size_t n_pilots() const noexcept { return positions.size(); }
    bool contains(std::size_t k) const;
};

/// Comb pattern k = i * N / N_p. Requires N_p to divide N.
PilotGrid equispaced_pilots(std::size_t n_subcarriers, std::size_t n_pilots);

/// Sylvester-ordered Walsh-Hadamard matrix with entries +-1. Order must be a power of two.
std::vector<std::vector<int>> hadamard_matrix(std::size_t order);

/// M mutually orthogonal pilot sequences: the first M Hadamard rows placed on the grid,
/// zero elsewhere. Sequences are indexed from 0.
struct PilotSequenceSet {
    std::size_t n_subcarriers = 0;
    PilotGrid grid;
    std::vector<std::vector<int>> signs;  // signs[m][i] is the pilot on grid.positions[i]

    std::size_t m_count() const noexcept { return signs.size(); }
    /// Length-N frequency vector P_m.
    FreqSymbols sequence(std::size_t m) const;
};

/// Requires N_p a power of two and 1 <= M <= N_p.
PilotSequenceSet hadamard_set(std::size_t n_subcarriers, const PilotGrid& grid, std::size_t m_count);

/// Integer Gram matrix <P_m, P_n>.
std::vector<std::vector<long>> gram_matrix(const PilotSequenceSet& set);

/// Precomputed time-domain pilot waveforms p_m = idft(P_m, L).
class PilotWaveforms {
public:
    PilotWaveforms(const PilotSequenceSet& set, std::size_t oversampling);

    const PilotSequenceSet& set() const noexcept { return set_; }
    std::size_t oversampling() const noexcept { return oversampling_; }
    const TimeSignal& operator[](std::size_t m) const { return waveforms_[m]; }

private:
    PilotSequenceSet set_;
    std::size_t oversampling_;
    std::vector<TimeSignal> waveforms_;
};

struct OpsResult {
    TimeSignal signal;
    std::size_t chosen_m = 0;
    PaprReport report;  // aux holds OpsInfo
};

/// Lowest-PAPR candidate x + p_m, with x = idft(X, L) computed once; ties go to the
/// smallest m. Throws std::invalid_argument if the data is nonzero on a pilot position.
OpsResult ops_select(const FreqSymbols& data, const PilotWaveforms& pilots);
OpsResult ops_select(const FreqSymbols& data, const PilotSequenceSet& set, std::size_t oversampling);

/// X + P_m
FreqSymbols insert_pilots(const FreqSymbols& data, const PilotSequenceSet& set, std::size_t m);

/// argmax_m Re <R restricted to the pilots, P_m>; ties go to the smallest m.
std::size_t ops_blind_detect(const FreqSymbols& received, const PilotSequenceSet& set);

/// Zeroes the pilot positions of a data symbol.
FreqSymbols clear_pilots(FreqSymbols data, const PilotGrid& grid);

}  // namespace papr
