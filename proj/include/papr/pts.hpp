#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace papr {

enum class PartitionScheme { adjacent, interleaved, pseudorandom };

/// Disjoint cover of the N subcarriers by V nonempty subblocks.
struct Partition {
    std::vector<std::size_t> assignment;  // subblock of each subcarrier
    PartitionScheme scheme = PartitionScheme::adjacent;
    std::size_t v_count = 1;
};

/// Adjacent and interleaved schemes require V to divide N. The seed is used only by
/// the pseudorandom scheme.
Partition make_partition(std::size_t n_subcarriers, std::size_t v_count, PartitionScheme scheme,
                         std::uint64_t seed = 0);

/// Phase factor b_v = exp(j 2 pi index_v / W); index_0 is always 0.
struct PhaseFactors {
    std::vector<unsigned> index;
    unsigned alphabet_size = 2;

    std::vector<Complex> values() const;
};

/// exp(j 2 pi i / W), exact for W in {1, 2, 4}.
Complex root_of_unity(unsigned i, unsigned w);

/// idft of each subblock of `freq` with every other subcarrier zeroed.
std::vector<TimeSignal> partial_sequences(const FreqSymbols& freq, const Partition& part, std::size_t oversampling);

/// sum_v b_v s^v
TimeSignal pts_combine(std::span<const TimeSignal> subsignals, const PhaseFactors& factors);

struct PtsResult {
    TimeSignal signal;
    PhaseFactors factors;
    PaprReport report;  // aux holds PtsInfo
};

/// Full search over the W^(V-1) factor vectors with b_0 = 1; ties go to the
/// lexicographically smallest index vector. Throws std::invalid_argument when V exceeds
/// max_v.
PtsResult pts_exhaustive(const FreqSymbols& freq, const Partition& part, unsigned w, std::size_t oversampling,
                         std::size_t max_v = 8);

/// Greedy single pass: starting from all ones, each b_v (v >= 1) in turn takes the
/// alphabet value giving the lowest PAPR with the others held fixed.
PtsResult pts_iterative(const FreqSymbols& freq, const Partition& part, unsigned w, std::size_t oversampling);

/// Divides every subcarrier by its subblock's factor.
FreqSymbols pts_recover(const FreqSymbols& received, const Partition& part, const PhaseFactors& factors);

}  // namespace papr
