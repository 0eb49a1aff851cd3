#include "papr/pts.hpp"

#include "papr/ofdm.hpp"
#include "papr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace papr {

Complex root_of_unity(unsigned i, unsigned w)
{
    if (w == 0) throw std::invalid_argument("phase alphabet size must be positive");
    i %= w;
    if (w == 1 || i == 0) return {1.0, 0.0};
    if (w == 2) return {-1.0, 0.0};
    if (w == 4) {
        static constexpr Complex quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        return quarter[i];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(w));
}

std::vector<Complex> PhaseFactors::values() const
{
    std::vector<Complex> b(index.size());
    for (std::size_t v = 0; v < index.size(); ++v) b[v] = root_of_unity(index[v], alphabet_size);
    return b;
}

Partition make_partition(std::size_t n_subcarriers, std::size_t v_count, PartitionScheme scheme, std::uint64_t seed)
{
    if (v_count < 1) throw std::invalid_argument("PTS needs at least one subblock");
    if (v_count > n_subcarriers)
        throw std::invalid_argument("PTS subblock count " + std::to_string(v_count) + " exceeds N = " +
                                    std::to_string(n_subcarriers));
    if (scheme != PartitionScheme::pseudorandom && n_subcarriers % v_count != 0)
        throw std::invalid_argument("structured PTS partitions need V to divide N");

    Partition part;
    part.scheme = scheme;
    part.v_count = v_count;
    part.assignment.resize(n_subcarriers);
    const std::size_t block = n_subcarriers / v_count;

    switch (scheme) {
    case PartitionScheme::adjacent:
        for (std::size_t k = 0; k < n_subcarriers; ++k) part.assignment[k] = k / block;
        break;
    case PartitionScheme::interleaved:
        for (std::size_t k = 0; k < n_subcarriers; ++k) part.assignment[k] = k % v_count;
        break;
    case PartitionScheme::pseudorandom: {
        Rng rng{stream_seed(seed, 0, 0x7075)};
        constexpr int max_draws = 1000;
        for (int draw = 0;; ++draw) {
            std::vector<std::size_t> used(v_count, 0);
            if (draw < max_draws) {
                for (auto& a : part.assignment) ++used[a = uniform_index(rng, v_count)];
            } else {
                // Near V = N a uniform draw almost never covers every block; seed one
                // subcarrier per block from a shuffle and draw the rest.
                std::vector<std::size_t> order(n_subcarriers);
                std::iota(order.begin(), order.end(), std::size_t{0});
                for (std::size_t i = n_subcarriers - 1; i > 0; --i) std::swap(order[i], order[uniform_index(rng, i + 1)]);
                for (std::size_t i = 0; i < n_subcarriers; ++i)
                    ++used[part.assignment[order[i]] = i < v_count ? i : uniform_index(rng, v_count)];
            }
            if (std::find(used.begin(), used.end(), 0) == used.end()) break;
        }
        break;
    }
    }
    return part;
}

std::vector<TimeSignal> partial_sequences(const FreqSymbols& freq, const Partition& part, std::size_t oversampling)
{
    if (part.assignment.size() != freq.size()) throw std::invalid_argument("partition length does not match symbol");
    std::vector<TimeSignal> subsignals;
    subsignals.reserve(part.v_count);
    for (std::size_t v = 0; v < part.v_count; ++v) {
        FreqSymbols masked(freq.size());
        for (std::size_t k = 0; k < freq.size(); ++k)
            if (part.assignment[k] == v) masked[k] = freq[k];
        subsignals.push_back(idft(masked, oversampling));
    }
    return subsignals;
}

namespace {

void combine_into(std::span<const TimeSignal> subsignals, std::span<const Complex> b, std::vector<Complex>& out)
{
    const std::size_t len = subsignals.front().size();
    out.assign(len, Complex{});
    for (std::size_t v = 0; v < subsignals.size(); ++v) {
        const auto& s = subsignals[v].samples();
        for (std::size_t n = 0; n < len; ++n) out[n] += b[v] * s[n];
    }
}

double papr_of(const std::vector<Complex>& samples)
{
    double peak = 0.0;
    double sum = 0.0;
    for (const auto& s : samples) {
        const double p = std::norm(s);
        peak = std::max(peak, p);
        sum += p;
    }
    return peak * static_cast<double>(samples.size()) / sum;
}

void check_alphabet(unsigned w)
{
    if (w != 2 && w != 4) throw std::invalid_argument("PTS phase alphabet must be W = 2 or W = 4");
}

PtsResult finish(std::span<const TimeSignal> subsignals, PhaseFactors factors, std::size_t candidates)
{
    TimeSignal signal = pts_combine(subsignals, factors);
    PaprReport report = papr(signal, Technique::pts);
    report.aux = PtsInfo{factors.index, candidates};
    return {std::move(signal), std::move(factors), std::move(report)};
}

}  // namespace

TimeSignal pts_combine(std::span<const TimeSignal> subsignals, const PhaseFactors& factors)
{
    if (subsignals.empty()) throw std::invalid_argument("PTS needs at least one partial sequence");
    if (factors.index.size() != subsignals.size()) throw std::invalid_argument("one phase factor per subblock required");
    for (const auto& s : subsignals)
        if (s.size() != subsignals.front().size() || s.oversampling() != subsignals.front().oversampling())
            throw std::invalid_argument("partial sequences differ in length");
    std::vector<Complex> out;
    const auto b = factors.values();
    combine_into(subsignals, b, out);
    return TimeSignal{std::move(out), subsignals.front().oversampling()};
}

PtsResult pts_exhaustive(const FreqSymbols& freq, const Partition& part, unsigned w, std::size_t oversampling,
                         std::size_t max_v)
{
    check_alphabet(w);
    if (part.v_count > max_v)
        throw std::invalid_argument("exhaustive PTS limited to V <= " + std::to_string(max_v) + ", got " +
                                    std::to_string(part.v_count));
    const auto subsignals = partial_sequences(freq, part, oversampling);
    const std::size_t v_count = part.v_count;

    std::vector<unsigned> index(v_count, 0);
    std::vector<unsigned> best_index = index;
    std::vector<Complex> b(v_count, Complex{1.0, 0.0});
    std::vector<Complex> combined;
    double best = 0.0;
    std::size_t candidates = 0;

    // Odometer over index[1..V-1], last position fastest: lexicographic order.
    for (;;) {
        for (std::size_t v = 0; v < v_count; ++v) b[v] = root_of_unity(index[v], w);
        combine_into(subsignals, b, combined);
        const double value = papr_of(combined);
        if (candidates == 0 || clearly_less(value, best)) {
            best = value;
            best_index = index;
        }
        ++candidates;

        bool wrapped = true;
        for (std::size_t pos = v_count; pos > 1;) {
            --pos;
            if (++index[pos] < w) {
                wrapped = false;
                break;
            }
            index[pos] = 0;
        }
        if (wrapped) break;
    }

    return finish(subsignals, PhaseFactors{best_index, w}, candidates);
}

PtsResult pts_iterative(const FreqSymbols& freq, const Partition& part, unsigned w, std::size_t oversampling)
{
    check_alphabet(w);
    const auto subsignals = partial_sequences(freq, part, oversampling);
    const std::size_t v_count = part.v_count;

    std::vector<unsigned> index(v_count, 0);
    std::vector<Complex> b(v_count, Complex{1.0, 0.0});
    std::vector<Complex> combined;
    combine_into(subsignals, b, combined);
    double best = papr_of(combined);
    std::size_t candidates = 1;

    for (std::size_t v = 1; v < v_count; ++v) {
        unsigned keep = index[v];
        for (unsigned i = 1; i < w; ++i) {
            b[v] = root_of_unity(i, w);
            combine_into(subsignals, b, combined);
            const double value = papr_of(combined);
            ++candidates;
            if (clearly_less(value, best)) {
                best = value;
                keep = i;
            }
        }
        index[v] = keep;
        b[v] = root_of_unity(keep, w);
    }

    return finish(subsignals, PhaseFactors{index, w}, candidates);
}

FreqSymbols pts_recover(const FreqSymbols& received, const Partition& part, const PhaseFactors& factors)
{
    if (part.assignment.size() != received.size()) throw std::invalid_argument("partition length does not match symbol");
    if (factors.index.size() != part.v_count) throw std::invalid_argument("one phase factor per subblock required");
    const auto b = factors.values();
    FreqSymbols out(received.size());
    for (std::size_t k = 0; k < received.size(); ++k) out[k] = received[k] / b[part.assignment[k]];
    return out;
}

}  // namespace papr
