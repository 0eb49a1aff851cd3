#include "papr/ops.hpp"

#include "papr/fft.hpp"
#include "papr/ofdm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace papr {

bool PilotGrid::contains(std::size_t k) const { return std::binary_search(positions.begin(), positions.end(), k); }

PilotGrid equispaced_pilots(std::size_t n_subcarriers, std::size_t n_pilots)
{
    if (n_pilots < 1 || n_pilots > n_subcarriers || n_subcarriers % n_pilots != 0)
        throw std::invalid_argument("pilot count " + std::to_string(n_pilots) + " must divide N = " +
                                    std::to_string(n_subcarriers));
    PilotGrid grid;
    const std::size_t spacing = n_subcarriers / n_pilots;
    for (std::size_t i = 0; i < n_pilots; ++i) grid.positions.push_back(i * spacing);
    return grid;
}

std::vector<std::vector<int>> hadamard_matrix(std::size_t order)
{
    if (!is_power_of_two(order)) throw std::invalid_argument("Hadamard order must be a power of two");
    std::vector<std::vector<int>> h{{1}};
    while (h.size() < order) {
        const std::size_t size = h.size();
        std::vector<std::vector<int>> next(2 * size, std::vector<int>(2 * size));
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) {
                next[r][c] = h[r][c];
                next[r][c + size] = h[r][c];
                next[r + size][c] = h[r][c];
                next[r + size][c + size] = -h[r][c];
            }
        }
        h = std::move(next);
    }
    return h;
}

PilotSequenceSet hadamard_set(std::size_t n_subcarriers, const PilotGrid& grid, std::size_t m_count)
{
    const std::size_t np = grid.n_pilots();
    if (!is_power_of_two(np)) throw std::invalid_argument("pilot count must be a power of two, got " + std::to_string(np));
    if (m_count < 1 || m_count > np)
        throw std::invalid_argument("sequence count M = " + std::to_string(m_count) + " must lie in [1, N_p = " +
                                    std::to_string(np) + "]");
    for (std::size_t k : grid.positions)
        if (k >= n_subcarriers) throw std::invalid_argument("pilot position outside the symbol");

    auto h = hadamard_matrix(np);
    h.resize(m_count);
    return PilotSequenceSet{n_subcarriers, grid, std::move(h)};
}

FreqSymbols PilotSequenceSet::sequence(std::size_t m) const
{
    FreqSymbols p(n_subcarriers);
    for (std::size_t i = 0; i < grid.positions.size(); ++i) p[grid.positions[i]] = static_cast<double>(signs.at(m)[i]);
    return p;
}

std::vector<std::vector<long>> gram_matrix(const PilotSequenceSet& set)
{
    const std::size_t m = set.m_count();
    std::vector<std::vector<long>> g(m, std::vector<long>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t i = 0; i < set.grid.n_pilots(); ++i) g[a][b] += set.signs[a][i] * set.signs[b][i];
    return g;
}

PilotWaveforms::PilotWaveforms(const PilotSequenceSet& set, std::size_t oversampling)
    : set_(set), oversampling_(oversampling)
{
    waveforms_.reserve(set.m_count());
    for (std::size_t m = 0; m < set.m_count(); ++m) waveforms_.push_back(idft(set.sequence(m), oversampling));
}

FreqSymbols clear_pilots(FreqSymbols data, const PilotGrid& grid)
{
    for (std::size_t k : grid.positions)
        if (k < data.size()) data[k] = 0.0;
    return data;
}

FreqSymbols insert_pilots(const FreqSymbols& data, const PilotSequenceSet& set, std::size_t m)
{
    if (data.size() != set.n_subcarriers) throw std::invalid_argument("pilot set length does not match symbol");
    FreqSymbols out = data;
    for (std::size_t i = 0; i < set.grid.n_pilots(); ++i)
        out[set.grid.positions[i]] += static_cast<double>(set.signs.at(m)[i]);
    return out;
}

OpsResult ops_select(const FreqSymbols& data, const PilotWaveforms& pilots)
{
    const PilotSequenceSet& set = pilots.set();
    if (data.size() != set.n_subcarriers) throw std::invalid_argument("pilot set length does not match symbol");
    for (std::size_t k : set.grid.positions)
        if (data[k] != Complex{}) throw std::invalid_argument("data symbol is nonzero on pilot position " + std::to_string(k));

    const TimeSignal x = idft(data, pilots.oversampling());
    const std::size_t len = x.size();
    std::vector<Complex> candidate(len);
    std::size_t best_m = 0;
    double best = 0.0;
    for (std::size_t m = 0; m < set.m_count(); ++m) {
        const auto& p = pilots[m].samples();
        double peak = 0.0;
        double sum = 0.0;
        for (std::size_t n = 0; n < len; ++n) {
            const double pw = std::norm(x[n] + p[n]);
            peak = std::max(peak, pw);
            sum += pw;
        }
        const double value = peak * static_cast<double>(len) / sum;
        if (m == 0 || clearly_less(value, best)) {
            best = value;
            best_m = m;
        }
    }

    const auto& p = pilots[best_m].samples();
    for (std::size_t n = 0; n < len; ++n) candidate[n] = x[n] + p[n];
    TimeSignal signal{std::move(candidate), pilots.oversampling()};
    PaprReport report = papr(signal, Technique::ops);
    report.aux = OpsInfo{best_m, set.m_count()};
    return {std::move(signal), best_m, std::move(report)};
}

OpsResult ops_select(const FreqSymbols& data, const PilotSequenceSet& set, std::size_t oversampling)
{
    return ops_select(data, PilotWaveforms{set, oversampling});
}

std::size_t ops_blind_detect(const FreqSymbols& received, const PilotSequenceSet& set)
{
    if (received.size() != set.n_subcarriers) throw std::invalid_argument("pilot set length does not match symbol");
    std::size_t best_m = 0;
    double best = 0.0;
    for (std::size_t m = 0; m < set.m_count(); ++m) {
        double corr = 0.0;
        for (std::size_t i = 0; i < set.grid.n_pilots(); ++i)
            corr += received[set.grid.positions[i]].real() * set.signs[m][i];
        if (m == 0 || corr > best) {
            best = corr;
            best_m = m;
        }
    }
    return best_m;
}

}  // namespace papr
