#include "papr/slm.hpp"

#include "papr/ofdm.hpp"
#include "papr/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace papr {

PhaseSequenceBank generate_bank(std::size_t u_count, std::size_t n_subcarriers, PhaseAlphabet alphabet,
                                std::uint64_t seed)
{
    if (u_count < 1) throw std::invalid_argument("SLM needs at least one phase sequence");
    if (n_subcarriers < 1) throw std::invalid_argument("SLM needs at least one subcarrier");

    Rng rng{stream_seed(seed, 0, 0x51)};
    const double a = 1.0 / std::numbers::sqrt2;
    PhaseSequenceBank bank;
    bank.sequences.assign(u_count, std::vector<Complex>(n_subcarriers, Complex{1.0, 0.0}));
    // One raw word per entry keeps smaller banks a prefix of larger ones.
    for (std::size_t u = 1; u < u_count; ++u) {
        for (auto& b : bank.sequences[u]) {
            const std::uint64_t word = rng();
            switch (alphabet) {
            case PhaseAlphabet::binary: b = (word >> 63) ? -1.0 : 1.0; break;
            case PhaseAlphabet::quadrature:
                b = {(word >> 63) ? -a : a, ((word >> 62) & 1U) ? -a : a};
                break;
            case PhaseAlphabet::random_phase:
                b = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(word >> 11) * 0x1.0p-53);
                break;
            }
        }
    }
    return bank;
}

SlmResult slm_select(const FreqSymbols& freq, const PhaseSequenceBank& bank, std::size_t oversampling)
{
    if (bank.n_subcarriers() != freq.size())
        throw std::invalid_argument("SLM bank length " + std::to_string(bank.n_subcarriers()) +
                                    " does not match symbol length " + std::to_string(freq.size()));

    SlmResult best;
    for (std::size_t u = 0; u < bank.u_count(); ++u) {
        FreqSymbols rotated(freq.size());
        for (std::size_t k = 0; k < freq.size(); ++k) rotated[k] = freq[k] * bank.sequences[u][k];
        TimeSignal candidate = idft(rotated, oversampling);
        PaprReport report = papr(candidate, Technique::slm);
        if (u == 0 || clearly_less(report.papr_linear, best.report.papr_linear)) {
            best.signal = std::move(candidate);
            best.chosen_u = u;
            best.report = report;
        }
    }
    best.report.aux = SlmInfo{best.chosen_u, bank.u_count()};
    return best;
}

FreqSymbols slm_recover(const FreqSymbols& received, const PhaseSequenceBank& bank, std::size_t chosen_u)
{
    if (chosen_u >= bank.u_count())
        throw std::out_of_range("SLM index " + std::to_string(chosen_u) + " outside bank of " +
                                std::to_string(bank.u_count()));
    if (bank.n_subcarriers() != received.size()) throw std::invalid_argument("SLM bank length mismatch");
    FreqSymbols out(received.size());
    for (std::size_t k = 0; k < received.size(); ++k) out[k] = received[k] / bank.sequences[chosen_u][k];
    return out;
}

}  // namespace papr
