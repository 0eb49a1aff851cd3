#include "papr/tr.hpp"

#include "papr/clipping.hpp"
#include "papr/ofdm.hpp"
#include "papr/rng.hpp"
#include "papr/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace papr {

bool ReservedToneSet::contains(std::size_t k) const
{
    return std::binary_search(indices.begin(), indices.end(), k);
}

ReservedToneSet reserve_tones(std::size_t n_subcarriers, std::size_t r_count, TonePlacement placement,
                              std::uint64_t seed)
{
    if (r_count < 1 || r_count >= n_subcarriers)
        throw std::invalid_argument("reserved tone count must satisfy 1 <= R < N, got R = " + std::to_string(r_count));

    ReservedToneSet set;
    set.placement = placement;
    switch (placement) {
    case TonePlacement::equispaced:
        for (std::size_t i = 0; i < r_count; ++i) set.indices.push_back(i * n_subcarriers / r_count);
        break;
    case TonePlacement::edge: {
        const std::size_t first = n_subcarriers / 2 - r_count / 2;
        for (std::size_t i = 0; i < r_count; ++i) set.indices.push_back(first + i);
        break;
    }
    case TonePlacement::random: {
        Rng rng{stream_seed(seed, 0, 0x7472)};
        std::vector<std::size_t> pool(n_subcarriers);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < r_count; ++i) {
            std::swap(pool[i], pool[i + uniform_index(rng, n_subcarriers - i)]);
            set.indices.push_back(pool[i]);
        }
        break;
    }
    }
    std::sort(set.indices.begin(), set.indices.end());
    return set;
}

double default_tone_cap(const FreqSymbols& freq, const ReservedToneSet& tones)
{
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < freq.size(); ++k) {
        if (tones.contains(k)) continue;
        sum += std::abs(freq[k]);
        ++count;
    }
    return count == 0 ? 0.0 : 2.0 * sum / static_cast<double>(count);
}

FreqSymbols clear_tones(FreqSymbols freq, const ReservedToneSet& tones)
{
    for (std::size_t k : tones.indices)
        if (k < freq.size()) freq[k] = 0.0;
    return freq;
}

namespace {

void check_support(const FreqSymbols& freq, const ReservedToneSet& tones)
{
    if (tones.indices.empty()) throw std::invalid_argument("tone reservation needs at least one reserved tone");
    for (std::size_t k : tones.indices) {
        if (k >= freq.size()) throw std::invalid_argument("reserved tone index outside the symbol");
        if (freq[k] != Complex{}) throw std::invalid_argument("data symbol is nonzero on reserved tone " + std::to_string(k));
    }
}

FreqSymbols with_correction(const FreqSymbols& freq, const std::vector<Complex>& correction)
{
    FreqSymbols out = freq;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += correction[k];
    return out;
}

}  // namespace

TrResult tr_iterative(const FreqSymbols& freq, const ReservedToneSet& tones, std::size_t oversampling,
                      const TrConfig& cfg)
{
    check_support(freq, tones);
    if (cfg.max_iters < 1) throw std::invalid_argument("tone reservation needs max_iters >= 1");
    if (!(cfg.cap > 0.0)) throw std::invalid_argument("tone reservation cap must be positive");

    const std::size_t n = freq.size();
    TimeSignal signal = idft(freq, oversampling);
    const double target = clip_level(signal, cfg.target_db);

    std::vector<Complex> correction(n, Complex{});
    TrResult best{signal, Correction{correction, cfg.cap}, papr(signal, Technique::tr)};
    std::size_t best_iteration = 0;
    std::size_t updates = 0;

    for (;;) {
        if (signal.peak_amplitude() <= target || updates == cfg.max_iters) break;

        std::vector<Complex> residual = signal.samples();
        for (auto& s : residual) {
            const double mag = std::abs(s);
            s = mag > target ? s * (1.0 - target / mag) : Complex{};
        }
        const FreqSymbols projected = dft(TimeSignal{std::move(residual), oversampling});
        for (std::size_t k : tones.indices) {
            Complex c = correction[k] - projected[k];
            const double mag = std::abs(c);
            if (mag > cfg.cap) c *= cfg.cap / mag;
            correction[k] = c;
        }
        ++updates;

        signal = idft(with_correction(freq, correction), oversampling);
        PaprReport report = papr(signal, Technique::tr);
        if (clearly_less(report.papr_linear, best.report.papr_linear)) {
            best = TrResult{signal, Correction{correction, cfg.cap}, report};
            best_iteration = updates;
        }
    }

    best.report.aux = TrInfo{updates, best_iteration == 0 && updates > 0};
    return best;
}

double peak_box_norm(const TimeSignal& signal)
{
    double m = 0.0;
    for (const auto& s : signal.samples()) m = std::max({m, std::abs(s.real()), std::abs(s.imag())});
    return m;
}

LpCorrection tr_lp_oracle(const FreqSymbols& freq, const ReservedToneSet& tones, std::size_t oversampling,
                          std::size_t max_n)
{
    check_support(freq, tones);
    const std::size_t n = freq.size();
    if (n > max_n)
        throw std::invalid_argument("LP oracle limited to N <= " + std::to_string(max_n) + ", got " + std::to_string(n));

    const TimeSignal x = idft(freq, oversampling);
    const double t0 = peak_box_norm(x);
    const std::size_t len = x.size();
    const std::size_t r = tones.indices.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    // Columns: (a+, a-, b+, b-) per reserved tone with C = a + j b, then u where the
    // peak is t0 - u. Rows: +-Re s[n] <= t0 - u and +-Im s[n] <= t0 - u.
    const std::size_t cols = 4 * r + 1;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    a.reserve(4 * len);
    b.reserve(4 * len);
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<double> re(cols, 0.0);
        std::vector<double> im(cols, 0.0);
        for (std::size_t j = 0; j < r; ++j) {
            const long f = signed_frequency(tones.indices[j], n);
            const auto phase_index = static_cast<long>((f * static_cast<long>(i)) % static_cast<long>(len));
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(phase_index) / static_cast<double>(len);
            const double cs = std::cos(theta) * scale;
            const double sn = std::sin(theta) * scale;
            re[4 * j] = cs;
            re[4 * j + 1] = -cs;
            re[4 * j + 2] = -sn;
            re[4 * j + 3] = sn;
            im[4 * j] = sn;
            im[4 * j + 1] = -sn;
            im[4 * j + 2] = cs;
            im[4 * j + 3] = -cs;
        }
        for (int sign : {1, -1}) {
            for (const auto* row : {&re, &im}) {
                std::vector<double> constraint(cols);
                for (std::size_t c = 0; c + 1 < cols; ++c) constraint[c] = sign * (*row)[c];
                constraint[cols - 1] = 1.0;
                const double xv = row == &re ? x[i].real() : x[i].imag();
                a.push_back(std::move(constraint));
                b.push_back(std::max(0.0, t0 - sign * xv));
            }
        }
    }
    std::vector<double> objective(cols, 0.0);
    objective[cols - 1] = 1.0;

    const lp::Solution sol = lp::maximize(a, b, objective);
    if (sol.status != lp::Status::optimal) throw std::runtime_error("LP oracle did not reach an optimum");

    LpCorrection out;
    out.correction.freq_values.assign(n, Complex{});
    if (sol.objective > 1e-12 * std::max(1.0, t0)) {
        for (std::size_t j = 0; j < r; ++j) {
            const double re = sol.x[4 * j] - sol.x[4 * j + 1];
            const double im = sol.x[4 * j + 2] - sol.x[4 * j + 3];
            out.correction.freq_values[tones.indices[j]] = {re, im};
        }
    }
    out.objective = peak_box_norm(idft(with_correction(freq, out.correction.freq_values), oversampling));
    return out;
}

}  // namespace papr
