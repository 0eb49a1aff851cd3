#include "papr/bench/runner.hpp"

#include "papr/clipping.hpp"
#include "papr/ofdm.hpp"
#include "papr/ops.hpp"
#include "papr/pts.hpp"
#include "papr/rng.hpp"
#include "papr/sap.hpp"
#include "papr/slm.hpp"
#include "papr/tr.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string_view>
#include <thread>

namespace papr::bench {

namespace {

constexpr std::size_t max_stats = 4;

struct Outcome {
    double papr_db = 0.0;
    std::array<double, max_stats> stats{};
};

constexpr std::uint64_t noise_domain = 1;

/// Per-campaign state shared read-only by all workers.
class SymbolProcessor {
public:
    explicit SymbolProcessor(const ExperimentConfig& cfg) : cfg_(cfg)
    {
        const std::size_t n = cfg.n_subcarriers;
        switch (cfg.technique) {
        case Technique::none: break;
        case Technique::clipping:
            stat_names_ = {"mean_evm", "mean_power_change_db"};
            break;
        case Technique::slm:
            bank_ = generate_bank(cfg.slm.u_count, n, cfg.slm.alphabet, cfg.slm.seed.value_or(cfg.master_seed));
            stat_names_ = {"mean_chosen_u", "candidates_per_symbol"};
            break;
        case Technique::pts:
            partition_ = make_partition(n, cfg.pts.v_count, cfg.pts.scheme, cfg.pts.seed.value_or(cfg.master_seed));
            stat_names_ = {"candidates_per_symbol", "side_info_bits"};
            break;
        case Technique::tr:
            tones_ = reserve_tones(n, cfg.tr.resolved_r_count(n), cfg.tr.placement, cfg.tr.seed.value_or(cfg.master_seed));
            stat_names_ = {"mean_updates", "fallback_rate", "mean_correction_energy"};
            break;
        case Technique::sap:
            stat_names_ = {"mean_scaled", "mean_energy_increase_db"};
            break;
        case Technique::ops:
            pilots_.emplace(hadamard_set(n, equispaced_pilots(n, cfg.ops.n_pilots), cfg.ops.m_count), cfg.oversampling);
            stat_names_ = {"mean_chosen_m"};
            if (cfg.ops.pilot_snr_db) stat_names_.push_back("detection_error_rate");
            break;
        }
    }

    const std::vector<std::string>& stat_names() const { return stat_names_; }

    Outcome process(std::uint64_t index) const
    {
        const std::size_t n = cfg_.n_subcarriers;
        const std::size_t l = cfg_.oversampling;
        Rng rng = make_rng(cfg_.master_seed, index);
        const FreqSymbols symbols = qpsk_map(random_bits(rng, 2 * n));

        Outcome out;
        switch (cfg_.technique) {
        case Technique::none: out.papr_db = papr(idft(symbols, l)).papr_db; break;
        case Technique::clipping: {
            const ClipConfig clip_cfg{cfg_.clipping.clip_ratio_db, l, cfg_.clipping.iterations};
            const ClipResult r = clip_and_filter(symbols, clip_cfg);
            out.papr_db = r.report.papr_db;
            out.stats[0] = in_band_evm(symbols, r.signal);
            out.stats[1] = to_db(r.signal.energy() / symbols.energy());
            break;
        }
        case Technique::slm: {
            const SlmResult r = slm_select(symbols, bank_, l);
            out.papr_db = r.report.papr_db;
            out.stats[0] = static_cast<double>(r.chosen_u);
            out.stats[1] = static_cast<double>(bank_.u_count());
            break;
        }
        case Technique::pts: {
            const unsigned w = cfg_.pts.w_alphabet;
            const PtsResult r = cfg_.pts.search == PtsSearch::exhaustive
                                    ? pts_exhaustive(symbols, partition_, w, l, cfg_.pts.max_v)
                                    : pts_iterative(symbols, partition_, w, l);
            out.papr_db = r.report.papr_db;
            out.stats[0] = static_cast<double>(std::get<PtsInfo>(r.report.aux).candidates);
            out.stats[1] = static_cast<double>(partition_.v_count - 1) * std::log2(static_cast<double>(w));
            break;
        }
        case Technique::tr: {
            const FreqSymbols data = clear_tones(symbols, tones_);
            TrConfig tr_cfg{cfg_.tr.target_db, cfg_.tr.max_iters, cfg_.tr.cap.value_or(default_tone_cap(data, tones_))};
            const TrResult r = tr_iterative(data, tones_, l, tr_cfg);
            const auto& info = std::get<TrInfo>(r.report.aux);
            out.papr_db = r.report.papr_db;
            out.stats[0] = static_cast<double>(info.iterations);
            out.stats[1] = info.fell_back ? 1.0 : 0.0;
            double energy = 0.0;
            for (const auto& c : r.correction.freq_values) energy += std::norm(c);
            out.stats[2] = energy;
            break;
        }
        case Technique::sap: {
            const SapResult r = sap_predistort(symbols, cfg_.sap, l);
            const auto& info = std::get<SapInfo>(r.report.aux);
            out.papr_db = r.report.papr_db;
            out.stats[0] = static_cast<double>(info.scaled.size());
            out.stats[1] = to_db(r.symbols.energy() / symbols.energy());
            break;
        }
        case Technique::ops: {
            const FreqSymbols data = clear_pilots(symbols, pilots_->set().grid);
            const OpsResult r = ops_select(data, *pilots_);
            out.papr_db = r.report.papr_db;
            out.stats[0] = static_cast<double>(r.chosen_m);
            if (cfg_.ops.pilot_snr_db) {
                Rng noise = make_rng(cfg_.master_seed, index, noise_domain);
                const double sigma = std::sqrt(0.5 * from_db(-*cfg_.ops.pilot_snr_db));
                FreqSymbols received = insert_pilots(data, pilots_->set(), r.chosen_m);
                for (auto& v : received.values) v += Complex{sigma * gaussian(noise), sigma * gaussian(noise)};
                out.stats[1] = ops_blind_detect(received, pilots_->set()) == r.chosen_m ? 0.0 : 1.0;
            }
            break;
        }
        }
        return out;
    }

private:
    const ExperimentConfig& cfg_;
    std::vector<std::string> stat_names_;
    PhaseSequenceBank bank_;
    Partition partition_;
    ReservedToneSet tones_;
    std::optional<PilotWaveforms> pilots_;
};

}  // namespace

std::size_t resolve_workers(std::optional<std::size_t> requested)
{
    if (const char* env = std::getenv("PAPR_BENCH_THREADS")) {
        const std::string_view s{env};
        std::size_t value = 0;
        bool ok = !s.empty();
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                ok = false;
                break;
            }
            value = value * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (ok && value > 0) return value;
    }
    if (requested && *requested > 0) return *requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

RunResult run_experiment(const ExperimentConfig& cfg, std::size_t workers)
{
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();

    const SymbolProcessor processor{cfg};
    const std::size_t count = cfg.n_symbols;
    std::vector<Outcome> outcomes(count);

    workers = std::clamp<std::size_t>(workers, 1, count);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](std::size_t w) {
        try {
            const std::size_t end = std::min(count, (w + 1) * chunk);
            for (std::size_t i = w * chunk; i < end; ++i) outcomes[i] = processor.process(i);
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    RunResult result;
    result.config = cfg;
    result.papr_db.reserve(count);
    std::array<double, max_stats> sums{};
    for (const auto& o : outcomes) {
        result.papr_db.push_back(o.papr_db);
        for (std::size_t s = 0; s < max_stats; ++s) sums[s] += o.stats[s];
    }

    const auto thresholds = cfg.grid.thresholds();
    result.curve = ccdf_estimate(result.papr_db, thresholds);
    double total = 0.0;
    for (double v : result.papr_db) total += v;
    result.mean_papr_db = total / static_cast<double>(count);
    result.max_papr_db = *std::max_element(result.papr_db.begin(), result.papr_db.end());
    for (double p : {1e-1, 1e-2, 1e-3}) result.papr_at.push_back({p, papr_at_probability(result.curve, p)});

    const auto& names = processor.stat_names();
    for (std::size_t s = 0; s < names.size(); ++s)
        result.stats.emplace_back(names[s], sums[s] / static_cast<double>(count));

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace papr::bench
