// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any selected
// criterion fails.

#include "papr/bench/csv.hpp"
#include "papr/bench/reproduce.hpp"
#include "papr/bench/runner.hpp"
#include "papr/ccdf.hpp"
#include "papr/clipping.hpp"
#include "papr/ofdm.hpp"
#include "papr/pts.hpp"
#include "papr/rng.hpp"
#include "papr/tr.hpp"

#include "oracles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace papr::bench {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const std::vector<std::uint64_t> seeds{1, 2, 3};
std::size_t workers = 1;

double crossing(const RunResult& r, double probability)
{
    const auto v = papr_at_probability(r.curve, probability);
    return v ? *v : std::nan("");
}

struct Curve {
    std::string label;
    double mean_db;
};

// Mean over the seeds of each curve's crossing point, in figure order.
std::vector<Curve> figure_crossings(Figure figure, double probability, double* max_wall = nullptr)
{
    std::vector<Curve> curves;
    for (std::uint64_t seed : seeds) {
        ReproduceOptions opts;
        opts.seed = seed;
        const auto configs = figure_configs(figure, opts);
        if (curves.empty())
            for (const auto& c : configs) curves.push_back({c.label, 0.0});
        for (std::size_t i = 0; i < configs.size(); ++i) {
            const auto r = run_experiment(configs[i], workers);
            if (max_wall) *max_wall = std::max(*max_wall, r.wall_seconds);
            curves[i].mean_db += crossing(r, probability) / static_cast<double>(seeds.size());
        }
    }
    return curves;
}

std::string list(const std::vector<Curve>& curves)
{
    std::string s;
    for (const auto& c : curves) s += (s.empty() ? "" : ", ") + c.label + "=" + fmt("%.2f", c.mean_db);
    return s;
}

Outcome baseline()
{
    double wall = 0.0;
    double sum = 0.0;
    for (std::uint64_t seed : seeds) {
        ExperimentConfig cfg;
        cfg.n_subcarriers = 256;
        cfg.oversampling = 4;
        cfg.n_symbols = 10000;
        cfg.master_seed = seed;
        const auto r = run_experiment(cfg, workers);
        wall = std::max(wall, r.wall_seconds);
        sum += crossing(r, 1e-3);
    }
    const double mean = sum / static_cast<double>(seeds.size());
    const bool level = std::abs(mean - 10.5) <= 0.3;

    const auto sweep = figure_crossings(Figure::fig2, 1e-2, &wall);
    bool ordered = true;
    for (std::size_t i = 1; i < sweep.size(); ++i) ordered = ordered && sweep[i].mean_db > sweep[i - 1].mean_db;
    const bool fast = wall < 120.0;

    return {level && ordered && fast,
            "N=256 L=4 crossing at 1e-3 = " + fmt("%.3f", mean) + " dB (want 10.5 +- 0.3)" +
                (level ? "" : " [out of tolerance]") + "; at 1e-2: " + list(sweep) +
                (ordered ? " strictly ordered" : " NOT ordered") + "; slowest campaign " + fmt("%.1f", wall) + " s"};
}

Outcome analytic()
{
    bool pass = true;
    std::string detail;
    for (std::size_t n : {64U, 256U}) {
        ExperimentConfig cfg;
        cfg.n_subcarriers = n;
        cfg.oversampling = 1;
        cfg.n_symbols = 10000;
        const auto r = run_experiment(cfg, workers);
        const double empirical = crossing(r, 1e-2);
        const double closed = analytic_papr_at_probability(1e-2, n);
        const double gap = std::abs(empirical - closed);
        pass = pass && gap <= 0.3;
        detail += (detail.empty() ? "" : "; ") + std::string("N=") + std::to_string(n) + " empirical " +
                  fmt("%.3f", empirical) + " vs analytic " + fmt("%.3f", closed) + " dB (gap " + fmt("%.3f", gap) + ")";
    }
    return {pass, detail + " (want gap <= 0.3 dB)"};
}

Outcome slm()
{
    const auto c = figure_crossings(Figure::fig3, 1e-3);
    const double reduction = c[0].mean_db - c[1].mean_db;
    bool ordered = true;
    for (std::size_t i = 2; i < c.size(); ++i) ordered = ordered && c[i].mean_db < c[i - 1].mean_db;
    const bool level = std::abs(reduction - 1.5) <= 0.3;
    return {level && ordered, "U=2 reduction " + fmt("%.3f", reduction) + " dB (want 1.5 +- 0.3); " + list(c) +
                                  (ordered ? " strictly ordered" : " NOT ordered")};
}

Outcome ops()
{
    const auto c = figure_crossings(Figure::fig4, 1e-3);
    // c: baseline (data only), M1 (fixed pilots, the reference), M4, M8, M16
    const double reference = c[1].mean_db;
    double best = -1e9;
    bool monotone = true;
    for (std::size_t i = 2; i < c.size(); ++i) {
        best = std::max(best, reference - c[i].mean_db);
        monotone = monotone && c[i].mean_db <= c[i - 1].mean_db;
    }
    const bool level = std::abs(best - 1.5) <= 0.5;
    const double data_only = c[0].mean_db - (reference - best);
    return {level && monotone, "best-M reduction vs fixed-pilot M=1 " + fmt("%.3f", best) +
                                   " dB (want 1.5 +- 0.5), vs pilot-free baseline " + fmt("%.3f", data_only) + " dB; " +
                                   list(c) + (monotone ? " monotone in M" : " NOT monotone in M")};
}

Outcome sap()
{
    const auto c = figure_crossings(Figure::fig5, 1e-3);
    double best = -1e9;
    for (std::size_t i = 1; i < c.size(); ++i) best = std::max(best, c[0].mean_db - c[i].mean_db);
    return {std::abs(best - 2.5) <= 0.5, "best reduction " + fmt("%.3f", best) + " dB (want 2.5 +- 0.5); " + list(c)};
}

Outcome pts()
{
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    for (auto scheme : {PartitionScheme::adjacent, PartitionScheme::interleaved, PartitionScheme::pseudorandom}) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            auto rng = make_rng(601, i);
            const auto s = qpsk_map(random_bits(rng, 32));
            const auto part = make_partition(16, 4, scheme, i);
            const auto r = pts_exhaustive(s, part, 2, 4);
            const auto oracle = testing::pts_enumerate(s, part, 2, 4);
            ++instances;
            if (std::abs(r.report.papr_linear - oracle.papr) > 1e-9 || r.factors.index != oracle.index) ++mismatches;
        }
    }

    std::size_t order_violations = 0;
    std::size_t bit_errors = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = make_rng(602, i);
        const auto bits = random_bits(rng, 128);
        const auto s = qpsk_map(bits);
        const auto part = make_partition(64, 4, PartitionScheme::adjacent);
        const auto ex = pts_exhaustive(s, part, 4, 4);
        const auto it = pts_iterative(s, part, 4, 4);
        const double original = papr(idft(s, 4)).papr_linear;
        if (it.report.papr_linear < ex.report.papr_linear * (1 - 1e-12) ||
            it.report.papr_linear > original * (1 + 1e-12))
            ++order_violations;
        for (const auto* r : {&ex, &it})
            if (qpsk_demap(pts_recover(dft(r->signal), part, r->factors)) != bits) ++bit_errors;
    }
    return {mismatches == 0 && order_violations == 0 && bit_errors == 0,
            std::to_string(mismatches) + "/" + std::to_string(instances) +
                " oracle mismatches (N=16 V=4 W=2); " + std::to_string(order_violations) +
                " ordering violations and " + std::to_string(bit_errors) + " failed round-trips on 1000 symbols"};
}

Outcome tr()
{
    std::size_t support_violations = 0;
    std::size_t worse = 0;
    const auto tones64 = reserve_tones(64, 8, TonePlacement::equispaced);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = make_rng(701, i);
        const auto s = clear_tones(qpsk_map(random_bits(rng, 128)), tones64);
        TrConfig cfg;
        cfg.cap = default_tone_cap(s, tones64);
        const auto r = tr_iterative(s, tones64, 4, cfg);
        for (std::size_t k = 0; k < 64; ++k)
            if (!tones64.contains(k) && r.correction.freq_values[k] != Complex{}) ++support_violations;
        if (r.report.papr_linear > papr(idft(s, 4)).papr_linear) ++worse;
    }

    std::size_t instances = 0;
    std::size_t bound_violations = 0;
    for (auto placement : {TonePlacement::equispaced, TonePlacement::edge, TonePlacement::random}) {
        const auto tones = reserve_tones(16, 4, placement, 3);
        for (std::uint64_t i = 0; i < 100; ++i) {
            auto rng = make_rng(702, i);
            const auto s = clear_tones(qpsk_map(random_bits(rng, 32)), tones);
            TrConfig cfg;
            cfg.cap = default_tone_cap(s, tones);
            const auto r = tr_iterative(s, tones, 4, cfg);
            for (std::size_t k = 0; k < 16; ++k)
                if (!tones.contains(k) && r.correction.freq_values[k] != Complex{}) ++support_violations;
            ++instances;
            if (tr_lp_oracle(s, tones, 4).objective > peak_box_norm(r.signal) + 1e-9) ++bound_violations;
        }
    }
    return {support_violations == 0 && bound_violations == 0 && worse == 0,
            std::to_string(support_violations) + " nonzero data-tone corrections; LP bound violated on " +
                std::to_string(bound_violations) + "/" + std::to_string(instances) + " N=16 instances; " +
                std::to_string(worse) + "/1000 symbols made worse"};
}

Outcome clipping()
{
    std::size_t envelope_violations = 0;
    double mean_clipped = 0.0;
    double mean_filtered = 0.0;
    double mean_evm = 0.0;
    std::size_t zero_evm = 0;
    double mean_nyquist = 0.0;
    double mean_oversampled = 0.0;
    const ClipConfig cfg;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = make_rng(801, i);
        const auto s = qpsk_map(random_bits(rng, 512));
        const auto x = idft(s, 4);
        const double a = clip_level(x, cfg.clip_ratio_db);
        const auto c = clip(x, a);
        for (const auto& v : c.samples())
            if (std::abs(v) > a) ++envelope_violations;
        mean_clipped += papr(c).papr_db / 1000.0;
        mean_filtered += papr(filter_oob(c).signal).papr_db / 1000.0;

        const auto cf = clip_and_filter(s, cfg);
        const double evm = in_band_evm(s, cf.signal);
        mean_evm += evm / 1000.0;
        if (!(evm > 0.0)) ++zero_evm;
        mean_oversampled += cf.report.papr_db / 1000.0;

        const auto x1 = idft(s, 1);
        mean_nyquist += papr(idft(dft(clip(x1, clip_level(x1, cfg.clip_ratio_db))), 4)).papr_db / 1000.0;
    }
    const bool pass = envelope_violations == 0 && mean_filtered >= mean_clipped && zero_evm == 0 && mean_evm > 0.0 &&
                      mean_nyquist > mean_oversampled;
    return {pass, std::to_string(envelope_violations) + " samples above A; mean PAPR clipped " +
                      fmt("%.3f", mean_clipped) + " -> filtered " + fmt("%.3f", mean_filtered) + " dB; mean EVM " +
                      fmt("%.4f", mean_evm) + " (" + std::to_string(zero_evm) + " symbols with zero EVM); " +
                      "Nyquist clip then interpolate " + fmt("%.3f", mean_nyquist) + " dB vs L=4 clip+filter " +
                      fmt("%.3f", mean_oversampled) + " dB"};
}

Outcome core()
{
    double round_trip = 0.0;
    double parseval = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = make_rng(901, i);
        const auto s = qpsk_map(random_bits(rng, 512));
        for (std::size_t l : {1U, 2U, 4U}) {
            const auto x = idft(s, l);
            round_trip = std::max(round_trip, testing::max_abs_diff(dft(x).values, s.values));
            double raw = 0.0;
            for (const auto& v : x.samples()) raw += std::norm(v);
            parseval = std::max(parseval, std::abs(raw / static_cast<double>(l) - s.energy()) / s.energy());
        }
    }
    double oracle = 0.0;
    auto rng = make_rng(902, 0);
    for (std::size_t n = 2; n <= 64; n *= 2) {
        for (std::size_t l : {1U, 2U, 4U, 8U}) {
            for (int trial = 0; trial < 5; ++trial) {
                FreqSymbols s(n);
                for (auto& v : s.values) v = {gaussian(rng), gaussian(rng)};
                oracle = std::max(oracle, testing::max_abs_diff(idft(s, l).samples(), testing::naive_idft(s.values, l)));
            }
        }
    }
    return {round_trip < 1e-9 && oracle < 1e-9 && parseval < 1e-9,
            "round-trip max error " + fmt("%.2e", round_trip) + ", naive-oracle max error " + fmt("%.2e", oracle) +
                " (N<=64), Parseval max relative error " + fmt("%.2e", parseval) + " (want all < 1e-9)"};
}

std::string read_all(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism()
{
    const auto root = fs::temp_directory_path() / "papr_acceptance_determinism";
    std::size_t files = 0;
    std::size_t differing = 0;
    for (auto figure : {Figure::fig2, Figure::fig3, Figure::fig4, Figure::fig5}) {
        ReproduceOptions opts;
        opts.seed = 7;
        opts.n_symbols = 1000;
        std::vector<std::vector<fs::path>> outputs;
        for (std::size_t w : {1U, 4U, 8U}) {
            const auto dir = root / (std::string(to_string(figure)) + "_w" + std::to_string(w));
            fs::remove_all(dir);
            outputs.push_back(reproduce(figure, opts, dir, w).files);
        }
        for (std::size_t f = 0; f < outputs[0].size(); ++f) {
            ++files;
            const auto ref = read_all(outputs[0][f]);
            if (ref.empty() || read_all(outputs[1][f]) != ref || read_all(outputs[2][f]) != ref) ++differing;
        }
    }
    fs::remove_all(root);
    return {differing == 0 && files > 0, std::to_string(differing) + " of " + std::to_string(files) +
                                             " reproduce outputs differ across 1, 4 and 8 workers"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

int run(int argc, char** argv)
{
    CLI::App app{"Acceptance checks"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Criterion numbers to run (default all)");
    CLI11_PARSE(app, argc, argv);
    workers = resolve_workers(std::nullopt);

    const std::vector<Criterion> criteria{
        {1, "baseline CCDF", baseline}, {2, "analytic CCDF", analytic}, {3, "SLM", slm},
        {4, "OPS", ops},                {5, "SAP", sap},                {6, "PTS", pts},
        {7, "TR", tr},                  {8, "clipping", clipping},      {9, "core numerics", core},
        {10, "determinism", determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace papr::bench

int main(int argc, char** argv) { return papr::bench::run(argc, argv); }
