#include "papr/ofdm.hpp"
#include "papr/rng.hpp"
#include "papr/sap.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace papr {
namespace {

using testing::naive_idft;
using testing::random_qpsk;

// Term-by-term evaluation: contribution of subcarrier k at sample n, angle measured with arg().
std::vector<double> oracle_metric(const std::vector<Complex>& freq, const std::vector<Complex>& s,
                                  const std::vector<std::size_t>& peaks, double p)
{
    const std::size_t n = freq.size();
    const std::size_t len = s.size();
    std::vector<double> mu(n, 0.0);
    for (std::size_t idx : peaks) {
        for (std::size_t k = 0; k < n; ++k) {
            const double f = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
            const Complex c = freq[k] * std::exp(Complex{0.0, 2.0 * std::numbers::pi * f * static_cast<double>(idx) /
                                                                  static_cast<double>(len)}) /
                              std::sqrt(static_cast<double>(n));
            const double phi = std::arg(c) - std::arg(s[idx]);
            mu[k] += std::pow(std::abs(s[idx]), p) * -std::cos(phi);
        }
    }
    return mu;
}

std::vector<std::size_t> top_samples(const std::vector<Complex>& s, std::size_t count)
{
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return std::abs(s[a]) > std::abs(s[b]); });
    order.resize(count);
    return order;
}

TEST(SapMetric, LoneSymbolAlignsWithItself)
{
    const FreqSymbols s(std::vector<Complex>{std::polar(1.3, 0.7)});
    const TimeSignal sig(std::vector<Complex>{s[0]}, 1);
    const auto m = sap_metric(s, sig, SapConfig{});
    ASSERT_EQ(m.mu.size(), 1U);
    EXPECT_NEAR(m.mu[0], -std::pow(1.3, 2.0), 1e-12);
}

TEST(SapMetric, AntiParallelContributionIsPositive)
{
    FreqSymbols s(std::vector<Complex>(8, Complex{1, 0}));
    s[7] = -1.0;
    const auto sig = idft(s, 1);
    SapConfig cfg;
    const auto m = sap_metric(s, sig, cfg);
    ASSERT_EQ(m.peak_set, std::vector<std::size_t>{0});
    const double w = std::norm(sig[0]);
    EXPECT_NEAR(m.mu[7], w, 1e-12);
    for (std::size_t k = 0; k < 7; ++k) EXPECT_NEAR(m.mu[k], -w, 1e-12);
}

TEST(SapMetric, MatchesDoubleLoopOracle)
{
    auto rng = make_rng(81, 0);
    for (std::size_t l : {1U, 4U}) {
        int checked = 0;
        while (checked < 20) {
            const auto s = random_qpsk(8, rng);
            const auto direct = naive_idft(s.values, l);
            const auto ranked = top_samples(direct, 3);
            if (std::abs(std::abs(direct[ranked[1]]) - std::abs(direct[ranked[2]])) < 1e-9) continue;
            ++checked;
            const auto sig = idft(s, l);
            SapConfig cfg;
            cfg.threshold_db = -100.0;
            cfg.k_cap = 2;
            const auto m = sap_metric(s, sig, cfg);
            const std::vector<std::size_t> peaks(ranked.begin(), ranked.begin() + 2);
            EXPECT_EQ(std::set<std::size_t>(m.peak_set.begin(), m.peak_set.end()),
                      std::set<std::size_t>(peaks.begin(), peaks.end()));
            const auto want = oracle_metric(s.values, direct, peaks, 2.0);
            for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(m.mu[k], want[k], 1e-9);
        }
    }
}

TEST(SapMetric, ZeroContributionSkipped)
{
    auto rng = make_rng(82, 0);
    auto s = random_qpsk(16, rng);
    s[3] = 0.0;
    const auto m = sap_metric(s, idft(s, 4), SapConfig{});
    EXPECT_EQ(m.mu[3], 0.0);
    for (double v : m.mu) EXPECT_TRUE(std::isfinite(v));
}

TEST(SapMetric, PeakSetRule)
{
    auto rng = make_rng(83, 0);
    const auto sig = idft(random_qpsk(256, rng), 4);
    SapConfig cfg;
    const auto peaks = peak_set(sig, cfg);
    ASSERT_FALSE(peaks.empty());
    EXPECT_LE(peaks.size(), 8U);
    const double threshold = sig.mean_power() * std::pow(10.0, 0.6);
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        EXPECT_GT(std::norm(sig[peaks[i]]), threshold);
        if (i > 0) EXPECT_GE(std::norm(sig[peaks[i - 1]]), std::norm(sig[peaks[i]]));
    }
    EXPECT_EQ(peaks.front(), top_samples(sig.samples(), 1).front());

    cfg.threshold_db = 50.0;
    EXPECT_EQ(peak_set(sig, cfg), top_samples(sig.samples(), 1));
}

TEST(SapMetric, ScalingByPositiveConstant)
{
    auto rng = make_rng(84, 0);
    const auto s = random_qpsk(64, rng);
    const auto sig = idft(s, 4);
    const double c = 2.5;
    FreqSymbols scaled = s;
    for (auto& v : scaled.values) v *= c;
    const auto a = sap_metric(s, sig, SapConfig{});
    const auto b = sap_metric(scaled, idft(scaled, 4), SapConfig{});
    EXPECT_EQ(a.peak_set, b.peak_set);
    for (std::size_t k = 0; k < 64; ++k) EXPECT_NEAR(b.mu[k], a.mu[k] * c * c, 1e-9 * (1 + std::abs(b.mu[k])));
    std::vector<std::size_t> ra(64);
    std::vector<std::size_t> rb(64);
    std::iota(ra.begin(), ra.end(), std::size_t{0});
    std::iota(rb.begin(), rb.end(), std::size_t{0});
    std::stable_sort(ra.begin(), ra.end(), [&](auto x, auto y) { return a.mu[x] > a.mu[y]; });
    std::stable_sort(rb.begin(), rb.end(), [&](auto x, auto y) { return b.mu[x] > b.mu[y]; });
    EXPECT_EQ(ra, rb);
}

TEST(SapPredistort, NoPositiveMetricIsIdentity)
{
    const FreqSymbols s(std::vector<Complex>(16, Complex{1, 0}));
    const auto m = sap_metric(s, idft(s, 4), SapConfig{});
    for (double v : m.mu) ASSERT_LE(v, 0.0);
    const auto r = sap_predistort(s, SapConfig{}, 4);
    EXPECT_EQ(r.symbols.values, s.values);
    EXPECT_TRUE(std::get<SapInfo>(r.report.aux).scaled.empty());
    EXPECT_EQ(r.signal.samples(), idft(s, 4).samples());
}

TEST(SapPredistort, SelectsLargestPositiveMetrics)
{
    auto rng = make_rng(85, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_qpsk(64, rng);
        SapConfig cfg;
        cfg.l_count = 6;
        const auto m = sap_metric(s, idft(s, 4), cfg);
        const auto r = sap_predistort(s, cfg, 4);
        const auto& scaled = std::get<SapInfo>(r.report.aux).scaled;

        std::vector<std::size_t> positive;
        for (std::size_t k = 0; k < 64; ++k)
            if (m.mu[k] > 0.0) positive.push_back(k);
        std::stable_sort(positive.begin(), positive.end(), [&](auto a, auto b) { return m.mu[a] > m.mu[b]; });
        positive.resize(std::min<std::size_t>(positive.size(), 6));
        std::sort(positive.begin(), positive.end());
        EXPECT_EQ(scaled, positive);

        double extra = 0.0;
        for (std::size_t k = 0; k < 64; ++k) {
            const bool sel = std::binary_search(scaled.begin(), scaled.end(), k);
            EXPECT_NEAR(std::abs(r.symbols[k] - (sel ? cfg.alpha : 1.0) * s[k]), 0.0, 1e-15);
            if (sel) extra += (cfg.alpha * cfg.alpha - 1.0) * std::norm(s[k]);
        }
        EXPECT_NEAR(r.symbols.energy(), s.energy() + extra, 1e-12);
        EXPECT_NEAR(std::get<SapInfo>(r.report.aux).energy_increase, extra, 1e-12);
        EXPECT_EQ(qpsk_demap(r.symbols), qpsk_demap(s));
        EXPECT_EQ(qpsk_demap(dft(r.signal)), qpsk_demap(s));
    }
}

TEST(SapPredistort, ContinuousAsAlphaApproachesOne)
{
    auto rng = make_rng(86, 0);
    const auto s = random_qpsk(64, rng);
    SapConfig cfg;
    cfg.alpha = 1.0 + 1e-9;
    const auto r = sap_predistort(s, cfg, 4);
    ASSERT_FALSE(std::get<SapInfo>(r.report.aux).scaled.empty());
    EXPECT_NEAR(r.report.papr_linear, papr(idft(s, 4)).papr_linear, 1e-6);
}

TEST(SapPredistort, LowersMeanPapr)
{
    double before = 0.0;
    double after = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = make_rng(87, i);
        const auto s = qpsk_map(random_bits(rng, 512));
        before += papr(idft(s, 4)).papr_db;
        after += sap_predistort(s, SapConfig{}, 4).report.papr_db;
    }
    EXPECT_LT(after, before);
}

TEST(SapConfig, Validation)
{
    SapConfig cfg;
    EXPECT_EQ(cfg.resolved_l_count(256), 16U);
    EXPECT_NO_THROW(cfg.validate(256));
    cfg.alpha = 1.0;
    EXPECT_THROW(cfg.validate(256), std::invalid_argument);
    cfg.alpha = 1.5;
    cfg.l_count = 300;
    EXPECT_THROW(cfg.validate(256), std::invalid_argument);
    cfg.l_count = 4;
    cfg.k_cap = 0;
    EXPECT_THROW(cfg.validate(256), std::invalid_argument);
}

}  // namespace
}  // namespace papr
