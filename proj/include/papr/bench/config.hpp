#pragma once

#include "papr/pts.hpp"
#include "papr/sap.hpp"
#include "papr/slm.hpp"
#include "papr/tr.hpp"
#include "papr/types.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace papr::bench {

enum class Modulation { qpsk };
enum class PtsSearch { exhaustive, iterative };

struct GridSpec {
    double start_db = 4.0;
    double stop_db = 13.0;
    double step_db = 0.1;

    std::vector<double> thresholds() const;
};

struct ClippingParams {
    double clip_ratio_db = 5.0;
    std::size_t iterations = 1;
};

struct SlmParams {
    std::size_t u_count = 4;
    PhaseAlphabet alphabet = PhaseAlphabet::binary;
    std::optional<std::uint64_t> seed;  // bank seed; master seed when unset
};

struct PtsParams {
    std::size_t v_count = 4;
    PartitionScheme scheme = PartitionScheme::adjacent;
    unsigned w_alphabet = 2;
    PtsSearch search = PtsSearch::exhaustive;
    std::size_t max_v = 8;
    std::optional<std::uint64_t> seed;
};

struct TrParams {
    std::size_t r_count = 0;  // 0 selects N/8
    TonePlacement placement = TonePlacement::equispaced;
    double target_db = 6.0;
    std::size_t max_iters = 32;
    std::optional<double> cap;  // twice the mean data amplitude when unset
    std::optional<std::uint64_t> seed;

    std::size_t resolved_r_count(std::size_t n_subcarriers) const
    {
        return r_count != 0 ? r_count : std::max<std::size_t>(1, n_subcarriers / 8);
    }
};

struct OpsParams {
    std::size_t n_pilots = 16;
    std::size_t m_count = 4;
    std::optional<double> pilot_snr_db;  // enables blind-detection statistics
};

struct SweepAxis {
    std::string key;
    std::vector<std::string> values;
};

struct ExperimentConfig {
    std::size_t n_subcarriers = 0;
    std::size_t oversampling = 4;
    Modulation modulation = Modulation::qpsk;
    std::size_t n_symbols = 10000;
    std::uint64_t master_seed = 1;
    Technique technique = Technique::none;
    std::string label;
    std::string output;
    GridSpec grid;

    ClippingParams clipping;
    SlmParams slm;
    PtsParams pts;
    TrParams tr;
    SapConfig sap;
    OpsParams ops;

    std::vector<SweepAxis> sweep;
};

/// Every problem found in a configuration document, not only the first.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const noexcept { return errors_; }

private:
    std::vector<std::string> errors_;
};

/// Parses and validates a YAML configuration document. See docs/config.md.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Cartesian product of the sweep axes; children share the master seed and have no sweep.
std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& cfg);

/// Throws ConfigError listing every violation.
void validate(const ExperimentConfig& cfg);

/// Canonical YAML for cfg; parse_config(to_yaml(cfg)) reproduces cfg.
std::string to_yaml(const ExperimentConfig& cfg);

/// Closest known key within edit distance 2, if any.
std::optional<std::string> suggest_key(std::string_view unknown);

std::optional<Technique> parse_technique(std::string_view name);

}  // namespace papr::bench
