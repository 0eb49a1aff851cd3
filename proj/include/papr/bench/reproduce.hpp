#pragma once

#include "papr/bench/config.hpp"
#include "papr/bench/runner.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace papr::bench {

/// Built-in CCDF experiments: fig2 baseline over N, fig3 SLM over U, fig4 OPS over M,
/// fig5 SAP over l_count at alpha = 1.55.
enum class Figure { fig2, fig3, fig4, fig5 };

std::optional<Figure> parse_figure(std::string_view name);
std::string_view to_string(Figure figure);

struct ReproduceOptions {
    std::uint64_t seed = 1;
    std::size_t n_symbols = 10000;
    std::size_t oversampling = 4;
};

/// One config per curve; each label is the CSV file stem.
std::vector<ExperimentConfig> figure_configs(Figure figure, const ReproduceOptions& options);

struct ReproduceOutput {
    std::vector<RunResult> results;
    std::vector<std::filesystem::path> files;  // CSVs then the gnuplot script
};

/// Runs every curve of the figure and writes <label>.csv plus <figure>.gp into out_dir.
ReproduceOutput reproduce(Figure figure, const ReproduceOptions& options, const std::filesystem::path& out_dir,
                          std::size_t workers);

}  // namespace papr::bench
