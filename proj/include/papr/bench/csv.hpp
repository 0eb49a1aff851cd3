#pragma once

#include "papr/bench/runner.hpp"
#include "papr/ccdf.hpp"

#include <filesystem>
#include <string>

namespace papr::bench {

/// CSV body: `#`-prefixed config echo and summary, then `threshold_db,ccdf` and one
/// row per grid point, numbers with 17 significant digits.
std::string format_csv(const RunResult& result);

/// Throws std::runtime_error naming the path on I/O failure.
void write_csv(const RunResult& result, const std::filesystem::path& path);

/// Reads back the curve written by write_csv.
CcdfCurve read_csv(const std::filesystem::path& path);

std::string format_number(double v);

}  // namespace papr::bench
