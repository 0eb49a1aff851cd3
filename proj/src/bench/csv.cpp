#include "papr/bench/csv.hpp"

#include "papr/bench/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace papr::bench {

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string format_csv(const RunResult& result)
{
    std::ostringstream out;
    out << "# papr_bench ccdf\n";
    out << "# config:\n";
    std::istringstream yaml{to_yaml(result.config)};
    for (std::string line; std::getline(yaml, line);) out << "#   " << line << "\n";
    out << "# summary:\n";
    out << "#   mean_papr_db: " << format_number(result.mean_papr_db) << "\n";
    out << "#   max_papr_db: " << format_number(result.max_papr_db) << "\n";
    for (const auto& point : result.papr_at) {
        char label[32];
        std::snprintf(label, sizeof label, "%.0e", point.probability);
        out << "#   papr_db_at_" << label << ": " << (point.papr_db ? format_number(*point.papr_db) : "none") << "\n";
    }
    for (const auto& [name, value] : result.stats) out << "#   " << name << ": " << format_number(value) << "\n";

    out << "threshold_db,ccdf\n";
    const auto& curve = result.curve;
    for (std::size_t i = 0; i < curve.thresholds_db.size(); ++i)
        out << format_number(curve.thresholds_db[i]) << "," << format_number(curve.probabilities[i]) << "\n";
    return out.str();
}

void write_csv(const RunResult& result, const std::filesystem::path& path)
{
    const std::string body = format_csv(result);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << body;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

CcdfCurve read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");

    auto parse = [&](std::string_view s, std::size_t line_no) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
        return v;
    };

    CcdfCurve curve;
    bool header = false;
    std::size_t line_no = 0;
    constexpr std::string_view n_symbols_key = "#   n_symbols: ";
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.starts_with('#')) {
            if (line.starts_with(n_symbols_key))
                curve.n_symbols = static_cast<std::size_t>(parse(std::string_view(line).substr(n_symbols_key.size()), line_no));
            continue;
        }
        if (!header) {
            if (line != "threshold_db,ccdf") throw std::runtime_error(path.string() + ": missing CSV header");
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected two columns");
        const std::string_view view{line};
        curve.thresholds_db.push_back(parse(view.substr(0, comma), line_no));
        curve.probabilities.push_back(parse(view.substr(comma + 1), line_no));
    }
    if (!header) throw std::runtime_error(path.string() + ": missing CSV header");
    return curve;
}

}  // namespace papr::bench
