#include "papr/bench/reproduce.hpp"

#include "papr/bench/csv.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace papr::bench {

std::optional<Figure> parse_figure(std::string_view name)
{
    if (name == "fig2") return Figure::fig2;
    if (name == "fig3") return Figure::fig3;
    if (name == "fig4") return Figure::fig4;
    if (name == "fig5") return Figure::fig5;
    return std::nullopt;
}

std::string_view to_string(Figure figure)
{
    switch (figure) {
    case Figure::fig2: return "fig2";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::fig5: return "fig5";
    }
    return "?";
}

std::vector<ExperimentConfig> figure_configs(Figure figure, const ReproduceOptions& options)
{
    const std::string prefix{to_string(figure)};
    ExperimentConfig base;
    base.n_subcarriers = 256;
    base.oversampling = options.oversampling;
    base.n_symbols = options.n_symbols;
    base.master_seed = options.seed;
    base.technique = Technique::none;
    base.label = prefix + "_baseline";

    std::vector<ExperimentConfig> configs;
    switch (figure) {
    case Figure::fig2:
        for (std::size_t n : {64, 128, 256, 512, 1024}) {
            ExperimentConfig c = base;
            c.n_subcarriers = n;
            c.label = prefix + "_N" + std::to_string(n);
            configs.push_back(c);
        }
        break;
    case Figure::fig3:
        configs.push_back(base);
        for (std::size_t u : {2, 4, 6, 8, 16}) {
            ExperimentConfig c = base;
            c.technique = Technique::slm;
            c.slm.u_count = u;
            c.label = prefix + "_U" + std::to_string(u);
            configs.push_back(c);
        }
        break;
    case Figure::fig4:
        configs.push_back(base);
        // M = 1 is the same pilot-bearing symbol with a fixed pilot sequence.
        for (std::size_t m : {1, 4, 8, 16}) {
            ExperimentConfig c = base;
            c.technique = Technique::ops;
            c.ops.n_pilots = 16;
            c.ops.m_count = m;
            c.label = prefix + "_M" + std::to_string(m);
            configs.push_back(c);
        }
        break;
    case Figure::fig5:
        configs.push_back(base);
        for (std::size_t l : {base.n_subcarriers / 32, base.n_subcarriers / 16, base.n_subcarriers / 8}) {
            ExperimentConfig c = base;
            c.technique = Technique::sap;
            c.sap.alpha = 1.55;
            c.sap.l_count = l;
            c.label = prefix + "_L" + std::to_string(l);
            configs.push_back(c);
        }
        break;
    }
    return configs;
}

namespace {

void write_gnuplot(const std::filesystem::path& path, Figure figure, const std::vector<ExperimentConfig>& configs)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << "# gnuplot " << path.filename().string() << "\n"
        << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set logscale y\n"
        << "set yrange [1e-4:1]\n"
        << "set xlabel 'PAPR threshold (dB)'\n"
        << "set ylabel 'P(PAPR > threshold)'\n"
        << "set grid\n"
        << "set terminal pngcairo size 800,600\n"
        << "set output '" << to_string(figure) << ".png'\n"
        << "plot \\\n";
    for (std::size_t i = 0; i < configs.size(); ++i) {
        out << "  '" << configs[i].label << ".csv' using 1:2 with lines title '" << configs[i].label << "'"
            << (i + 1 < configs.size() ? ", \\\n" : "\n");
    }
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

ReproduceOutput reproduce(Figure figure, const ReproduceOptions& options, const std::filesystem::path& out_dir,
                          std::size_t workers)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

    const auto configs = figure_configs(figure, options);
    ReproduceOutput output;
    for (const auto& cfg : configs) {
        output.results.push_back(run_experiment(cfg, workers));
        const auto path = out_dir / (cfg.label + ".csv");
        write_csv(output.results.back(), path);
        output.files.push_back(path);
    }
    const auto script = out_dir / (std::string(to_string(figure)) + ".gp");
    write_gnuplot(script, figure, configs);
    output.files.push_back(script);
    return output;
}

}  // namespace papr::bench
