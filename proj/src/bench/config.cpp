#include "papr/bench/config.hpp"

#include "papr/ccdf.hpp"
#include "papr/fft.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace papr::bench {

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error([&] {
          std::string msg = "invalid configuration:";
          for (const auto& e : errors) msg += "\n  - " + e;
          return msg;
      }()),
      errors_(std::move(errors))
{
}

std::vector<double> GridSpec::thresholds() const { return make_grid(start_db, stop_db, step_db); }

namespace {

// ---- scalar conversions -------------------------------------------------------

template <typename T>
T parse_integer(const std::string& s)
{
    T value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
    return value;
}

double parse_real(const std::string& s)
{
    double value = 0.0;
    const auto* begin = s.data() + (s.starts_with('+') ? 1 : 0);
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw std::invalid_argument("expected a finite number, got '" + s + "'");
    return value;
}

std::string format_real(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

template <typename Enum>
struct EnumName {
    Enum value;
    std::string_view name;
};

template <typename Enum, std::size_t K>
Enum parse_enum(const std::string& s, const EnumName<Enum> (&names)[K])
{
    for (const auto& n : names)
        if (n.name == s) return n.value;
    std::string allowed;
    for (const auto& n : names) allowed += (allowed.empty() ? "" : ", ") + std::string(n.name);
    throw std::invalid_argument("'" + s + "' is not one of: " + allowed);
}

template <typename Enum, std::size_t K>
std::string enum_name(Enum v, const EnumName<Enum> (&names)[K])
{
    for (const auto& n : names)
        if (n.value == v) return std::string(n.name);
    return "?";
}

constexpr EnumName<Technique> technique_names[] = {
    {Technique::none, "none"}, {Technique::clipping, "clipping"}, {Technique::slm, "slm"}, {Technique::pts, "pts"},
    {Technique::tr, "tr"},     {Technique::sap, "sap"},           {Technique::ops, "ops"}};
constexpr EnumName<Modulation> modulation_names[] = {{Modulation::qpsk, "qpsk"}};
constexpr EnumName<PhaseAlphabet> alphabet_names[] = {{PhaseAlphabet::binary, "binary"},
                                                      {PhaseAlphabet::quadrature, "quadrature"},
                                                      {PhaseAlphabet::random_phase, "random_phase"}};
constexpr EnumName<PartitionScheme> scheme_names[] = {{PartitionScheme::adjacent, "adjacent"},
                                                      {PartitionScheme::interleaved, "interleaved"},
                                                      {PartitionScheme::pseudorandom, "pseudorandom"}};
constexpr EnumName<PtsSearch> search_names[] = {{PtsSearch::exhaustive, "exhaustive"},
                                                {PtsSearch::iterative, "iterative"}};
constexpr EnumName<TonePlacement> placement_names[] = {{TonePlacement::equispaced, "equispaced"},
                                                       {TonePlacement::random, "random"},
                                                       {TonePlacement::edge, "edge"}};

// ---- key table ----------------------------------------------------------------

struct KeyDef {
    std::string name;  // qualified: "section.key" or "key"
    std::function<void(ExperimentConfig&, const std::string&)> set;
    std::function<std::optional<std::string>(const ExperimentConfig&)> get;
};

template <typename T>
KeyDef size_key(std::string name, T ExperimentConfig::*section, std::size_t T::*field)
{
    return {std::move(name), [=](ExperimentConfig& c, const std::string& s) { c.*section.*field = parse_integer<std::size_t>(s); },
            [=](const ExperimentConfig& c) -> std::optional<std::string> { return std::to_string(c.*section.*field); }};
}

template <typename T>
KeyDef real_key(std::string name, T ExperimentConfig::*section, double T::*field)
{
    return {std::move(name), [=](ExperimentConfig& c, const std::string& s) { c.*section.*field = parse_real(s); },
            [=](const ExperimentConfig& c) -> std::optional<std::string> { return format_real(c.*section.*field); }};
}

template <typename T>
KeyDef seed_key(std::string name, T ExperimentConfig::*section)
{
    return {std::move(name),
            [=](ExperimentConfig& c, const std::string& s) { (c.*section).seed = parse_integer<std::uint64_t>(s); },
            [=](const ExperimentConfig& c) -> std::optional<std::string> {
                const auto& seed = (c.*section).seed;
                return seed ? std::optional{std::to_string(*seed)} : std::nullopt;
            }};
}

template <typename T, typename Enum, std::size_t K>
KeyDef enum_key(std::string name, T ExperimentConfig::*section, Enum T::*field, const EnumName<Enum> (&names)[K])
{
    return {std::move(name), [=, &names](ExperimentConfig& c, const std::string& s) { c.*section.*field = parse_enum(s, names); },
            [=, &names](const ExperimentConfig& c) -> std::optional<std::string> { return enum_name(c.*section.*field, names); }};
}

const std::vector<KeyDef>& key_table()
{
    using C = ExperimentConfig;
    static const std::vector<KeyDef> table = [] {
        std::vector<KeyDef> t;
        t.push_back({"n_subcarriers", [](C& c, const std::string& s) { c.n_subcarriers = parse_integer<std::size_t>(s); },
                     [](const C& c) -> std::optional<std::string> { return std::to_string(c.n_subcarriers); }});
        t.push_back({"oversampling", [](C& c, const std::string& s) { c.oversampling = parse_integer<std::size_t>(s); },
                     [](const C& c) -> std::optional<std::string> { return std::to_string(c.oversampling); }});
        t.push_back({"modulation", [](C& c, const std::string& s) { c.modulation = parse_enum(s, modulation_names); },
                     [](const C& c) -> std::optional<std::string> { return enum_name(c.modulation, modulation_names); }});
        t.push_back({"n_symbols", [](C& c, const std::string& s) { c.n_symbols = parse_integer<std::size_t>(s); },
                     [](const C& c) -> std::optional<std::string> { return std::to_string(c.n_symbols); }});
        t.push_back({"seed", [](C& c, const std::string& s) { c.master_seed = parse_integer<std::uint64_t>(s); },
                     [](const C& c) -> std::optional<std::string> { return std::to_string(c.master_seed); }});
        t.push_back({"technique", [](C& c, const std::string& s) { c.technique = parse_enum(s, technique_names); },
                     [](const C& c) -> std::optional<std::string> { return enum_name(c.technique, technique_names); }});
        t.push_back({"label", [](C& c, const std::string& s) { c.label = s; },
                     [](const C& c) -> std::optional<std::string> {
                         return c.label.empty() ? std::nullopt : std::optional{c.label};
                     }});
        t.push_back({"output", [](C& c, const std::string& s) { c.output = s; },
                     [](const C& c) -> std::optional<std::string> {
                         return c.output.empty() ? std::nullopt : std::optional{c.output};
                     }});

        t.push_back(real_key("grid.start_db", &C::grid, &GridSpec::start_db));
        t.push_back(real_key("grid.stop_db", &C::grid, &GridSpec::stop_db));
        t.push_back(real_key("grid.step_db", &C::grid, &GridSpec::step_db));

        t.push_back(real_key("clipping.clip_ratio_db", &C::clipping, &ClippingParams::clip_ratio_db));
        t.push_back(size_key("clipping.iterations", &C::clipping, &ClippingParams::iterations));

        t.push_back(size_key("slm.u_count", &C::slm, &SlmParams::u_count));
        t.push_back(enum_key("slm.alphabet", &C::slm, &SlmParams::alphabet, alphabet_names));
        t.push_back(seed_key("slm.seed", &C::slm));

        t.push_back(size_key("pts.v_count", &C::pts, &PtsParams::v_count));
        t.push_back(enum_key("pts.scheme", &C::pts, &PtsParams::scheme, scheme_names));
        t.push_back({"pts.w_alphabet", [](C& c, const std::string& s) { c.pts.w_alphabet = parse_integer<unsigned>(s); },
                     [](const C& c) -> std::optional<std::string> { return std::to_string(c.pts.w_alphabet); }});
        t.push_back(enum_key("pts.search", &C::pts, &PtsParams::search, search_names));
        t.push_back(size_key("pts.max_v", &C::pts, &PtsParams::max_v));
        t.push_back(seed_key("pts.seed", &C::pts));

        t.push_back(size_key("tr.r_count", &C::tr, &TrParams::r_count));
        t.push_back(enum_key("tr.placement", &C::tr, &TrParams::placement, placement_names));
        t.push_back(real_key("tr.target_db", &C::tr, &TrParams::target_db));
        t.push_back(size_key("tr.max_iters", &C::tr, &TrParams::max_iters));
        t.push_back({"tr.cap", [](C& c, const std::string& s) { c.tr.cap = parse_real(s); },
                     [](const C& c) -> std::optional<std::string> {
                         return c.tr.cap ? std::optional{format_real(*c.tr.cap)} : std::nullopt;
                     }});
        t.push_back(seed_key("tr.seed", &C::tr));

        t.push_back(real_key("sap.alpha", &C::sap, &SapConfig::alpha));
        t.push_back(size_key("sap.l_count", &C::sap, &SapConfig::l_count));
        t.push_back(real_key("sap.p_exponent", &C::sap, &SapConfig::p_exponent));
        t.push_back(real_key("sap.threshold_db", &C::sap, &SapConfig::threshold_db));
        t.push_back(size_key("sap.k_cap", &C::sap, &SapConfig::k_cap));

        t.push_back(size_key("ops.n_pilots", &C::ops, &OpsParams::n_pilots));
        t.push_back(size_key("ops.m_count", &C::ops, &OpsParams::m_count));
        t.push_back({"ops.pilot_snr_db", [](C& c, const std::string& s) { c.ops.pilot_snr_db = parse_real(s); },
                     [](const C& c) -> std::optional<std::string> {
                         return c.ops.pilot_snr_db ? std::optional{format_real(*c.ops.pilot_snr_db)} : std::nullopt;
                     }});
        return t;
    }();
    return table;
}

const KeyDef* find_key(std::string_view name)
{
    for (const auto& k : key_table())
        if (k.name == name) return &k;
    return nullptr;
}

constexpr std::string_view sections[] = {"grid", "clipping", "slm", "pts", "tr", "sap", "ops"};

bool is_section(std::string_view name)
{
    return std::find(std::begin(sections), std::end(sections), name) != std::end(sections);
}

std::size_t edit_distance(std::string_view a, std::string_view b)
{
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string_view leaf(std::string_view name)
{
    const auto dot = name.rfind('.');
    return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

std::string unknown_key_message(const std::string& name)
{
    std::string msg = "unknown key '" + name + "'";
    if (const auto s = suggest_key(name)) msg += " (did you mean '" + *s + "'?)";
    return msg;
}

/// Qualified name for a sweep key: as written, a top-level key, or a key of the
/// technique's own section.
std::optional<std::string> resolve_sweep_key(const std::string& key, Technique technique)
{
    if (find_key(key)) return key;
    const std::string qualified = std::string(to_string(technique)) + "." + key;
    if (find_key(qualified)) return qualified;
    return std::nullopt;
}

bool set_key(ExperimentConfig& cfg, const std::string& name, const std::string& value, std::vector<std::string>& errors)
{
    const KeyDef* def = find_key(name);
    if (!def) {
        errors.push_back(unknown_key_message(name));
        return false;
    }
    try {
        def->set(cfg, value);
        return true;
    } catch (const std::invalid_argument& e) {
        errors.push_back("key '" + name + "': " + e.what());
        return false;
    }
}

void collect_validation(const ExperimentConfig& c, std::vector<std::string>& errors, bool check_n = true)
{
    const std::size_t n = c.n_subcarriers;
    const bool n_ok = n >= 2 && is_power_of_two(n);
    if (check_n && !n_ok) errors.push_back("n_subcarriers must be a power of two >= 2, got " + std::to_string(n));
    if (!is_power_of_two(c.oversampling))
        errors.push_back("oversampling must be a power of two >= 1, got " + std::to_string(c.oversampling));
    if (c.n_symbols < 1) errors.push_back("n_symbols must be at least 1");
    if (!(c.grid.step_db > 0.0)) errors.push_back("grid.step_db must be positive");
    if (!(c.grid.stop_db >= c.grid.start_db)) errors.push_back("grid.stop_db must not be below grid.start_db");
    else if (c.grid.step_db > 0.0 && (c.grid.stop_db - c.grid.start_db) / c.grid.step_db > 1e6)
        errors.push_back("grid has more than a million points");

    switch (c.technique) {
    case Technique::none: break;
    case Technique::clipping:
        if (c.clipping.iterations < 1) errors.push_back("clipping.iterations must be at least 1");
        break;
    case Technique::slm:
        if (c.slm.u_count < 1) errors.push_back("slm.u_count must be at least 1");
        break;
    case Technique::pts:
        if (c.pts.v_count < 1 || (n_ok && c.pts.v_count > n))
            errors.push_back("pts.v_count must lie in [1, N], got " + std::to_string(c.pts.v_count));
        else if (n_ok && c.pts.scheme != PartitionScheme::pseudorandom && n % c.pts.v_count != 0)
            errors.push_back("pts.v_count must divide N for adjacent and interleaved partitions");
        if (c.pts.w_alphabet != 2 && c.pts.w_alphabet != 4) errors.push_back("pts.w_alphabet must be 2 or 4");
        if (c.pts.search == PtsSearch::exhaustive && c.pts.v_count > c.pts.max_v)
            errors.push_back("pts.v_count exceeds pts.max_v for exhaustive search");
        break;
    case Technique::tr:
        if (n_ok) {
            const std::size_t r = c.tr.resolved_r_count(n);
            if (r < 1 || r >= n) errors.push_back("tr.r_count must satisfy 1 <= R < N, got " + std::to_string(r));
        }
        if (c.tr.max_iters < 1) errors.push_back("tr.max_iters must be at least 1");
        if (c.tr.cap && !(*c.tr.cap > 0.0)) errors.push_back("tr.cap must be positive");
        break;
    case Technique::sap:
        if (n_ok) {
            try {
                c.sap.validate(n);
            } catch (const std::invalid_argument& e) {
                errors.push_back(std::string("sap: ") + e.what());
            }
        }
        break;
    case Technique::ops:
        if (!is_power_of_two(c.ops.n_pilots))
            errors.push_back("ops.n_pilots must be a power of two, got " + std::to_string(c.ops.n_pilots));
        else if (n_ok && (c.ops.n_pilots > n || n % c.ops.n_pilots != 0))
            errors.push_back("ops.n_pilots must divide N");
        if (c.ops.m_count < 1 || c.ops.m_count > c.ops.n_pilots)
            errors.push_back("ops.m_count must lie in [1, n_pilots], got " + std::to_string(c.ops.m_count));
        break;
    }

    for (const auto& axis : c.sweep) {
        if (!resolve_sweep_key(axis.key, c.technique)) errors.push_back("sweep: " + unknown_key_message(axis.key));
        if (axis.values.empty()) errors.push_back("sweep: key '" + axis.key + "' has no values");
    }
}

std::string scalar_of(const YAML::Node& node) { return node.Scalar(); }

}  // namespace

std::optional<Technique> parse_technique(std::string_view name)
{
    for (const auto& t : technique_names)
        if (t.name == name) return t.value;
    return std::nullopt;
}

std::optional<std::string> suggest_key(std::string_view unknown)
{
    std::optional<std::string> best;
    std::size_t best_distance = 3;
    for (const auto& k : key_table()) {
        const std::size_t d = std::min(edit_distance(unknown, k.name), edit_distance(leaf(unknown), leaf(k.name)));
        if (d < best_distance) {
            best_distance = d;
            best = k.name;
        }
    }
    return best;
}

void validate(const ExperimentConfig& cfg)
{
    std::vector<std::string> errors;
    collect_validation(cfg, errors);
    if (!errors.empty()) throw ConfigError(std::move(errors));
}

ExperimentConfig parse_config(std::string_view text)
{
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ConfigError({std::string("YAML syntax error: ") + e.what()});
    }
    if (!root.IsMap()) throw ConfigError({"configuration must be a mapping of keys to values"});

    ExperimentConfig cfg;
    std::vector<std::string> errors;
    bool have_n = false;
    bool have_technique = false;

    auto apply = [&](const std::string& name, const YAML::Node& value) {
        if (!value.IsScalar()) {
            if (find_key(name))
                errors.push_back("key '" + name + "' expects a single value");
            else
                errors.push_back(unknown_key_message(name));
            return;
        }
        if (set_key(cfg, name, scalar_of(value), errors)) {
            have_n = have_n || name == "n_subcarriers";
            have_technique = have_technique || name == "technique";
        }
    };

    for (const auto& entry : root) {
        const std::string key = entry.first.as<std::string>();
        const YAML::Node& value = entry.second;
        if (is_section(key)) {
            if (!value.IsMap()) {
                errors.push_back("section '" + key + "' must be a mapping");
                continue;
            }
            for (const auto& sub : value) apply(key + "." + sub.first.as<std::string>(), sub.second);
        } else if (key == "sweep") {
            if (!value.IsMap()) {
                errors.push_back("section 'sweep' must map keys to lists of values");
                continue;
            }
            for (const auto& sub : value) {
                SweepAxis axis{sub.first.as<std::string>(), {}};
                if (sub.second.IsSequence()) {
                    for (const auto& v : sub.second) {
                        if (v.IsScalar())
                            axis.values.push_back(scalar_of(v));
                        else
                            errors.push_back("sweep: values of '" + axis.key + "' must be scalars");
                    }
                } else if (sub.second.IsScalar()) {
                    axis.values.push_back(scalar_of(sub.second));
                } else {
                    errors.push_back("sweep: '" + axis.key + "' must be a list");
                }
                cfg.sweep.push_back(std::move(axis));
            }
        } else {
            apply(key, value);
        }
    }

    if (!have_n) errors.push_back("missing required key 'n_subcarriers'");
    if (!have_technique) errors.push_back("missing required key 'technique'");
    collect_validation(cfg, errors, have_n);
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read configuration file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& cfg)
{
    if (cfg.sweep.empty()) return {cfg};

    std::vector<std::string> errors;
    std::vector<std::string> qualified;
    for (const auto& axis : cfg.sweep) {
        const auto q = resolve_sweep_key(axis.key, cfg.technique);
        if (!q) errors.push_back("sweep: " + unknown_key_message(axis.key));
        if (axis.values.empty()) errors.push_back("sweep: key '" + axis.key + "' has no values");
        qualified.push_back(q.value_or(""));
    }
    if (!errors.empty()) throw ConfigError(std::move(errors));

    std::vector<ExperimentConfig> children;
    std::vector<std::size_t> pos(cfg.sweep.size(), 0);
    for (;;) {
        ExperimentConfig child = cfg;
        child.sweep.clear();
        std::string suffix;
        for (std::size_t a = 0; a < cfg.sweep.size(); ++a) {
            const std::string& value = cfg.sweep[a].values[pos[a]];
            set_key(child, qualified[a], value, errors);
            suffix += "_" + std::string(leaf(qualified[a])) + value;
        }
        child.label = (cfg.label.empty() ? std::string(to_string(cfg.technique)) : cfg.label) + suffix;
        collect_validation(child, errors);
        children.push_back(std::move(child));

        bool wrapped = true;
        for (std::size_t a = cfg.sweep.size(); a-- > 0;) {
            if (++pos[a] < cfg.sweep[a].values.size()) {
                wrapped = false;
                break;
            }
            pos[a] = 0;
        }
        if (wrapped) break;
    }
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return children;
}

std::string to_yaml(const ExperimentConfig& cfg)
{
    std::ostringstream out;
    std::string current_section;
    for (const auto& k : key_table()) {
        const auto value = k.get(cfg);
        if (!value) continue;
        const auto dot = k.name.find('.');
        if (dot == std::string::npos) {
            out << k.name << ": " << YAML::Node(*value) << "\n";
            continue;
        }
        const std::string section = k.name.substr(0, dot);
        if (section != "grid" && section != to_string(cfg.technique)) continue;
        if (section != current_section) {
            out << section << ":\n";
            current_section = section;
        }
        out << "  " << k.name.substr(dot + 1) << ": " << YAML::Node(*value) << "\n";
    }
    if (!cfg.sweep.empty()) {
        out << "sweep:\n";
        for (const auto& axis : cfg.sweep) {
            out << "  " << axis.key << ": [";
            for (std::size_t i = 0; i < axis.values.size(); ++i) out << (i ? ", " : "") << YAML::Node(axis.values[i]);
            out << "]\n";
        }
    }
    return out.str();
}

}  // namespace papr::bench
