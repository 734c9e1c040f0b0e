// config.hpp — Experiment configuration: line-oriented key = value files with
// documented defaults and strict validation.

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinbath/format.hpp"
#include "spinbath/model.hpp"
#include "spinbath/states.hpp"

namespace spinbath {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct ZenoConfig {
    std::vector<int> n_list;        // measurement counts to sweep
    std::optional<double> total_time; // override for the default 2*pi/lambda_0
    std::optional<double> lambda_intra; // override; defaults to first sweep lambda
};

struct ExperimentConfig {
    ModelParams params;                       // lambda_intra / lambda_sb filled per sweep point
    std::vector<double> lambda_list = {0.0, 1.0, 2.0, 10.0};
    std::vector<double> lambda0_list = {0.1, 1.0};
    SystemStateSpec state;                    // default: bell
    std::vector<std::pair<int, int>> topology_edges; // empty = default topology
    double t_max = 50.0;
    double dt = 0.05;
    SystemHamiltonianForm system_form = SystemHamiltonianForm::sum;
    std::optional<ZenoConfig> zeno;
    std::string output_dir = "out";
    OutputFormat format = OutputFormat::csv;

    void validate() const {
        params.validate();
        if (!(dt > 0.0) || !(t_max > 0.0)) {
            throw ConfigError("config: t_max and dt must be > 0");
        }
        if (lambda_list.empty() || lambda0_list.empty()) {
            throw ConfigError("config: lambda and lambda0 lists must be non-empty");
        }
        for (double l0 : lambda0_list) {
            if (!std::isfinite(l0)) throw ConfigError("config: non-finite lambda0");
        }
        if (zeno) {
            if (zeno->n_list.empty()) throw ConfigError("config: zeno.n_list must be non-empty");
            for (int n : zeno->n_list) {
                if (n < 1) throw ConfigError("config: zeno.n_list entries must be >= 1");
            }
        }
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline double parse_real(std::string_view v, int line) {
    const std::string s(trim(v));
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(out)) {
        throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + s + "'");
    }
    return out;
}

inline std::vector<std::string_view> split_list(std::string_view v, int line) {
    v = trim(v);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
        throw ConfigError("line " + std::to_string(line) + ": expected a list [a, b, ...]");
    }
    v = v.substr(1, v.size() - 2);
    std::vector<std::string_view> items;
    while (!trim(v).empty()) {
        const auto comma = v.find(',');
        items.push_back(trim(v.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        v = v.substr(comma + 1);
    }
    return items;
}

inline std::vector<double> parse_real_list(std::string_view v, int line) {
    std::vector<double> out;
    for (auto item : split_list(v, line)) out.push_back(parse_real(item, line));
    return out;
}

inline std::vector<int> parse_int_list(std::string_view v, int line) {
    std::vector<int> out;
    for (auto item : split_list(v, line)) {
        const double r = parse_real(item, line);
        const int n = static_cast<int>(std::llround(r));
        if (r != n) {
            throw ConfigError("line " + std::to_string(line) + ": expected an integer");
        }
        out.push_back(n);
    }
    return out;
}

// Pairs written as "s:b", e.g. topology = [1:3, 1:4, 2:5]
inline std::vector<std::pair<int, int>> parse_pair_list(std::string_view v, int line) {
    std::vector<std::pair<int, int>> out;
    for (auto item : split_list(v, line)) {
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line) + ": expected site pairs like 1:3");
        }
        out.emplace_back(static_cast<int>(parse_real(item.substr(0, colon), line)),
                         static_cast<int>(parse_real(item.substr(colon + 1), line)));
    }
    return out;
}

} // namespace detail

inline ExperimentConfig parse_config(const std::string& text) {
    using detail::trim;
    ExperimentConfig cfg;
    bool zeno_seen = false;
    ZenoConfig zeno;
    std::vector<double> amps_re, amps_im;
    bool custom_amps = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view sv(raw);
        const auto hash = sv.find('#');
        if (hash != std::string_view::npos) sv = sv.substr(0, hash);
        sv = trim(sv);
        if (sv.empty()) continue;

        const auto eq = sv.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        }
        const std::string key{trim(sv.substr(0, eq))};
        const std::string_view val = trim(sv.substr(eq + 1));

        if (key == "omega_s") cfg.params.omega_s = detail::parse_real(val, line);
        else if (key == "omega_b1_1") cfg.params.omega_b1_1 = detail::parse_real(val, line);
        else if (key == "omega_b1_2") cfg.params.omega_b1_2 = detail::parse_real(val, line);
        else if (key == "omega_b2") cfg.params.omega_b2 = detail::parse_real(val, line);
        else if (key == "beta") cfg.params.beta_field = detail::parse_real(val, line);
        else if (key == "temperature") {
            cfg.params.temperature = detail::parse_real(val, line);
            if (!(cfg.params.temperature > 0.0)) {
                throw ConfigError("line " + std::to_string(line) + ": temperature must be > 0");
            }
        }
        else if (key == "lambda") cfg.lambda_list = detail::parse_real_list(val, line);
        else if (key == "lambda0") cfg.lambda0_list = detail::parse_real_list(val, line);
        else if (key == "t_max") cfg.t_max = detail::parse_real(val, line);
        else if (key == "dt") cfg.dt = detail::parse_real(val, line);
        else if (key == "state.kind") {
            if (val == "bell") cfg.state = SystemStateSpec::bell();
            else if (val == "partial") cfg.state = SystemStateSpec::partial();
            else if (val == "partial-perturbed") cfg.state = SystemStateSpec::partial_perturbed();
            else if (val == "custom") cfg.state.kind = SystemStateKind::custom;
            else throw ConfigError("line " + std::to_string(line) + ": unknown state kind '" + std::string(val) + "'");
        }
        else if (key == "state.alpha") cfg.state.alpha = detail::parse_real(val, line);
        else if (key == "state.delta") cfg.state.delta = detail::parse_real(val, line);
        else if (key == "state.epsilon") cfg.state.epsilon = detail::parse_real(val, line);
        else if (key == "state.amplitudes_re") { amps_re = detail::parse_real_list(val, line); custom_amps = true; }
        else if (key == "state.amplitudes_im") { amps_im = detail::parse_real_list(val, line); custom_amps = true; }
        else if (key == "topology") cfg.topology_edges = detail::parse_pair_list(val, line);
        else if (key == "system_hamiltonian") {
            if (val == "sum") cfg.system_form = SystemHamiltonianForm::sum;
            else if (val == "literal-product") cfg.system_form = SystemHamiltonianForm::literal_product;
            else throw ConfigError("line " + std::to_string(line) + ": system_hamiltonian must be sum or literal-product");
        }
        else if (key == "zeno.n_list") { zeno.n_list = detail::parse_int_list(val, line); zeno_seen = true; }
        else if (key == "zeno.total_time") { zeno.total_time = detail::parse_real(val, line); zeno_seen = true; }
        else if (key == "zeno.lambda") { zeno.lambda_intra = detail::parse_real(val, line); zeno_seen = true; }
        else if (key == "output.dir") cfg.output_dir = std::string(val);
        else if (key == "output.format") {
            if (val == "csv") cfg.format = OutputFormat::csv;
            else if (val == "json") cfg.format = OutputFormat::json;
            else throw ConfigError("line " + std::to_string(line) + ": output.format must be csv or json");
        }
        else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }

    if (custom_amps) {
        if (amps_re.size() != 4) {
            throw ConfigError("config: state.amplitudes_re must have 4 entries");
        }
        if (amps_im.empty()) amps_im.assign(4, 0.0);
        if (amps_im.size() != 4) {
            throw ConfigError("config: state.amplitudes_im must have 4 entries");
        }
        Vector amps(4);
        for (int i = 0; i < 4; ++i) amps(i) = Complex(amps_re[i], amps_im[i]);
        cfg.state.kind = SystemStateKind::custom;
        cfg.state.custom_amplitudes = amps;
    }
    if (zeno_seen) {
        if (zeno.n_list.empty()) {
            throw ConfigError("config: zeno section requires zeno.n_list");
        }
        cfg.zeno = zeno;
    }

    cfg.validate();
    return cfg;
}

inline std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    auto list = [&](const auto& xs, auto render) {
        std::string s = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ", ";
            s += render(xs[i]);
        }
        return s + "]";
    };
    auto real_item = [](double v) { return format_real(v); };

    out << "omega_s = " << format_real(cfg.params.omega_s) << '\n'
        << "omega_b1_1 = " << format_real(cfg.params.omega_b1_1) << '\n'
        << "omega_b1_2 = " << format_real(cfg.params.omega_b1_2) << '\n'
        << "omega_b2 = " << format_real(cfg.params.omega_b2) << '\n'
        << "beta = " << format_real(cfg.params.beta_field) << '\n'
        << "temperature = " << format_real(cfg.params.temperature) << '\n'
        << "lambda = " << list(cfg.lambda_list, real_item) << '\n'
        << "lambda0 = " << list(cfg.lambda0_list, real_item) << '\n'
        << "t_max = " << format_real(cfg.t_max) << '\n'
        << "dt = " << format_real(cfg.dt) << '\n';

    switch (cfg.state.kind) {
        case SystemStateKind::bell: out << "state.kind = bell\n"; break;
        case SystemStateKind::partial: out << "state.kind = partial\n"; break;
        case SystemStateKind::partial_perturbed: out << "state.kind = partial-perturbed\n"; break;
        case SystemStateKind::custom: out << "state.kind = custom\n"; break;
    }
    out << "state.alpha = " << format_real(cfg.state.alpha) << '\n'
        << "state.delta = " << format_real(cfg.state.delta) << '\n'
        << "state.epsilon = " << format_real(cfg.state.epsilon) << '\n';
    if (cfg.state.custom_amplitudes) {
        std::vector<double> re(4), im(4);
        for (int i = 0; i < 4; ++i) {
            re[i] = (*cfg.state.custom_amplitudes)(i).real();
            im[i] = (*cfg.state.custom_amplitudes)(i).imag();
        }
        out << "state.amplitudes_re = " << list(re, real_item) << '\n'
            << "state.amplitudes_im = " << list(im, real_item) << '\n';
    }
    if (!cfg.topology_edges.empty()) {
        out << "topology = " << list(cfg.topology_edges, [](const std::pair<int, int>& e) {
            return std::to_string(e.first) + ":" + std::to_string(e.second);
        }) << '\n';
    }
    out << "system_hamiltonian = "
        << (cfg.system_form == SystemHamiltonianForm::sum ? "sum" : "literal-product") << '\n';
    if (cfg.zeno) {
        out << "zeno.n_list = " << list(cfg.zeno->n_list, [](int n) { return std::to_string(n); }) << '\n';
        if (cfg.zeno->total_time) out << "zeno.total_time = " << format_real(*cfg.zeno->total_time) << '\n';
        if (cfg.zeno->lambda_intra) out << "zeno.lambda = " << format_real(*cfg.zeno->lambda_intra) << '\n';
    }
    out << "output.dir = " << cfg.output_dir << '\n'
        << "output.format = " << (cfg.format == OutputFormat::csv ? "csv" : "json") << '\n';
    return out.str();
}

} // namespace spinbath
