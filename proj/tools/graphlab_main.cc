// graphlab: closed-form and simulated properties of weighted graph states.
//
//   graphlab analytic --star 4 --phi pi/2 --theta pi/2 --vertex 0
//   graphlab sweep --star 4 --vertex 0 --phi 0:pi:21 --theta 0:pi:21 --shots 10000 --out runs/e0
//   graphlab k14 --out runs/k14
//   graphlab compare runs/k14/e0.csv runs/k14/e0.csv --col-a analytic --col-b noisy

#include <cstdio>
#include <fstream>
#include <sstream>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "graphlab/analytic.h"
#include "graphlab/cli/sweep.h"
#include "json.hpp"

namespace {

using namespace graphlab;

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kConfigError = 2,
    kIoError = 3,
    kResourceError = 4,
};

struct GraphSource {
    std::string file;
    int star = -1;

    WeightedGraph load() const {
        if (!file.empty() && star >= 0) {
            throw ConfigError("use either --graph or --star, not both");
        }
        if (!file.empty()) {
            return load_graph_file(file);
        }
        if (star >= 0) {
            return star_graph(star, std::numbers::pi / 2, std::numbers::pi / 2);
        }
        throw ConfigError("a graph is required: --graph FILE or --star K");
    }

    std::string label() const {
        return file.empty() ? "star(" + std::to_string(star) + ")" : file;
    }
};

void add_graph_flags(CLI::App *cmd, GraphSource &src) {
    cmd->add_option("--graph", src.file, "Graph JSON file");
    cmd->add_option("--star", src.star, "Builtin star graph K_{1,K} with center 0")->check(CLI::NonNegativeNumber);
}

std::pair<Vertex, Vertex> parse_pair(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ConfigError("--pair expects L,M, got \"" + text + "\"");
    }
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception &) {
        throw ConfigError("--pair expects two integers, got \"" + text + "\"");
    }
}

std::vector<std::pair<PauliAxis, PauliAxis>> parse_axes(const std::string &text) {
    std::vector<std::pair<PauliAxis, PauliAxis>> out;
    if (text.empty() || text == "all") {
        for (auto a : kAllAxes) {
            for (auto b : kAllAxes) {
                out.emplace_back(a, b);
            }
        }
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto a = item.size() == 2 ? parse_axis(item[0]) : std::nullopt;
        auto b = item.size() == 2 ? parse_axis(item[1]) : std::nullopt;
        if (!a || !b) {
            throw ConfigError("axis pair must look like xy, got \"" + item + "\"");
        }
        out.emplace_back(*a, *b);
    }
    return out;
}

noise::NoiseModel parse_noise(const std::string &text) {
    if (text == "default") {
        return noise::NoiseModel::superconducting_default();
    }
    std::vector<double> v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw ConfigError("--noise expects readout,err1q,err2q, got \"" + text + "\"");
        }
    }
    if (v.size() != 3) {
        throw ConfigError("--noise expects three comma-separated probabilities");
    }
    noise::NoiseModel nm{v[0], v[1], v[2]};
    try {
        nm.validate();
    } catch (const DomainError &ex) {
        throw ConfigError(ex.what());
    }
    return nm;
}

std::string fmt(double v) {
    return nlohmann::json(v).dump();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Weighted graph states: entanglement and correlators, closed form and simulated"};
    app.set_version_flag("--version", GRAPHLAB_VERSION);
    app.require_subcommand(1);

    // analytic
    GraphSource an_graph;
    std::string an_phi, an_theta, an_pair, an_axes, an_format = "text";
    int an_vertex = 0;
    auto *an = app.add_subcommand("analytic", "Evaluate Bloch vector, GME and correlators in closed form");
    add_graph_flags(an, an_graph);
    an->add_option("--phi", an_phi, "Uniform vertex angle override (e.g. pi/2)");
    an->add_option("--theta", an_theta, "Uniform edge angle override");
    an->add_option("--vertex", an_vertex, "Vertex whose Bloch vector and GME are reported");
    an->add_option("--pair", an_pair, "Vertex pair L,M for correlators");
    an->add_option("--axes", an_axes, "Axis pairs, e.g. xx,yz (default: all nine)");
    an->add_option("--format", an_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // sweep
    GraphSource sw_graph;
    std::string sw_phi = "0:pi:21", sw_theta = "0:pi:21", sw_pair, sw_axes, sw_noise, sw_out = ".", sw_format = "csv";
    int sw_vertex = 0, sw_max_qubits = sim::kDefaultMaxQubits;
    std::uint64_t sw_shots = 0, sw_seed = 0;
    auto *sw = app.add_subcommand("sweep", "Evaluate a quantity over a (phi, theta) grid");
    add_graph_flags(sw, sw_graph);
    sw->add_option("--phi", sw_phi, "Vertex angle grid start:stop:points")->capture_default_str();
    sw->add_option("--theta", sw_theta, "Edge angle grid start:stop:points")->capture_default_str();
    sw->add_option("--vertex", sw_vertex, "GME target vertex (ignored with --pair)");
    sw->add_option("--pair", sw_pair, "Vertex pair L,M: sweep correlators instead of GME");
    sw->add_option("--axes", sw_axes, "Axis pairs for --pair, e.g. xx,yy,zz (default: all nine)");
    sw->add_option("--shots", sw_shots, "Shots per estimate; enables the ideal sampled column");
    sw->add_option("--seed", sw_seed, "Master seed")->capture_default_str();
    sw->add_option("--noise", sw_noise, "readout,err1q,err2q or 'default'; enables the noisy column");
    sw->add_option("--out", sw_out, "Output directory")->capture_default_str();
    sw->add_option("--format", sw_format, "csv, json or both")->capture_default_str();
    sw->add_option("--max-qubits", sw_max_qubits, "Largest statevector allowed")->capture_default_str();

    // k14
    std::string k_phi = "0:pi:21", k_theta = "0:pi:21", k_noise = "default", k_out = "k14", k_format = "csv";
    std::uint64_t k_shots = 10000, k_seed = 1;
    auto *k14 = app.add_subcommand("k14", "Star K_{1,4} experiment: E_0 and <s_0^a s_1^b> surfaces with differences");
    k14->add_option("--phi", k_phi, "Vertex angle grid")->capture_default_str();
    k14->add_option("--theta", k_theta, "Edge angle grid")->capture_default_str();
    k14->add_option("--shots", k_shots, "Shots per estimate")->capture_default_str();
    k14->add_option("--seed", k_seed, "Master seed")->capture_default_str();
    k14->add_option("--noise", k_noise, "readout,err1q,err2q")->capture_default_str();
    k14->add_option("--out", k_out, "Output directory")->capture_default_str();
    k14->add_option("--format", k_format, "csv, json or both")->capture_default_str();

    // compare
    std::string cmp_a, cmp_b, cmp_col_a = "analytic", cmp_col_b = "analytic", cmp_out;
    auto *cmp = app.add_subcommand("compare", "Per-point absolute differences between two sweep files");
    cmp->add_option("file_a", cmp_a, "First sweep file")->required();
    cmp->add_option("file_b", cmp_b, "Second sweep file")->required();
    cmp->add_option("--col-a", cmp_col_a, "Column of file_a: analytic, ideal or noisy")->capture_default_str();
    cmp->add_option("--col-b", cmp_col_b, "Column of file_b")->capture_default_str();
    cmp->add_option("--out", cmp_out, "Write the difference table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        if (*an) {
            WeightedGraph g = an_graph.load();
            if (!an_phi.empty() || !an_theta.empty()) {
                double phi = an_phi.empty() ? g.phi(0) : cli::parse_angle(an_phi);
                double theta = an_theta.empty() ? (g.edges().empty() ? 0.0 : g.edges()[0].theta)
                                                : cli::parse_angle(an_theta);
                g = make_uniform(g, phi, theta);
            }
            if (an_vertex < 0 || an_vertex >= g.n()) {
                throw ConfigError("--vertex " + std::to_string(an_vertex) + " is not in the graph");
            }
            nlohmann::ordered_json report;
            auto bv = analytic::bloch_vector(g, an_vertex);
            report["vertex"] = an_vertex;
            report["bloch"] = {bv.mx, bv.my, bv.mz};
            report["gme"] = analytic::gme(g, an_vertex);
            if (!an_pair.empty()) {
                auto [l, m] = parse_pair(an_pair);
                if (l < 0 || m < 0 || l >= g.n() || m >= g.n() || l == m) {
                    throw ConfigError("--pair needs two distinct vertices of the graph");
                }
                report["pair"] = {l, m};
                for (auto [a, b] : parse_axes(an_axes)) {
                    report["correlators"][std::string{axis_char(a), axis_char(b)}] = analytic::correlator(g, l, m, a, b);
                }
            }
            if (an_format == "json") {
                std::cout << report.dump(2) << "\n";
            } else {
                std::cout << "vertex " << an_vertex << "\n";
                std::cout << "bloch " << fmt(bv.mx) << " " << fmt(bv.my) << " " << fmt(bv.mz) << "\n";
                std::cout << "gme " << fmt(report["gme"].get<double>()) << "\n";
                if (report.contains("correlators")) {
                    for (auto &[k, v] : report["correlators"].items()) {
                        std::cout << "corr_" << k << " " << fmt(v.get<double>()) << "\n";
                    }
                }
            }
        } else if (*sw) {
            cli::SweepConfig cfg;
            cfg.structure = sw_graph.load();
            cfg.graph_label = sw_graph.label();
            cfg.phi = cli::parse_range(sw_phi);
            cfg.theta = cli::parse_range(sw_theta);
            cfg.seed = sw_seed;
            cfg.max_qubits = sw_max_qubits;
            if (sw->count("--shots")) {
                cfg.shots = sw_shots;
            }
            if (!sw_noise.empty()) {
                cfg.noise = parse_noise(sw_noise);
            }
            auto format = cli::parse_format(sw_format);
            std::vector<cli::SurfaceSpec> surfaces;
            if (sw_pair.empty()) {
                surfaces.push_back(cli::SurfaceSpec::gme("gme_v" + std::to_string(sw_vertex), sw_vertex));
            } else {
                auto [l, m] = parse_pair(sw_pair);
                for (auto [a, b] : parse_axes(sw_axes)) {
                    surfaces.push_back(cli::SurfaceSpec::correlator(
                        "corr" + std::to_string(l) + "_" + std::to_string(m) + "_" + axis_char(a) + axis_char(b), l, m,
                        a, b));
                }
            }
            for (const auto &s : surfaces) {
                auto result = cli::run_sweep(cfg, s);
                for (const auto &path : cli::write_sweep(result, sw_out, format)) {
                    std::cout << "wrote " << path << "\n";
                }
                std::cout << "summary " << result.name << " points=" << result.rows.size()
                          << " max_d_ideal=" << fmt(result.max_d_ideal()) << " max_d_noisy=" << fmt(result.max_d_noisy())
                          << "\n";
            }
        } else if (*k14) {
            cli::K14Options opt;
            opt.phi = cli::parse_range(k_phi);
            opt.theta = cli::parse_range(k_theta);
            opt.shots = k_shots;
            opt.seed = k_seed;
            opt.noise = parse_noise(k_noise);
            auto bundle = cli::run_k14(opt, k_out, cli::parse_format(k_format));
            for (const auto &path : bundle.files) {
                std::cout << "wrote " << path << "\n";
            }
            for (const auto &r : bundle.surfaces) {
                std::cout << "summary " << r.name << " max_d_ideal=" << fmt(r.max_d_ideal())
                          << " max_d_noisy=" << fmt(r.max_d_noisy()) << "\n";
            }
        } else if (*cmp) {
            auto a = cli::read_sweep(cmp_a);
            auto b = cli::read_sweep(cmp_b);
            auto result = cli::compare(a, b, cmp_col_a, cmp_col_b);
            auto table = cli::compare_to_csv(result);
            if (cmp_out.empty()) {
                std::cout << table;
            } else {
                std::ofstream out(cmp_out, std::ios::binary);
                if (!(out << table)) {
                    throw IoError("cannot write " + cmp_out);
                }
            }
            std::cout << "summary points=" << result.rows.size() << " max=" << fmt(result.max)
                      << " mean=" << fmt(result.mean) << "\n";
        }
    } catch (const ResourceError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kResourceError;
    } catch (const IoError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument &ex) {
        // ConfigError, DomainError and GraphParseError
        std::cerr << "error: " << ex.what() << "\n";
        return kConfigError;
    } catch (const std::exception &ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kInternalError;
    }
    return kOk;
}
