#include "graphlab/cli/sweep.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <mutex>
#include <numbers>
#include <thread>

#include "graphlab/analytic.h"
#include "graphlab/simcore/sampling.h"

namespace graphlab::cli {

namespace {

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_number(const std::string &s, const std::string &context) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ConfigError("cannot read a number from \"" + context + "\"");
    }
    return v;
}

}  // namespace

std::vector<double> GridRange::values() const {
    std::vector<double> out(points);
    for (int i = 0; i < points; i++) {
        out[i] = points == 1 ? start : start + (stop - start) * i / (points - 1);
    }
    if (points > 1) {
        out.back() = stop;
    }
    return out;
}

void GridRange::validate(const char *what) const {
    if (points < 1) {
        throw ConfigError(std::string(what) + " range needs at least one point");
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw ConfigError(std::string(what) + " range must be finite");
    }
}

double parse_angle(const std::string &raw) {
    std::string text = trim(raw);
    auto pos = text.find("pi");
    if (pos == std::string::npos) {
        return parse_number(text, raw);
    }
    std::string coef = text.substr(0, pos);
    std::string rest = text.substr(pos + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double c = 1;
    if (coef == "-") {
        c = -1;
    } else if (!coef.empty() && coef != "+") {
        c = parse_number(coef[0] == '+' ? coef.substr(1) : coef, raw);
    }
    double den = 1;
    if (!rest.empty()) {
        if (rest[0] != '/') {
            throw ConfigError("cannot read an angle from \"" + raw + "\"");
        }
        den = parse_number(rest.substr(1), raw);
        if (den == 0) {
            throw ConfigError("division by zero in angle \"" + raw + "\"");
        }
    }
    return c * std::numbers::pi / den;
}

GridRange parse_range(const std::string &text) {
    auto first = text.find(':');
    if (first == std::string::npos) {
        double v = parse_angle(text);
        return {v, v, 1};
    }
    auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
        throw ConfigError("range must look like start:stop:points, got \"" + text + "\"");
    }
    GridRange r;
    r.start = parse_angle(text.substr(0, first));
    r.stop = parse_angle(text.substr(first + 1, second - first - 1));
    double pts = parse_number(trim(text.substr(second + 1)), text);
    if (pts != std::floor(pts) || pts < 1 || pts > 1e6) {
        throw ConfigError("range point count must be a positive integer, got \"" + text + "\"");
    }
    r.points = static_cast<int>(pts);
    return r;
}

SurfaceSpec SurfaceSpec::gme(std::string name, Vertex l) {
    SurfaceSpec s;
    s.name = std::move(name);
    s.kind = Kind::kGme;
    s.l = l;
    return s;
}

SurfaceSpec SurfaceSpec::correlator(std::string name, Vertex l, Vertex m, PauliAxis a, PauliAxis b) {
    SurfaceSpec s;
    s.name = std::move(name);
    s.kind = Kind::kCorrelator;
    s.l = l;
    s.m = m;
    s.a = a;
    s.b = b;
    return s;
}

std::string SurfaceSpec::key() const {
    if (kind == Kind::kGme) {
        return "gme(" + std::to_string(l) + ")";
    }
    return std::string("corr(") + std::to_string(l) + "," + std::to_string(m) + ";" + axis_char(a) + axis_char(b) + ")";
}

void SweepConfig::validate(const SurfaceSpec &surface) const {
    phi.validate("phi");
    theta.validate("theta");
    const int n = structure.n();
    auto check_vertex = [n](Vertex v) {
        if (v < 0 || v >= n) {
            throw ConfigError("vertex " + std::to_string(v) + " is not in a graph with " + std::to_string(n) + " vertices");
        }
    };
    check_vertex(surface.l);
    if (surface.kind == SurfaceSpec::Kind::kCorrelator) {
        check_vertex(surface.m);
        if (surface.l == surface.m) {
            throw ConfigError("a correlator needs two distinct vertices");
        }
    }
    if (shots && *shots == 0) {
        throw ConfigError("shots must be at least 1");
    }
    if (noise) {
        if (!shots) {
            throw ConfigError("a noise model needs a shot count");
        }
        try {
            noise->validate();
        } catch (const DomainError &ex) {
            throw ConfigError(ex.what());
        }
    }
    if (shots && n > max_qubits) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, more than --max-qubits " +
                            std::to_string(max_qubits));
    }
}

int resolve_thread_count(int requested, std::size_t work_items) {
    long count = requested;
    if (count <= 0) {
        count = std::max(1u, std::thread::hardware_concurrency());
        if (const char *env = std::getenv("GRAPHLAB_THREADS")) {
            long cap = std::strtol(env, nullptr, 10);
            if (cap >= 1) {
                count = std::min(count, cap);
            }
        }
    }
    count = std::min<long>(count, static_cast<long>(std::max<std::size_t>(work_items, 1)));
    return static_cast<int>(std::max(1L, count));
}

SweepResult run_sweep(const SweepConfig &cfg, const SurfaceSpec &surface) {
    cfg.validate(surface);
    const auto phis = cfg.phi.values();
    const auto thetas = cfg.theta.values();
    const std::size_t total = phis.size() * thetas.size();
    const std::uint64_t surface_seed = derive_seed(cfg.seed, fnv1a(surface.key()));

    SweepResult result;
    result.name = surface.name;
    result.quantity = surface.key();
    result.graph_label = cfg.graph_label;
    result.seed = cfg.seed;
    result.shots = cfg.shots;
    result.noise = cfg.noise;
    result.rows.resize(total);

    auto evaluate = [&](std::size_t index) {
        SweepRow &row = result.rows[index];
        row.phi = phis[index / thetas.size()];
        row.theta = thetas[index % thetas.size()];
        const WeightedGraph g = make_uniform(cfg.structure, row.phi, row.theta);
        const std::uint64_t point_seed = derive_seed(surface_seed, index);
        auto slot = [&](std::uint64_t s) { return derive_seed(point_seed, s); };

        if (surface.kind == SurfaceSpec::Kind::kGme) {
            row.analytic = analytic::gme(g, surface.l);
        } else {
            row.analytic = analytic::correlator(g, surface.l, surface.m, surface.a, surface.b);
        }
        if (!cfg.shots) {
            return;
        }

        const auto circuit = sim::build_graph_circuit(g);
        const std::uint64_t shots = *cfg.shots;
        if (surface.kind == SurfaceSpec::Kind::kGme) {
            double m[3];
            for (int k = 0; k < 3; k++) {
                m[k] = sim::estimate_pauli_mean(circuit, surface.l, kAllAxes[k], shots, slot(k), cfg.max_qubits);
            }
            row.ideal = sim::gme_from_means(m[0], m[1], m[2]);
        } else {
            row.ideal = sim::estimate_correlator(circuit, surface.l, surface.m, surface.a, surface.b, shots, slot(0),
                                                 cfg.max_qubits);
        }
        row.d_ideal = std::abs(row.analytic - *row.ideal);

        if (!cfg.noise) {
            return;
        }
        const auto basis = noise::transpile(circuit);
        if (surface.kind == SurfaceSpec::Kind::kGme) {
            double m[3];
            for (int k = 0; k < 3; k++) {
                m[k] = noise::noisy_estimate_pauli_mean(basis, *cfg.noise, surface.l, kAllAxes[k], {shots, slot(3 + k)},
                                                        cfg.max_qubits);
            }
            row.noisy = sim::gme_from_means(m[0], m[1], m[2]);
        } else {
            row.noisy = noise::noisy_estimate_correlator(basis, *cfg.noise, surface.l, surface.m, surface.a, surface.b,
                                                         {shots, slot(1)}, cfg.max_qubits);
        }
        row.d_noisy = std::abs(row.analytic - *row.noisy);
    };

    const int workers = resolve_thread_count(cfg.threads, total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            try {
                evaluate(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = total;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return result;
}

double SweepResult::max_d_ideal() const {
    double out = 0;
    for (const auto &r : rows) {
        out = std::max(out, r.d_ideal.value_or(0));
    }
    return out;
}

double SweepResult::max_d_noisy() const {
    double out = 0;
    for (const auto &r : rows) {
        out = std::max(out, r.d_noisy.value_or(0));
    }
    return out;
}

std::vector<SurfaceSpec> k14_surfaces() {
    std::vector<SurfaceSpec> out = {SurfaceSpec::gme("e0", 0)};
    for (PauliAxis a : kAllAxes) {
        for (PauliAxis b : kAllAxes) {
            out.push_back(SurfaceSpec::correlator(std::string("corr01_") + axis_char(a) + axis_char(b), 0, 1, a, b));
        }
    }
    return out;
}

K14Bundle run_k14(const K14Options &opt, const std::string &out_dir, OutputFormat fmt) {
    SweepConfig cfg;
    cfg.structure = star_graph(4, 0, 0);
    cfg.graph_label = "star(4)";
    cfg.phi = opt.phi;
    cfg.theta = opt.theta;
    cfg.shots = opt.shots;
    cfg.seed = opt.seed;
    cfg.noise = opt.noise;
    cfg.threads = opt.threads;

    K14Bundle bundle;
    for (const auto &surface : k14_surfaces()) {
        bundle.surfaces.push_back(run_sweep(cfg, surface));
    }
    if (!out_dir.empty()) {
        for (const auto &r : bundle.surfaces) {
            auto f = write_sweep(r, out_dir, fmt);
            bundle.files.insert(bundle.files.end(), f.begin(), f.end());
        }
        for (const auto &r : bundle.surfaces) {
            auto f = write_difference(r, out_dir, fmt);
            bundle.files.insert(bundle.files.end(), f.begin(), f.end());
        }
    }
    return bundle;
}

}  // namespace graphlab::cli
