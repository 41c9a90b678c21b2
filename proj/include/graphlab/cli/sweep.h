#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/graph.h"
#include "graphlab/noise/noise_model.h"
#include "graphlab/pauli.h"

namespace graphlab::cli {

/// Inclusive grid start..stop with `points` samples (points == 1 gives start).
struct GridRange {
    double start = 0;
    double stop = 0;
    int points = 1;

    std::vector<double> values() const;
    void validate(const char *what) const;
};

/// Parses "a:b:n" or a single angle "a". Angles accept plain numbers and
/// multiples of pi such as "pi", "-pi/2", "3pi/4", "0.5*pi".
GridRange parse_range(const std::string &text);
double parse_angle(const std::string &text);

/// One plotted quantity: the GME of a vertex or one two-qubit correlator.
struct SurfaceSpec {
    enum class Kind { kGme, kCorrelator };

    std::string name;
    Kind kind = Kind::kGme;
    Vertex l = 0;
    Vertex m = -1;
    PauliAxis a = PauliAxis::kZ;
    PauliAxis b = PauliAxis::kZ;

    static SurfaceSpec gme(std::string name, Vertex l);
    static SurfaceSpec correlator(std::string name, Vertex l, Vertex m, PauliAxis a, PauliAxis b);

    /// Stable description, also used to derive per-surface RNG streams.
    std::string key() const;
};

struct SweepConfig {
    WeightedGraph structure = WeightedGraph(1, {0.0}, {});
    std::string graph_label = "graph";
    GridRange phi{0, 3.141592653589793, 21};
    GridRange theta{0, 3.141592653589793, 21};
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    std::optional<noise::NoiseModel> noise;
    int max_qubits = 24;
    /// 0 means GRAPHLAB_THREADS or the hardware concurrency.
    int threads = 0;

    /// Throws ConfigError with a specific message; ResourceError when the
    /// graph exceeds max_qubits and sampling is requested.
    void validate(const SurfaceSpec &surface) const;
};

struct SweepRow {
    double phi;
    double theta;
    double analytic;
    std::optional<double> ideal;
    std::optional<double> noisy;
    std::optional<double> d_ideal;
    std::optional<double> d_noisy;
};

struct SweepResult {
    std::string name;
    std::string quantity;
    std::string graph_label;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    std::optional<noise::NoiseModel> noise;
    std::vector<SweepRow> rows;

    double max_d_ideal() const;
    double max_d_noisy() const;
};

/// Evaluates one surface over the (phi, theta) grid, phi-outer. At each
/// point the graph structure is made uniform with that (phi, theta). Grid
/// points run in parallel; every estimate draws from a stream derived from
/// (seed, surface key, point index, estimator slot), so results do not
/// depend on thread count.
SweepResult run_sweep(const SweepConfig &cfg, const SurfaceSpec &surface);

int resolve_thread_count(int requested, std::size_t work_items);

enum class OutputFormat { kCsv, kJson, kBoth };

OutputFormat parse_format(const std::string &text);

/// Writes `<dir>/<result.name>.csv` and/or `.json`; returns the paths.
std::vector<std::string> write_sweep(const SweepResult &r, const std::string &dir, OutputFormat fmt);
/// Writes `<dir>/<result.name>_diff.{csv,json}` holding d_ideal and d_noisy.
std::vector<std::string> write_difference(const SweepResult &r, const std::string &dir, OutputFormat fmt);

std::string sweep_to_csv(const SweepResult &r, const std::string &timestamp);
std::string sweep_to_json(const SweepResult &r, const std::string &timestamp);
SweepResult sweep_from_csv(const std::string &text);
SweepResult sweep_from_json(const std::string &text);
/// Dispatches on the file extension (.json, anything else is CSV).
SweepResult read_sweep(const std::string &path);

/// Marker carried by the single non-deterministic line of every output file.
inline constexpr const char *kTimestampKey = "timestamp";

struct CompareRow {
    double phi;
    double theta;
    double a;
    double b;
    double d;
};

struct CompareResult {
    std::vector<CompareRow> rows;
    double max = 0;
    double mean = 0;
};

/// Per-point |a - b| between column `col_a` of `a` and `col_b` of `b`.
/// Columns: analytic, ideal, noisy. Throws ConfigError when the grids
/// differ or a requested column is empty.
CompareResult compare(const SweepResult &a, const SweepResult &b, const std::string &col_a = "analytic",
                      const std::string &col_b = "analytic");
std::string compare_to_csv(const CompareResult &c);

struct K14Options {
    GridRange phi{0, 3.141592653589793, 21};
    GridRange theta{0, 3.141592653589793, 21};
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    noise::NoiseModel noise = noise::NoiseModel::superconducting_default();
    int threads = 0;
};

/// Surfaces of the K_{1,4} experiment: E_0 and the nine <sigma_0^a sigma_1^b>.
std::vector<SurfaceSpec> k14_surfaces();

struct K14Bundle {
    std::vector<SweepResult> surfaces;
    std::vector<std::string> files;
};

/// Runs all ten surfaces; writes 10 sweep files and 10 difference files per
/// format when `out_dir` is non-empty.
K14Bundle run_k14(const K14Options &opt, const std::string &out_dir, OutputFormat fmt);

std::string current_timestamp();

}  // namespace graphlab::cli
