#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphlab/cli/sweep.h"
#include "json.hpp"

namespace graphlab::cli {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fmt_opt(const std::optional<double> &v) {
    return v ? fmt_double(*v) : std::string();
}

std::string noise_text(const std::optional<noise::NoiseModel> &nm) {
    if (!nm) {
        return "none";
    }
    return fmt_double(nm->readout_flip) + "," + fmt_double(nm->err_1q) + "," + fmt_double(nm->err_2q);
}

std::string sanitize(std::string s) {
    for (auto &c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            c = '_';
        }
    }
    return s;
}

std::string metadata_line(const SweepResult &r, const char *kind) {
    std::ostringstream out;
    out << "# graphlab " << kind << " name=" << sanitize(r.name) << " quantity=" << r.quantity
        << " graph=" << sanitize(r.graph_label) << " seed=" << r.seed
        << " shots=" << (r.shots ? std::to_string(*r.shots) : std::string("none")) << " noise=" << noise_text(r.noise)
        << " version=" << GRAPHLAB_VERSION << "\n";
    return out.str();
}

json metadata_json(const SweepResult &r, const char *kind) {
    json m;
    m["kind"] = kind;
    m["name"] = r.name;
    m["quantity"] = r.quantity;
    m["graph"] = r.graph_label;
    m["seed"] = r.seed;
    m["shots"] = r.shots ? json(*r.shots) : json(nullptr);
    if (r.noise) {
        m["noise"] = {{"readout_flip", r.noise->readout_flip}, {"err_1q", r.noise->err_1q}, {"err_2q", r.noise->err_2q}};
    } else {
        m["noise"] = nullptr;
    }
    m["version"] = GRAPHLAB_VERSION;
    return m;
}

json opt_json(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<double> parse_cell(const std::string &cell) {
    if (cell.empty()) {
        return std::nullopt;
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ConfigError("bad number \"" + cell + "\" in sweep file");
    }
    return v;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::string difference_csv(const SweepResult &r, const std::string &timestamp) {
    std::ostringstream out;
    out << metadata_line(r, "difference");
    out << "# " << kTimestampKey << "=" << timestamp << " (non-deterministic)\n";
    out << "phi,theta,d_ideal,d_noisy\n";
    for (const auto &row : r.rows) {
        out << fmt_double(row.phi) << "," << fmt_double(row.theta) << "," << fmt_opt(row.d_ideal) << ","
            << fmt_opt(row.d_noisy) << "\n";
    }
    return out.str();
}

std::string difference_json(const SweepResult &r, const std::string &timestamp) {
    std::ostringstream out;
    out << "{\n\"" << kTimestampKey << "\": " << json(timestamp).dump() << ",\n";
    out << "\"metadata\": " << metadata_json(r, "difference").dump() << ",\n";
    out << "\"columns\": [\"phi\",\"theta\",\"d_ideal\",\"d_noisy\"],\n\"rows\": [\n";
    for (std::size_t i = 0; i < r.rows.size(); i++) {
        const auto &row = r.rows[i];
        json j = {{"phi", row.phi}, {"theta", row.theta}, {"d_ideal", opt_json(row.d_ideal)},
                  {"d_noisy", opt_json(row.d_noisy)}};
        out << j.dump() << (i + 1 < r.rows.size() ? ",\n" : "\n");
    }
    out << "]\n}\n";
    return out.str();
}

std::vector<std::string> write_pair(const std::string &dir, const std::string &stem, OutputFormat fmt,
                                    const std::string &csv, const std::string &js) {
    std::filesystem::path base(dir);
    std::error_code ec;
    std::filesystem::create_directories(base, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir + ": " + ec.message());
    }
    std::vector<std::string> out;
    if (fmt != OutputFormat::kJson) {
        auto p = base / (stem + ".csv");
        write_text(p, csv);
        out.push_back(p.string());
    }
    if (fmt != OutputFormat::kCsv) {
        auto p = base / (stem + ".json");
        write_text(p, js);
        out.push_back(p.string());
    }
    return out;
}

std::optional<double> column(const SweepRow &row, const std::string &name) {
    if (name == "analytic") {
        return row.analytic;
    }
    if (name == "ideal") {
        return row.ideal;
    }
    if (name == "noisy") {
        return row.noisy;
    }
    throw ConfigError("unknown column \"" + name + "\" (expected analytic, ideal or noisy)");
}

}  // namespace

std::string current_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

OutputFormat parse_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::kCsv;
    }
    if (text == "json") {
        return OutputFormat::kJson;
    }
    if (text == "both") {
        return OutputFormat::kBoth;
    }
    throw ConfigError("format must be csv, json or both, got \"" + text + "\"");
}

std::string sweep_to_csv(const SweepResult &r, const std::string &timestamp) {
    std::ostringstream out;
    out << metadata_line(r, "sweep");
    out << "# " << kTimestampKey << "=" << timestamp << " (non-deterministic)\n";
    out << "phi,theta,analytic,ideal,noisy,d_ideal,d_noisy\n";
    for (const auto &row : r.rows) {
        out << fmt_double(row.phi) << "," << fmt_double(row.theta) << "," << fmt_double(row.analytic) << ","
            << fmt_opt(row.ideal) << "," << fmt_opt(row.noisy) << "," << fmt_opt(row.d_ideal) << ","
            << fmt_opt(row.d_noisy) << "\n";
    }
    return out.str();
}

std::string sweep_to_json(const SweepResult &r, const std::string &timestamp) {
    std::ostringstream out;
    out << "{\n\"" << kTimestampKey << "\": " << json(timestamp).dump() << ",\n";
    out << "\"metadata\": " << metadata_json(r, "sweep").dump() << ",\n";
    out << "\"columns\": [\"phi\",\"theta\",\"analytic\",\"ideal\",\"noisy\",\"d_ideal\",\"d_noisy\"],\n";
    out << "\"rows\": [\n";
    for (std::size_t i = 0; i < r.rows.size(); i++) {
        const auto &row = r.rows[i];
        json j = {{"phi", row.phi},
                  {"theta", row.theta},
                  {"analytic", row.analytic},
                  {"ideal", opt_json(row.ideal)},
                  {"noisy", opt_json(row.noisy)},
                  {"d_ideal", opt_json(row.d_ideal)},
                  {"d_noisy", opt_json(row.d_noisy)}};
        out << j.dump() << (i + 1 < r.rows.size() ? ",\n" : "\n");
    }
    out << "]\n}\n";
    return out.str();
}

SweepResult sweep_from_csv(const std::string &text) {
    SweepResult r;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            for (const auto &tok : split(line, ' ')) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    continue;
                }
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "name") {
                    r.name = val;
                } else if (key == "quantity") {
                    r.quantity = val;
                } else if (key == "graph") {
                    r.graph_label = val;
                } else if (key == "seed") {
                    r.seed = std::stoull(val);
                } else if (key == "shots" && val != "none") {
                    r.shots = std::stoull(val);
                } else if (key == "noise" && val != "none") {
                    auto parts = split(val, ',');
                    if (parts.size() == 3) {
                        r.noise = noise::NoiseModel{*parse_cell(parts[0]), *parse_cell(parts[1]), *parse_cell(parts[2])};
                    }
                }
            }
            continue;
        }
        if (!header_seen) {
            if (line != "phi,theta,analytic,ideal,noisy,d_ideal,d_noisy") {
                throw ConfigError("not a sweep file: unexpected header \"" + line + "\"");
            }
            header_seen = true;
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != 7) {
            throw ConfigError("sweep row has " + std::to_string(cells.size()) + " cells, expected 7");
        }
        auto phi = parse_cell(cells[0]), theta = parse_cell(cells[1]), an = parse_cell(cells[2]);
        if (!phi || !theta || !an) {
            throw ConfigError("sweep row is missing phi, theta or analytic");
        }
        r.rows.push_back({*phi, *theta, *an, parse_cell(cells[3]), parse_cell(cells[4]), parse_cell(cells[5]),
                          parse_cell(cells[6])});
    }
    if (!header_seen) {
        throw ConfigError("not a sweep file: no header line");
    }
    return r;
}

SweepResult sweep_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &ex) {
        throw ConfigError(std::string("bad sweep JSON: ") + ex.what());
    }
    auto opt = [](const json &j, const char *k) -> std::optional<double> {
        if (!j.contains(k) || j[k].is_null()) {
            return std::nullopt;
        }
        return j[k].get<double>();
    };
    try {
        SweepResult r;
        const auto &m = doc.at("metadata");
        r.name = m.value("name", "");
        r.quantity = m.value("quantity", "");
        r.graph_label = m.value("graph", "");
        r.seed = m.value("seed", std::uint64_t{0});
        if (m.contains("shots") && !m["shots"].is_null()) {
            r.shots = m["shots"].get<std::uint64_t>();
        }
        if (m.contains("noise") && !m["noise"].is_null()) {
            const auto &n = m["noise"];
            r.noise = noise::NoiseModel{n.at("readout_flip").get<double>(), n.at("err_1q").get<double>(),
                                        n.at("err_2q").get<double>()};
        }
        for (const auto &row : doc.at("rows")) {
            r.rows.push_back({row.at("phi").get<double>(), row.at("theta").get<double>(),
                              row.at("analytic").get<double>(), opt(row, "ideal"), opt(row, "noisy"),
                              opt(row, "d_ideal"), opt(row, "d_noisy")});
        }
        return r;
    } catch (const json::exception &ex) {
        throw ConfigError(std::string("not a sweep JSON file: ") + ex.what());
    }
}

SweepResult read_sweep(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (std::filesystem::path(path).extension() == ".json") {
        return sweep_from_json(buf.str());
    }
    return sweep_from_csv(buf.str());
}

std::vector<std::string> write_sweep(const SweepResult &r, const std::string &dir, OutputFormat fmt) {
    const auto ts = current_timestamp();
    return write_pair(dir, r.name, fmt, sweep_to_csv(r, ts), sweep_to_json(r, ts));
}

std::vector<std::string> write_difference(const SweepResult &r, const std::string &dir, OutputFormat fmt) {
    const auto ts = current_timestamp();
    return write_pair(dir, r.name + "_diff", fmt, difference_csv(r, ts), difference_json(r, ts));
}

CompareResult compare(const SweepResult &a, const SweepResult &b, const std::string &col_a, const std::string &col_b) {
    if (a.rows.size() != b.rows.size()) {
        throw ConfigError("grids differ: " + std::to_string(a.rows.size()) + " vs " + std::to_string(b.rows.size()) +
                          " points");
    }
    CompareResult out;
    double sum = 0;
    for (std::size_t i = 0; i < a.rows.size(); i++) {
        const auto &ra = a.rows[i];
        const auto &rb = b.rows[i];
        if (std::abs(ra.phi - rb.phi) > 1e-12 || std::abs(ra.theta - rb.theta) > 1e-12) {
            throw ConfigError("grids differ at point " + std::to_string(i));
        }
        auto va = column(ra, col_a), vb = column(rb, col_b);
        if (!va || !vb) {
            throw ConfigError("column " + (va ? col_b : col_a) + " is empty at point " + std::to_string(i));
        }
        double d = std::abs(*va - *vb);
        out.rows.push_back({ra.phi, ra.theta, *va, *vb, d});
        out.max = std::max(out.max, d);
        sum += d;
    }
    out.mean = out.rows.empty() ? 0 : sum / static_cast<double>(out.rows.size());
    return out;
}

std::string compare_to_csv(const CompareResult &c) {
    std::ostringstream out;
    out << "phi,theta,a,b,d\n";
    for (const auto &row : c.rows) {
        out << fmt_double(row.phi) << "," << fmt_double(row.theta) << "," << fmt_double(row.a) << ","
            << fmt_double(row.b) << "," << fmt_double(row.d) << "\n";
    }
    return out.str();
}

}  // namespace graphlab::cli
