#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "graphlab/graph.h"
#include "json.hpp"

namespace graphlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ParseErrorKind kind, const std::string &detail) {
    throw GraphParseError(kind, detail);
}

double as_angle(const json &v, const char *what) {
    if (!v.is_number()) {
        fail(ParseErrorKind::kBadValue, std::string(what) + " must be a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(ParseErrorKind::kBadValue, std::string(what) + " must be finite");
    }
    return x;
}

int as_index(const json &v, const char *what) {
    if (!v.is_number_integer()) {
        fail(ParseErrorKind::kBadValue, std::string(what) + " must be an integer");
    }
    return v.get<int>();
}

}  // namespace

const char *to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::kSyntax:
            return "syntax error";
        case ParseErrorKind::kMissingField:
            return "missing field";
        case ParseErrorKind::kMissingWeight:
            return "missing weight";
        case ParseErrorKind::kSelfLoop:
            return "self loop";
        case ParseErrorKind::kDuplicateEdge:
            return "duplicate edge";
        case ParseErrorKind::kVertexOutOfRange:
            return "vertex out of range";
        case ParseErrorKind::kBadValue:
            return "bad value";
    }
    return "unknown";
}

GraphParseError::GraphParseError(ParseErrorKind kind, const std::string &detail)
    : std::invalid_argument(std::string("graph parse error (") + to_string(kind) + "): " + detail),
      kind_(kind) {
}

WeightedGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &ex) {
        fail(ParseErrorKind::kSyntax, ex.what());
    }
    if (!doc.is_object()) {
        fail(ParseErrorKind::kSyntax, "top level must be an object");
    }
    if (!doc.contains("n")) {
        fail(ParseErrorKind::kMissingField, "\"n\"");
    }
    int n = as_index(doc["n"], "n");
    if (n < 1) {
        fail(ParseErrorKind::kBadValue, "n must be at least 1");
    }

    std::vector<double> phis;
    if (doc.contains("vertex_weights")) {
        const auto &vw = doc["vertex_weights"];
        if (!vw.is_array()) {
            fail(ParseErrorKind::kBadValue, "vertex_weights must be an array");
        }
        if (vw.size() != static_cast<std::size_t>(n)) {
            fail(ParseErrorKind::kMissingWeight, "vertex_weights has " + std::to_string(vw.size()) +
                                                     " entries for n=" + std::to_string(n));
        }
        for (const auto &w : vw) {
            phis.push_back(as_angle(w, "vertex weight"));
        }
    } else if (doc.contains("phi")) {
        phis.assign(n, as_angle(doc["phi"], "phi"));
    } else {
        fail(ParseErrorKind::kMissingWeight, "neither vertex_weights nor phi given");
    }

    std::optional<double> default_theta;
    if (doc.contains("theta")) {
        default_theta = as_angle(doc["theta"], "theta");
    }

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    if (doc.contains("edges")) {
        const auto &es = doc["edges"];
        if (!es.is_array()) {
            fail(ParseErrorKind::kBadValue, "edges must be an array");
        }
        for (const auto &e : es) {
            if (!e.is_object() || !e.contains("j") || !e.contains("k")) {
                fail(ParseErrorKind::kMissingField, "edge needs \"j\" and \"k\"");
            }
            int j = as_index(e["j"], "j");
            int k = as_index(e["k"], "k");
            if (j < 0 || j >= n || k < 0 || k >= n) {
                fail(ParseErrorKind::kVertexOutOfRange,
                     "edge (" + std::to_string(j) + "," + std::to_string(k) + ") with n=" + std::to_string(n));
            }
            if (j == k) {
                fail(ParseErrorKind::kSelfLoop, "vertex " + std::to_string(j));
            }
            if (!seen.insert(std::minmax(j, k)).second) {
                fail(ParseErrorKind::kDuplicateEdge, "(" + std::to_string(j) + "," + std::to_string(k) + ")");
            }
            double theta;
            if (e.contains("theta")) {
                theta = as_angle(e["theta"], "theta");
            } else if (default_theta) {
                theta = *default_theta;
            } else {
                fail(ParseErrorKind::kMissingWeight,
                     "edge (" + std::to_string(j) + "," + std::to_string(k) + ") has no theta");
            }
            edges.push_back({j, k, theta});
        }
    }
    return WeightedGraph(n, std::move(phis), std::move(edges));
}

std::string serialize_graph(const WeightedGraph &g) {
    json doc;
    doc["n"] = g.n();
    doc["vertex_weights"] = std::vector<double>(g.vertex_weights().begin(), g.vertex_weights().end());
    json edges = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({{"j", e.j}, {"k", e.k}, {"theta", e.theta}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

WeightedGraph load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open graph file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace graphlab
