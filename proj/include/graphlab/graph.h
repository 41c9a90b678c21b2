#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphlab/errors.h"

namespace graphlab {

using Vertex = int;

/// Sorted, duplicate-free collection of vertex indices.
class VertexSet {
   public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Vertex> &items() const { return items_; }

    bool operator==(const VertexSet &) const = default;

   private:
    std::vector<Vertex> items_;
};

/// Undirected weighted edge, stored with j < k.
struct Edge {
    Vertex j;
    Vertex k;
    double theta;

    bool operator==(const Edge &) const = default;
};

struct Neighbor {
    Vertex vertex;
    double theta;
};

/// Vertex- and edge-weighted simple graph. Vertex l carries a rotation angle
/// phi_l, edge (j,k) carries a coupling angle theta_jk. Immutable once built.
class WeightedGraph {
   public:
    /// Validates and canonicalizes the input. Throws DomainError on self
    /// loops, duplicate edges, out-of-range endpoints, non-finite weights or
    /// a vertex weight count different from n.
    WeightedGraph(int n, std::vector<double> vertex_weights, std::vector<Edge> edges);

    int n() const { return n_; }
    double phi(Vertex v) const;
    std::span<const double> vertex_weights() const { return vertex_weights_; }
    /// Edges sorted lexicographically by (j, k).
    std::span<const Edge> edges() const { return edges_; }
    /// Neighbors of l sorted by vertex index, with the incident edge weight.
    std::span<const Neighbor> neighbors(Vertex l) const;
    std::optional<double> edge_weight(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return edge_weight(a, b).has_value(); }

    bool operator==(const WeightedGraph &other) const;

   private:
    void check_vertex(Vertex v) const;

    int n_;
    std::vector<double> vertex_weights_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

VertexSet neighborhood(const WeightedGraph &g, Vertex l);
VertexSet closed_neighborhood(const WeightedGraph &g, Vertex l);
/// N(l) ∩ N(m). Throws DomainError when l == m.
VertexSet common_neighbors(const WeightedGraph &g, Vertex l, Vertex m);
int degree(const WeightedGraph &g, Vertex l);

/// Same topology as `structure`, every vertex weight set to phi and every
/// edge weight set to theta.
WeightedGraph make_uniform(const WeightedGraph &structure, double phi, double theta);

/// Star K_{1,leaves}: center 0, leaves 1..leaves.
WeightedGraph star_graph(int leaves, double phi, double theta);
/// Path 0-1-...-(n-1).
WeightedGraph path_graph(int n, double phi, double theta);

enum class ParseErrorKind {
    kSyntax,
    kMissingField,
    kMissingWeight,
    kSelfLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
    kBadValue,
};

const char *to_string(ParseErrorKind kind);

class GraphParseError : public std::invalid_argument {
   public:
    GraphParseError(ParseErrorKind kind, const std::string &detail);
    ParseErrorKind kind() const { return kind_; }

   private:
    ParseErrorKind kind_;
};

/// Reads the JSON graph document:
///   {"n": 5, "vertex_weights": [...], "edges": [{"j":0,"k":1,"theta":1.57}, ...]}
/// A top-level "phi" may replace "vertex_weights" and a top-level "theta"
/// supplies the weight of every edge without its own "theta".
WeightedGraph parse_graph(std::string_view text);
/// Canonical form: explicit vertex weights, every edge carries its theta,
/// edges in (j, k) order, keys sorted, shortest round-trip floats.
std::string serialize_graph(const WeightedGraph &g);

WeightedGraph load_graph_file(const std::string &path);

}  // namespace graphlab
