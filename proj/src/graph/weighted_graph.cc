#include "graphlab/graph.h"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace graphlab {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {
}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
}

WeightedGraph::WeightedGraph(int n, std::vector<double> vertex_weights, std::vector<Edge> edges)
    : n_(n), vertex_weights_(std::move(vertex_weights)), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw DomainError("graph needs at least one vertex, got n=" + std::to_string(n_));
    }
    if (vertex_weights_.size() != static_cast<std::size_t>(n_)) {
        throw DomainError("expected " + std::to_string(n_) + " vertex weights, got " +
                          std::to_string(vertex_weights_.size()));
    }
    for (double w : vertex_weights_) {
        if (!std::isfinite(w)) {
            throw DomainError("vertex weight is not finite");
        }
    }
    for (auto &e : edges_) {
        if (e.j < 0 || e.j >= n_ || e.k < 0 || e.k >= n_) {
            throw DomainError("edge (" + std::to_string(e.j) + "," + std::to_string(e.k) +
                              ") has an endpoint outside [0," + std::to_string(n_) + ")");
        }
        if (e.j == e.k) {
            throw DomainError("self loop at vertex " + std::to_string(e.j));
        }
        if (!std::isfinite(e.theta)) {
            throw DomainError("edge weight is not finite");
        }
        if (e.j > e.k) {
            std::swap(e.j, e.k);
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return a.j != b.j ? a.j < b.j : a.k < b.k;
    });
    for (std::size_t i = 1; i < edges_.size(); i++) {
        if (edges_[i - 1].j == edges_[i].j && edges_[i - 1].k == edges_[i].k) {
            throw DomainError("duplicate edge (" + std::to_string(edges_[i].j) + "," +
                              std::to_string(edges_[i].k) + ")");
        }
    }

    adjacency_.resize(n_);
    for (const auto &e : edges_) {
        adjacency_[e.j].push_back({e.k, e.theta});
        adjacency_[e.k].push_back({e.j, e.theta});
    }
    for (auto &adj : adjacency_) {
        std::sort(adj.begin(), adj.end(),
                  [](const Neighbor &a, const Neighbor &b) { return a.vertex < b.vertex; });
    }
}

void WeightedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw DomainError("vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
    }
}

double WeightedGraph::phi(Vertex v) const {
    check_vertex(v);
    return vertex_weights_[v];
}

std::span<const Neighbor> WeightedGraph::neighbors(Vertex l) const {
    check_vertex(l);
    return adjacency_[l];
}

std::optional<double> WeightedGraph::edge_weight(Vertex a, Vertex b) const {
    for (const auto &nb : neighbors(a)) {
        if (nb.vertex == b) {
            return nb.theta;
        }
    }
    check_vertex(b);
    return std::nullopt;
}

bool WeightedGraph::operator==(const WeightedGraph &other) const {
    return n_ == other.n_ && vertex_weights_ == other.vertex_weights_ && edges_ == other.edges_;
}

VertexSet neighborhood(const WeightedGraph &g, Vertex l) {
    std::vector<Vertex> out;
    for (const auto &nb : g.neighbors(l)) {
        out.push_back(nb.vertex);
    }
    return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const WeightedGraph &g, Vertex l) {
    auto out = neighborhood(g, l).items();
    out.push_back(l);
    return VertexSet(std::move(out));
}

VertexSet common_neighbors(const WeightedGraph &g, Vertex l, Vertex m) {
    auto a = neighborhood(g, l);
    auto b = neighborhood(g, m);
    if (l == m) {
        throw DomainError("common_neighbors needs two distinct vertices, got " + std::to_string(l) +
                          " twice");
    }
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

int degree(const WeightedGraph &g, Vertex l) {
    return static_cast<int>(g.neighbors(l).size());
}

WeightedGraph make_uniform(const WeightedGraph &structure, double phi, double theta) {
    std::vector<Edge> edges(structure.edges().begin(), structure.edges().end());
    for (auto &e : edges) {
        e.theta = theta;
    }
    return WeightedGraph(structure.n(), std::vector<double>(structure.n(), phi), std::move(edges));
}

WeightedGraph star_graph(int leaves, double phi, double theta) {
    if (leaves < 0) {
        throw DomainError("star needs a non-negative leaf count");
    }
    std::vector<Edge> edges;
    for (int k = 1; k <= leaves; k++) {
        edges.push_back({0, k, theta});
    }
    return WeightedGraph(leaves + 1, std::vector<double>(leaves + 1, phi), std::move(edges));
}

WeightedGraph path_graph(int n, double phi, double theta) {
    std::vector<Edge> edges;
    for (int k = 1; k < n; k++) {
        edges.push_back({k - 1, k, theta});
    }
    return WeightedGraph(n, std::vector<double>(std::max(n, 0), phi), std::move(edges));
}

}  // namespace graphlab
