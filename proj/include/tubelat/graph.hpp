#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tubelat/vertex_set.hpp"

namespace tubelat {

using Edge = std::pair<int, int>;

// Simple graph on [n].
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_[v - 1]; }
    VertexSet neighbors(VertexSet s) const;
    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);
    std::vector<Edge> edges() const;
    int edge_count() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Graph whose vertices carry arbitrary distinct positive labels, kept sorted.
// Internally the shape is stored on [k] in label order.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::vector<int> labels, const std::vector<Edge>& labeled_edges);

    const std::vector<int>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    bool has_edge(int a, int b) const;
    std::vector<Edge> edges() const;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    friend std::pair<Graph, std::vector<int>> standardize(const LabeledGraph&);
    friend LabeledGraph make_labeled(Graph shape, VertexSet ground);
    std::vector<int> labels_;
    Graph shape_;
};

// Standardized graph on [k] and the label map (position k-1 holds the original label of k).
std::pair<Graph, std::vector<int>> standardize(const LabeledGraph& h);

LabeledGraph induced_subgraph(const Graph& g, VertexSet i);
LabeledGraph delete_vertices(const Graph& g, VertexSet i);
LabeledGraph contract(const Graph& g, VertexSet i);

// Shortcuts that standardize the result.
Graph std_restriction(const Graph& g, VertexSet i);
Graph std_contraction(const Graph& g, VertexSet i);

void check_vertices(const Graph& g, VertexSet i);
bool is_tube(const Graph& g, VertexSet i);
bool is_connected_set(const Graph& g, VertexSet i);
VertexSet component_of(const Graph& g, VertexSet within, int v);
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> tubes(const Graph& g);

struct FilledStatus {
    bool filled = false;
    bool right_filled = false;
    bool left_filled = false;
    // First violation found: edge {i,k} and the missing chord {a,b}.
    std::optional<std::pair<Edge, Edge>> right_witness;
    std::optional<std::pair<Edge, Edge>> left_witness;
};

FilledStatus filled_status(const Graph& g);
std::vector<Edge> minimal_non_edges(const Graph& g);
Graph dual_graph(const Graph& g);
std::vector<Graph> minors(const Graph& g);

bool is_subgraph(const Graph& h, const Graph& g);

// Named graphs.
Graph path_graph(int n);
Graph complete_graph(int n);
Graph edge_free_graph(int n);
Graph cycle_graph(int n);
Graph odd_bipartite_graph(int n);
Graph h_graph(int k, int n);
Graph distance_graph(const std::set<int>& a, int n);
// Every graph on [n], ordered by the edge bitmask over pairs in lexicographic order.
std::vector<Graph> all_graphs(int n);

class GraphFamily {
public:
    enum class Kind { FromA, FromAll, Path, Complete, EdgeFree, Cycle, OddBipartite, HGraph, Custom };

    static GraphFamily from_A(std::set<int> a);
    static GraphFamily from_all();
    static GraphFamily path();
    static GraphFamily complete();
    static GraphFamily edge_free();
    static GraphFamily cycle();
    static GraphFamily odd_bipartite();
    static GraphFamily h(int k);
    static GraphFamily custom(std::string name, std::function<Graph(int)> rule);

    Graph operator()(int n) const { return rule_(n); }
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    // Distance set for the kinds that are of the form G(A); nullopt for "all" and others.
    const std::optional<std::set<int>>& distances() const { return distances_; }

private:
    GraphFamily(Kind k, std::string name, std::function<Graph(int)> rule,
                std::optional<std::set<int>> d = std::nullopt)
        : kind_(k), name_(std::move(name)), rule_(std::move(rule)), distances_(std::move(d)) {}
    Kind kind_;
    std::string name_;
    std::function<Graph(int)> rule_;
    std::optional<std::set<int>> distances_;
};

GraphFamily parse_family(const std::string& text);
// path:n, complete:n, empty:n, cycle:n, oddbip:n, h:k:n, A:{..}:n, A:all:n, edges:n:1-2,2-3
Graph parse_graph_descriptor(const std::string& text);

std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
std::string edges_to_string(const Graph& g);

} // namespace tubelat
