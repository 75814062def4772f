#pragma once

#include <compare>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tubelat/graph.hpp"
#include "tubelat/permutation.hpp"

namespace tubelat {

// Set of pairwise compatible tubes, kept in canonical order.
class Tubing {
public:
    Tubing(GraphPtr g, std::vector<VertexSet> tubes);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const std::vector<VertexSet>& tubes() const { return tubes_; }
    int size() const { return static_cast<int>(tubes_.size()); }
    bool contains(VertexSet t) const;
    bool is_maximal() const;
    std::string to_string() const;

    friend bool operator==(const Tubing& a, const Tubing& b) {
        return a.tubes_ == b.tubes_ && (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
    }

private:
    GraphPtr graph_;
    std::vector<VertexSet> tubes_;
};

class MaximalTubing {
public:
    MaximalTubing(GraphPtr g, std::vector<VertexSet> tubes);
    explicit MaximalTubing(const Tubing& x);
    // down[v-1] must be the smallest tube containing v; not validated.
    static MaximalTubing from_down_sets(GraphPtr g, std::vector<VertexSet> down);

    int n() const { return static_cast<int>(down_.size()); }
    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const std::vector<VertexSet>& tubes() const { return tubes_; }
    const std::vector<VertexSet>& down_sets() const { return down_; }
    // Smallest tube containing v, i.e. the principal ideal of v in the G-forest.
    VertexSet down(int v) const { return down_[v - 1]; }
    bool contains(VertexSet t) const;
    int top(VertexSet tube) const;
    // Parent of v in the G-forest, 0 for a root.
    int parent(int v) const;
    Tubing as_tubing() const { return Tubing(graph_, tubes_); }
    std::string to_string() const;

    friend bool operator==(const MaximalTubing& a, const MaximalTubing& b) {
        return a.down_ == b.down_ && (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
    }
    friend std::strong_ordering operator<=>(const MaximalTubing& a, const MaximalTubing& b);

private:
    MaximalTubing() = default;
    void index_tubes();
    GraphPtr graph_;
    std::vector<VertexSet> down_;
    std::vector<VertexSet> tubes_;
};

// Forest poset on [n]; parent 0 marks a root.
class GForest {
public:
    GForest(GraphPtr g, std::vector<int> parent);

    int n() const { return static_cast<int>(parent_.size()); }
    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const std::vector<int>& parents() const { return parent_; }
    int parent(int v) const { return parent_[v - 1]; }
    VertexSet children(int v) const { return children_[v - 1]; }
    VertexSet down(int v) const { return down_[v - 1]; }
    VertexSet roots() const;
    // i <_T k
    bool below(int i, int k) const { return i != k && down_[k - 1].contains(i); }

    friend bool operator==(const GForest& a, const GForest& b) {
        return a.parent_ == b.parent_ && (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
    }

private:
    friend GForest tau(const MaximalTubing& x);
    GForest() = default;
    void derive();
    GraphPtr graph_;
    std::vector<int> parent_;
    std::vector<VertexSet> children_;
    std::vector<VertexSet> down_;
};

// Tubing of a standardized restriction or contraction; labels[k-1] is the original label of k.
struct LabeledTubing {
    Tubing tubing;
    std::vector<int> labels;
    std::vector<VertexSet> original_tubes() const;
};

bool compatible(const Graph& g, VertexSet i, VertexSet j);

std::vector<MaximalTubing> enumerate_maximal_tubings(const GraphPtr& g);
std::vector<MaximalTubing> enumerate_maximal_tubings(const Graph& g);
// Component-root recursion; used for n > 8 and available for cross-checks.
std::vector<MaximalTubing> maximal_tubings_by_recursion(const GraphPtr& g);
// Every tubing, including the empty one, in canonical order.
std::vector<Tubing> enumerate_tubings(const GraphPtr& g);

MaximalTubing psi(const GraphPtr& g, const Permutation& w);
MaximalTubing psi(const Graph& g, const Permutation& w);

GForest tau(const MaximalTubing& x);
MaximalTubing chi(const GForest& t);
int top(const MaximalTubing& x, VertexSet tube);

LabeledTubing restrict_tubing(const Tubing& x, VertexSet i);
bool is_ideal(const Tubing& x, VertexSet i);
LabeledTubing quotient_tubing(const Tubing& x, VertexSet ideal);
MaximalTubing restrict_maximal(const MaximalTubing& x, VertexSet i);
MaximalTubing quotient_maximal(const MaximalTubing& x, VertexSet ideal);
std::vector<VertexSet> ideals(const MaximalTubing& x);

std::vector<Permutation> linear_extensions(const GForest& t);
Permutation sigma_min(const GForest& t);
Permutation sigma_max(const GForest& t);
// Pairs (i,j) with i<j and j <_T i.
std::vector<Edge> forest_inversions(const GForest& t);
// Pairs (i,k) with k a child of i and i<k.
std::vector<Edge> forest_descents(const GForest& t);
// Pairs (i,k) with k a child of i and i>k.
std::vector<Edge> forest_ascents(const GForest& t);

struct Flip {
    MaximalTubing result;
    VertexSet tube;
    // top_X(I) < top_Y(J), i.e. X lies below Y.
    bool upward;
};

Flip flip(const MaximalTubing& x, VertexSet tube);

Eigen::VectorXi vertex_coordinates(const MaximalTubing& x);
Eigen::VectorXi vertex_coordinates(const MaximalTubing& x, const std::vector<VertexSet>& all_tubes);
// Weights (n, n-1, ..., 1).
Eigen::VectorXi lambda_weights(int n);

std::string tubes_to_string(const std::vector<VertexSet>& tubes);

} // namespace tubelat
