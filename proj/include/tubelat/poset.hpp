#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tubelat/bitset.hpp"
#include "tubelat/tubing.hpp"

namespace tubelat {

// Finite poset on elements 0..size()-1.
class Poset {
public:
    Poset() = default;
    // Each pair (x, y) asserts x < y; the pairs need not be covers.
    // Throws std::logic_error if the relation has a cycle.
    static Poset from_relations(std::size_t n, const std::vector<std::pair<int, int>>& less);

    std::size_t size() const { return up_.size(); }
    bool leq(int x, int y) const;
    bool less(int x, int y) const { return x != y && leq(x, y); }
    // Sorted cover pairs (x, y) with x covered by y.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return upper_[check(x)]; }
    const std::vector<int>& lower_covers(int x) const { return lower_[check(x)]; }
    const DynBitset& up(int x) const { return up_[check(x)]; }
    const DynBitset& down(int x) const { return down_[check(x)]; }
    const std::vector<int>& topological_order() const { return topo_; }

    std::optional<int> meet(int x, int y) const;
    std::optional<int> join(int x, int y) const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::optional<int> bottom() const;
    std::optional<int> top() const;
    // Length of the longest chain ending at x.
    int level(int x) const { return level_[check(x)]; }

private:
    int check(int x) const;
    std::vector<DynBitset> up_, down_;
    std::vector<std::size_t> down_count_, up_count_;
    std::vector<std::vector<int>> upper_, lower_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> topo_;
    std::vector<int> level_;
};

struct LatticeFailure {
    int x = 0, y = 0;
    bool missing_join = false;
    // Minimal upper bounds (missing join) or maximal lower bounds (missing meet).
    std::vector<int> bounds;
};

std::optional<LatticeFailure> lattice_failure(const Poset& p);
bool is_lattice(const Poset& p);
bool is_meet_semilattice(const Poset& p);
bool is_join_semilattice(const Poset& p);
std::vector<int> minimal_upper_bounds(const Poset& p, int x, int y);
std::vector<int> maximal_lower_bounds(const Poset& p, int x, int y);

struct SemidistributivityReport {
    bool holds = true;
    // (x, y, z) violating the law named in `law` ("meet" or "join").
    std::optional<std::array<int, 3>> witness;
    std::string law;
};

SemidistributivityReport is_semidistributive(const Poset& p, int jobs = 1);

long long mobius(const Poset& p, int x, int y);
// Values mu(x, y) for every y; zero where x is not below y.
std::vector<long long> mobius_from(const Poset& p, int x);

Poset dual(const Poset& p);
// Element (a, b) gets index a * |Q| + b.
Poset product(const Poset& p, const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);
// Poset on a subset, ordered by restriction; elements follow the order of `keep`.
Poset induced_subposet(const Poset& p, const std::vector<int>& keep);

// The flip poset on maximal tubings of a graph.
struct TubingPoset {
    GraphPtr graph;
    std::vector<MaximalTubing> tubings;
    Poset order;

    int index_of(const MaximalTubing& x) const;
};

TubingPoset build_LG(const GraphPtr& g);
TubingPoset build_LG(const Graph& g);

struct FaceInterval {
    bool is_interval = false;
    std::optional<int> bottom, top;
    std::vector<int> members;
    // (a, c, b) with a <= c <= b, a and b in the face set, c outside it.
    std::optional<std::array<int, 3>> witness;
};

FaceInterval tubing_face_interval(const TubingPoset& lg, const Tubing& y);
FaceInterval tubing_face_interval(const Graph& g, const std::vector<VertexSet>& y);

} // namespace tubelat
