#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tubelat/poset.hpp"

namespace tubelat {

// Pairs (i,k) with i<k and k placed before i.
std::vector<Edge> inversions(const Permutation& w);
bool weak_le(const Permutation& u, const Permutation& w);
// Lower covers: swap one adjacent descent.
std::vector<Permutation> weak_covers(const Permutation& w);
std::vector<Permutation> weak_upper_covers(const Permutation& w);

// S_n under the weak order, elements in lexicographic order.
class WeakOrder {
public:
    explicit WeakOrder(int n);

    int n() const { return n_; }
    const std::vector<Permutation>& perms() const { return perms_; }
    const Poset& order() const { return order_; }
    int index_of(const Permutation& w) const;
    int meet(int a, int b) const;
    int join(int a, int b) const;

private:
    int n_;
    std::vector<Permutation> perms_;
    Poset order_;
    std::vector<int> meet_, join_;
};

inline constexpr int max_weak_order = 7;

// Shared instance per n (n <= max_weak_order).
const WeakOrder& weak_order(int n);
Permutation weak_meet(const Permutation& u, const Permutation& w);
Permutation weak_join(const Permutation& u, const Permutation& w);

bool is_g_permutation(const Graph& g, const Permutation& w);
Permutation pi_down(const GraphPtr& g, const Permutation& w);

struct Arc {
    int n = 0;
    int i = 0;
    int k = 0;
    // Sign of node i+1..k-1, each '+' or '-'.
    std::string signs;

    static Arc make(int n, int i, int k, std::string signs);
    // "i-k:signs"; the ambient size defaults to k.
    static Arc parse(const std::string& text, int n = 0);
    std::string to_string() const;
    int plus_count() const;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::vector<Arc> all_arcs(int n);
Arc arc_of_cover(const Permutation& u, const Permutation& w);
// Join-irreducible j_α and its unique lower cover.
Permutation perm_of_arc(const Arc& a);
Permutation perm_of_arc_lower(const Arc& a);
bool is_subarc(const Arc& a, const Arc& b);
Arc arc_delete(const Arc& a, int k);
std::vector<Arc> arc_insertions(const Arc& a, int k);

class Congruence {
public:
    int n() const { return n_; }
    const std::vector<Arc>& generators() const { return generators_; }
    const std::set<Arc>& contracted() const { return contracted_; }
    bool contracts(const Arc& a) const { return contracted_.count(a) > 0; }

private:
    friend Congruence congruence_from_generators(int n, const std::vector<Arc>& arcs);
    int n_ = 0;
    std::vector<Arc> generators_;
    std::set<Arc> contracted_;
};

Congruence congruence_from_generators(int n, const std::vector<Arc>& arcs);
// Arcs with at least k plus signs, generated by the subarc-minimal ones.
Congruence metasylvester(int n, int k);

// Blocks of indices into weak_order(n).perms(), each sorted, blocks ordered by first element.
using Partition = std::vector<std::vector<int>>;

Partition congruence_classes(const Congruence& c);

struct QuotientPoset {
    Poset order;
    Partition classes;
    std::vector<int> bottoms;
};

QuotientPoset quotient_poset(const Congruence& c);
std::vector<Arc> generators_of_theta_G(const Graph& g);
Congruence theta_G(const Graph& g);
Partition psi_fibers(const GraphPtr& g);
// Arcs α with Ψ_G(j_α) = Ψ_G of its lower cover.
std::set<Arc> contracted_arcs_of_graph(const GraphPtr& g);
bool is_lattice_congruence(int n, const Partition& p);

enum class MapCheck { Both, Meet, Join };

struct LatticeMapReport {
    bool meets = true;
    bool joins = true;
    std::optional<std::pair<Permutation, Permutation>> meet_witness;
    std::optional<std::pair<Permutation, Permutation>> join_witness;
    bool lattice_map() const { return meets && joins; }
};

LatticeMapReport is_lattice_quotient_map(const GraphPtr& g, MapCheck which = MapCheck::Both, int jobs = 1);
bool psi_preserves_meet(const TubingPoset& lg, const Permutation& u, const Permutation& w);
bool psi_preserves_join(const TubingPoset& lg, const Permutation& u, const Permutation& w);

struct FamilyCheck {
    bool holds = true;
    int verified_through = 0;
    std::string witness;
};

// n ↦ contracted arcs on [n].
using ContractedFamily = std::function<std::set<Arc>(int)>;

FamilyCheck translational_check(const ContractedFamily& f, int max_n);
FamilyCheck insertional_check(const ContractedFamily& f, int max_n);
FamilyCheck is_translational(const GraphFamily& family, int max_n);
FamilyCheck is_insertional(const GraphFamily& family, int max_n);

} // namespace tubelat
