#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tubelat/weakorder.hpp"

namespace tubelat {

using Coeff = boost::multiprecision::cpp_int;

// F: permutations, P: maximal tubings.
enum class Basis { F, P };

inline int degree(const Permutation& w) { return w.size(); }
inline int degree(const MaximalTubing& x) { return x.n(); }
template <class K>
int degree(const std::pair<K, K>& t) {
    return degree(t.first) + degree(t.second);
}

// Integer combination of basis keys; zero coefficients are never stored.
template <class Key>
class FormalSum {
public:
    explicit FormalSum(Basis b = Basis::F) : basis_(b) {}

    static FormalSum single(Basis b, Key k, const Coeff& c = 1) {
        FormalSum s(b);
        s.add(std::move(k), c);
        return s;
    }

    Basis basis() const { return basis_; }
    const std::map<Key, Coeff>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(const Key& k, const Coeff& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Coeff& c, const FormalSum& a) {
        FormalSum out(a.basis_);
        for (const auto& [k, v] : a.terms_) out.add(k, c * v);
        return out;
    }
    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    // Every coefficient is 0 or 1.
    bool multiplicity_free() const {
        for (const auto& [k, c] : terms_)
            if (c != 1) return false;
        return true;
    }

private:
    Basis basis_;
    std::map<Key, Coeff> terms_;
};

using PermSum = FormalSum<Permutation>;
using TubingSum = FormalSum<MaximalTubing>;
using PermTensor = FormalSum<std::pair<Permutation, Permutation>>;
using TubingTensor = FormalSum<std::pair<MaximalTubing, MaximalTubing>>;

// Σ a_i ⊗ b_j with coefficient products.
template <class Key>
FormalSum<std::pair<Key, Key>> tensor(const FormalSum<Key>& a, const FormalSum<Key>& b) {
    FormalSum<std::pair<Key, Key>> out(a.basis());
    for (const auto& [x, c] : a.terms())
        for (const auto& [y, d] : b.terms()) out.add({x, y}, c * d);
    return out;
}

std::string to_string(const PermSum& s);
std::string to_string(const PermTensor& s);
std::string to_string(const TubingSum& s);
std::string to_string(const TubingTensor& s);

// Malvenuto–Reutenauer structure.
PermSum mr_product(const Permutation& u, const Permutation& w);
PermSum mr_product(const PermSum& a, const PermSum& b);
PermTensor mr_coproduct(const Permutation& u);
PermTensor mr_coproduct(const PermSum& a);
// (Δ⊗id)Δ and (id⊗Δ)Δ flattened to triples.
std::map<std::vector<Permutation>, Coeff> mr_double_coproduct_left(const Permutation& u);
std::map<std::vector<Permutation>, Coeff> mr_double_coproduct_right(const Permutation& u);

// Ψ_H^G(W) with H a spanning subgraph of W's graph.
MaximalTubing coarsen(const GraphPtr& h, const MaximalTubing& w);
// c_H^G(X): Σ P_W over W ∈ MTub(G) coarsening to X, H = X's graph.
TubingSum fiber_sum(const GraphPtr& g, const MaximalTubing& x);
TubingSum fiber_sum(const GraphPtr& g, const TubingSum& s);
// c(P_X) = Σ F_u over linear extensions of τ(X).
PermSum embed_c(const MaximalTubing& x);
PermSum embed_c(const TubingSum& s);
PermTensor embed_c(const TubingTensor& s);

// Complete-graph tubings are chains; the dictionary reads them as permutations.
Permutation complete_tubing_to_perm(const MaximalTubing& x);
MaximalTubing perm_to_complete_tubing(const Permutation& w);
PermSum complete_dictionary(const TubingSum& s);
PermTensor complete_dictionary(const TubingTensor& s);

FamilyCheck is_admissible(const GraphFamily& family, int max_n);
FamilyCheck is_restriction_compatible(const GraphFamily& family, int max_n);

// A ∩ [max_n − 1] read from the edges (1,k+1) of G_{k+1}.
struct RecoveredA {
    std::set<int> distances;
    int through = 0;
    bool all() const { return static_cast<int>(distances.size()) == through; }
    std::string to_string() const;
};
RecoveredA recover_A(const GraphFamily& family, int max_n);

// Tubing algebra and coalgebra of a 1-parameter family, with per-degree caches.
class TubingAlgebra {
public:
    explicit TubingAlgebra(GraphFamily family);

    const GraphFamily& family() const { return family_; }
    const GraphPtr& graph(int n);
    const std::vector<MaximalTubing>& tubings(int n);

    TubingSum product(const MaximalTubing& x, const MaximalTubing& y);
    TubingSum product(const TubingSum& a, const TubingSum& b);
    TubingTensor coproduct(const MaximalTubing& x);
    TubingTensor coproduct(const TubingSum& a);
    // Fill every cache needed for degrees <= max_n; afterwards product and
    // coproduct only read shared state and may run concurrently.
    void warm(int max_n, bool products, bool coproducts);

private:
    using Split = std::map<std::pair<MaximalTubing, MaximalTubing>, std::vector<int>>;
    void require_admissible(int n, int m);
    void require_restriction_compatible(int n);
    const Split& split(int n, int m);

    GraphFamily family_;
    std::map<int, GraphPtr> graphs_;
    std::map<int, std::vector<MaximalTubing>> tubings_;
    std::map<std::pair<int, int>, Split> splits_;
    std::set<std::pair<int, int>> admissible_;
    std::set<int> compatible_;
};

TubingSum tubing_product(const GraphFamily& family, const MaximalTubing& x, const MaximalTubing& y);
TubingTensor tubing_coproduct(const GraphFamily& family, const MaximalTubing& x);

FamilyCheck check_associativity(const GraphFamily& family, int max_n, int jobs = 1);
// c_A^B(P_X P_Y) = c_A^B(P_X) c_A^B(P_Y) with small(n) ⊆ large(n), total degree ≤ max_n.
FamilyCheck check_c_algebra_map(const GraphFamily& small, const GraphFamily& large, int max_n, int jobs = 1);
// c(P_X P_Y) = c(P_X) c(P_Y) in the Malvenuto–Reutenauer algebra.
FamilyCheck check_c_algebra_map(const GraphFamily& family, int max_n, int jobs = 1);
FamilyCheck check_c_commutes_with_delta(const GraphFamily& family, int max_n, int jobs = 1);

} // namespace tubelat
