#include "tubelat/hopf.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tubelat/error.hpp"
#include "tubelat/parallel.hpp"

namespace tubelat {

namespace {

std::string key_string(const Permutation& w) { return w.size() == 0 ? "ι" : "F_" + w.to_string(); }
std::string key_string(const MaximalTubing& x) { return x.n() == 0 ? "ι" : "P" + x.to_string(); }
template <class K>
std::string key_string(const std::pair<K, K>& t) {
    return key_string(t.first) + " ⊗ " + key_string(t.second);
}

template <class Key>
std::string sum_string(const FormalSum<Key>& s) {
    if (s.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) out << (c < 0 ? "-" : "");
        else out << (c < 0 ? " - " : " + ");
        if (mag != 1) out << mag << " ";
        out << key_string(k);
        first = false;
    }
    return out.str();
}

Permutation shift_concat(const std::vector<int>& left, const std::vector<int>& right, unsigned mask) {
    std::vector<int> w;
    std::size_t a = 0, b = 0;
    int shift = static_cast<int>(left.size());
    for (std::size_t p = 0; p < left.size() + right.size(); ++p) {
        if (mask >> p & 1) w.push_back(left[a++]);
        else w.push_back(right[b++] + shift);
    }
    return Permutation(std::move(w));
}

void require_subgraph(const Graph& h, const Graph& g) {
    if (!is_subgraph(h, g))
        throw NotASubgraph("graph with edges " + edges_to_string(h) + " is not a spanning subgraph of " + edges_to_string(g));
}

} // namespace

std::string to_string(const PermSum& s) { return sum_string(s); }
std::string to_string(const PermTensor& s) { return sum_string(s); }
std::string to_string(const TubingSum& s) { return sum_string(s); }
std::string to_string(const TubingTensor& s) { return sum_string(s); }

PermSum mr_product(const Permutation& u, const Permutation& w) {
    PermSum out(Basis::F);
    int n = u.size(), m = w.size();
    for (unsigned mask = 0; mask < (1u << (n + m)); ++mask)
        if (std::popcount(mask) == n) out.add(shift_concat(u.word(), w.word(), mask), 1);
    return out;
}

PermSum mr_product(const PermSum& a, const PermSum& b) {
    PermSum out(Basis::F);
    for (const auto& [u, c] : a.terms())
        for (const auto& [w, d] : b.terms()) out += (c * d) * mr_product(u, w);
    return out;
}

PermTensor mr_coproduct(const Permutation& u) {
    PermTensor out(Basis::F);
    const auto& a = u.word();
    for (std::size_t i = 0; i <= a.size(); ++i) {
        std::span<const int> all(a);
        out.add({standardize_word(all.first(i)), standardize_word(all.subspan(i))}, 1);
    }
    return out;
}

PermTensor mr_coproduct(const PermSum& a) {
    PermTensor out(Basis::F);
    for (const auto& [u, c] : a.terms()) out += c * mr_coproduct(u);
    return out;
}

std::map<std::vector<Permutation>, Coeff> mr_double_coproduct_left(const Permutation& u) {
    std::map<std::vector<Permutation>, Coeff> out;
    const auto outer = mr_coproduct(u);
    for (const auto& [t, c] : outer.terms()) {
        const auto inner = mr_coproduct(t.first);
        for (const auto& [s, d] : inner.terms()) out[{s.first, s.second, t.second}] += c * d;
    }
    return out;
}

std::map<std::vector<Permutation>, Coeff> mr_double_coproduct_right(const Permutation& u) {
    std::map<std::vector<Permutation>, Coeff> out;
    const auto outer = mr_coproduct(u);
    for (const auto& [t, c] : outer.terms()) {
        const auto inner = mr_coproduct(t.second);
        for (const auto& [s, d] : inner.terms()) out[{t.first, s.first, s.second}] += c * d;
    }
    return out;
}

MaximalTubing coarsen(const GraphPtr& h, const MaximalTubing& w) {
    require_subgraph(*h, w.graph());
    return psi(h, sigma_min(tau(w)));
}

TubingSum fiber_sum(const GraphPtr& g, const MaximalTubing& x) {
    require_subgraph(x.graph(), *g);
    TubingSum out(Basis::P);
    std::set<MaximalTubing> seen;
    for (const auto& u : linear_extensions(tau(x))) seen.insert(psi(g, u));
    for (const auto& w : seen) out.add(w, 1);
    return out;
}

TubingSum fiber_sum(const GraphPtr& g, const TubingSum& s) {
    TubingSum out(Basis::P);
    for (const auto& [x, c] : s.terms()) out += c * fiber_sum(g, x);
    return out;
}

PermSum embed_c(const MaximalTubing& x) {
    PermSum out(Basis::F);
    for (const auto& u : linear_extensions(tau(x))) out.add(u, 1);
    return out;
}

PermSum embed_c(const TubingSum& s) {
    PermSum out(Basis::F);
    for (const auto& [x, c] : s.terms()) out += c * embed_c(x);
    return out;
}

PermTensor embed_c(const TubingTensor& s) {
    PermTensor out(Basis::F);
    for (const auto& [t, c] : s.terms()) out += c * tensor(embed_c(t.first), embed_c(t.second));
    return out;
}

Permutation complete_tubing_to_perm(const MaximalTubing& x) {
    if (!(x.graph() == complete_graph(x.n()))) throw InvalidTubing("tubing " + x.to_string() + " is not on a complete graph");
    return sigma_min(tau(x));
}

MaximalTubing perm_to_complete_tubing(const Permutation& w) { return psi(share(complete_graph(w.size())), w); }

PermSum complete_dictionary(const TubingSum& s) {
    PermSum out(Basis::F);
    for (const auto& [x, c] : s.terms()) out.add(complete_tubing_to_perm(x), c);
    return out;
}

PermTensor complete_dictionary(const TubingTensor& s) {
    PermTensor out(Basis::F);
    for (const auto& [t, c] : s.terms()) out.add({complete_tubing_to_perm(t.first), complete_tubing_to_perm(t.second)}, c);
    return out;
}

namespace {

// Witness text for the first failed restriction of G_{n+m}, or "" when both match.
std::string admissibility_gap(const GraphFamily& family, int n, int m) {
    Graph g = family(n + m);
    Graph left = std_restriction(g, VertexSet::range(n));
    Graph right = std_restriction(g, VertexSet::range(n + m) - VertexSet::range(n));
    std::string where = family.name() + " degree " + std::to_string(n + m);
    if (!(left == family(n)))
        return where + ": restriction to [" + std::to_string(n) + "] has edges " + edges_to_string(left) +
               " but G_" + std::to_string(n) + " has " + edges_to_string(family(n));
    if (!(right == family(m)))
        return where + ": standardized restriction to [" + std::to_string(m) + "]+" + std::to_string(n) +
               " has edges " + edges_to_string(right) + " but G_" + std::to_string(m) + " has " +
               edges_to_string(family(m));
    return "";
}

// Witness text for the first subset of [n] breaking restriction compatibility.
std::string compatibility_gap(const GraphFamily& family, int n) {
    Graph g = family(n);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        VertexSet i = VertexSet::from_bits(bits);
        Graph sub = std_restriction(g, i);
        if (!is_subgraph(sub, family(i.size())))
            return family.name() + " degree " + std::to_string(n) + ": std(G|" + i.to_string() + ") has edges " +
                   edges_to_string(sub) + ", not inside G_" + std::to_string(i.size());
        Graph quo = std_contraction(g, i);
        if (!is_subgraph(quo, family(n - i.size())))
            return family.name() + " degree " + std::to_string(n) + ": std(G/" + i.to_string() + ") has edges " +
                   edges_to_string(quo) + ", not inside G_" + std::to_string(n - i.size());
    }
    return "";
}

} // namespace

FamilyCheck is_admissible(const GraphFamily& family, int max_n) {
    FamilyCheck r;
    for (int total = 2; total <= max_n; ++total)
        for (int n = 1; n < total; ++n) {
            auto gap = admissibility_gap(family, n, total - n);
            if (!gap.empty()) {
                r.holds = false;
                r.witness = gap;
                return r;
            }
        }
    r.verified_through = max_n;
    return r;
}

FamilyCheck is_restriction_compatible(const GraphFamily& family, int max_n) {
    FamilyCheck r;
    for (int n = 0; n <= max_n; ++n) {
        auto gap = compatibility_gap(family, n);
        if (!gap.empty()) {
            r.holds = false;
            r.witness = gap;
            return r;
        }
    }
    r.verified_through = max_n;
    return r;
}

std::string RecoveredA::to_string() const {
    if (through > 0 && all()) return "all (through " + std::to_string(through) + ")";
    std::string out = "{";
    for (int d : distances) out += (out.size() > 1 ? "," : "") + std::to_string(d);
    return out + "} (through " + std::to_string(through) + ")";
}

RecoveredA recover_A(const GraphFamily& family, int max_n) {
    RecoveredA r;
    r.through = std::max(0, max_n - 1);
    for (int k = 1; k + 1 <= max_n; ++k)
        if (family(k + 1).has_edge(1, k + 1)) r.distances.insert(k);
    return r;
}

TubingAlgebra::TubingAlgebra(GraphFamily family) : family_(std::move(family)) {}

const GraphPtr& TubingAlgebra::graph(int n) {
    auto it = graphs_.find(n);
    if (it != graphs_.end()) return it->second;
    return graphs_.emplace(n, share(family_(n))).first->second;
}

const std::vector<MaximalTubing>& TubingAlgebra::tubings(int n) {
    auto it = tubings_.find(n);
    if (it != tubings_.end()) return it->second;
    return tubings_.emplace(n, enumerate_maximal_tubings(graph(n))).first->second;
}

void TubingAlgebra::require_admissible(int n, int m) {
    if (admissible_.count({n, m})) return;
    auto gap = admissibility_gap(family_, n, m);
    if (!gap.empty()) throw NotAdmissibleAtDegree(gap);
    admissible_.insert({n, m});
}

void TubingAlgebra::require_restriction_compatible(int n) {
    if (compatible_.count(n)) return;
    auto gap = compatibility_gap(family_, n);
    if (!gap.empty()) throw NotRestrictionCompatible(gap);
    compatible_.insert(n);
}

const TubingAlgebra::Split& TubingAlgebra::split(int n, int m) {
    auto it = splits_.find({n, m});
    if (it != splits_.end()) return it->second;
    Split table;
    const auto& all = tubings(n + m);
    VertexSet left = VertexSet::range(n), right = VertexSet::range(n + m) - left;
    for (std::size_t z = 0; z < all.size(); ++z)
        table[{restrict_maximal(all[z], left), restrict_maximal(all[z], right)}].push_back(static_cast<int>(z));
    return splits_.emplace(std::make_pair(n, m), std::move(table)).first->second;
}

TubingSum TubingAlgebra::product(const MaximalTubing& x, const MaximalTubing& y) {
    int n = x.n(), m = y.n();
    require_admissible(n, m);
    if (!(x.graph() == *graph(n))) throw InvalidTubing("tubing " + x.to_string() + " is not on " + family_.name() + " degree " + std::to_string(n));
    if (!(y.graph() == *graph(m))) throw InvalidTubing("tubing " + y.to_string() + " is not on " + family_.name() + " degree " + std::to_string(m));
    TubingSum out(Basis::P);
    const auto& table = split(n, m);
    auto it = table.find({x, y});
    if (it == table.end()) return out;
    const auto& all = tubings(n + m);
    for (int z : it->second) out.add(all[z], 1);
    return out;
}

TubingSum TubingAlgebra::product(const TubingSum& a, const TubingSum& b) {
    TubingSum out(Basis::P);
    for (const auto& [x, c] : a.terms())
        for (const auto& [y, d] : b.terms()) out += (c * d) * product(x, y);
    return out;
}

TubingTensor TubingAlgebra::coproduct(const MaximalTubing& x) {
    int n = x.n();
    require_restriction_compatible(n);
    if (!(x.graph() == *graph(n))) throw InvalidTubing("tubing " + x.to_string() + " is not on " + family_.name() + " degree " + std::to_string(n));
    TubingTensor out(Basis::P);
    for (VertexSet i : ideals(x)) {
        auto left = fiber_sum(graph(i.size()), restrict_maximal(x, i));
        auto right = fiber_sum(graph(n - i.size()), quotient_maximal(x, i));
        out += tensor(left, right);
    }
    return out;
}

TubingTensor TubingAlgebra::coproduct(const TubingSum& a) {
    TubingTensor out(Basis::P);
    for (const auto& [x, c] : a.terms()) out += c * coproduct(x);
    return out;
}

void TubingAlgebra::warm(int max_n, bool products, bool coproducts) {
    for (int n = 0; n <= max_n; ++n) {
        tubings(n);
        if (coproducts) require_restriction_compatible(n);
        if (products)
            for (int m = 0; n + m <= max_n; ++m) {
                require_admissible(n, m);
                split(n, m);
            }
    }
}

TubingSum tubing_product(const GraphFamily& family, const MaximalTubing& x, const MaximalTubing& y) {
    return TubingAlgebra(family).product(x, y);
}

TubingTensor tubing_coproduct(const GraphFamily& family, const MaximalTubing& x) {
    return TubingAlgebra(family).coproduct(x);
}

namespace {

struct Pair {
    int left, right;
    std::size_t x, y;
};

// Every (X, Y) with both degrees >= 1 and total <= max_n.
std::vector<Pair> degree_pairs(TubingAlgebra& alg, int max_n) {
    std::vector<Pair> out;
    for (int total = 2; total <= max_n; ++total)
        for (int n = 1; n < total; ++n)
            for (std::size_t x = 0; x < alg.tubings(n).size(); ++x)
                for (std::size_t y = 0; y < alg.tubings(total - n).size(); ++y) out.push_back({n, total - n, x, y});
    return out;
}

} // namespace

FamilyCheck check_associativity(const GraphFamily& family, int max_n, int jobs) {
    TubingAlgebra alg(family);
    alg.warm(max_n, true, false);
    struct Triple {
        int n, m, r;
        std::size_t x;
    };
    std::vector<Triple> work;
    for (int total = 0; total <= max_n; ++total)
        for (int n = 0; n <= total; ++n)
            for (int m = 0; n + m <= total; ++m)
                for (std::size_t x = 0; x < alg.tubings(n).size(); ++x) work.push_back({n, m, total - n - m, x});

    auto check = [&](const Triple& t, std::string* witness) {
        const auto& xs = alg.tubings(t.n);
        const auto& X = xs[t.x];
        auto px = TubingSum::single(Basis::P, X);
        for (const auto& Y : alg.tubings(t.m)) {
            auto py = TubingSum::single(Basis::P, Y);
            auto xy = alg.product(px, py);
            for (const auto& Z : alg.tubings(t.r)) {
                auto pz = TubingSum::single(Basis::P, Z);
                auto left = alg.product(xy, pz);
                auto right = alg.product(px, alg.product(py, pz));
                if (!(left == right)) {
                    if (witness)
                        *witness = "X=" + X.to_string() + " Y=" + Y.to_string() + " Z=" + Z.to_string() +
                                   ": (XY)Z = " + to_string(left) + " but X(YZ) = " + to_string(right);
                    return false;
                }
            }
        }
        return true;
    };
    FamilyCheck r;
    auto bad = first_failure(work.size(), jobs, [&](std::size_t i) { return !check(work[i], nullptr); });
    if (bad) {
        r.holds = false;
        check(work[*bad], &r.witness);
        return r;
    }
    r.verified_through = max_n;
    return r;
}

FamilyCheck check_c_algebra_map(const GraphFamily& small, const GraphFamily& large, int max_n, int jobs) {
    for (int n = 0; n <= max_n; ++n) require_subgraph(small(n), large(n));
    TubingAlgebra a(small), b(large);
    a.warm(max_n, true, false);
    b.warm(max_n, true, false);
    auto work = degree_pairs(a, max_n);
    auto check = [&](const Pair& p, std::string* witness) {
        const auto& X = a.tubings(p.left)[p.x];
        const auto& Y = a.tubings(p.right)[p.y];
        auto lhs = fiber_sum(b.graph(p.left + p.right), a.product(X, Y));
        auto rhs = b.product(fiber_sum(b.graph(p.left), X), fiber_sum(b.graph(p.right), Y));
        if (lhs == rhs) return true;
        if (witness)
            *witness = "X=" + X.to_string() + " Y=" + Y.to_string() + ": c(XY) = " + to_string(lhs) +
                       " but c(X)c(Y) = " + to_string(rhs);
        return false;
    };
    FamilyCheck r;
    auto bad = first_failure(work.size(), jobs, [&](std::size_t i) { return !check(work[i], nullptr); });
    if (bad) {
        r.holds = false;
        check(work[*bad], &r.witness);
        return r;
    }
    r.verified_through = max_n;
    return r;
}

FamilyCheck check_c_algebra_map(const GraphFamily& family, int max_n, int jobs) {
    TubingAlgebra a(family);
    a.warm(max_n, true, false);
    auto work = degree_pairs(a, max_n);
    auto check = [&](const Pair& p, std::string* witness) {
        const auto& X = a.tubings(p.left)[p.x];
        const auto& Y = a.tubings(p.right)[p.y];
        auto lhs = embed_c(a.product(X, Y));
        auto rhs = mr_product(embed_c(X), embed_c(Y));
        if (lhs == rhs) return true;
        if (witness)
            *witness = "X=" + X.to_string() + " Y=" + Y.to_string() + ": c(XY) = " + to_string(lhs) +
                       " but c(X)c(Y) = " + to_string(rhs);
        return false;
    };
    FamilyCheck r;
    auto bad = first_failure(work.size(), jobs, [&](std::size_t i) { return !check(work[i], nullptr); });
    if (bad) {
        r.holds = false;
        check(work[*bad], &r.witness);
        return r;
    }
    r.verified_through = max_n;
    return r;
}

FamilyCheck check_c_commutes_with_delta(const GraphFamily& family, int max_n, int jobs) {
    TubingAlgebra a(family);
    a.warm(max_n, false, true);
    std::vector<std::pair<int, std::size_t>> work;
    for (int n = 0; n <= max_n; ++n)
        for (std::size_t x = 0; x < a.tubings(n).size(); ++x) work.emplace_back(n, x);
    auto check = [&](std::pair<int, std::size_t> w, std::string* witness) {
        const auto& X = a.tubings(w.first)[w.second];
        auto lhs = mr_coproduct(embed_c(X));
        auto rhs = embed_c(a.coproduct(X));
        if (lhs == rhs) return true;
        if (witness)
            *witness = "X=" + X.to_string() + ": Δc(X) = " + to_string(lhs) + " but (c⊗c)Δ(X) = " + to_string(rhs);
        return false;
    };
    FamilyCheck r;
    auto bad = first_failure(work.size(), jobs, [&](std::size_t i) { return !check(work[i], nullptr); });
    if (bad) {
        r.holds = false;
        check(work[*bad], &r.witness);
        return r;
    }
    r.verified_through = max_n;
    return r;
}

} // namespace tubelat
