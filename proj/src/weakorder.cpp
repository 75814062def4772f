#include "tubelat/weakorder.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "tubelat/error.hpp"
#include "tubelat/parallel.hpp"

namespace tubelat {

std::vector<Edge> inversions(const Permutation& w) {
    std::vector<Edge> out;
    const auto& a = w.word();
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q)
            if (a[p] > a[q]) out.emplace_back(a[q], a[p]);
    std::sort(out.begin(), out.end());
    return out;
}

bool weak_le(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw SizeMismatch("weak order compares permutations of equal size");
    auto pos = w.positions();
    const auto& a = u.word();
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q)
            if (a[p] > a[q] && pos[a[p] - 1] > pos[a[q] - 1]) return false;
    return true;
}

namespace {

std::vector<Permutation> adjacent_swaps(const Permutation& w, bool descents) {
    std::vector<Permutation> out;
    auto a = w.word();
    for (std::size_t p = 0; p + 1 < a.size(); ++p) {
        if ((a[p] > a[p + 1]) != descents) continue;
        std::swap(a[p], a[p + 1]);
        out.emplace_back(a);
        std::swap(a[p], a[p + 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Permutation> weak_covers(const Permutation& w) { return adjacent_swaps(w, true); }
std::vector<Permutation> weak_upper_covers(const Permutation& w) { return adjacent_swaps(w, false); }

WeakOrder::WeakOrder(int n) : n_(n), perms_(all_permutations(n)) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < perms_.size(); ++a)
        for (const auto& up : weak_upper_covers(perms_[a])) rel.emplace_back(static_cast<int>(a), index_of(up));
    order_ = Poset::from_relations(perms_.size(), rel);
    if (n <= 6) {
        std::size_t m = perms_.size();
        meet_.resize(m * m);
        join_.resize(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                meet_[a * m + b] = *order_.meet(static_cast<int>(a), static_cast<int>(b));
                join_[a * m + b] = *order_.join(static_cast<int>(a), static_cast<int>(b));
            }
    }
}

int WeakOrder::index_of(const Permutation& w) const {
    if (w.size() != n_) throw SizeMismatch("permutation size differs from the weak order");
    return static_cast<int>(lex_rank(w));
}

int WeakOrder::meet(int a, int b) const {
    if (!meet_.empty()) return meet_[static_cast<std::size_t>(a) * perms_.size() + b];
    return *order_.meet(a, b);
}

int WeakOrder::join(int a, int b) const {
    if (!join_.empty()) return join_[static_cast<std::size_t>(a) * perms_.size() + b];
    return *order_.join(a, b);
}

const WeakOrder& weak_order(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<WeakOrder>> cache;
    if (n < 0 || n > max_weak_order)
        throw SizeMismatch("weak order is materialized only for n <= " + std::to_string(max_weak_order));
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<WeakOrder>(n);
    return *slot;
}

Permutation weak_meet(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw SizeMismatch("weak meet needs equal sizes");
    const auto& W = weak_order(u.size());
    return W.perms()[W.meet(W.index_of(u), W.index_of(w))];
}

Permutation weak_join(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw SizeMismatch("weak join needs equal sizes");
    const auto& W = weak_order(u.size());
    return W.perms()[W.join(W.index_of(u), W.index_of(w))];
}

bool is_g_permutation(const Graph& g, const Permutation& w) {
    if (w.size() != g.n()) throw SizeMismatch("permutation size differs from the graph size");
    VertexSet prefix;
    int mx = 0;
    for (int v : w.word()) {
        prefix.insert(v);
        mx = std::max(mx, v);
        if (!component_of(g, prefix, v).contains(mx)) return false;
    }
    return true;
}

Permutation pi_down(const GraphPtr& g, const Permutation& w) {
    if (!filled_status(*g).right_filled) throw NotRightFilled("pi_down needs a right-filled graph");
    return sigma_min(tau(psi(g, w)));
}

Arc Arc::make(int n, int i, int k, std::string signs) {
    if (!(1 <= i && i < k && k <= n)) throw InvalidArc("arc endpoints must satisfy 1 <= i < k <= n");
    if (static_cast<int>(signs.size()) != k - i - 1) throw InvalidArc("arc needs exactly k-i-1 signs");
    for (char c : signs)
        if (c != '+' && c != '-') throw InvalidArc("signs must be '+' or '-'");
    return Arc{n, i, k, std::move(signs)};
}

Arc Arc::parse(const std::string& text, int n) {
    auto dash = text.find('-');
    auto colon = text.find(':');
    if (dash == std::string::npos || dash == 0) throw InvalidArc("arc must look like i-k:signs, got '" + text + "'");
    std::string signs = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::string a = text.substr(0, dash);
    std::string b = text.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1);
    auto digits = [](const std::string& s) { return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit); };
    if (!digits(a) || !digits(b)) throw InvalidArc("arc must look like i-k:signs, got '" + text + "'");
    int i = std::stoi(a), k = std::stoi(b);
    return make(n == 0 ? k : n, i, k, signs);
}

std::string Arc::to_string() const { return std::to_string(i) + "-" + std::to_string(k) + ":" + signs; }

int Arc::plus_count() const { return static_cast<int>(std::count(signs.begin(), signs.end(), '+')); }

std::vector<Arc> all_arcs(int n) {
    std::vector<Arc> out;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            int len = k - i - 1;
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::string s(len, '+');
                for (int b = 0; b < len; ++b)
                    if (mask >> (len - 1 - b) & 1) s[b] = '-';
                out.push_back(Arc{n, i, k, s});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

Arc arc_of_cover(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw NotACover("permutations of different sizes");
    int n = u.size();
    int p = 0;
    while (p < n && u.word()[p] == w.word()[p]) ++p;
    bool ok = p + 1 < n && u.word()[p] == w.word()[p + 1] && u.word()[p + 1] == w.word()[p] &&
              u.word()[p] < u.word()[p + 1] &&
              std::equal(u.word().begin() + p + 2, u.word().end(), w.word().begin() + p + 2);
    if (!ok) throw NotACover(u.to_string() + " is not covered by " + w.to_string());
    int i = u.word()[p], k = u.word()[p + 1];
    auto pos = u.positions();
    std::string s;
    for (int j = i + 1; j < k; ++j) s += pos[j - 1] > p + 2 ? '+' : '-';
    return Arc{n, i, k, s};
}

namespace {

std::vector<int> arc_word(const Arc& a, bool upper) {
    std::vector<int> w;
    for (int v = 1; v < a.i; ++v) w.push_back(v);
    for (int j = a.i + 1; j < a.k; ++j)
        if (a.signs[j - a.i - 1] == '-') w.push_back(j);
    if (upper) {
        w.push_back(a.k);
        w.push_back(a.i);
    } else {
        w.push_back(a.i);
        w.push_back(a.k);
    }
    for (int j = a.i + 1; j < a.k; ++j)
        if (a.signs[j - a.i - 1] == '+') w.push_back(j);
    for (int v = a.k + 1; v <= a.n; ++v) w.push_back(v);
    return w;
}

} // namespace

Permutation perm_of_arc(const Arc& a) { return Permutation(arc_word(a, true)); }
Permutation perm_of_arc_lower(const Arc& a) { return Permutation(arc_word(a, false)); }

bool is_subarc(const Arc& a, const Arc& b) {
    if (!(b.i <= a.i && a.i < a.k && a.k <= b.k)) return false;
    for (int j = 1; j < a.k - a.i; ++j)
        if (a.signs[j - 1] != b.signs[j + a.i - b.i - 1]) return false;
    return true;
}

Arc arc_delete(const Arc& a, int k) {
    if (k < 1 || k > a.n) throw InvalidVertex("deleted node " + std::to_string(k) + " is outside [" + std::to_string(a.n) + "]");
    if (k < a.i) return Arc{a.n - 1, a.i - 1, a.k - 1, a.signs};
    if (k > a.k) return Arc{a.n - 1, a.i, a.k, a.signs};
    if (a.k == a.i + 1) throw InvalidVertex("deleting an endpoint of " + a.to_string() + " collapses the arc");
    std::string s = a.signs;
    if (k == a.i) s.erase(s.begin());
    else if (k == a.k) s.pop_back();
    else s.erase(s.begin() + (k - a.i - 1));
    return Arc{a.n - 1, a.i, a.k - 1, s};
}

std::vector<Arc> arc_insertions(const Arc& a, int k) {
    int n = a.n + 1;
    if (k < 1 || k > n) throw InvalidVertex("inserted node " + std::to_string(k) + " is outside [" + std::to_string(n) + "]");
    if (k <= a.i) return {Arc{n, a.i + 1, a.k + 1, a.signs}};
    if (k > a.k) return {Arc{n, a.i, a.k, a.signs}};
    std::vector<Arc> out;
    for (char c : {'+', '-'}) {
        std::string s = a.signs;
        s.insert(s.begin() + (k - a.i - 1), c);
        out.push_back(Arc{n, a.i, a.k + 1, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Congruence congruence_from_generators(int n, const std::vector<Arc>& arcs) {
    Congruence c;
    c.n_ = n;
    for (const Arc& a : arcs) {
        if (a.n != n) throw SizeMismatch("generator " + a.to_string() + " lives on a different n");
        Arc::make(a.n, a.i, a.k, a.signs);
    }
    for (const Arc& a : arcs) {
        bool minimal = true;
        for (const Arc& b : arcs)
            if (!(a == b) && is_subarc(b, a)) minimal = false;
        if (minimal) c.generators_.push_back(a);
    }
    std::sort(c.generators_.begin(), c.generators_.end());
    c.generators_.erase(std::unique(c.generators_.begin(), c.generators_.end()), c.generators_.end());
    for (const Arc& b : all_arcs(n))
        for (const Arc& g : c.generators_)
            if (is_subarc(g, b)) {
                c.contracted_.insert(b);
                break;
            }
    return c;
}

Congruence metasylvester(int n, int k) {
    std::vector<Arc> gens;
    for (const Arc& a : all_arcs(n))
        if (a.plus_count() >= k) gens.push_back(a);
    return congruence_from_generators(n, gens);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

Partition blocks_of(UnionFind& uf) {
    std::map<int, std::vector<int>> groups;
    for (std::size_t x = 0; x < uf.parent.size(); ++x) groups[uf.find(static_cast<int>(x))].push_back(static_cast<int>(x));
    Partition out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Partition congruence_classes(const Congruence& c) {
    const WeakOrder& W = weak_order(c.n());
    UnionFind uf(W.perms().size());
    for (auto [a, b] : W.order().covers())
        if (c.contracts(arc_of_cover(W.perms()[a], W.perms()[b]))) uf.unite(a, b);
    return blocks_of(uf);
}

QuotientPoset quotient_poset(const Congruence& c) {
    const WeakOrder& W = weak_order(c.n());
    QuotientPoset q;
    q.classes = congruence_classes(c);
    std::vector<int> cls(W.perms().size());
    for (std::size_t b = 0; b < q.classes.size(); ++b)
        for (int x : q.classes[b]) cls[x] = static_cast<int>(b);
    for (const auto& block : q.classes) {
        int bottom = block.front();
        for (int x : block)
            if (W.order().down(x).count() < W.order().down(bottom).count()) bottom = x;
        q.bottoms.push_back(bottom);
    }
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : W.order().covers())
        if (cls[a] != cls[b]) rel.emplace_back(cls[a], cls[b]);
    q.order = Poset::from_relations(q.classes.size(), rel);
    return q;
}

std::vector<Arc> generators_of_theta_G(const Graph& g) {
    if (!filled_status(g).filled) throw NotFilled("Θ_G is a lattice congruence only for filled graphs");
    std::vector<Arc> out;
    for (auto [x, y] : minimal_non_edges(g)) out.push_back(Arc{g.n(), x, y, std::string(y - x - 1, '+')});
    return out;
}

Congruence theta_G(const Graph& g) { return congruence_from_generators(g.n(), generators_of_theta_G(g)); }

Partition psi_fibers(const GraphPtr& g) {
    const WeakOrder& W = weak_order(g->n());
    std::map<MaximalTubing, std::vector<int>> groups;
    for (std::size_t a = 0; a < W.perms().size(); ++a) groups[psi(g, W.perms()[a])].push_back(static_cast<int>(a));
    Partition out;
    for (auto& [x, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Arc> contracted_arcs_of_graph(const GraphPtr& g) {
    std::set<Arc> out;
    for (const Arc& a : all_arcs(g->n()))
        if (psi(g, perm_of_arc(a)) == psi(g, perm_of_arc_lower(a))) out.insert(a);
    return out;
}

bool is_lattice_congruence(int n, const Partition& p) {
    const WeakOrder& W = weak_order(n);
    std::size_t m = W.perms().size();
    std::vector<int> cls(m, -1);
    for (std::size_t b = 0; b < p.size(); ++b)
        for (int x : p[b]) cls[x] = static_cast<int>(b);
    for (const auto& block : p)
        for (std::size_t a = 1; a < block.size(); ++a) {
            int x = block[0], y = block[a];
            for (std::size_t z = 0; z < m; ++z) {
                int zi = static_cast<int>(z);
                if (cls[W.meet(x, zi)] != cls[W.meet(y, zi)]) return false;
                if (cls[W.join(x, zi)] != cls[W.join(y, zi)]) return false;
            }
        }
    return true;
}

bool psi_preserves_meet(const TubingPoset& lg, const Permutation& u, const Permutation& w) {
    auto m = lg.order.meet(lg.index_of(psi(lg.graph, u)), lg.index_of(psi(lg.graph, w)));
    return m && lg.tubings[*m] == psi(lg.graph, weak_meet(u, w));
}

bool psi_preserves_join(const TubingPoset& lg, const Permutation& u, const Permutation& w) {
    auto j = lg.order.join(lg.index_of(psi(lg.graph, u)), lg.index_of(psi(lg.graph, w)));
    return j && lg.tubings[*j] == psi(lg.graph, weak_join(u, w));
}

LatticeMapReport is_lattice_quotient_map(const GraphPtr& g, MapCheck which, int jobs) {
    const WeakOrder& W = weak_order(g->n());
    TubingPoset lg = build_LG(g);
    std::size_t m = W.perms().size();
    std::vector<int> image(m);
    for (std::size_t a = 0; a < m; ++a) image[a] = lg.index_of(psi(g, W.perms()[a]));
    bool want_meet = which != MapCheck::Join;
    bool want_join = which != MapCheck::Meet;

    std::mutex mu;
    std::size_t first_meet = m * m, first_join = m * m;
    parallel_for(m, jobs, [&](std::size_t a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            int ia = static_cast<int>(a), ib = static_cast<int>(b);
            std::size_t key = a * m + b;
            if (want_meet) {
                auto lm = lg.order.meet(image[a], image[b]);
                if (!lm || *lm != image[W.meet(ia, ib)]) {
                    std::lock_guard lock(mu);
                    first_meet = std::min(first_meet, key);
                }
            }
            if (want_join) {
                auto lj = lg.order.join(image[a], image[b]);
                if (!lj || *lj != image[W.join(ia, ib)]) {
                    std::lock_guard lock(mu);
                    first_join = std::min(first_join, key);
                }
            }
        }
    });
    LatticeMapReport r;
    if (first_meet < m * m) {
        r.meets = false;
        r.meet_witness = std::make_pair(W.perms()[first_meet / m], W.perms()[first_meet % m]);
    }
    if (first_join < m * m) {
        r.joins = false;
        r.join_witness = std::make_pair(W.perms()[first_join / m], W.perms()[first_join % m]);
    }
    return r;
}

FamilyCheck translational_check(const ContractedFamily& f, int max_n) {
    FamilyCheck r;
    std::vector<std::set<Arc>> contracted(max_n + 1);
    for (int n = 0; n <= max_n; ++n) contracted[n] = f(n);
    for (int n = 2; n <= max_n; ++n)
        for (const Arc& a : contracted[n])
            for (int m = a.k - a.i + 1; m <= max_n; ++m)
                for (int i = 1; i + (a.k - a.i) <= m; ++i) {
                    Arc b{m, i, i + (a.k - a.i), a.signs};
                    if (!contracted[m].count(b)) {
                        r.holds = false;
                        r.witness = a.to_string() + " contracted on [" + std::to_string(n) + "] but its translate " +
                                    b.to_string() + " is not contracted on [" + std::to_string(m) + "]";
                        return r;
                    }
                }
    r.verified_through = max_n;
    return r;
}

FamilyCheck insertional_check(const ContractedFamily& f, int max_n) {
    FamilyCheck r;
    std::vector<std::set<Arc>> contracted(max_n + 1);
    for (int n = 0; n <= max_n; ++n) contracted[n] = f(n);
    for (int n = 2; n < max_n; ++n)
        for (const Arc& a : contracted[n])
            for (int k = 1; k <= n + 1; ++k)
                for (const Arc& b : arc_insertions(a, k))
                    if (!contracted[n + 1].count(b)) {
                        r.holds = false;
                        r.witness = a.to_string() + " contracted on [" + std::to_string(n) + "] but inserting " +
                                    std::to_string(k) + " gives " + b.to_string() + ", not contracted on [" +
                                    std::to_string(n + 1) + "]";
                        return r;
                    }
    r.verified_through = max_n;
    return r;
}

namespace {

ContractedFamily graph_family_arcs(const GraphFamily& family, int max_n) {
    for (int n = 0; n <= max_n; ++n)
        if (!filled_status(family(n)).filled)
            throw NotFilled("family " + family.name() + " is not filled at degree " + std::to_string(n));
    return [family](int n) { return contracted_arcs_of_graph(share(family(n))); };
}

} // namespace

FamilyCheck is_translational(const GraphFamily& family, int max_n) {
    return translational_check(graph_family_arcs(family, max_n), max_n);
}

FamilyCheck is_insertional(const GraphFamily& family, int max_n) {
    return insertional_check(graph_family_arcs(family, max_n), max_n);
}

} // namespace tubelat
