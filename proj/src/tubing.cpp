#include "tubelat/tubing.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tubelat/error.hpp"

namespace tubelat {

namespace {

bool compatible_tubes(const Graph& g, VertexSet a, VertexSet b) {
    return a.subset_of(b) || b.subset_of(a) || !is_connected_set(g, a | b);
}

void sort_canonical(std::vector<VertexSet>& v) { std::sort(v.begin(), v.end(), canonical_less); }

std::strong_ordering compare_tube_lists(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == b[i]) continue;
        return canonical_less(a[i], b[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

} // namespace

std::string tubes_to_string(const std::vector<VertexSet>& tubes) {
    std::string s = "{";
    for (std::size_t i = 0; i < tubes.size(); ++i) {
        if (i) s += ',';
        s += tubes[i].to_string();
    }
    return s + "}";
}

Tubing::Tubing(GraphPtr g, std::vector<VertexSet> tubes) : graph_(std::move(g)), tubes_(std::move(tubes)) {
    sort_canonical(tubes_);
    if (std::adjacent_find(tubes_.begin(), tubes_.end()) != tubes_.end())
        throw InvalidTubing("repeated tube in " + tubes_to_string(tubes_));
    for (VertexSet t : tubes_) {
        if (!t.subset_of(graph_->vertices())) throw InvalidVertex("tube " + t.to_string() + " leaves the vertex set");
        if (!is_connected_set(*graph_, t)) throw InvalidTubing(t.to_string() + " is not a tube");
    }
    for (std::size_t a = 0; a < tubes_.size(); ++a)
        for (std::size_t b = a + 1; b < tubes_.size(); ++b)
            if (!compatible_tubes(*graph_, tubes_[a], tubes_[b]))
                throw InvalidTubing("incompatible tubes " + tubes_[a].to_string() + " and " + tubes_[b].to_string());
}

bool Tubing::contains(VertexSet t) const { return std::binary_search(tubes_.begin(), tubes_.end(), t, canonical_less); }

bool Tubing::is_maximal() const {
    if (size() != graph_->n()) return false;
    for (VertexSet c : components(*graph_, graph_->vertices()))
        if (!contains(c)) return false;
    return true;
}

std::string Tubing::to_string() const { return tubes_to_string(tubes_); }

MaximalTubing::MaximalTubing(GraphPtr g, std::vector<VertexSet> tubes) : MaximalTubing(Tubing(std::move(g), std::move(tubes))) {}

MaximalTubing::MaximalTubing(const Tubing& x) : graph_(x.graph_ptr()), tubes_(x.tubes()) {
    if (!x.is_maximal()) throw InvalidTubing("tubing " + x.to_string() + " is not maximal");
    int n = graph_->n();
    down_.assign(n, VertexSet());
    for (int v = 1; v <= n; ++v) {
        for (VertexSet t : tubes_) {
            if (t.contains(v)) {
                down_[v - 1] = t;
                break;
            }
        }
    }
    std::vector<VertexSet> check = down_;
    sort_canonical(check);
    if (check != tubes_) throw InvalidTubing("top map is not a bijection for " + x.to_string());
}

MaximalTubing MaximalTubing::from_down_sets(GraphPtr g, std::vector<VertexSet> down) {
    MaximalTubing x;
    x.graph_ = std::move(g);
    x.down_ = std::move(down);
    x.index_tubes();
    return x;
}

void MaximalTubing::index_tubes() {
    tubes_ = down_;
    sort_canonical(tubes_);
}

bool MaximalTubing::contains(VertexSet t) const {
    return std::binary_search(tubes_.begin(), tubes_.end(), t, canonical_less);
}

int MaximalTubing::top(VertexSet tube) const {
    if (!tube.empty() && tube.subset_of(graph_->vertices()))
        for (int v : tube)
            if (down_[v - 1] == tube) return v;
    throw TubeNotInTubing(tube.to_string() + " is not a tube of " + to_string());
}

int MaximalTubing::parent(int v) const {
    VertexSet d = down_[v - 1];
    int best = 0;
    int best_size = 0;
    for (int u = 1; u <= n(); ++u) {
        VertexSet du = down_[u - 1];
        if (u != v && d.subset_of(du) && du != d && (best == 0 || du.size() < best_size)) {
            best = u;
            best_size = du.size();
        }
    }
    return best;
}

std::string MaximalTubing::to_string() const { return tubes_to_string(tubes_); }

std::strong_ordering operator<=>(const MaximalTubing& a, const MaximalTubing& b) {
    if (a.n() != b.n()) return a.n() <=> b.n();
    if (auto c = compare_tube_lists(a.tubes_, b.tubes_); c != 0) return c;
    if (a.graph_ == b.graph_) return std::strong_ordering::equal;
    return a.graph_->edges() <=> b.graph_->edges();
}

GForest::GForest(GraphPtr g, std::vector<int> parent) : graph_(std::move(g)), parent_(std::move(parent)) {
    int n = graph_->n();
    if (static_cast<int>(parent_.size()) != n) throw InvalidForest("parent array has the wrong length");
    for (int v = 1; v <= n; ++v) {
        int p = parent_[v - 1];
        if (p < 0 || p > n || p == v) throw InvalidForest("bad parent for vertex " + std::to_string(v));
    }
    for (int v = 1; v <= n; ++v) {
        int u = v;
        for (int steps = 0; u != 0; ++steps) {
            if (steps > n) throw InvalidForest("parent relation has a cycle");
            u = parent_[u - 1];
        }
    }
    derive();
    for (int v = 1; v <= n; ++v)
        if (!is_connected_set(*graph_, down_[v - 1]))
            throw InvalidForest("principal ideal of " + std::to_string(v) + " is not a tube");
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            if (!below(i, k) && !below(k, i) && is_connected_set(*graph_, down_[i - 1] | down_[k - 1]))
                throw InvalidForest("incomparable " + std::to_string(i) + " and " + std::to_string(k) + " have a tube as union");
}

void GForest::derive() {
    int n = static_cast<int>(parent_.size());
    children_.assign(n, VertexSet());
    down_.assign(n, VertexSet());
    for (int v = 1; v <= n; ++v)
        if (parent_[v - 1]) children_[parent_[v - 1] - 1].insert(v);
    for (int v = 1; v <= n; ++v) {
        for (int u = v; u != 0; u = parent_[u - 1]) down_[u - 1].insert(v);
    }
}

VertexSet GForest::roots() const {
    VertexSet r;
    for (int v = 1; v <= n(); ++v)
        if (parent_[v - 1] == 0) r.insert(v);
    return r;
}

std::vector<VertexSet> LabeledTubing::original_tubes() const {
    VertexSet ground = VertexSet::of(labels);
    std::vector<VertexSet> out;
    for (VertexSet t : tubing.tubes()) out.push_back(expand(t, ground));
    return out;
}

bool compatible(const Graph& g, VertexSet i, VertexSet j) {
    if (!is_tube(g, i)) throw NotATube(i.to_string() + " is not a tube");
    if (!is_tube(g, j)) throw NotATube(j.to_string() + " is not a tube");
    return compatible_tubes(g, i, j);
}

MaximalTubing psi(const GraphPtr& g, const Permutation& w) {
    if (w.size() != g->n()) throw SizeMismatch("permutation size differs from the graph size");
    std::vector<VertexSet> down(w.size());
    VertexSet prefix;
    for (int v : w.word()) {
        prefix.insert(v);
        down[v - 1] = component_of(*g, prefix, v);
    }
    return MaximalTubing::from_down_sets(g, std::move(down));
}

MaximalTubing psi(const Graph& g, const Permutation& w) { return psi(share(g), w); }

std::vector<MaximalTubing> maximal_tubings_by_recursion(const GraphPtr& g) {
    std::vector<MaximalTubing> out;
    std::vector<VertexSet> down(g->n());
    std::vector<VertexSet> pending{g->vertices()};
    std::function<void()> rec = [&]() {
        while (!pending.empty() && pending.back().empty()) pending.pop_back();
        if (pending.empty()) {
            out.push_back(MaximalTubing::from_down_sets(g, down));
            return;
        }
        auto saved = pending;
        VertexSet s = pending.back();
        pending.pop_back();
        VertexSet c = component_of(*g, s, s.min());
        pending.push_back(s - c);
        for (int r : c) {
            down[r - 1] = c;
            pending.push_back(c - VertexSet::singleton(r));
            rec();
            pending.pop_back();
        }
        pending = std::move(saved);
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MaximalTubing> enumerate_maximal_tubings(const GraphPtr& g) {
    if (g->n() > 8) return maximal_tubings_by_recursion(g);
    std::set<std::vector<VertexSet>, decltype([](const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
                 return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                     [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });
             })>
        seen;
    for (const Permutation& w : all_permutations(g->n())) seen.insert(psi(g, w).down_sets());
    std::vector<MaximalTubing> out;
    out.reserve(seen.size());
    for (const auto& d : seen) out.push_back(MaximalTubing::from_down_sets(g, d));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MaximalTubing> enumerate_maximal_tubings(const Graph& g) { return enumerate_maximal_tubings(share(g)); }

std::vector<Tubing> enumerate_tubings(const GraphPtr& g) {
    auto all = tubes(*g);
    std::size_t m = all.size();
    std::vector<std::vector<char>> ok(m, std::vector<char>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) ok[a][b] = compatible_tubes(*g, all[a], all[b]);
    std::vector<std::vector<VertexSet>> found;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        std::vector<VertexSet> cur;
        for (auto c : chosen) cur.push_back(all[c]);
        found.push_back(cur);
        for (std::size_t i = from; i < m; ++i) {
            bool good = true;
            for (auto c : chosen) good = good && ok[c][i];
            if (!good) continue;
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return compare_tube_lists(a, b) < 0;
    });
    std::vector<Tubing> out;
    out.reserve(found.size());
    for (auto& f : found) out.emplace_back(g, std::move(f));
    return out;
}

GForest tau(const MaximalTubing& x) {
    GForest t;
    t.graph_ = x.graph_ptr();
    t.parent_.resize(x.n());
    for (int v = 1; v <= x.n(); ++v) t.parent_[v - 1] = x.parent(v);
    t.derive();
    return t;
}

MaximalTubing chi(const GForest& t) {
    std::vector<VertexSet> down(t.n());
    for (int v = 1; v <= t.n(); ++v) down[v - 1] = t.down(v);
    return MaximalTubing::from_down_sets(t.graph_ptr(), std::move(down));
}

int top(const MaximalTubing& x, VertexSet tube) { return x.top(tube); }

LabeledTubing restrict_tubing(const Tubing& x, VertexSet i) {
    const Graph& g = x.graph();
    check_vertices(g, i);
    std::vector<VertexSet> pieces;
    for (VertexSet j : x.tubes())
        for (VertexSet c : components(g, i & j)) pieces.push_back(compress(c, i));
    sort_canonical(pieces);
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    return {Tubing(share(std_restriction(g, i)), std::move(pieces)), i.to_vector()};
}

bool is_ideal(const Tubing& x, VertexSet i) {
    VertexSet covered;
    for (VertexSet t : x.tubes())
        if (t.subset_of(i)) covered |= t;
    return covered == i;
}

LabeledTubing quotient_tubing(const Tubing& x, VertexSet ideal) {
    check_vertices(x.graph(), ideal);
    if (!is_ideal(x, ideal)) throw NotAnIdeal(ideal.to_string() + " is not an ideal of " + x.to_string());
    VertexSet rest = x.graph().vertices() - ideal;
    std::vector<VertexSet> out;
    for (VertexSet t : x.tubes())
        if (!t.subset_of(ideal)) out.push_back(compress(t - ideal, rest));
    return {Tubing(share(std_contraction(x.graph(), ideal)), std::move(out)), rest.to_vector()};
}

MaximalTubing restrict_maximal(const MaximalTubing& x, VertexSet i) {
    return MaximalTubing(restrict_tubing(x.as_tubing(), i).tubing);
}

MaximalTubing quotient_maximal(const MaximalTubing& x, VertexSet ideal) {
    return MaximalTubing(quotient_tubing(x.as_tubing(), ideal).tubing);
}

std::vector<VertexSet> ideals(const MaximalTubing& x) {
    GForest t = tau(x);
    std::function<std::vector<VertexSet>(VertexSet)> of_forest;
    auto of_tree = [&](int r) {
        auto inner = of_forest(t.children(r));
        inner.push_back(t.down(r));
        return inner;
    };
    of_forest = [&](VertexSet rs) {
        std::vector<VertexSet> acc{VertexSet()};
        for (int r : rs) {
            auto opts = of_tree(r);
            std::vector<VertexSet> next;
            next.reserve(acc.size() * opts.size());
            for (VertexSet a : acc)
                for (VertexSet o : opts) next.push_back(a | o);
            acc = std::move(next);
        }
        return acc;
    };
    auto out = of_forest(t.roots());
    sort_canonical(out);
    return out;
}

namespace {

// Placed vertices are removed; a vertex is available once all its children are placed.
template <class Pick>
Permutation greedy_extension(const GForest& t, Pick pick) {
    int n = t.n();
    std::vector<int> pending(n);
    VertexSet avail;
    for (int v = 1; v <= n; ++v) {
        pending[v - 1] = t.children(v).size();
        if (pending[v - 1] == 0) avail.insert(v);
    }
    std::vector<int> w;
    while (!avail.empty()) {
        int v = pick(avail);
        avail.erase(v);
        w.push_back(v);
        int p = t.parent(v);
        if (p && --pending[p - 1] == 0) avail.insert(p);
    }
    return Permutation(std::move(w));
}

} // namespace

std::vector<Permutation> linear_extensions(const GForest& t) {
    int n = t.n();
    std::vector<Permutation> out;
    std::vector<int> pending(n);
    VertexSet avail;
    for (int v = 1; v <= n; ++v) {
        pending[v - 1] = t.children(v).size();
        if (pending[v - 1] == 0) avail.insert(v);
    }
    std::vector<int> w;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) {
            out.emplace_back(w);
            return;
        }
        VertexSet here = avail;
        for (int v : here) {
            avail.erase(v);
            w.push_back(v);
            int p = t.parent(v);
            bool opened = p && --pending[p - 1] == 0;
            if (opened) avail.insert(p);
            rec();
            if (opened) avail.erase(p);
            if (p) ++pending[p - 1];
            w.pop_back();
            avail.insert(v);
        }
    };
    rec();
    return out;
}

Permutation sigma_min(const GForest& t) {
    return greedy_extension(t, [](VertexSet s) { return s.min(); });
}

Permutation sigma_max(const GForest& t) {
    return greedy_extension(t, [](VertexSet s) { return s.max(); });
}

std::vector<Edge> forest_inversions(const GForest& t) {
    std::vector<Edge> out;
    for (int i = 1; i <= t.n(); ++i)
        for (int j = i + 1; j <= t.n(); ++j)
            if (t.below(j, i)) out.emplace_back(i, j);
    return out;
}

std::vector<Edge> forest_descents(const GForest& t) {
    std::vector<Edge> out;
    for (int i = 1; i <= t.n(); ++i)
        for (int k : t.children(i))
            if (i < k) out.emplace_back(i, k);
    return out;
}

std::vector<Edge> forest_ascents(const GForest& t) {
    std::vector<Edge> out;
    for (int i = 1; i <= t.n(); ++i)
        for (int k : t.children(i))
            if (i > k) out.emplace_back(i, k);
    return out;
}

Flip flip(const MaximalTubing& x, VertexSet tube) {
    if (!x.contains(tube)) throw TubeNotInTubing(tube.to_string() + " is not in " + x.to_string());
    int k = x.top(tube);
    int p = x.parent(k);
    if (p == 0) throw MaximalTubeNotFlippable(tube.to_string() + " is a connected component");
    VertexSet j = component_of(x.graph(), x.down(p) - VertexSet::singleton(k), p);
    std::vector<VertexSet> ts;
    for (VertexSet t : x.tubes()) ts.push_back(t == tube ? j : t);
    MaximalTubing y(x.graph_ptr(), std::move(ts));
    bool up = k < y.top(j);
    return {std::move(y), j, up};
}

Eigen::VectorXi vertex_coordinates(const MaximalTubing& x, const std::vector<VertexSet>& all_tubes) {
    Eigen::VectorXi v = Eigen::VectorXi::Zero(x.n());
    for (VertexSet t : all_tubes)
        for (int i : t)
            if (t.subset_of(x.down(i))) ++v(i - 1);
    return v;
}

Eigen::VectorXi vertex_coordinates(const MaximalTubing& x) { return vertex_coordinates(x, tubes(x.graph())); }

Eigen::VectorXi lambda_weights(int n) {
    Eigen::VectorXi w(n);
    for (int i = 0; i < n; ++i) w(i) = n - i;
    return w;
}

} // namespace tubelat
