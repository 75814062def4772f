#include "tubelat/poset.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "tubelat/error.hpp"
#include "tubelat/parallel.hpp"

namespace tubelat {

Poset Poset::from_relations(std::size_t n, const std::vector<std::pair<int, int>>& less) {
    Poset p;
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [x, y] : less) {
        if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n)
            throw ElementNotFound("relation mentions an unknown element");
        if (x == y) throw std::logic_error("order relation is not antisymmetric");
        succ[x].push_back(y);
        ++indeg[y];
    }
    std::vector<int> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int y : succ[queue[head]])
            if (--indeg[y] == 0) queue.push_back(y);
    if (queue.size() != n) throw std::logic_error("order relation has a cycle");
    p.topo_ = queue;

    p.up_.assign(n, DynBitset(n));
    p.down_.assign(n, DynBitset(n));
    for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
        int x = *it;
        p.up_[x].set(x);
        for (int y : succ[x]) p.up_[x] |= p.up_[y];
    }
    for (int x : p.topo_) {
        p.down_[x].set(x);
        p.up_[x].for_each([&](std::size_t y) { p.down_[y].set(x); });
    }
    p.down_count_.resize(n);
    p.up_count_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        p.down_count_[x] = p.down_[x].count();
        p.up_count_[x] = p.up_[x].count();
    }
    for (auto [x, y] : less)
        if ((p.down_[y] & p.up_[x]).count() == 2) p.covers_.emplace_back(x, y);
    std::sort(p.covers_.begin(), p.covers_.end());
    p.covers_.erase(std::unique(p.covers_.begin(), p.covers_.end()), p.covers_.end());
    p.upper_.assign(n, {});
    p.lower_.assign(n, {});
    for (auto [x, y] : p.covers_) {
        p.upper_[x].push_back(y);
        p.lower_[y].push_back(x);
    }
    p.level_.assign(n, 0);
    for (int x : p.topo_)
        for (int y : p.upper_[x]) p.level_[y] = std::max(p.level_[y], p.level_[x] + 1);
    return p;
}

int Poset::check(int x) const {
    if (x < 0 || static_cast<std::size_t>(x) >= up_.size()) throw ElementNotFound("no element " + std::to_string(x));
    return x;
}

bool Poset::leq(int x, int y) const { return up_[check(x)].test(check(y)); }

std::optional<int> Poset::meet(int x, int y) const {
    DynBitset lb = down_[check(x)] & down_[check(y)];
    int best = -1;
    lb.for_each([&](std::size_t z) {
        if (best < 0 || down_count_[z] > down_count_[best]) best = static_cast<int>(z);
    });
    if (best < 0 || !lb.subset_of(down_[best])) return std::nullopt;
    return best;
}

std::optional<int> Poset::join(int x, int y) const {
    DynBitset ub = up_[check(x)] & up_[check(y)];
    int best = -1;
    ub.for_each([&](std::size_t z) {
        if (best < 0 || up_count_[z] > up_count_[best]) best = static_cast<int>(z);
    });
    if (best < 0 || !ub.subset_of(up_[best])) return std::nullopt;
    return best;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (lower_[x].empty()) out.push_back(static_cast<int>(x));
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (upper_[x].empty()) out.push_back(static_cast<int>(x));
    return out;
}

std::optional<int> Poset::bottom() const {
    auto m = minimal_elements();
    if (m.size() == 1) return m[0];
    return std::nullopt;
}

std::optional<int> Poset::top() const {
    auto m = maximal_elements();
    if (m.size() == 1) return m[0];
    return std::nullopt;
}

std::vector<int> minimal_upper_bounds(const Poset& p, int x, int y) {
    DynBitset ub = p.up(x) & p.up(y);
    std::vector<int> out;
    ub.for_each([&](std::size_t z) {
        if ((p.down(static_cast<int>(z)) & ub).count() == 1) out.push_back(static_cast<int>(z));
    });
    return out;
}

std::vector<int> maximal_lower_bounds(const Poset& p, int x, int y) {
    DynBitset lb = p.down(x) & p.down(y);
    std::vector<int> out;
    lb.for_each([&](std::size_t z) {
        if ((p.up(static_cast<int>(z)) & lb).count() == 1) out.push_back(static_cast<int>(z));
    });
    return out;
}

namespace {

template <class Has>
std::optional<std::pair<int, int>> first_pair_without(const Poset& p, Has has) {
    int n = static_cast<int>(p.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!has(x, y)) return std::make_pair(x, y);
    return std::nullopt;
}

} // namespace

std::optional<LatticeFailure> lattice_failure(const Poset& p) {
    int n = static_cast<int>(p.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!p.join(x, y)) return LatticeFailure{x, y, true, minimal_upper_bounds(p, x, y)};
            if (!p.meet(x, y)) return LatticeFailure{x, y, false, maximal_lower_bounds(p, x, y)};
        }
    return std::nullopt;
}

bool is_lattice(const Poset& p) { return p.size() > 0 && !lattice_failure(p); }

bool is_meet_semilattice(const Poset& p) {
    return p.size() > 0 && !first_pair_without(p, [&](int x, int y) { return p.meet(x, y).has_value(); });
}

bool is_join_semilattice(const Poset& p) {
    return p.size() > 0 && !first_pair_without(p, [&](int x, int y) { return p.join(x, y).has_value(); });
}

SemidistributivityReport is_semidistributive(const Poset& p, int jobs) {
    if (!is_lattice(p)) throw NotALattice("semidistributivity needs a lattice");
    std::size_t n = p.size();
    std::vector<int> mt(n * n), jn(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            mt[x * n + y] = *p.meet(static_cast<int>(x), static_cast<int>(y));
            jn[x * n + y] = *p.join(static_cast<int>(x), static_cast<int>(y));
        }
    // Smallest offending x per worker block keeps the reported witness deterministic.
    std::mutex mu;
    SemidistributivityReport report;
    std::size_t best = n * n * n * 2;
    parallel_for(n, jobs, [&](std::size_t x) {
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                bool meet_bad = mt[x * n + z] == mt[y * n + z] && mt[jn[x * n + y] * n + z] != mt[x * n + z];
                bool join_bad = jn[x * n + z] == jn[y * n + z] && jn[mt[x * n + y] * n + z] != jn[x * n + z];
                if (!meet_bad && !join_bad) continue;
                std::size_t key = ((x * n + y) * n + z) * 2 + (meet_bad ? 0 : 1);
                std::lock_guard lock(mu);
                if (key < best) {
                    best = key;
                    report.holds = false;
                    report.witness = std::array<int, 3>{static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)};
                    report.law = meet_bad ? "meet" : "join";
                }
                return;
            }
    });
    return report;
}

std::vector<long long> mobius_from(const Poset& p, int x) {
    std::vector<long long> mu(p.size(), 0);
    const DynBitset& above = p.up(x);
    for (int z : p.topological_order()) {
        if (!above.test(z)) continue;
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        long long s = 0;
        (p.down(z) & above).for_each([&](std::size_t w) {
            if (static_cast<int>(w) != z) s += mu[w];
        });
        mu[z] = -s;
    }
    return mu;
}

long long mobius(const Poset& p, int x, int y) {
    if (!p.leq(x, y)) throw NotComparable("mobius needs x <= y");
    return mobius_from(p, x)[y];
}

Poset dual(const Poset& p) {
    std::vector<std::pair<int, int>> rel;
    for (auto [x, y] : p.covers()) rel.emplace_back(y, x);
    return Poset::from_relations(p.size(), rel);
}

Poset product(const Poset& p, const Poset& q) {
    int m = static_cast<int>(q.size());
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : p.covers())
        for (int c = 0; c < m; ++c) rel.emplace_back(a * m + c, b * m + c);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (auto [c, d] : q.covers()) rel.emplace_back(static_cast<int>(a) * m + c, static_cast<int>(a) * m + d);
    return Poset::from_relations(p.size() * q.size(), rel);
}

Poset induced_subposet(const Poset& p, const std::vector<int>& keep) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            if (a != b && p.leq(keep[a], keep[b])) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Poset::from_relations(keep.size(), rel);
}

bool are_isomorphic(const Poset& p, const Poset& q) {
    std::size_t n = p.size();
    if (n != q.size() || p.covers().size() != q.covers().size()) return false;
    auto signature = [](const Poset& r, int x) {
        return std::array<std::size_t, 5>{r.lower_covers(x).size(), r.upper_covers(x).size(), r.down(x).count(),
                                          r.up(x).count(), static_cast<std::size_t>(r.level(x))};
    };
    std::vector<std::array<std::size_t, 5>> sp(n), sq(n);
    for (std::size_t x = 0; x < n; ++x) {
        sp[x] = signature(p, static_cast<int>(x));
        sq[x] = signature(q, static_cast<int>(x));
    }
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    const auto& order = p.topological_order();
    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == n) return true;
        int x = order[idx];
        std::vector<int> want;
        for (int c : p.lower_covers(x)) want.push_back(f[c]);
        std::sort(want.begin(), want.end());
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || sq[y] != sp[x]) continue;
            std::vector<int> have = q.lower_covers(static_cast<int>(y));
            std::sort(have.begin(), have.end());
            if (have != want) continue;
            f[x] = static_cast<int>(y);
            used[y] = 1;
            if (rec(idx + 1)) return true;
            used[y] = 0;
            f[x] = -1;
        }
        return false;
    };
    return rec(0);
}

int TubingPoset::index_of(const MaximalTubing& x) const {
    auto it = std::lower_bound(tubings.begin(), tubings.end(), x);
    if (it == tubings.end() || !(*it == x)) throw ElementNotFound("tubing " + x.to_string() + " is not in L_G");
    return static_cast<int>(it - tubings.begin());
}

TubingPoset build_LG(const GraphPtr& g) {
    TubingPoset lg{g, enumerate_maximal_tubings(g), {}};
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < lg.tubings.size(); ++a) {
        const MaximalTubing& x = lg.tubings[a];
        for (VertexSet t : x.tubes()) {
            if (x.parent(x.top(t)) == 0) continue;
            Flip f = flip(x, t);
            if (f.upward) rel.emplace_back(static_cast<int>(a), lg.index_of(f.result));
        }
    }
    lg.order = Poset::from_relations(lg.tubings.size(), rel);
    return lg;
}

TubingPoset build_LG(const Graph& g) { return build_LG(share(g)); }

FaceInterval tubing_face_interval(const TubingPoset& lg, const Tubing& y) {
    FaceInterval out;
    std::size_t n = lg.tubings.size();
    DynBitset in(n);
    for (std::size_t a = 0; a < n; ++a) {
        bool all = true;
        for (VertexSet t : y.tubes()) all = all && lg.tubings[a].contains(t);
        if (all) {
            in.set(a);
            out.members.push_back(static_cast<int>(a));
        }
    }
    if (out.members.empty()) return out;
    const Poset& p = lg.order;
    for (int a : out.members) {
        if (in.subset_of(p.up(a))) out.bottom = a;
        if (in.subset_of(p.down(a))) out.top = a;
    }
    if (!out.bottom || !out.top) return out;
    DynBitset between = p.up(*out.bottom) & p.down(*out.top);
    out.is_interval = between == in;
    if (!out.is_interval) {
        between.for_each([&](std::size_t c) {
            if (!out.witness && !in.test(c)) out.witness = std::array<int, 3>{*out.bottom, static_cast<int>(c), *out.top};
        });
    }
    return out;
}

FaceInterval tubing_face_interval(const Graph& g, const std::vector<VertexSet>& y) {
    auto lg = build_LG(g);
    return tubing_face_interval(lg, Tubing(lg.graph, y));
}

} // namespace tubelat
