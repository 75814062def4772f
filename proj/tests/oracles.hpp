#pragma once

// Slow reference implementations used only by the tests. They avoid the
// library's bitmask helpers and work on plain adjacency matrices.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Adj = std::vector<std::vector<bool>>;
using Set = std::set<int>;

inline Adj adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
    Adj a(n + 1, std::vector<bool>(n + 1, false));
    for (auto [i, j] : edges) a[i][j] = a[j][i] = true;
    return a;
}

inline bool connected(const Adj& a, const Set& s) {
    if (s.empty()) return false;
    Set seen{*s.begin()};
    std::vector<int> stack{*s.begin()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : s)
            if (a[v][u] && seen.insert(u).second) stack.push_back(u);
    }
    return seen.size() == s.size();
}

inline std::vector<Set> subsets(int n) {
    std::vector<Set> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Set s;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) s.insert(v);
        out.push_back(s);
    }
    return out;
}

inline std::vector<Set> tubes(const Adj& a, int n) {
    std::vector<Set> out;
    for (auto& s : subsets(n))
        if (connected(a, s)) out.push_back(s);
    return out;
}

inline bool nested(const Set& x, const Set& y) {
    return std::includes(x.begin(), x.end(), y.begin(), y.end()) ||
           std::includes(y.begin(), y.end(), x.begin(), x.end());
}

inline Set unite(const Set& x, const Set& y) {
    Set u = x;
    u.insert(y.begin(), y.end());
    return u;
}

inline bool compatible(const Adj& a, const Set& x, const Set& y) { return nested(x, y) || !connected(a, unite(x, y)); }

// Maximal pairwise-compatible families of tubes, found by exhaustive search.
inline std::set<std::set<Set>> maximal_tubings(const Adj& a, int n) {
    auto ts = tubes(a, n);
    std::vector<std::set<Set>> all;
    std::vector<Set> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        all.emplace_back(cur.begin(), cur.end());
        for (std::size_t i = from; i < ts.size(); ++i) {
            bool ok = true;
            for (auto& c : cur) ok = ok && compatible(a, c, ts[i]);
            if (!ok) continue;
            cur.push_back(ts[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::set<std::set<Set>> out;
    for (auto& s : all) {
        bool maximal = true;
        for (auto& t : ts) {
            if (s.count(t)) continue;
            bool ok = true;
            for (auto& c : s) ok = ok && compatible(a, c, t);
            if (ok) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.insert(s);
    }
    return out;
}

// Edges of G/I on the remaining labels, via every tube J of G|_I.
inline std::set<std::pair<int, int>> contraction_edges(const Adj& a, int n, const Set& i) {
    std::vector<Set> inner;
    for (auto& s : subsets(n)) {
        bool inside = std::includes(i.begin(), i.end(), s.begin(), s.end());
        if (inside && connected(a, s)) inner.push_back(s);
    }
    std::set<std::pair<int, int>> out;
    for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
            if (i.count(x) || i.count(y)) continue;
            bool e = a[x][y];
            for (auto& j : inner) {
                bool nx = false, ny = false;
                for (int v : j) {
                    nx = nx || a[x][v];
                    ny = ny || a[y][v];
                }
                e = e || (nx && ny);
            }
            if (e) out.insert({x, y});
        }
    }
    return out;
}

inline long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Inversion set of a one-line word as pairs (small, large).
inline std::set<std::pair<int, int>> inversions(const std::vector<int>& w) {
    std::set<std::pair<int, int>> out;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) out.insert({w[b], w[a]});
    return out;
}

// Weak-order join: the permutation whose inversion set is the transitive
// closure of the union, found by scanning S_n.
inline std::vector<int> weak_join(const std::vector<int>& u, const std::vector<int>& w) {
    auto inv = inversions(u);
    auto b = inversions(w);
    inv.insert(b.begin(), b.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [i, j] : std::set<std::pair<int, int>>(inv))
            for (auto [k, l] : std::set<std::pair<int, int>>(inv))
                if (j == k && inv.insert({i, l}).second) grew = true;
    }
    std::vector<int> p(u.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
    do {
        if (inversions(p) == inv) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return {};
}

// Arc drawn as a row of nodes: 'E' at both endpoints, '+'/'-' in between.
// Deleting a node removes it from the row; an endpoint passes its role to
// its neighbor inside the arc.
struct ArcPicture {
    int n;
    int start;
    std::vector<char> row;
};

inline ArcPicture delete_node(ArcPicture p, int k) {
    int end = p.start + static_cast<int>(p.row.size()) - 1;
    if (k < p.start) {
        --p.start;
    } else if (k <= end) {
        int idx = k - p.start;
        p.row.erase(p.row.begin() + idx);
        p.row.front() = 'E';
        p.row.back() = 'E';
    }
    --p.n;
    return p;
}

} // namespace oracle
