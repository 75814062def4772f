#include "doctest.h"

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "tubelat/error.hpp"
#include "tubelat/weakorder.hpp"

using namespace tubelat;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

Arc A(int n, const char* text) { return Arc::parse(text, n); }

std::vector<Arc> arcs_of(int n, std::initializer_list<const char*> texts) {
    std::vector<Arc> out;
    for (auto t : texts) out.push_back(A(n, t));
    return out;
}

// Index partition given a key function on permutations.
template <class F>
Partition fibers(int n, F key) {
    const auto& W = weak_order(n);
    std::map<decltype(key(W.perms()[0])), std::vector<int>> groups;
    for (std::size_t a = 0; a < W.perms().size(); ++a) groups[key(W.perms()[a])].push_back(static_cast<int>(a));
    Partition out;
    for (auto& [k, v] : groups) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> subword(const Permutation& w, VertexSet v) {
    std::vector<int> out;
    for (int x : w.word())
        if (v.contains(x)) out.push_back(x);
    return out;
}

// Smallest lattice congruence identifying each j_α with its lower cover,
// by closing under meets and joins with every element.
Partition generated_congruence(int n, const std::vector<Arc>& arcs) {
    const auto& W = weak_order(n);
    int m = static_cast<int>(W.perms().size());
    std::vector<int> cls(m);
    for (int x = 0; x < m; ++x) cls[x] = x;
    auto merge = [&](int a, int b) {
        int ca = cls[a], cb = cls[b];
        if (ca == cb) return false;
        for (int& c : cls)
            if (c == cb) c = ca;
        return true;
    };
    for (const Arc& a : arcs) merge(W.index_of(perm_of_arc(a)), W.index_of(perm_of_arc_lower(a)));
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                if (cls[x] != cls[y]) continue;
                for (int z = 0; z < m; ++z) {
                    grew |= merge(W.meet(x, z), W.meet(y, z));
                    grew |= merge(W.join(x, z), W.join(y, z));
                }
            }
    }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < m; ++x) groups[cls[x]].push_back(x);
    Partition out;
    for (auto& [c, v] : groups) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_interval(VertexSet v) { return v.empty() || v.size() == v.max() - v.min() + 1; }

} // namespace

TEST_CASE("weak order basics") {
    CHECK(inversions(P("321")) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(weak_le(P("213"), P("231")));
    CHECK_FALSE(weak_le(P("231"), P("213")));
    CHECK(weak_covers(P("321")) == std::vector<Permutation>{P("231"), P("312")});
    CHECK(weak_join(P("213"), P("132")) == P("321"));
    CHECK_THROWS_AS(weak_le(P("12"), P("123")), SizeMismatch);
    CHECK_THROWS_AS(weak_order(max_weak_order + 1), SizeMismatch);

    for (int n = 1; n <= 4; ++n) {
        const auto& W = weak_order(n);
        CHECK(W.perms().size() == static_cast<std::size_t>(oracle::factorial(n)));
        CHECK(is_lattice(W.order()));
        for (const auto& u : W.perms()) {
            CHECK(weak_meet(u, Permutation::identity(n)) == Permutation::identity(n));
            CHECK(weak_join(u, u) == u);
            for (const auto& w : W.perms()) {
                auto a = oracle::inversions(u.word()), b = oracle::inversions(w.word());
                CHECK(weak_le(u, w) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
                CHECK(W.order().leq(W.index_of(u), W.index_of(w)) == weak_le(u, w));
                CHECK(weak_join(u, w).word() == oracle::weak_join(u.word(), w.word()));
            }
        }
    }
}

TEST_CASE("psi and G-permutations") {
    auto path3 = share(path_graph(3));
    CHECK(psi(path3, P("213")).tubes() == std::vector<VertexSet>{{2}, {1, 2}, {1, 2, 3}});
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : weak_order(n).perms()) {
            auto chain = tau(psi(share(complete_graph(n)), w));
            for (int p = 1; p < n; ++p) CHECK(chain.parent(w.at(p)) == w.at(p + 1));
            CHECK(psi(share(edge_free_graph(n)), w) == psi(share(edge_free_graph(n)), Permutation::identity(n)));
        }

    Graph star(3, {{1, 3}, {2, 3}});
    CHECK_FALSE(is_g_permutation(star, P("213")));
    CHECK_THROWS_AS(is_g_permutation(star, P("12")), SizeMismatch);
    CHECK_THROWS_AS(pi_down(share(Graph(3, {{1, 2}, {1, 3}})), P("123")), NotRightFilled);

    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto gp = share(g);
            for (const auto& w : weak_order(n).perms()) {
                CHECK(is_g_permutation(g, w) == (w == sigma_min(tau(psi(gp, w)))));
                CHECK(is_g_permutation(g, Permutation::identity(n)));
                if (g == complete_graph(n)) CHECK(is_g_permutation(g, w));
            }
        }
}

TEST_CASE("fibers are linear extension sets") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto gp = share(g);
            const auto& W = weak_order(n);
            auto fib = psi_fibers(gp);
            CHECK(fib.size() == enumerate_maximal_tubings(gp).size());
            for (const auto& block : fib) {
                auto ext = linear_extensions(tau(psi(gp, W.perms()[block.front()])));
                std::vector<int> idx;
                for (const auto& w : ext) idx.push_back(W.index_of(w));
                std::sort(idx.begin(), idx.end());
                CHECK(idx == block);
            }
        }
}

TEST_CASE("right-filled and left-filled fibers") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto st = filled_status(g);
            if (!st.right_filled && !st.left_filled) continue;
            auto gp = share(g);
            const auto& W = weak_order(n);
            const Poset& S = W.order();
            for (const auto& block : psi_fibers(gp)) {
                auto t = tau(psi(gp, W.perms()[block.front()]));
                int lo = W.index_of(sigma_min(t)), hi = W.index_of(sigma_max(t));
                for (int x : block) {
                    if (st.right_filled) CHECK(S.leq(lo, x));
                    if (st.left_filled) CHECK(S.leq(x, hi));
                }
            }
            if (!st.right_filled) continue;

            for (auto [a, b] : S.covers()) {
                const auto& u = W.perms()[a];
                const auto& w = W.perms()[b];
                CHECK(weak_le(pi_down(gp, u), pi_down(gp, w)));
                auto iu = forest_inversions(tau(psi(gp, u)));
                auto iw = forest_inversions(tau(psi(gp, w)));
                CHECK(std::includes(iw.begin(), iw.end(), iu.begin(), iu.end()));
            }
            for (const auto& w : W.perms())
                if (is_g_permutation(g, w)) CHECK(pi_down(gp, w) == w);

            std::vector<int> gperms;
            for (std::size_t a = 0; a < W.perms().size(); ++a)
                if (is_g_permutation(g, W.perms()[a])) gperms.push_back(static_cast<int>(a));
            CHECK(are_isomorphic(induced_subposet(S, gperms), build_LG(gp).order));
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : weak_order(n).perms()) CHECK(pi_down(share(complete_graph(n)), w) == w);
}

TEST_CASE("arcs") {
    CHECK(arc_of_cover(P("32514"), P("35214")) == A(5, "2-5:-+"));
    CHECK(arc_of_cover(P("1243"), P("1423")) == A(4, "2-4:+"));
    CHECK(arc_of_cover(P("213"), P("231")) == A(3, "1-3:-"));
    CHECK(arc_of_cover(P("123"), P("213")) == A(3, "1-2:"));
    CHECK_THROWS_AS(arc_of_cover(P("123"), P("321")), NotACover);
    CHECK_THROWS_AS(arc_of_cover(P("213"), P("123")), NotACover);
    CHECK(perm_of_arc(A(4, "2-4:+")) == P("1423"));
    CHECK(perm_of_arc(A(3, "1-2:")) == P("213"));
    CHECK(A(5, "2-5:-+").to_string() == "2-5:-+");
    CHECK_THROWS_AS(Arc::make(4, 3, 2, ""), InvalidArc);
    CHECK_THROWS_AS(Arc::make(4, 1, 3, ""), InvalidArc);
    CHECK_THROWS_AS(Arc::make(4, 1, 3, "x"), InvalidArc);
    CHECK_THROWS_AS(Arc::parse("nonsense"), InvalidArc);

    CHECK(is_subarc(A(4, "2-4:+"), A(4, "1-4:++")));
    CHECK(is_subarc(A(4, "2-4:+"), A(4, "1-4:-+")));
    CHECK_FALSE(is_subarc(A(4, "2-4:+"), A(4, "1-4:--")));

    for (int n = 2; n <= 5; ++n) {
        auto arcs = all_arcs(n);
        std::size_t expected = 0;
        for (int len = 1; len < n; ++len) expected += static_cast<std::size_t>(n - len) << (len - 1);
        CHECK(arcs.size() == expected);
        // Join-irreducibles of S_n are exactly the permutations with one descent.
        std::size_t one_descent = 0;
        for (const auto& w : weak_order(n).perms()) one_descent += weak_covers(w).size() == 1;
        CHECK(arcs.size() == one_descent);
        for (const Arc& a : arcs) {
            CHECK(is_subarc(a, a));
            auto j = perm_of_arc(a);
            auto lower = weak_covers(j);
            REQUIRE(lower.size() == 1);
            CHECK(lower[0] == perm_of_arc_lower(a));
            CHECK(arc_of_cover(perm_of_arc_lower(a), j) == a);
        }
    }
}

TEST_CASE("arc deletion and insertion") {
    CHECK(arc_delete(A(5, "2-5:-+"), 3) == A(4, "2-4:+"));
    CHECK(arc_delete(A(4, "2-4:+"), 1) == A(3, "1-3:+"));
    CHECK(arc_insertions(A(2, "1-2:"), 2) == std::vector<Arc>{A(3, "1-3:+"), A(3, "1-3:-")});
    CHECK_THROWS_AS(arc_delete(A(3, "1-2:"), 2), InvalidVertex);
    CHECK_THROWS_AS(arc_delete(A(3, "1-2:"), 4), InvalidVertex);
    CHECK_THROWS_AS(arc_insertions(A(3, "1-2:"), 5), InvalidVertex);

    for (int n = 3; n <= 6; ++n)
        for (const Arc& a : all_arcs(n))
            for (int k = 1; k <= n; ++k) {
                if ((k == a.i || k == a.k) && a.k == a.i + 1) continue;
                auto d = arc_delete(a, k);
                oracle::ArcPicture pic{n, a.i, {}};
                pic.row.push_back('E');
                for (char c : a.signs) pic.row.push_back(c);
                pic.row.push_back('E');
                auto q = oracle::delete_node(pic, k);
                CHECK(d.n == q.n);
                CHECK(d.i == q.start);
                CHECK(d.k == q.start + static_cast<int>(q.row.size()) - 1);
                CHECK(d.signs == std::string(q.row.begin() + 1, q.row.end() - 1));
            }
    for (int n = 2; n <= 5; ++n)
        for (const Arc& a : all_arcs(n))
            // Endpoint deletions are not inverted by insertion.
            for (int k = 1; k <= n + 1; ++k) {
                auto ins = arc_insertions(a, k);
                std::vector<Arc> expected;
                for (const Arc& b : all_arcs(n + 1))
                    if (k != b.i && k != b.k && arc_delete(b, k) == a)
                        expected.push_back(b);
                CHECK(ins == expected);
            }
}

TEST_CASE("congruences from arcs") {
    auto c = congruence_from_generators(4, arcs_of(4, {"2-4:+"}));
    CHECK(c.contracted() == std::set<Arc>{A(4, "2-4:+"), A(4, "1-4:++"), A(4, "1-4:-+")});
    auto cls = congruence_classes(c);
    CHECK(cls.size() == 18);
    CHECK(cls == generated_congruence(4, arcs_of(4, {"2-4:+"})));
    CHECK(is_lattice_congruence(4, cls));

    auto discrete = congruence_from_generators(4, {});
    CHECK(congruence_classes(discrete).size() == 24);
    CHECK(are_isomorphic(quotient_poset(discrete).order, weak_order(4).order()));

    CHECK(congruence_from_generators(4, arcs_of(4, {"2-4:+", "1-4:++"})).generators() == arcs_of(4, {"2-4:+"}));

    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n - 2; ++k) {
            auto m = metasylvester(n, k);
            for (const Arc& a : all_arcs(n)) CHECK(m.contracts(a) == (a.plus_count() >= k));
            for (const Arc& g : m.generators())
                for (const Arc& h : m.generators())
                    if (!(g == h)) CHECK_FALSE(is_subarc(g, h));
        }
    // Every single-arc generator on [n] gives an interval partition and a lattice congruence.
    for (int n = 2; n <= 4; ++n) {
        const auto& W = weak_order(n);
        for (const Arc& a : all_arcs(n)) {
            auto cong = congruence_from_generators(n, {a});
            for (const Arc& b : all_arcs(n))
                for (const Arc& x : cong.contracted())
                    if (is_subarc(x, b)) CHECK(cong.contracts(b));
            auto part = congruence_classes(cong);
            CHECK(is_lattice_congruence(n, part));
            CHECK(part == generated_congruence(n, {a}));
            auto q = quotient_poset(cong);
            CHECK(is_lattice(q.order));
            for (std::size_t b = 0; b < part.size(); ++b) {
                int lo = part[b].front(), hi = part[b].front();
                for (int x : part[b]) {
                    if (W.order().less(x, lo)) lo = x;
                    if (W.order().less(hi, x)) hi = x;
                }
                CHECK(lo == q.bottoms[b]);
                for (int x : part[b]) CHECK((W.order().leq(lo, x) && W.order().leq(x, hi)));
                std::size_t span = 0;
                for (std::size_t y = 0; y < W.perms().size(); ++y)
                    span += W.order().leq(lo, static_cast<int>(y)) && W.order().leq(static_cast<int>(y), hi);
                CHECK(span == part[b].size());
            }
        }
    }
}

TEST_CASE("arc-generated congruences are intervals at n=5") {
    const auto& W = weak_order(5);
    for (int k = 0; k <= 3; ++k) {
        auto part = congruence_classes(metasylvester(5, k));
        CHECK(is_lattice_congruence(5, part));
        for (const auto& block : part) {
            auto q = induced_subposet(W.order(), block);
            CHECK(q.minimal_elements().size() == 1);
            CHECK(q.maximal_elements().size() == 1);
        }
    }
    CHECK(congruence_classes(metasylvester(5, 0)).size() == 1);
    CHECK(congruence_classes(metasylvester(5, 1)).size() == 42);
}

TEST_CASE("theta_G") {
    for (int n = 1; n <= 5; ++n) CHECK(generators_of_theta_G(complete_graph(n)).empty());
    CHECK(generators_of_theta_G(path_graph(5)) == arcs_of(5, {"1-3:+", "2-4:+", "3-5:+"}));
    for (int k = 1; k <= 3; ++k) {
        auto gens = generators_of_theta_G(h_graph(k, 6));
        std::vector<Arc> expected;
        for (int i = 1; i + k + 1 <= 6; ++i) expected.push_back(Arc{6, i, i + k + 1, std::string(k, '+')});
        CHECK(gens == expected);
    }
    CHECK_THROWS_AS(generators_of_theta_G(Graph(3, {{1, 3}, {2, 3}})), NotFilled);

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto gp = share(g);
            auto fib = psi_fibers(gp);
            CHECK(is_lattice_congruence(n, fib) == filled_status(g).filled);
            if (!filled_status(g).filled) continue;
            auto th = theta_G(g);
            CHECK(congruence_classes(th) == fib);
            CHECK(th.contracted() == contracted_arcs_of_graph(gp));
        }
}

TEST_CASE("lattice quotient maps") {
    auto star = share(Graph(3, {{1, 3}, {2, 3}}));
    auto r = is_lattice_quotient_map(star);
    CHECK_FALSE(r.joins);
    CHECK(r.meets);
    REQUIRE(r.join_witness);
    auto [u, w] = *r.join_witness;
    CHECK(((u == P("132") && w == P("213")) || (u == P("213") && w == P("132"))));
    auto lg = build_LG(star);
    CHECK_FALSE(psi_preserves_join(lg, P("213"), P("132")));

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto st = filled_status(g);
            auto gp = share(g);
            auto rep = is_lattice_quotient_map(gp, MapCheck::Both, 2);
            CHECK(rep.lattice_map() == st.filled);
            if (st.right_filled) CHECK(rep.meets);
            if (st.left_filled) CHECK(rep.joins);
            if (n <= 4) {
                CHECK(is_lattice_quotient_map(gp, MapCheck::Meet).meets == rep.meets);
                CHECK(is_lattice_quotient_map(gp, MapCheck::Join).joins == rep.joins);
            }
        }
}

TEST_CASE("subword maps and the interval square") {
    for (int n = 1; n <= 5; ++n)
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            VertexSet v = VertexSet::from_bits(bits);
            auto part = fibers(n, [&](const Permutation& w) { return subword(w, v); });
            CHECK(is_lattice_congruence(n, part) == is_interval(v));
        }

    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto gp = share(g);
            for (unsigned bits = 1; bits < (1u << n); ++bits) {
                VertexSet v = VertexSet::from_bits(bits);
                auto sub = share(std_restriction(g, v));
                auto rest = (VertexSet::range(n) - v).to_vector();
                auto vs = v.to_vector();
                do {
                    std::vector<int> word = vs;
                    word.insert(word.end(), rest.begin(), rest.end());
                    Permutation w(word);
                    auto x = psi(gp, w);
                    CHECK(is_ideal(x.as_tubing(), v));
                    auto std_sub = standardize_word(subword(w, v));
                    CHECK(restrict_maximal(x, v) == psi(sub, Permutation(std_sub)));
                } while (std::next_permutation(vs.begin(), vs.end()));
            }
        }
}

TEST_CASE("translational and insertional families") {
    for (int k = 1; k <= 4; ++k) {
        auto r = is_translational(GraphFamily::h(k), 6);
        CHECK(r.holds);
        CHECK(r.verified_through == 6);
    }
    CHECK(is_insertional(GraphFamily::path(), 6).holds);
    CHECK(is_translational(GraphFamily::complete(), 5).holds);
    CHECK(is_translational(GraphFamily::edge_free(), 5).holds);

    for (int n = 5; n <= 6; ++n)
        for (int k = 0; k <= 3; ++k) {
            auto f = [k](int m) { return metasylvester(m, k).contracted(); };
            CHECK(translational_check(f, n).holds);
            CHECK(insertional_check(f, n).holds);
        }

    auto distance_two = GraphFamily::from_A({2});
    CHECK_THROWS_AS(is_translational(distance_two, 4), NotFilled);
    CHECK_THROWS_AS(is_insertional(distance_two, 4), NotFilled);
    auto raw = [&](int m) { return contracted_arcs_of_graph(share(distance_two(m))); };
    CHECK(translational_check(raw, 4).holds);
    CHECK_FALSE(insertional_check(raw, 4).holds);

    auto fail = translational_check([](int m) { return m == 3 ? std::set<Arc>{Arc{3, 1, 2, ""}} : std::set<Arc>{}; }, 4);
    CHECK_FALSE(fail.holds);
    CHECK_FALSE(fail.witness.empty());
}
