#include "tubelat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "tubelat/error.hpp"
#include "tubelat/hopf.hpp"
#include "tubelat/parallel.hpp"

namespace tubelat {

namespace {

int cap(const VerifyOptions& o, int n) { return std::min(n, o.max_n); }

// Accumulates failures; the first few are kept for the report.
struct Tally {
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        ++failed;
        if (notes.size() < 3) notes.push_back(what);
    }
    CheckOutcome outcome(const std::string& summary) const {
        std::ostringstream out;
        out << summary << "; " << checked << " checks, " << failed << " failed";
        for (const auto& n : notes) out << "; " << n;
        return {failed == 0, out.str()};
    }
};

bool connected_graph(const Graph& g) { return components(g, g.vertices()).size() <= 1; }

std::string graph_name(const Graph& g) { return "n=" + std::to_string(g.n()) + " " + edges_to_string(g); }

// Maximal tubings by brute force: maximal cliques of the compatibility relation
// on tubes, with connectivity and compatibility recomputed from adjacency.
std::set<std::vector<unsigned>> brute_force_tubings(const Graph& g) {
    int n = g.n();
    auto connected = [&](unsigned s) {
        if (s == 0) return false;
        unsigned seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            unsigned next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1)
                    for (int u = 0; u < n; ++u)
                        if ((s >> u & 1) && g.has_edge(v + 1, u + 1)) next |= 1u << u;
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == s;
    };
    std::vector<unsigned> tubes;
    for (unsigned s = 1; s < (1u << n); ++s)
        if (connected(s)) tubes.push_back(s);
    auto compatible = [&](unsigned a, unsigned b) {
        return (a & b) == a || (a & b) == b || ((a & b) == 0 && !connected(a | b));
    };
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        bool extended = false;
        for (std::size_t t = 0; t < tubes.size(); ++t) {
            if (std::find(cur.begin(), cur.end(), tubes[t]) != cur.end()) continue;
            bool ok = std::all_of(cur.begin(), cur.end(), [&](unsigned c) { return compatible(c, tubes[t]); });
            if (!ok) continue;
            extended = true;
            if (t < from) continue;
            cur.push_back(tubes[t]);
            grow(t + 1);
            cur.pop_back();
        }
        if (!extended) {
            auto sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.insert(sorted);
        }
    };
    grow(0);
    return out;
}

std::vector<unsigned> tube_bits(const MaximalTubing& x) {
    std::vector<unsigned> out;
    for (VertexSet t : x.tubes()) out.push_back(t.bits());
    std::sort(out.begin(), out.end());
    return out;
}

// Criterion 4 or 5 on one graph: meets (right) or joins (left).
void filled_side(Tally& t, const Graph& g, bool right, int jobs) {
    auto gp = share(g);
    TubingPoset lg = build_LG(gp);
    std::size_t m = lg.tubings.size();
    if (right) {
        std::vector<std::vector<Edge>> inv(m);
        std::vector<Permutation> sig;
        for (std::size_t a = 0; a < m; ++a) {
            inv[a] = forest_inversions(tau(lg.tubings[a]));
            sig.push_back(sigma_min(tau(lg.tubings[a])));
        }
        bool inv_ok = true, perm_ok = true;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                bool le = lg.order.leq(static_cast<int>(a), static_cast<int>(b));
                if (le != std::includes(inv[b].begin(), inv[b].end(), inv[a].begin(), inv[a].end())) inv_ok = false;
                if (le != weak_le(sig[a], sig[b])) perm_ok = false;
            }
        t.expect(inv_ok, "inversion order differs from L_G on " + graph_name(g));
        t.expect(perm_ok, "G-permutation order differs from L_G on " + graph_name(g));
    }
    auto rep = is_lattice_quotient_map(gp, right ? MapCheck::Meet : MapCheck::Join, jobs);
    t.expect(right ? rep.meets : rep.joins, std::string(right ? "meet" : "join") + " not preserved on " + graph_name(g));
}

CheckOutcome criterion1(const VerifyOptions& o) {
    Tally t;
    for (int n : {3, 4})
        for (const Graph& g : all_graphs(n)) {
            bool lattice_map = is_lattice_quotient_map(share(g), MapCheck::Both, o.jobs).lattice_map();
            t.expect(lattice_map == filled_status(g).filled, "mismatch on " + graph_name(g));
        }
    return t.outcome("all 8 + 64 graphs on [3] and [4]: lattice map iff filled");
}

CheckOutcome criterion2(const VerifyOptions&) {
    Tally t;
    int non_lattice = 0;
    for (const Graph& g : all_graphs(4)) {
        if (!connected_graph(g)) continue;
        bool lattice = is_lattice(build_LG(g).order);
        bool predicted = g.has_edge(1, 3) && g.has_edge(2, 4) && !g.has_edge(2, 3);
        non_lattice += !lattice;
        t.expect(lattice != predicted, "classification fails on " + graph_name(g));
    }
    t.expect(non_lattice == 7, "found " + std::to_string(non_lattice) + " non-lattices, expected 7");
    return t.outcome("connected graphs on [4]: " + std::to_string(non_lattice) + " non-lattices");
}

CheckOutcome criterion3(const VerifyOptions& o) {
    Tally t;
    long long catalan = 1, factorial = 1;
    int top = cap(o, 7);
    for (int n = 0; n <= top; ++n) {
        if (n > 0) {
            catalan = catalan * 2 * (2 * n - 1) / (n + 1);
            factorial *= n;
        }
        auto p = static_cast<long long>(enumerate_maximal_tubings(path_graph(n)).size());
        auto k = static_cast<long long>(enumerate_maximal_tubings(complete_graph(n)).size());
        auto e = static_cast<long long>(enumerate_maximal_tubings(edge_free_graph(n)).size());
        t.expect(p == catalan, "path:" + std::to_string(n) + " has " + std::to_string(p));
        t.expect(k == factorial, "complete:" + std::to_string(n) + " has " + std::to_string(k));
        t.expect(e == 1, "empty:" + std::to_string(n) + " has " + std::to_string(e));
    }
    return t.outcome("n <= " + std::to_string(top));
}

CheckOutcome criterion45(const VerifyOptions& o, bool right) {
    Tally t;
    int top = cap(o, 5), graphs = 0;
    for (int n = 1; n <= top; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto st = filled_status(g);
            if (right ? !st.right_filled : !st.left_filled) continue;
            ++graphs;
            filled_side(t, g, right, o.jobs);
        }
    return t.outcome(std::to_string(graphs) + (right ? " right" : " left") + "-filled graphs, n <= " + std::to_string(top));
}

CheckOutcome criterion6(const VerifyOptions& o) {
    Tally t;
    int top = cap(o, 5), graphs = 0;
    for (int n = 1; n <= top; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (!filled_status(g).filled) continue;
            ++graphs;
            t.expect(congruence_classes(theta_G(g)) == psi_fibers(share(g)), "classes differ from fibers on " + graph_name(g));
        }
    return t.outcome(std::to_string(graphs) + " filled graphs, n <= " + std::to_string(top));
}

CheckOutcome criterion7(const VerifyOptions& o) {
    Tally t;
    int top = cap(o, 4);
    long long faces = 0, conj_checked = 0, conj_agree = 0;
    for (int n = 0; n <= top; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto gp = share(g);
            TubingPoset lg = build_LG(gp);
            bool lattice = is_lattice(lg.order);
            auto comps = components(g, g.vertices());
            for (const Tubing& y : enumerate_tubings(gp)) {
                ++faces;
                auto face = tubing_face_interval(lg, y);
                t.expect(face.is_interval, "face " + y.to_string() + " is not an interval on " + graph_name(g));
                bool all_max = std::all_of(comps.begin(), comps.end(), [&](VertexSet c) { return y.contains(c); });
                if (!all_max || !face.is_interval) continue;
                long long mu = mobius(lg.order, *face.bottom, *face.top);
                long long want = (n - static_cast<int>(y.size())) % 2 == 0 ? 1 : -1;
                if (lattice) t.expect(mu == want, "μ = " + std::to_string(mu) + " on face " + y.to_string() + " of " + graph_name(g));
                else {
                    ++conj_checked;
                    conj_agree += mu == want;
                }
            }
        }
    std::string summary = std::to_string(faces) + " faces over all graphs n <= " + std::to_string(top);
    if (o.conjecture)
        summary += "; non-lattice Möbius agreement " + std::to_string(conj_agree) + "/" + std::to_string(conj_checked) +
                   " (reported, not asserted)";
    return t.outcome(summary);
}

CheckOutcome criterion8(const VerifyOptions& o) {
    Tally t;
    int top = cap(o, 6);
    for (int n = 3; n <= top; ++n) {
        auto lg = build_LG(cycle_graph(n));
        bool lattice = is_lattice(lg.order);
        t.expect(lattice, "L_{C_" + std::to_string(n) + "} is not a lattice");
        if (lattice) t.expect(is_semidistributive(lg.order, o.jobs).holds, "L_{C_" + std::to_string(n) + "} is not semidistributive");
    }
    auto star = build_LG(Graph(4, {{1, 2}, {1, 3}, {1, 4}}));
    bool lattice = is_lattice(star.order);
    t.expect(lattice, "star L_G is not a lattice");
    std::string witness;
    if (lattice) {
        auto sd = is_semidistributive(star.order, o.jobs);
        t.expect(!sd.holds && sd.witness.has_value(), "star L_G is semidistributive");
        if (sd.witness) {
            const auto& w = *sd.witness;
            witness = "; star witness (" + sd.law + ") x=" + star.tubings[w[0]].to_string() + " y=" +
                      star.tubings[w[1]].to_string() + " z=" + star.tubings[w[2]].to_string();
        }
    }
    return t.outcome("C_3..C_" + std::to_string(top) + " semidistributive" + witness);
}

GraphFamily distance_family(std::set<int> a) { return GraphFamily::from_A(std::move(a)); }

CheckOutcome criterion9(const VerifyOptions& o) {
    Tally t;
    auto prod = mr_product(Permutation::parse("21"), Permutation::parse("12"));
    t.expect(to_string(prod) == "F_2134 + F_2314 + F_2341 + F_3214 + F_3241 + F_3421", "F_21·F_12 = " + to_string(prod));
    auto cop = mr_coproduct(Permutation::parse("3241"));
    t.expect(to_string(cop) == "ι ⊗ F_3241 + F_1 ⊗ F_231 + F_21 ⊗ F_21 + F_213 ⊗ F_1 + F_3241 ⊗ ι", "Δ(F_3241) = " + to_string(cop));

    int assoc = cap(o, 6), deg = cap(o, 5);
    for (auto fam : {GraphFamily::path(), GraphFamily::complete(), GraphFamily::edge_free(), GraphFamily::odd_bipartite()}) {
        auto r = check_associativity(fam, assoc, o.jobs);
        t.expect(r.holds, fam.name() + " not associative: " + r.witness);
    }
    std::vector<std::pair<std::set<int>, std::set<int>>> nests = {
        {{}, {1}}, {{1}, {1, 2}}, {{1}, {1, 2, 3}}, {{2}, {1, 2}}, {{1, 3}, {1, 2, 3}}, {{}, {2, 4}}, {{1}, {1, 2, 3, 4}}};
    for (auto& [a, b] : nests) {
        auto r = check_c_algebra_map(distance_family(a), distance_family(b), deg, o.jobs);
        t.expect(r.holds, "c not multiplicative for nested distance sets: " + r.witness);
    }
    for (auto fam : {GraphFamily::path(), GraphFamily::edge_free(), GraphFamily::h(2), GraphFamily::odd_bipartite()}) {
        auto r = check_c_algebra_map(fam, deg, o.jobs);
        t.expect(r.holds, "c into permutations not multiplicative for " + fam.name() + ": " + r.witness);
    }
    for (auto fam : {GraphFamily::path(), GraphFamily::complete(), GraphFamily::edge_free(), GraphFamily::cycle()}) {
        auto r = check_c_commutes_with_delta(fam, deg, o.jobs);
        t.expect(r.holds, fam.name() + " Δ-compatibility fails: " + r.witness);
    }
    return t.outcome("associativity through degree " + std::to_string(assoc) + ", embeddings through " + std::to_string(deg));
}

// Fixed truncation: below degree 5 the k = 2, 3 families coincide with the complete one.
CheckOutcome criterion10(const VerifyOptions&) {
    Tally t;
    const int top = 6;
    struct Entry {
        std::string k;
        GraphFamily family;
    };
    std::vector<Entry> families = {{"0", GraphFamily::edge_free()},
                                   {"1", distance_family({1})},
                                   {"2", distance_family({1, 2})},
                                   {"3", distance_family({1, 2, 3})},
                                   {"∞", GraphFamily::from_all()}};
    std::vector<std::string> both;
    for (auto& [k, fam] : families) {
        bool adm = is_admissible(fam, top).holds;
        bool tr = is_translational(fam, top).holds;
        bool rc = is_restriction_compatible(fam, top).holds;
        bool ins = is_insertional(fam, top).holds;
        t.expect(adm == tr, "k=" + k + ": admissible " + std::to_string(adm) + " vs translational " + std::to_string(tr));
        t.expect(rc == ins, "k=" + k + ": restriction-compatible " + std::to_string(rc) + " vs insertional " + std::to_string(ins));
        if (adm && rc) both.push_back(k);
    }
    t.expect(both == std::vector<std::string>{"0", "1", "∞"}, "admissible and restriction-compatible for k other than 0, 1, ∞");

    for (int k = 1; k <= 4; ++k) t.expect(is_translational(GraphFamily::h(k), top).holds, "H_" + std::to_string(k) + " not translational");
    auto mixed = GraphFamily::custom("path-then-complete", [](int n) { return n < 4 ? path_graph(n) : complete_graph(n); });
    t.expect(!is_translational(mixed, top).holds, "a filled family not of the form H_k passed as translational");
    t.expect(!is_admissible(mixed, top).holds, "a filled family not of the form H_k passed as admissible");

    // The classification needs one degree of headroom to see the contraction witness for [N-2].
    int wide = top + 1;
    std::vector<std::set<int>> survivors;
    for (unsigned bits = 0; bits < (1u << (wide - 2)); ++bits) {
        std::set<int> a;
        for (int d = 1; d <= wide - 2; ++d)
            if (bits >> (d - 1) & 1) a.insert(d);
        if (is_admissible(distance_family(a), wide).holds && is_restriction_compatible(distance_family(a), wide).holds)
            survivors.push_back(a);
    }
    std::set<int> full;
    for (int d = 1; d <= wide - 2; ++d) full.insert(d);
    std::vector<std::set<int>> expected = {{}, {1}, full};
    std::sort(survivors.begin(), survivors.end());
    std::sort(expected.begin(), expected.end());
    t.expect(survivors == expected, "distance families surviving both tests at N=" + std::to_string(wide) + " are not path/complete/edge-free");
    return t.outcome("k ∈ {0,1,2,3,∞} at N=" + std::to_string(top) + "; classification over A ⊆ [" + std::to_string(wide - 2) +
                     "] at N=" + std::to_string(wide));
}

CheckOutcome criterion11(const VerifyOptions& o) {
    Tally t;
    int top4 = cap(o, 4), top5 = cap(o, 5);
    for (int n = 0; n <= top4; ++n)
        for (const Graph& g : all_graphs(n)) {
            std::set<std::vector<unsigned>> got;
            for (const auto& x : enumerate_maximal_tubings(g)) got.insert(tube_bits(x));
            t.expect(got == brute_force_tubings(g), "enumeration differs from brute force on " + graph_name(g));
        }
    for (int n = 2; n <= top5; ++n)
        for (const Arc& a : all_arcs(n))
            for (int k = 1; k <= n + 1; ++k)
                for (const Arc& b : arc_insertions(a, k)) {
                    t.expect(arc_delete(b, k) == a, "(" + b.to_string() + ")∖" + std::to_string(k) + " != " + a.to_string());
                    auto back = arc_insertions(arc_delete(b, k), k);
                    t.expect(std::find(back.begin(), back.end(), b) != back.end(), "insertions miss " + b.to_string());
                }
    for (int n = 0; n <= top5; ++n)
        for (const Graph& g : all_graphs(n))
            for (const auto& x : enumerate_maximal_tubings(g)) {
                auto f = tau(x);
                t.expect(chi(f) == x && tau(chi(f)) == f, "χ/τ round trip fails on " + x.to_string());
            }
    return t.outcome("tubings n <= " + std::to_string(top4) + ", arcs and χ/τ n <= " + std::to_string(top5));
}

// ---- examples ----

CheckOutcome outcome(bool ok, std::string detail) { return {ok, std::move(detail)}; }

Permutation P(const char* s) { return Permutation::parse(s); }

} // namespace

std::vector<Check> criteria_checks() {
    return {
        {"1", "lattice quotient map iff filled", criterion1},
        {"2", "4-vertex non-lattice classification", criterion2},
        {"3", "dimension counts", criterion3},
        {"4", "right-filled: inversion order, G-permutations, meets", [](const VerifyOptions& o) { return criterion45(o, true); }},
        {"5", "left-filled: joins", [](const VerifyOptions& o) { return criterion45(o, false); }},
        {"6", "generators of Θ_G give the fibers of Ψ_G", criterion6},
        {"7", "faces are intervals, Möbius values", criterion7},
        {"8", "cyclohedra semidistributive, star counterexample", criterion8},
        {"9", "Hopf identities", criterion9},
        {"10", "admissible iff translational, compatible iff insertional", criterion10},
        {"11", "oracle equivalence", criterion11},
    };
}

std::vector<Check> example_checks() {
    std::vector<Check> out;
    auto add = [&](std::string id, std::string title, std::function<CheckOutcome(const VerifyOptions&)> f) {
        out.push_back({std::move(id), std::move(title), std::move(f)});
    };
    add("cycle4-not-filled", "C_4 is not filled, edge {1,4} lacks {2,4}", [](const VerifyOptions&) {
        auto st = filled_status(cycle_graph(4));
        bool ok = !st.filled && st.right_witness && st.right_witness->first == Edge{1, 4} && st.right_witness->second == Edge{2, 4};
        return outcome(ok, "filled=" + std::to_string(st.filled));
    });
    add("h-minimal-non-edges", "minimal non-edges of H_{k,n} are the pairs at distance k+1", [](const VerifyOptions& o) {
        Tally t;
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= cap(o, 7); ++n) {
                std::vector<Edge> want;
                for (int i = 1; i + k + 1 <= n; ++i) want.emplace_back(i, i + k + 1);
                t.expect(minimal_non_edges(h_graph(k, n)) == want, "H_{" + std::to_string(k) + "," + std::to_string(n) + "}");
            }
        return t.outcome("k <= 3");
    });
    add("dual-filled", "G right-filled iff G* left-filled", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 0; n <= cap(o, 5); ++n)
            for (const Graph& g : all_graphs(n))
                t.expect(filled_status(g).right_filled == filled_status(dual_graph(g)).left_filled, graph_name(g));
        return t.outcome("all graphs");
    });
    add("sigma-g-permutation", "σ(T) is a G-permutation", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 0; n <= cap(o, 5); ++n)
            for (const Graph& g : all_graphs(n))
                for (const auto& x : enumerate_maximal_tubings(g)) t.expect(is_g_permutation(g, sigma_min(tau(x))), x.to_string());
        return t.outcome("all G-trees");
    });
    add("descents-sigma", "descents of T equal descents of σ(T), right-filled G", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 0; n <= cap(o, 5); ++n)
            for (const Graph& g : all_graphs(n)) {
                if (!filled_status(g).right_filled) continue;
                for (const auto& x : enumerate_maximal_tubings(g)) {
                    auto s = sigma_min(tau(x));
                    std::vector<Edge> des;
                    for (int p = 1; p < n; ++p)
                        if (s.at(p) > s.at(p + 1)) des.emplace_back(s.at(p + 1), s.at(p));
                    std::sort(des.begin(), des.end());
                    t.expect(forest_descents(tau(x)) == des, x.to_string());
                }
            }
        return t.outcome("right-filled graphs");
    });
    add("fig-L-ex", "L_G for edges {1,3},{2,3} has 5 elements", [](const VerifyOptions&) {
        auto lg = build_LG(Graph(3, {{1, 3}, {2, 3}}));
        return outcome(lg.tubings.size() == 5, std::to_string(lg.tubings.size()) + " elements");
    });
    add("weak-join", "213 ∨ 132 = 321", [](const VerifyOptions&) {
        auto j = weak_join(P("213"), P("132"));
        return outcome(j == P("321"), j.to_string());
    });
    add("nonlattice-4", "the seven 4-vertex graphs of the non-lattice figure", criterion2);
    add("filled-lattice", "L_G is a lattice for filled G", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 0; n <= cap(o, 5); ++n)
            for (const Graph& g : all_graphs(n))
                if (filled_status(g).filled) t.expect(is_lattice(build_LG(g).order), graph_name(g));
        return t.outcome("filled graphs");
    });
    add("cyclohedra-sd", "L_{C_n} semidistributive, star graph not", criterion8);
    add("mobius-faces", "Möbius values on faces containing the maximal tubes", criterion7);
    add("graph-duality", "L_{G*} ≅ dual(L_G)", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 0; n <= cap(o, 4); ++n)
            for (const Graph& g : all_graphs(n))
                t.expect(are_isomorphic(build_LG(dual_graph(g)).order, dual(build_LG(g).order)), graph_name(g));
        return t.outcome("all graphs");
    });
    add("decomposition", "L_G ≅ product for disconnected G", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 2; n <= cap(o, 5); ++n)
            for (const Graph& g : all_graphs(n)) {
                auto comps = components(g, g.vertices());
                if (comps.size() < 2) continue;
                VertexSet i = comps.front(), rest = g.vertices() - i;
                auto prod = product(build_LG(std_restriction(g, i)).order, build_LG(std_restriction(g, rest)).order);
                t.expect(are_isomorphic(build_LG(g).order, prod), graph_name(g));
            }
        return t.outcome("disconnected graphs");
    });
    add("complete-chain", "Ψ_{K_n}(w) is the chain w_1 < ... < w_n", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 1; n <= cap(o, 5); ++n)
            for (const auto& w : all_permutations(n)) {
                auto f = tau(psi(complete_graph(n), w));
                bool chain = true;
                for (int p = 1; p < n; ++p) chain &= f.parent(w.at(p)) == w.at(p + 1);
                t.expect(chain, w.to_string());
            }
        return t.outcome("n <= 5");
    });
    add("pidown-monotone", "π_↓ is order preserving for right-filled G", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 1; n <= cap(o, 5); ++n) {
            const auto& W = weak_order(n);
            for (const Graph& g : all_graphs(n)) {
                if (!filled_status(g).right_filled) continue;
                auto gp = share(g);
                std::vector<Permutation> image;
                for (const auto& w : W.perms()) image.push_back(pi_down(gp, w));
                bool ok = true;
                for (auto [a, b] : W.order().covers()) ok &= weak_le(image[a], image[b]);
                t.expect(ok, graph_name(g));
            }
        }
        return t.outcome("right-filled graphs");
    });
    add("arc-example", "α(32514, 35214) = (2,5,(−,+))", [](const VerifyOptions&) {
        auto a = arc_of_cover(P("32514"), P("35214"));
        return outcome(a == Arc::make(5, 2, 5, "-+"), a.to_string());
    });
    add("subarc-example", "(2,4,(+)) is a subarc of (1,4,(+,+)) and (1,4,(−,+))", [](const VerifyOptions&) {
        auto a = Arc::make(4, 2, 4, "+");
        bool ok = is_subarc(a, Arc::make(4, 1, 4, "++")) && is_subarc(a, Arc::make(4, 1, 4, "-+"));
        return outcome(ok, "");
    });
    add("fig-cong", "Θ^{(2,4,(+))} contracts exactly (2,4,+), (1,4,++), (1,4,−+)", [](const VerifyOptions&) {
        auto c = congruence_from_generators(4, {Arc::make(4, 2, 4, "+")});
        std::set<Arc> want = {Arc::make(4, 2, 4, "+"), Arc::make(4, 1, 4, "++"), Arc::make(4, 1, 4, "-+")};
        bool ok = c.contracted() == want && is_lattice_congruence(4, congruence_classes(c));
        return outcome(ok, std::to_string(congruence_classes(c).size()) + " classes");
    });
    add("metasylvester", "metasylvester congruences are translational and insertional", [](const VerifyOptions& o) {
        Tally t;
        int top = cap(o, 6);
        for (int k = 0; k <= 3; ++k) {
            auto f = [k](int m) { return metasylvester(m, k).contracted(); };
            t.expect(translational_check(f, top).holds, "k=" + std::to_string(k) + " translational");
            t.expect(insertional_check(f, top).holds, "k=" + std::to_string(k) + " insertional");
        }
        return t.outcome("k <= 3, N=" + std::to_string(top));
    });
    add("h-generators", "Θ_{H_{k,n}} is generated by (i,j,+) with j−i = k+1", [](const VerifyOptions& o) {
        Tally t;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= cap(o, 6); ++n) {
                std::vector<Arc> want;
                for (int i = 1; i + k + 1 <= n; ++i) want.push_back(Arc::make(n, i, i + k + 1, std::string(k, '+')));
                t.expect(generators_of_theta_G(h_graph(k, n)) == want, "H_{" + std::to_string(k) + "," + std::to_string(n) + "}");
            }
        return t.outcome("k <= 3");
    });
    add("filled-lattice-map", "Ψ_G is a lattice map for filled G", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 1; n <= cap(o, 5); ++n)
            for (const Graph& g : all_graphs(n))
                if (filled_status(g).filled) t.expect(is_lattice_quotient_map(share(g), MapCheck::Both, o.jobs).lattice_map(), graph_name(g));
        return t.outcome("filled graphs");
    });
    add("join-failure", "edges {1,3},{2,3}: Ψ_G fails the join of 213 and 132", [](const VerifyOptions&) {
        auto gp = share(Graph(3, {{1, 3}, {2, 3}}));
        auto lg = build_LG(gp);
        bool ok = !psi_preserves_join(lg, P("213"), P("132")) && !is_lattice_quotient_map(gp).joins;
        return outcome(ok, "");
    });
    add("one-sided-maps", "right-filled preserves meets, left-filled preserves joins", [](const VerifyOptions& o) {
        Tally t;
        for (int n = 1; n <= cap(o, 4); ++n)
            for (const Graph& g : all_graphs(n)) {
                auto st = filled_status(g);
                auto rep = is_lattice_quotient_map(share(g), MapCheck::Both, o.jobs);
                if (st.right_filled) t.expect(rep.meets, graph_name(g));
                if (st.left_filled) t.expect(rep.joins, graph_name(g));
            }
        return t.outcome("n <= 4");
    });
    add("h-translational", "H_{k,·} families are translational", [](const VerifyOptions& o) {
        Tally t;
        for (int k = 0; k <= 4; ++k)
            t.expect(is_translational(k == 0 ? GraphFamily::edge_free() : GraphFamily::h(k), cap(o, 6)).holds, "k=" + std::to_string(k));
        return t.outcome("k <= 4");
    });
    add("path-insertional", "the path family is insertional", [](const VerifyOptions& o) {
        auto r = is_insertional(GraphFamily::path(), cap(o, 6));
        return outcome(r.holds, r.witness);
    });
    add("mr-product", "F_21 · F_12 expansion", [](const VerifyOptions&) {
        auto s = to_string(mr_product(P("21"), P("12")));
        return outcome(s == "F_2134 + F_2314 + F_2341 + F_3214 + F_3241 + F_3421", s);
    });
    add("mr-coproduct", "Δ(F_3241) expansion", [](const VerifyOptions&) {
        auto s = to_string(mr_coproduct(P("3241")));
        return outcome(s == "ι ⊗ F_3241 + F_1 ⊗ F_231 + F_21 ⊗ F_21 + F_213 ⊗ F_1 + F_3241 ⊗ ι", s);
    });
    add("complete-algebra", "complete-family products match the shuffle product", [](const VerifyOptions& o) {
        Tally t;
        TubingAlgebra alg(GraphFamily::complete());
        int top = cap(o, 6);
        for (int n = 0; n <= top; ++n)
            for (int m = 0; n + m <= top; ++m)
                for (const auto& x : alg.tubings(n))
                    for (const auto& y : alg.tubings(m))
                        t.expect(complete_dictionary(alg.product(x, y)) ==
                                     mr_product(complete_tubing_to_perm(x), complete_tubing_to_perm(y)),
                                 x.to_string() + " · " + y.to_string());
        return t.outcome("n + m <= " + std::to_string(top));
    });
    add("associativity", "complete, path, oddBipartite products are associative", [](const VerifyOptions& o) {
        Tally t;
        t.expect(check_associativity(GraphFamily::complete(), cap(o, 5), o.jobs).holds, "complete");
        t.expect(check_associativity(GraphFamily::path(), cap(o, 5), o.jobs).holds, "path");
        t.expect(check_associativity(GraphFamily::odd_bipartite(), cap(o, 4), o.jobs).holds, "oddbip");
        return t.outcome("");
    });
    add("admissible-distance", "every distance family G(A) is admissible", [](const VerifyOptions& o) {
        Tally t;
        for (unsigned bits = 0; bits < 32; ++bits) {
            std::set<int> a;
            for (int d = 1; d <= 5; ++d)
                if (bits >> (d - 1) & 1) a.insert(d);
            t.expect(is_admissible(distance_family(a), cap(o, 6)).holds, distance_family(a).name());
        }
        return t.outcome("A ⊆ [5]");
    });
    add("restriction-compatible", "path, complete, edge-free, cycle compatible; oddBipartite not", [](const VerifyOptions&) {
        Tally t;
        const int top = 6; // the oddBipartite witness sits at degree 4
        for (auto fam : {GraphFamily::path(), GraphFamily::complete(), GraphFamily::edge_free(), GraphFamily::cycle()})
            t.expect(is_restriction_compatible(fam, top).holds, fam.name());
        auto odd = is_restriction_compatible(GraphFamily::odd_bipartite(), top);
        t.expect(!odd.holds && !odd.witness.empty(), "oddbip");
        return t.outcome(odd.witness);
    });
    add("compatible-classification", "admissible and compatible distance families are path, complete, edge-free", criterion10);
    add("psi-restriction", "Ψ_{n+m}(W)|[n] = Ψ_n(W|[n]) for nested distance families", [](const VerifyOptions& o) {
        Tally t;
        std::vector<std::pair<std::set<int>, std::set<int>>> nests = {{{}, {1}}, {{1}, {1, 2}}, {{2}, {1, 2, 3}}, {{1}, {1, 2, 3, 4}}};
        for (auto& [sa, sb] : nests) {
            auto fa = distance_family(sa), fb = distance_family(sb);
            for (int total = 1; total <= cap(o, 5); ++total) {
                auto ga = share(fa(total));
                for (const auto& w : enumerate_maximal_tubings(fb(total))) {
                    auto z = coarsen(ga, w);
                    for (int n = 0; n <= total; ++n) {
                        VertexSet left = VertexSet::range(n);
                        t.expect(restrict_maximal(z, left) == coarsen(share(fa(n)), restrict_maximal(w, left)), w.to_string());
                    }
                }
            }
        }
        return t.outcome("n + m <= 5");
    });
    add("c-algebra-map", "c is multiplicative for nested distance families", criterion9);
    add("complete-coalgebra", "complete-family coproduct matches Δ on permutations", [](const VerifyOptions& o) {
        Tally t;
        TubingAlgebra alg(GraphFamily::complete());
        for (int n = 0; n <= cap(o, 5); ++n)
            for (const auto& x : alg.tubings(n))
                t.expect(complete_dictionary(alg.coproduct(x)) == mr_coproduct(complete_tubing_to_perm(x)), x.to_string());
        return t.outcome("n <= 5");
    });
    add("fig-coprod", "C_4 tubings with six ideals: two multi-term fiber sums", [](const VerifyOptions&) {
        Tally t;
        TubingAlgebra alg(GraphFamily::cycle());
        int found = 0;
        for (const auto& x : alg.tubings(4)) {
            auto id = ideals(x);
            if (id.size() != 6) continue;
            ++found;
            int multi = 0;
            for (VertexSet i : id) multi += fiber_sum(alg.graph(i.size()), restrict_maximal(x, i)).size() > 1;
            t.expect(multi == 2, x.to_string());
        }
        t.expect(found > 0, "no C_4 tubing has six ideals");
        return t.outcome(std::to_string(found) + " tubings");
    });
    add("delta-compatible", "c commutes with Δ for path and cycle families", [](const VerifyOptions& o) {
        Tally t;
        for (auto fam : {GraphFamily::path(), GraphFamily::cycle()})
            t.expect(check_c_commutes_with_delta(fam, cap(o, 5), o.jobs).holds, fam.name());
        return t.outcome("N=" + std::to_string(cap(o, 5)));
    });
    return out;
}

std::vector<Check> suite(const std::string& name) {
    if (name == "criteria") return criteria_checks();
    if (name == "examples") return example_checks();
    if (name == "all") {
        auto out = criteria_checks();
        auto ex = example_checks();
        out.insert(out.end(), ex.begin(), ex.end());
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "' (expected criteria, examples or all)");
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const VerifyOptions& opts,
                                    const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> out;
    for (const Check& c : checks) {
        CheckResult r{c.id, c.title, false, "", 0};
        auto start = std::chrono::steady_clock::now();
        try {
            auto o = c.run(opts);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& ex) {
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace tubelat
