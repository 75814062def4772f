// tubelat: command-line front end.
// Exit codes: 0 success or true, 1 property false (witness on stdout), 2 usage or input error.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tubelat/error.hpp"
#include "tubelat/hopf.hpp"
#include "tubelat/io.hpp"
#include "tubelat/poset.hpp"
#include "tubelat/verify.hpp"

using namespace tubelat;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string graph;
    std::string graph_file;
    bool json = false;
    int jobs = 0;
};

Common common;

void add_graph_options(CLI::App* cmd) {
    cmd->add_option("--graph", common.graph, "graph descriptor, e.g. path:4, h:2:5, A:{1,3}:6, edges:4:1-3,2-4");
    cmd->add_option("--graph-file", common.graph_file, "graph in text format or JSON");
}

void add_output_options(CLI::App* cmd) {
    cmd->add_flag("--json", common.json, "JSON output");
    cmd->add_option("--jobs", common.jobs, "worker threads (default TUBELAT_JOBS or 1)")->check(CLI::PositiveNumber);
}

int jobs() {
    if (common.jobs > 0) return common.jobs;
    if (const char* env = std::getenv("TUBELAT_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

GraphPtr load_graph() {
    if (common.graph.empty() == common.graph_file.empty()) throw InputError("give exactly one of --graph or --graph-file");
    if (!common.graph.empty()) return share(parse_graph_descriptor(common.graph));
    std::ifstream in(common.graph_file);
    if (!in) throw InputError("cannot read " + common.graph_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return share(graph_from_json(Json::parse(text)));
        } catch (const Json::exception& ex) {
            throw ParseError(std::string("bad graph JSON: ") + ex.what());
        }
    }
    return share(graph_from_text(text));
}

// "{{1},{1,2},{3},{1,2,3}}"; "{}" is the empty set of tubes.
std::vector<VertexSet> parse_tubes(const std::string& text) {
    static const std::regex tube(R"(\{([0-9,\s]*)\})");
    std::string body = text;
    auto open = body.find('{'), close = body.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open) throw ParseError("bad tubing '" + text + "'");
    body = body.substr(open + 1, close - open - 1);
    std::vector<VertexSet> out;
    for (std::sregex_iterator it(body.begin(), body.end(), tube), end; it != end; ++it) {
        std::vector<int> vs;
        std::stringstream ss((*it)[1].str());
        std::string item;
        while (std::getline(ss, item, ','))
            if (item.find_first_not_of(" \t") != std::string::npos) vs.push_back(std::stoi(item));
        if (vs.empty()) throw ParseError("empty tube in '" + text + "'");
        out.push_back(VertexSet::of(vs));
    }
    return out;
}

int tube_span(const std::vector<VertexSet>& tubes) {
    VertexSet all;
    for (VertexSet t : tubes) all = all | t;
    int n = all.size();
    if (all != VertexSet::range(n)) throw ParseError("tubes do not cover [" + std::to_string(n) + "]");
    return n;
}

// A maximal tubing of g given as tubes or as a permutation word read through Ψ_g.
MaximalTubing tubing_arg(const GraphPtr& g, const std::string& text) {
    if (!text.empty() && text.front() == '{') return MaximalTubing(g, parse_tubes(text));
    return psi(g, Permutation::parse(text));
}

// Same, with the graph taken from the family at the tubing's degree.
MaximalTubing family_tubing_arg(const GraphFamily& f, const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        auto tubes = parse_tubes(text);
        return MaximalTubing(share(f(tube_span(tubes))), tubes);
    }
    auto w = Permutation::parse(text);
    return psi(share(f(w.size())), w);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string edge_text(Edge e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

int verdict(bool holds, Json j, const std::string& human) {
    if (common.json) {
        j["holds"] = holds;
        print_json(j);
    } else {
        std::cout << (holds ? "true" : "false") << "\n";
        if (!human.empty()) std::cout << human << "\n";
    }
    return holds ? 0 : 1;
}

// ---- commands ----

int cmd_tubings(bool count, bool all) {
    auto g = load_graph();
    if (all) {
        auto ts = enumerate_tubings(g);
        if (count) return std::cout << ts.size() << "\n", 0;
        if (common.json) {
            Json arr = Json::array();
            for (const auto& t : ts) arr.push_back(to_json(t)["tubes"]);
            print_json({{"graph", to_json(*g)}, {"tubings", arr}});
        } else
            for (const auto& t : ts) std::cout << t.to_string() << "\n";
        return 0;
    }
    auto xs = enumerate_maximal_tubings(g);
    if (count) return std::cout << xs.size() << "\n", 0;
    if (common.json) {
        Json arr = Json::array();
        for (const auto& x : xs) arr.push_back(to_json(x)["tubes"]);
        print_json({{"graph", to_json(*g)}, {"tubings", arr}});
        return 0;
    }
    std::cout << "# tubing  sigma_min  parents\n";
    for (const auto& x : xs) {
        auto f = tau(x);
        std::cout << x.to_string() << "  " << sigma_min(f).to_string() << " ";
        for (int p : f.parents()) std::cout << " " << p;
        std::cout << "\n";
    }
    return 0;
}

int cmd_poset() {
    auto lg = build_LG(load_graph());
    auto labels = element_labels(lg);
    if (common.json) return print_json(poset_to_json(lg.order, labels)), 0;
    std::cout << "# " << labels.size() << " elements, " << lg.order.covers().size() << " covers\n";
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << i << "  " << labels[i] << "\n";
    for (auto [a, b] : lg.order.covers()) std::cout << a << " < " << b << "\n";
    return 0;
}

int cmd_check_filled() {
    auto g = load_graph();
    auto st = filled_status(*g);
    Json j = {{"right_filled", st.right_filled}, {"left_filled", st.left_filled}};
    std::string human;
    auto wit = st.right_witness ? st.right_witness : st.left_witness;
    if (wit) {
        human = "witness: edge " + edge_text(wit->first) + " missing " + edge_text(wit->second);
        j["witness"] = {{"edge", {wit->first.first, wit->first.second}}, {"missing", {wit->second.first, wit->second.second}}};
    }
    return verdict(st.filled, j, human);
}

std::string bounds_text(const std::vector<std::string>& labels, const LatticeFailure& f) {
    std::string s = std::string("no ") + (f.missing_join ? "join" : "meet") + " for " + labels[f.x] + " and " + labels[f.y] +
                    "; " + (f.missing_join ? "minimal upper" : "maximal lower") + " bounds:";
    for (int b : f.bounds) s += " " + labels[b];
    return s;
}

int cmd_check_lattice() {
    auto lg = build_LG(load_graph());
    auto labels = element_labels(lg);
    auto f = lattice_failure(lg.order);
    Json j = {{"elements", labels.size()}};
    if (f) {
        Json bounds = Json::array();
        for (int b : f->bounds) bounds.push_back(labels[b]);
        j["witness"] = {{"missing", f->missing_join ? "join" : "meet"}, {"x", labels[f->x]}, {"y", labels[f->y]}, {"bounds", bounds}};
    }
    return verdict(!f, j, f ? "witness: " + bounds_text(labels, *f) : "");
}

int cmd_check_semidistributive() {
    auto lg = build_LG(load_graph());
    auto labels = element_labels(lg);
    if (auto f = lattice_failure(lg.order))
        return verdict(false, {{"lattice", false}}, "not a lattice: " + bounds_text(labels, *f));
    auto r = is_semidistributive(lg.order, jobs());
    Json j = {{"lattice", true}};
    std::string human;
    if (r.witness) {
        const auto& w = *r.witness;
        j["witness"] = {{"law", r.law}, {"x", labels[w[0]]}, {"y", labels[w[1]]}, {"z", labels[w[2]]}};
        human = "witness (" + r.law + "-semidistributive law): x=" + labels[w[0]] + " y=" + labels[w[1]] + " z=" + labels[w[2]];
    }
    return verdict(r.holds, j, human);
}

int cmd_check_lattice_map() {
    auto g = load_graph();
    auto r = is_lattice_quotient_map(g, MapCheck::Both, jobs());
    Json j = {{"meets", r.meets}, {"joins", r.joins}};
    std::string human;
    auto pair_text = [](const std::pair<Permutation, Permutation>& p) { return p.first.to_string() + " " + p.second.to_string(); };
    if (r.meet_witness) {
        j["meet_witness"] = {r.meet_witness->first.to_string(), r.meet_witness->second.to_string()};
        human += "meet not preserved: " + pair_text(*r.meet_witness);
    }
    if (r.join_witness) {
        j["join_witness"] = {r.join_witness->first.to_string(), r.join_witness->second.to_string()};
        human += std::string(human.empty() ? "" : "\n") + "join not preserved: " + pair_text(*r.join_witness);
    }
    return verdict(r.lattice_map(), j, human);
}

// Minimal non-lattice minors of G. Exploratory: reports, never fails.
int cmd_check_nrc() {
    auto g = load_graph();
    std::map<std::pair<int, std::vector<Edge>>, bool> memo;
    std::function<bool(const Graph&)> lattice = [&](const Graph& h) {
        auto key = std::make_pair(h.n(), h.edges());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool v = is_lattice(build_LG(h).order);
        memo[key] = v;
        return v;
    };
    std::vector<Graph> found;
    for (const Graph& h : minors(*g)) {
        if (lattice(h)) continue;
        bool minimal = true;
        for (const Graph& k : minors(h))
            if (!(k.n() == h.n() && k.edges() == h.edges()) && !lattice(k)) {
                minimal = false;
                break;
            }
        if (minimal) found.push_back(h);
    }
    if (common.json) {
        Json arr = Json::array();
        for (const auto& h : found) arr.push_back(to_json(h));
        print_json({{"lattice", lattice(*g)}, {"minimal_non_lattice_minors", arr}});
    } else {
        std::cout << "lattice: " << (lattice(*g) ? "true" : "false") << "\n";
        std::cout << "# minimal non-lattice minors: " << found.size() << "\n";
        for (const auto& h : found) std::cout << "n=" << h.n() << " " << edges_to_string(h) << "\n";
    }
    return 0;
}

int cmd_psi(const std::string& perm) {
    auto g = load_graph();
    if (!perm.empty()) {
        auto x = psi(g, Permutation::parse(perm));
        auto f = tau(x);
        if (common.json)
            return print_json({{"permutation", perm}, {"tubing", to_json(x)["tubes"]}, {"parent", f.parents()},
                               {"sigma_min", sigma_min(f).to_string()}}),
                   0;
        std::cout << "tubing     " << x.to_string() << "\nparents   ";
        for (int p : f.parents()) std::cout << " " << p;
        std::cout << "\nsigma_min  " << sigma_min(f).to_string() << "\n";
        return 0;
    }
    auto lg = build_LG(g);
    const auto& w = weak_order(g->n());
    if (common.json) {
        Json rows = Json::array();
        for (const auto& u : w.perms()) rows.push_back({{"permutation", u.to_string()}, {"tubing", lg.index_of(psi(g, u))}});
        return print_json({{"tubings", element_labels(lg)}, {"map", rows}}), 0;
    }
    for (const auto& u : w.perms()) std::cout << u.to_string() << "  " << psi(g, u).to_string() << "\n";
    return 0;
}

Congruence load_congruence(const std::vector<std::string>& arcs, int n) {
    if (arcs.empty()) return theta_G(*load_graph());
    if (n <= 0) throw InputError("--n is required with --arc");
    std::vector<Arc> gens;
    for (const auto& a : arcs) gens.push_back(Arc::parse(a, n));
    return congruence_from_generators(n, gens);
}

int cmd_congruence_generators(const std::vector<std::string>& arcs, int n) {
    auto c = load_congruence(arcs, n);
    if (common.json) return print_json(to_json(c)), 0;
    std::cout << "# " << c.generators().size() << " generators, " << c.contracted().size() << " contracted arcs\n";
    for (const auto& a : c.generators()) std::cout << a.to_string() << "\n";
    return 0;
}

int cmd_congruence_classes(const std::vector<std::string>& arcs, int n) {
    auto c = load_congruence(arcs, n);
    auto classes = congruence_classes(c);
    const auto& w = weak_order(c.n());
    if (common.json) {
        Json arr = Json::array();
        for (const auto& cls : classes) {
            Json row = Json::array();
            for (int i : cls) row.push_back(w.perms()[i].to_string());
            arr.push_back(row);
        }
        return print_json({{"n", c.n()}, {"classes", arr}}), 0;
    }
    std::cout << "# " << classes.size() << " classes\n";
    for (const auto& cls : classes) {
        for (std::size_t k = 0; k < cls.size(); ++k) std::cout << (k ? " " : "") << w.perms()[cls[k]].to_string();
        std::cout << "\n";
    }
    return 0;
}

int cmd_congruence_quotient(const std::vector<std::string>& arcs, int n) {
    auto c = load_congruence(arcs, n);
    auto q = quotient_poset(c);
    const auto& w = weak_order(c.n());
    std::vector<std::string> labels;
    for (int b : q.bottoms) labels.push_back(w.perms()[b].to_string());
    if (common.json) return print_json(poset_to_json(q.order, labels)), 0;
    std::cout << "# " << labels.size() << " classes (labelled by bottom element), " << q.order.covers().size() << " covers\n";
    for (auto [a, b] : q.order.covers()) std::cout << labels[a] << " < " << labels[b] << "\n";
    return 0;
}

int cmd_arc_delete(const std::string& arc, int n, int k) {
    auto a = Arc::parse(arc, n);
    auto d = arc_delete(a, k);
    if (common.json) return print_json({{"arc", a.to_string()}, {"k", k}, {"result", d.to_string()}}), 0;
    std::cout << d.to_string() << "\n";
    return 0;
}

int cmd_arc_insert(const std::string& arc, int n, int k) {
    auto a = Arc::parse(arc, n);
    auto ins = arc_insertions(a, k);
    if (common.json) {
        Json arr = Json::array();
        for (const auto& b : ins) arr.push_back(b.to_string());
        return print_json({{"arc", a.to_string()}, {"k", k}, {"insertions", arr}}), 0;
    }
    for (const auto& b : ins) std::cout << b.to_string() << "\n";
    return 0;
}

int cmd_arc_subarc(const std::string& arc, const std::string& of, int n) {
    auto a = Arc::parse(arc, n), b = Arc::parse(of, n);
    return verdict(is_subarc(a, b), {{"arc", a.to_string()}, {"of", b.to_string()}}, "");
}

template <class S>
void print_sum(const S& s) {
    if (common.json) print_json(to_json(s));
    else std::cout << (s.empty() ? "0" : to_string(s)) << "\n";
}

int cmd_product(const std::string& family, const std::string& left, const std::string& right, bool perms) {
    if (perms) return print_sum(mr_product(Permutation::parse(left), Permutation::parse(right))), 0;
    auto f = parse_family(family);
    TubingAlgebra alg(f);
    return print_sum(alg.product(family_tubing_arg(f, left), family_tubing_arg(f, right))), 0;
}

int cmd_coproduct(const std::string& family, const std::string& arg, bool perms) {
    if (perms) return print_sum(mr_coproduct(Permutation::parse(arg))), 0;
    auto f = parse_family(family);
    TubingAlgebra alg(f);
    return print_sum(alg.coproduct(family_tubing_arg(f, arg))), 0;
}

int cmd_mobius(const std::string& lower, const std::string& upper) {
    auto g = load_graph();
    auto lg = build_LG(g);
    auto pick = [&](const std::string& text, std::optional<int> fallback, const char* what) {
        if (!text.empty()) return lg.index_of(tubing_arg(g, text));
        if (!fallback) throw InputError(std::string("L_G has no ") + what + "; give it explicitly");
        return *fallback;
    };
    int x = pick(lower, lg.order.bottom(), "bottom"), y = pick(upper, lg.order.top(), "top");
    if (!lg.order.leq(x, y)) throw NotComparable("lower element is not below upper element");
    long long mu = mobius(lg.order, x, y);
    auto labels = element_labels(lg);
    if (common.json) return print_json({{"lower", labels[x]}, {"upper", labels[y]}, {"mobius", mu}}), 0;
    std::cout << mu << "\n";
    return 0;
}

int cmd_family(const std::string& which, const std::string& family, int max_n) {
    auto f = parse_family(family);
    FamilyCheck r;
    if (which == "admissible") r = is_admissible(f, max_n);
    else if (which == "restriction-compatible") r = is_restriction_compatible(f, max_n);
    else if (which == "translational") r = is_translational(f, max_n);
    else r = is_insertional(f, max_n);
    if (common.json) {
        Json j = to_json(r);
        j["family"] = f.name();
        print_json(j);
    } else {
        std::cout << (r.holds ? "true" : "false") << " (checked through " << r.verified_through << ")\n";
        if (!r.witness.empty()) std::cout << "witness: " << r.witness << "\n";
    }
    return r.holds ? 0 : 1;
}

int cmd_verify(const std::string& suite_name, int max_n, bool conjecture) {
    VerifyOptions opts;
    opts.max_n = max_n;
    opts.jobs = jobs();
    opts.conjecture = conjecture;
    std::vector<Check> checks;
    try {
        checks = suite(suite_name);
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
    Json rows = Json::array();
    int failed = 0;
    run_checks(checks, opts, [&](const CheckResult& r) {
        failed += !r.pass;
        if (common.json) {
            rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
            return;
        }
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  [" << r.detail << "]\n" << std::flush;
    });
    if (common.json) print_json({{"suite", suite_name}, {"max_n", max_n}, {"failed", failed}, {"checks", rows}});
    else std::cout << checks.size() - failed << "/" << checks.size() << " passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_export_dot(int weak_n) {
    if (weak_n > 0) {
        const auto& w = weak_order(weak_n);
        std::cout << export_dot(w.order(), element_labels(w));
        return 0;
    }
    auto lg = build_LG(load_graph());
    std::cout << export_dot(lg.order, element_labels(lg), lattice_failure(lg.order));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph associahedra, tubing lattices and tubing Hopf algebras"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* tubings = app.add_subcommand("tubings", "list maximal tubings of a graph");
    bool count = false, all = false;
    add_graph_options(tubings);
    add_output_options(tubings);
    tubings->add_flag("--count", count, "print only the number");
    tubings->add_flag("--all", all, "all tubings, not only maximal ones");
    tubings->callback([&] { action = [&] { return cmd_tubings(count, all); }; });

    auto* poset = app.add_subcommand("poset", "the poset L_G: elements and cover relations");
    add_graph_options(poset);
    add_output_options(poset);
    poset->callback([&] { action = cmd_poset; });

    auto* check = app.add_subcommand("check", "graph and poset properties");
    check->require_subcommand(1);
    std::vector<std::pair<std::string, std::pair<std::string, int (*)()>>> checks = {
        {"filled", {"G is filled", cmd_check_filled}},
        {"lattice", {"L_G is a lattice", cmd_check_lattice}},
        {"semidistributive", {"L_G is a semidistributive lattice", cmd_check_semidistributive}},
        {"lattice-map", {"Ψ_G is a lattice map", cmd_check_lattice_map}},
        {"nrc", {"report minimal non-lattice minors (exploratory)", cmd_check_nrc}},
    };
    for (auto& [name, entry] : checks) {
        auto* sub = check->add_subcommand(name, entry.first);
        add_graph_options(sub);
        add_output_options(sub);
        auto fn = entry.second;
        sub->callback([&action, fn] { action = fn; });
    }

    auto* psi_cmd = app.add_subcommand("psi", "the map Ψ_G from permutations to maximal tubings");
    std::string perm;
    add_graph_options(psi_cmd);
    add_output_options(psi_cmd);
    psi_cmd->add_option("--perm", perm, "one permutation word; otherwise the whole map");
    psi_cmd->callback([&] { action = [&] { return cmd_psi(perm); }; });

    auto* congruence = app.add_subcommand("congruence", "weak-order congruences from arcs or from a filled graph");
    congruence->require_subcommand(1);
    std::vector<std::string> arcs;
    int cong_n = 0;
    std::vector<std::pair<std::string, int (*)(const std::vector<std::string>&, int)>> cong_cmds = {
        {"generators", cmd_congruence_generators}, {"classes", cmd_congruence_classes}, {"quotient", cmd_congruence_quotient}};
    for (auto& [name, fn] : cong_cmds) {
        auto* sub = congruence->add_subcommand(name, name + " of the congruence");
        add_graph_options(sub);
        add_output_options(sub);
        sub->add_option("--arc", arcs, "generating arc i-k:signs (repeatable)");
        sub->add_option("--n", cong_n, "size of the permutations");
        auto f = fn;
        sub->callback([&action, &arcs, &cong_n, f] { action = [&arcs, &cong_n, f] { return f(arcs, cong_n); }; });
    }

    auto* arc = app.add_subcommand("arc", "arc deletion, insertion and the subarc order");
    arc->require_subcommand(1);
    std::string arc_text, of_text;
    int arc_n = 0, arc_k = 0;
    auto* del = arc->add_subcommand("delete", "delete node k from an arc");
    auto* ins = arc->add_subcommand("insert", "arcs whose deletion at k gives this arc");
    auto* sub = arc->add_subcommand("subarc", "is --arc a subarc of --of");
    for (auto* c : {del, ins, sub}) {
        add_output_options(c);
        c->add_option("--arc", arc_text, "arc i-k:signs")->required();
        c->add_option("--n", arc_n, "ambient size (default: right endpoint)");
    }
    del->add_option("--k", arc_k, "node")->required();
    ins->add_option("--k", arc_k, "node")->required();
    sub->add_option("--of", of_text, "the larger arc")->required();
    del->callback([&] { action = [&] { return cmd_arc_delete(arc_text, arc_n, arc_k); }; });
    ins->callback([&] { action = [&] { return cmd_arc_insert(arc_text, arc_n, arc_k); }; });
    sub->callback([&] { action = [&] { return cmd_arc_subarc(arc_text, of_text, arc_n); }; });

    std::string family = "complete", left, right, one;
    bool perms = false;
    auto* product = app.add_subcommand("product", "P_X · P_Y in the tubing algebra of a family");
    add_output_options(product);
    product->add_option("--family", family, "path, complete, empty, cycle, oddbip, h:k, A:{..}, A:all");
    product->add_option("--left", left, "tubing {{..},..} or permutation word")->required();
    product->add_option("--right", right, "tubing {{..},..} or permutation word")->required();
    product->add_flag("--perms", perms, "multiply F_u · F_w in the permutation algebra instead");
    product->callback([&] { action = [&] { return cmd_product(family, left, right, perms); }; });

    auto* coproduct = app.add_subcommand("coproduct", "Δ(P_X) in the tubing coalgebra of a family");
    add_output_options(coproduct);
    coproduct->add_option("--family", family, "path, complete, empty, cycle, oddbip, h:k, A:{..}, A:all");
    coproduct->add_option("--tubing", one, "tubing {{..},..} or permutation word")->required();
    coproduct->add_flag("--perms", perms, "Δ(F_u) in the permutation coalgebra instead");
    coproduct->callback([&] { action = [&] { return cmd_coproduct(family, one, perms); }; });

    auto* mob = app.add_subcommand("mobius", "Möbius function of L_G");
    add_graph_options(mob);
    add_output_options(mob);
    mob->add_option("--lower", left, "tubing or permutation (default bottom)");
    mob->add_option("--upper", right, "tubing or permutation (default top)");
    mob->callback([&] { action = [&] { return cmd_mobius(left, right); }; });

    auto* fam = app.add_subcommand("family", "properties of a graph family through degree --max-n");
    fam->require_subcommand(1);
    int fam_n = 6;
    for (std::string name : {"admissible", "restriction-compatible", "translational", "insertional"}) {
        auto* c = fam->add_subcommand(name, name);
        add_output_options(c);
        c->add_option("--family", family, "family descriptor")->required();
        c->add_option("--max-n", fam_n, "largest degree checked")->check(CLI::Range(1, 7));
        c->callback([&action, &family, &fam_n, name] { action = [&family, &fam_n, name] { return cmd_family(name, family, fam_n); }; });
    }

    auto* verify = app.add_subcommand("verify", "replay the acceptance criteria and worked examples");
    std::string suite_name = "all";
    int max_n = 7;
    bool conjecture = false;
    add_output_options(verify);
    verify->add_option("--suite", suite_name, "criteria, examples or all");
    verify->add_option("--max-n", max_n, "cap for every sweep over n")->check(CLI::Range(1, 7));
    verify->add_flag("--conjecture", conjecture, "also report Möbius values on non-lattice L_G");
    verify->callback([&] { action = [&] { return cmd_verify(suite_name, max_n, conjecture); }; });

    auto* dot = app.add_subcommand("export-dot", "Hasse diagram of L_G (or of the weak order) in DOT");
    int weak_n = 0;
    add_graph_options(dot);
    dot->add_option("--weak", weak_n, "weak order on S_n instead")->check(CLI::Range(1, 6));
    dot->callback([&] { action = [&] { return cmd_export_dot(weak_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
