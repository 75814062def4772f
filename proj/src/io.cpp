#include "tubelat/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tubelat/error.hpp"

namespace tubelat {

namespace {

Json tubes_json(const std::vector<VertexSet>& tubes) {
    Json out = Json::array();
    for (VertexSet t : tubes) out.push_back(t.to_vector());
    return out;
}

template <class Key>
Json sum_json(const FormalSum<Key>& s, const char* basis) {
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) {
        Json key;
        if constexpr (requires { k.first; }) key = Json::array({to_json(k.first), to_json(k.second)});
        else key = to_json(k);
        terms.push_back({{"degree", degree(k)}, {"key", key}, {"coeff", to_json(c)}});
    }
    return {{"basis", basis}, {"terms", terms}};
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        if (n < 0 || n > max_vertices) throw ParseError("graph size out of range: " + std::to_string(n));
        Graph g(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return g;
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("bad graph JSON: ") + ex.what());
    }
}

Json to_json(const Tubing& t) { return {{"graph", to_json(t.graph())}, {"tubes", tubes_json(t.tubes())}}; }
Json to_json(const MaximalTubing& x) { return {{"graph", to_json(x.graph())}, {"tubes", tubes_json(x.tubes())}}; }

Tubing tubing_from_json(const Json& j) {
    Graph g = graph_from_json(j.at("graph"));
    std::vector<VertexSet> tubes;
    try {
        for (const auto& t : j.at("tubes")) {
            VertexSet s;
            for (const auto& v : t) {
                int x = v.get<int>();
                if (x < 1 || x > g.n()) throw InvalidVertex("vertex " + std::to_string(x) + " outside the graph");
                s.insert(x);
            }
            tubes.push_back(s);
        }
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("bad tubing JSON: ") + ex.what());
    }
    return Tubing(share(std::move(g)), tubes);
}

Json to_json(const GForest& t) { return {{"graph", to_json(t.graph())}, {"parent", t.parents()}}; }
Json to_json(const Permutation& w) { return w.to_string(); }
Json to_json(const Arc& a) { return a.to_string(); }

Json to_json(const Congruence& c) {
    Json gens = Json::array(), contracted = Json::array();
    for (const Arc& a : c.generators()) gens.push_back(to_json(a));
    for (const Arc& a : c.contracted()) contracted.push_back(to_json(a));
    return {{"n", c.n()}, {"generators", gens}, {"contracted", contracted}};
}

Json to_json(const FamilyCheck& r) {
    Json out = {{"holds", r.holds}, {"verified_through", r.verified_through}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    return out;
}

Json to_json(const Coeff& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

Json to_json(const PermSum& s) { return sum_json(s, "F"); }
Json to_json(const TubingSum& s) { return sum_json(s, "P"); }
Json to_json(const PermTensor& s) { return sum_json(s, "F"); }
Json to_json(const TubingTensor& s) { return sum_json(s, "P"); }

Json poset_to_json(const Poset& p, const std::vector<std::string>& labels) {
    Json covers = Json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    return {{"elements", labels}, {"covers", covers}};
}

std::vector<std::string> element_labels(const TubingPoset& lg) {
    std::vector<std::string> out;
    for (const auto& x : lg.tubings) out.push_back(x.to_string());
    return out;
}

std::vector<std::string> element_labels(const WeakOrder& w) {
    std::vector<std::string> out;
    for (const auto& p : w.perms()) out.push_back(p.to_string());
    return out;
}

std::string export_dot(const Poset& p, const std::vector<std::string>& labels, const std::optional<LatticeFailure>& failure) {
    if (labels.size() != p.size()) throw SizeMismatch("one label per poset element is required");
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    if (failure) {
        out << "  label=\"no " << (failure->missing_join ? "join" : "meet") << " for " << dot_escape(labels[failure->x])
            << " and " << dot_escape(labels[failure->y]) << "; " << (failure->missing_join ? "minimal upper" : "maximal lower")
            << " bounds:";
        for (int b : failure->bounds) out << " " << dot_escape(labels[b]);
        out << "\";\n";
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"";
        if (failure) {
            int v = static_cast<int>(i);
            bool pair = v == failure->x || v == failure->y;
            bool bound = std::find(failure->bounds.begin(), failure->bounds.end(), v) != failure->bounds.end();
            if (pair) out << ", color=red, penwidth=2";
            else if (bound) out << ", color=blue, penwidth=2";
        }
        out << "];\n";
    }
    for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace tubelat
