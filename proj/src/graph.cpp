#include "tubelat/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "tubelat/error.hpp"

namespace tubelat {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > max_vertices) throw InvalidVertex("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

VertexSet Graph::neighbors(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= adj_[v - 1];
    return out;
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return false;
    return adj_[i - 1].contains(j);
}

void Graph::add_edge(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw InvalidVertex("edge endpoint out of range: {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    if (i == j) throw InvalidVertex("loop at vertex " + std::to_string(i));
    adj_[i - 1].insert(j);
    adj_[j - 1].insert(i);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
        for (int j : adj_[i - 1])
            if (j > i) out.emplace_back(i, j);
    return out;
}

int Graph::edge_count() const {
    int c = 0;
    for (auto s : adj_) c += s.size();
    return c / 2;
}

LabeledGraph::LabeledGraph(std::vector<int> labels, const std::vector<Edge>& labeled_edges)
    : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw InvalidVertex("duplicate vertex label");
    if (!labels_.empty() && labels_.front() < 1) throw InvalidVertex("labels must be positive");
    shape_ = Graph(static_cast<int>(labels_.size()));
    auto pos = [&](int a) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), a);
        if (it == labels_.end() || *it != a) throw InvalidVertex("unknown label " + std::to_string(a));
        return static_cast<int>(it - labels_.begin()) + 1;
    };
    for (auto [a, b] : labeled_edges) shape_.add_edge(pos(a), pos(b));
}

bool LabeledGraph::has_edge(int a, int b) const {
    auto ia = std::lower_bound(labels_.begin(), labels_.end(), a);
    auto ib = std::lower_bound(labels_.begin(), labels_.end(), b);
    if (ia == labels_.end() || *ia != a || ib == labels_.end() || *ib != b) return false;
    return shape_.has_edge(static_cast<int>(ia - labels_.begin()) + 1, static_cast<int>(ib - labels_.begin()) + 1);
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    for (auto [i, j] : shape_.edges()) out.emplace_back(labels_[i - 1], labels_[j - 1]);
    return out;
}

std::pair<Graph, std::vector<int>> standardize(const LabeledGraph& h) { return {h.shape_, h.labels_}; }

LabeledGraph make_labeled(Graph shape, VertexSet ground) {
    LabeledGraph h;
    h.labels_ = ground.to_vector();
    h.shape_ = std::move(shape);
    return h;
}

void check_vertices(const Graph& g, VertexSet i) {
    if (!i.subset_of(g.vertices())) throw InvalidVertex("vertex set " + i.to_string() + " not inside [" + std::to_string(g.n()) + "]");
}

Graph std_restriction(const Graph& g, VertexSet i) {
    check_vertices(g, i);
    Graph out(i.size());
    int a = 1;
    for (int u : i) {
        int b = 1;
        for (int v : i) {
            if (v > u && g.has_edge(u, v)) out.add_edge(a, b);
            ++b;
        }
        ++a;
    }
    return out;
}

Graph std_contraction(const Graph& g, VertexSet i) {
    check_vertices(g, i);
    VertexSet rest = g.vertices() - i;
    std::vector<int> keep = rest.to_vector();
    Graph out(static_cast<int>(keep.size()));
    std::vector<VertexSet> attach(keep.size());
    auto comps = components(g, i);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t c = 0; c < comps.size(); ++c)
            if (g.neighbors(keep[a]).intersects(comps[c])) attach[a].insert(static_cast<int>(c) + 1);
    }
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (g.has_edge(keep[a], keep[b]) || attach[a].intersects(attach[b]))
                out.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return out;
}

LabeledGraph induced_subgraph(const Graph& g, VertexSet i) { return make_labeled(std_restriction(g, i), i); }

LabeledGraph delete_vertices(const Graph& g, VertexSet i) {
    check_vertices(g, i);
    return induced_subgraph(g, g.vertices() - i);
}

LabeledGraph contract(const Graph& g, VertexSet i) {
    return make_labeled(std_contraction(g, i), g.vertices() - i);
}

VertexSet component_of(const Graph& g, VertexSet within, int v) {
    VertexSet comp = VertexSet::singleton(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next = (g.neighbors(frontier) & within) - comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet c = component_of(g, within, rest.min());
        out.push_back(c);
        rest -= c;
    }
    return out;
}

bool is_connected_set(const Graph& g, VertexSet i) {
    return !i.empty() && component_of(g, i, i.min()) == i;
}

bool is_tube(const Graph& g, VertexSet i) {
    check_vertices(g, i);
    return is_connected_set(g, i);
}

std::vector<VertexSet> tubes(const Graph& g) {
    // Grow connected sets: each set is extended by one neighbor at a time.
    std::vector<VertexSet> out;
    std::vector<VertexSet> layer;
    for (int v = 1; v <= g.n(); ++v) layer.push_back(VertexSet::singleton(v));
    while (!layer.empty()) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<VertexSet> next;
        for (VertexSet s : layer)
            for (int v : g.neighbors(s) - s) next.push_back(s | VertexSet::singleton(v));
        std::sort(next.begin(), next.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

FilledStatus filled_status(const Graph& g) {
    FilledStatus st;
    for (auto [i, k] : g.edges()) {
        for (int j = i + 1; j < k; ++j) {
            if (!st.right_witness && !g.has_edge(j, k)) st.right_witness = {{i, k}, {j, k}};
            if (!st.left_witness && !g.has_edge(i, j)) st.left_witness = {{i, k}, {i, j}};
        }
    }
    st.right_filled = !st.right_witness;
    st.left_filled = !st.left_witness;
    st.filled = st.right_filled && st.left_filled;
    return st;
}

std::vector<Edge> minimal_non_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int x = 1; x <= g.n(); ++x) {
        for (int y = x + 1; y <= g.n(); ++y) {
            if (g.has_edge(x, y)) continue;
            bool ok = true;
            for (int z = x + 1; z < y && ok; ++z) ok = g.has_edge(x, z) && g.has_edge(z, y);
            if (ok) out.emplace_back(x, y);
        }
    }
    return out;
}

Graph dual_graph(const Graph& g) {
    Graph out(g.n());
    int m = g.n() + 1;
    for (auto [i, j] : g.edges()) out.add_edge(m - i, m - j);
    return out;
}

std::vector<Graph> minors(const Graph& g) {
    std::map<std::pair<int, std::vector<Edge>>, bool> seen;
    std::vector<Graph> out;
    std::deque<Graph> queue{g};
    seen[{g.n(), g.edges()}] = true;
    while (!queue.empty()) {
        Graph h = queue.front();
        queue.pop_front();
        out.push_back(h);
        for (int v = 1; v <= h.n(); ++v) {
            VertexSet s = VertexSet::singleton(v);
            for (Graph m : {std_restriction(h, h.vertices() - s), std_contraction(h, s)}) {
                auto key = std::make_pair(m.n(), m.edges());
                if (seen.emplace(key, true).second) queue.push_back(std::move(m));
            }
        }
    }
    return out;
}

bool is_subgraph(const Graph& h, const Graph& g) {
    if (h.n() != g.n()) return false;
    for (int v = 1; v <= h.n(); ++v)
        if (!h.neighbors(v).subset_of(g.neighbors(v))) return false;
    return true;
}

namespace {

template <class Pred>
Graph by_distance(int n, Pred pred) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pred(j - i)) g.add_edge(i, j);
    return g;
}

} // namespace

Graph path_graph(int n) { return by_distance(n, [](int d) { return d == 1; }); }
Graph complete_graph(int n) { return by_distance(n, [](int) { return true; }); }
Graph edge_free_graph(int n) { return Graph(n); }
Graph odd_bipartite_graph(int n) { return by_distance(n, [](int d) { return d % 2 == 1; }); }
Graph h_graph(int k, int n) { return by_distance(n, [k](int d) { return d <= k; }); }
Graph distance_graph(const std::set<int>& a, int n) {
    return by_distance(n, [&a](int d) { return a.count(d) > 0; });
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(1, n);
    return g;
}

std::vector<Graph> all_graphs(int n) {
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    std::uint64_t total = std::uint64_t{1} << pairs.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1u) g.add_edge(pairs[b].first, pairs[b].second);
        out.push_back(std::move(g));
    }
    return out;
}

GraphFamily GraphFamily::from_A(std::set<int> a) {
    std::string name = "A:{";
    bool first = true;
    for (int x : a) {
        if (x < 1) throw ParseError("distance set members must be positive");
        if (!first) name += ',';
        name += std::to_string(x);
        first = false;
    }
    name += '}';
    auto rule = [a](int n) { return distance_graph(a, n); };
    return GraphFamily(Kind::FromA, name, rule, a);
}

GraphFamily GraphFamily::from_all() { return GraphFamily(Kind::FromAll, "A:all", complete_graph); }
GraphFamily GraphFamily::path() { return GraphFamily(Kind::Path, "path", path_graph, std::set<int>{1}); }
GraphFamily GraphFamily::complete() { return GraphFamily(Kind::Complete, "complete", complete_graph); }
GraphFamily GraphFamily::edge_free() { return GraphFamily(Kind::EdgeFree, "empty", edge_free_graph, std::set<int>{}); }
GraphFamily GraphFamily::cycle() { return GraphFamily(Kind::Cycle, "cycle", cycle_graph); }
GraphFamily GraphFamily::odd_bipartite() { return GraphFamily(Kind::OddBipartite, "oddbip", odd_bipartite_graph); }

GraphFamily GraphFamily::h(int k) {
    if (k < 0) throw ParseError("h:<k> needs k >= 0");
    std::set<int> a;
    for (int d = 1; d <= k; ++d) a.insert(d);
    return GraphFamily(Kind::HGraph, "h:" + std::to_string(k), [k](int n) { return h_graph(k, n); }, a);
}

GraphFamily GraphFamily::custom(std::string name, std::function<Graph(int)> rule) {
    return GraphFamily(Kind::Custom, std::move(name), std::move(rule));
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer for " + what + ", got '" + s + "'");
    }
}

std::set<int> parse_int_set(std::string body) {
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw ParseError("expected {a1,a2,...}, got '" + body + "'");
    body = body.substr(1, body.size() - 2);
    std::set<int> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(parse_int(item, "distance"));
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        if (s[i] == '}') --depth;
        if (s[i] == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

} // namespace

GraphFamily parse_family(const std::string& text) {
    auto parts = split(text, ':');
    const std::string& head = parts[0];
    if (parts.size() == 1) {
        if (head == "path") return GraphFamily::path();
        if (head == "complete") return GraphFamily::complete();
        if (head == "empty") return GraphFamily::edge_free();
        if (head == "cycle") return GraphFamily::cycle();
        if (head == "oddbip") return GraphFamily::odd_bipartite();
    }
    if (parts.size() == 2 && head == "h") return GraphFamily::h(parse_int(parts[1], "k"));
    if (parts.size() == 2 && head == "A") {
        if (parts[1] == "all") return GraphFamily::from_all();
        return GraphFamily::from_A(parse_int_set(parts[1]));
    }
    throw ParseError("unknown family descriptor '" + text + "'");
}

Graph parse_graph_descriptor(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() >= 2 && parts[0] == "edges") {
        int n = parse_int(parts[1], "n");
        Graph g(n);
        if (parts.size() == 3 && !parts[2].empty()) {
            std::stringstream ss(parts[2]);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto dash = item.find('-');
                if (dash == std::string::npos) throw ParseError("edge must look like i-j, got '" + item + "'");
                g.add_edge(parse_int(item.substr(0, dash), "edge"), parse_int(item.substr(dash + 1), "edge"));
            }
        } else if (parts.size() > 3) {
            throw ParseError("malformed edges descriptor '" + text + "'");
        }
        return g;
    }
    if (parts.size() < 2) throw ParseError("graph descriptor needs a size, e.g. path:4");
    int n = parse_int(parts.back(), "n");
    if (n < 0 || n > max_vertices) throw ParseError("graph size out of range: " + parts.back());
    std::string fam = parts[0];
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) fam += ":" + parts[i];
    return parse_family(fam)(n);
}

std::string graph_to_text(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = -1;
    if (!(in >> n) || n < 0 || n > max_vertices) throw ParseError("graph text must start with a vertex count");
    Graph g(n);
    int i = 0, j = 0;
    while (in >> i) {
        if (!(in >> j)) throw ParseError("dangling edge endpoint in graph text");
        g.add_edge(i, j);
    }
    if (!in.eof()) throw ParseError("unexpected token in graph text");
    return g;
}

std::string edges_to_string(const Graph& g) {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : g.edges()) {
        if (!first) s += ',';
        s += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
        first = false;
    }
    return s + "}";
}

} // namespace tubelat
