#include "tubelat/vertex_set.hpp"

namespace tubelat {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

VertexSet compress(VertexSet s, VertexSet ground) {
    VertexSet out;
    int pos = 1;
    for (int v : ground) {
        if (s.contains(v)) out.insert(pos);
        ++pos;
    }
    return out;
}

VertexSet expand(VertexSet s, VertexSet ground) {
    VertexSet out;
    int pos = 1;
    for (int v : ground) {
        if (s.contains(pos)) out.insert(v);
        ++pos;
    }
    return out;
}

} // namespace tubelat
