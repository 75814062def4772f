#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tubelat {

inline constexpr int max_vertices = 30;

// Subset of [n] stored as a bitmask; bit v-1 stands for vertex v.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static constexpr VertexSet from_bits(std::uint32_t b) {
        VertexSet s;
        s.bits_ = b;
        return s;
    }
    static constexpr VertexSet range(int n) {
        return from_bits(n >= 32 ? ~0u : ((1u << n) - 1u));
    }
    static VertexSet singleton(int v) { return from_bits(1u << (v - 1)); }
    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return v >= 1 && v <= 32 && ((bits_ >> (v - 1)) & 1u); }
    void insert(int v) { bits_ |= 1u << (v - 1); }
    void erase(int v) { bits_ &= ~(1u << (v - 1)); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    int min() const { return std::countr_zero(bits_) + 1; }
    int max() const { return 32 - std::countl_zero(bits_); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    std::vector<int> to_vector() const;
    std::string to_string() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        explicit constexpr iterator(std::uint32_t b) : rest_(b) {}
        int operator*() const { return std::countr_zero(rest_) + 1; }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator a, iterator b) = default;
    private:
        std::uint32_t rest_ = 0;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

// Order by size, then by the sorted vertex list.
inline bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    return (a.bits() & (d & (~d + 1))) != 0;
}

struct CanonicalLess {
    bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

// Relabel the members of s, which must lie in ground, onto 1..|ground| in order.
VertexSet compress(VertexSet s, VertexSet ground);
// Inverse of compress.
VertexSet expand(VertexSet s, VertexSet ground);

} // namespace tubelat
