#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace tubelat {

// One-line notation w_1...w_n of a bijection on [n]. Size 0 is the unit ι.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    // "35214" or "3,5,2,1,4"; "" or "e" for the empty permutation.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }
    // 1-based position.
    int at(int pos) const { return word_[pos - 1]; }
    const std::vector<int>& word() const { return word_; }
    std::vector<int> positions() const; // positions()[v-1] = position of v
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

// Order-preserving relabeling of distinct integers onto [k].
Permutation standardize_word(std::span<const int> values);
// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
// Position of w in the lexicographic listing of S_n.
std::size_t lex_rank(const Permutation& w);

} // namespace tubelat
