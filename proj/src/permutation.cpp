#include "tubelat/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "tubelat/error.hpp"

namespace tubelat {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > size() || seen[v]) throw InvalidPermutation("not a permutation: " + to_string());
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty() || text == "e") return Permutation();
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string::npos) end = text.size();
            std::string item = text.substr(start, end - start);
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
                throw InvalidPermutation("malformed permutation '" + text + "'");
            w.push_back(std::stoi(item));
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw InvalidPermutation("malformed permutation '" + text + "'");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
    std::vector<int> pos(word_.size());
    for (std::size_t p = 0; p < word_.size(); ++p) pos[word_[p] - 1] = static_cast<int>(p) + 1;
    return pos;
}

std::string Permutation::to_string() const {
    std::string s;
    bool csv = size() > 9;
    for (std::size_t p = 0; p < word_.size(); ++p) {
        if (csv && p > 0) s += ',';
        s += std::to_string(word_[p]);
    }
    return s;
}

Permutation standardize_word(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> w;
    w.reserve(values.size());
    for (int v : values)
        w.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::size_t lex_rank(const Permutation& w) {
    int n = w.size();
    std::size_t rank = 0;
    std::uint32_t used = 0;
    std::vector<std::size_t> facts(n + 1, 1);
    for (int i = 1; i <= n; ++i) facts[i] = facts[i - 1] * i;
    for (int p = 0; p < n; ++p) {
        int v = w.word()[p];
        int smaller = std::popcount(~used & ((1u << (v - 1)) - 1u));
        rank += smaller * facts[n - 1 - p];
        used |= 1u << (v - 1);
    }
    return rank;
}

} // namespace tubelat
