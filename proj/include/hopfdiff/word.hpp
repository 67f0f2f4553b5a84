#pragma once

#include <numeric>
#include <vector>

namespace hopfdiff {

// A non-commutative monomial in the generators: the letters are generator
// indices, the empty word is the unit. The weight of a letter n is n.
using Word = std::vector<int>;

inline int word_weight(const Word& w) { return std::accumulate(w.begin(), w.end(), 0); }
inline int word_length(const Word& w) { return static_cast<int>(w.size()); }

// Canonical monomial order: by weight, then by length, then lexicographically
// on the index sequence. Used for echelon forms and printing.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        int wa = word_weight(a), wb = word_weight(b);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace hopfdiff
