#pragma once

#include <map>
#include <string>

#include "hopfdiff/laurent.hpp"
#include "hopfdiff/word.hpp"

namespace hopfdiff {

// Element of the free associative algebra on weighted generators with Laurent
// coefficients. Every value carries the generator bound `nu` and a truncation
// weight `trunc`: terms of weight above the bound are discarded by all
// operations, which makes each value an order-trunc-correct model of the
// graded algebra.
class NCPoly {
public:
    NCPoly(int nu, int trunc);
    static NCPoly unit(int nu, int trunc, const Laurent& c = Laurent(1));
    static NCPoly gen(int nu, int trunc, int n);  // a_n
    static NCPoly monomial(int nu, int trunc, const Word& w, const Laurent& c = Laurent(1));

    int nu() const { return nu_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Laurent, WordLess>& terms() const { return terms_; }
    Laurent coeff(const Word& w) const;
    // coefficient of the empty word
    Laurent counit() const { return coeff(Word{}); }
    int max_weight() const;  // 0 for scalars and zero

    // respects the truncation bound; silently drops overweight terms
    void add_term(const Word& w, const Laurent& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator-() const;
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const Laurent& c) const;
    bool operator==(const NCPoly& o) const;

    NCPoly graded_component(int w) const;
    // re-truncate to a smaller bound M <= trunc
    NCPoly truncated(int M) const;

    std::string str() const;

private:
    int nu_, trunc_;
    std::map<Word, Laurent, WordLess> terms_;
    void check_compat(const NCPoly& o) const;
};

NCPoly power(const NCPoly& p, int k);

std::ostream& operator<<(std::ostream& os, const NCPoly& p);

}  // namespace hopfdiff
