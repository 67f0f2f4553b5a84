#pragma once

#include <functional>
#include <map>
#include <string>

#include "hopfdiff/laurent.hpp"

namespace hopfdiff {

// Exponent-vector monomial: generator index -> exponent, zeros omitted.
using ExpVec = std::map<int, int>;

inline int expvec_weight(const ExpVec& e) {
    int w = 0;
    for (const auto& [g, k] : e) w += g * k;
    return w;
}

// Commutative polynomial in the generators with Laurent coefficients; the
// image of NCPoly under abelianization, and the coefficient engine for the
// h = 0 limits.
class CommPoly {
public:
    CommPoly() = default;
    static CommPoly unit(const Laurent& c = Laurent(1));
    static CommPoly gen(int n);
    static CommPoly monomial(const ExpVec& e, const Laurent& c = Laurent(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Laurent>& terms() const { return terms_; }
    Laurent coeff(const ExpVec& e) const;
    int degree_weight() const;  // max weight of a monomial

    void add_term(const ExpVec& e, const Laurent& c);

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly operator-() const;
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    CommPoly scaled(const Laurent& c) const;
    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

    // evaluation at a rational point; coefficients must be h-free
    Rational evaluate(const std::function<Rational(int)>& point) const;

    std::string str() const;

private:
    std::map<ExpVec, Laurent> terms_;
};

std::ostream& operator<<(std::ostream& os, const CommPoly& p);

}  // namespace hopfdiff
