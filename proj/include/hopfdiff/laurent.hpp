#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "hopfdiff/rational.hpp"

namespace hopfdiff {

// Exact Laurent polynomial in the deformation parameter h, with rational
// coefficients. Exponents of both signs are allowed; zero coefficients are
// never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c);  // c * h^0
    Laurent(long c) : Laurent(Rational(c)) {}
    Laurent(int c) : Laurent(Rational(c)) {}
    static Laurent h(int exp, const Rational& c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    // true when supported on h^0 only (or zero)
    bool is_constant() const;
    // smallest exponent with nonzero coefficient; undefined on zero (throws)
    int val() const;
    int top() const;
    Rational coeff(int exp) const;
    const std::map<int, Rational>& terms() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    // multiply by h^d
    Laurent shifted(int d) const;
    // evaluation at h = 1 (always defined) and h = 0 (requires val() >= 0)
    Rational at_one() const;
    Rational at_zero() const;
    bool polynomial() const { return is_zero() || val() >= 0; }
    // the h^0 part of a constant, throwing when h-content is present
    Rational rational_value() const;

    std::string str() const;

private:
    std::map<int, Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& l);

}  // namespace hopfdiff
