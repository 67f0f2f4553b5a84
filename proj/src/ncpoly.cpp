#include "hopfdiff/ncpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfdiff {

NCPoly::NCPoly(int nu, int trunc) : nu_(nu), trunc_(trunc) {
    if (nu < 1 || trunc < 1) throw std::invalid_argument("NCPoly: nu and trunc must be positive");
}

NCPoly NCPoly::unit(int nu, int trunc, const Laurent& c) {
    NCPoly p(nu, trunc);
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::gen(int nu, int trunc, int n) {
    if (n < 1 || n > nu) throw std::invalid_argument("NCPoly::gen: index out of range");
    NCPoly p(nu, trunc);
    p.add_term(Word{n}, Laurent(1));
    return p;
}

NCPoly NCPoly::monomial(int nu, int trunc, const Word& w, const Laurent& c) {
    NCPoly p(nu, trunc);
    p.add_term(w, c);
    return p;
}

Laurent NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
}

int NCPoly::max_weight() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, word_weight(w));
    return m;
}

void NCPoly::add_term(const Word& w, const Laurent& c) {
    if (c.is_zero() || word_weight(w) > trunc_) return;
    for (int g : w)
        if (g < 1 || g > nu_) throw std::invalid_argument("NCPoly: letter out of range");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPoly::check_compat(const NCPoly& o) const {
    if (nu_ != o.nu_ || trunc_ != o.trunc_)
        throw std::invalid_argument("NCPoly: mismatched nu or truncation weight");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_compat(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    check_compat(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(nu_, trunc_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.check_compat(b);
    NCPoly r(a.nu_, a.trunc_);
    for (const auto& [wa, ca] : a.terms_) {
        int res = a.trunc_ - word_weight(wa);
        for (const auto& [wb, cb] : b.terms_) {
            if (word_weight(wb) > res) break;  // terms_ is weight-graded first
            r.add_term(word_concat(wa, wb), ca * cb);
        }
    }
    return r;
}

NCPoly NCPoly::scaled(const Laurent& c) const {
    NCPoly r(nu_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [w, q] : terms_) r.terms_.emplace(w, q * c);
    return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
    return nu_ == o.nu_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

NCPoly NCPoly::graded_component(int w) const {
    NCPoly r(nu_, trunc_);
    for (const auto& [word, c] : terms_)
        if (word_weight(word) == w) r.terms_.emplace(word, c);
    return r;
}

NCPoly NCPoly::truncated(int M) const {
    if (M > trunc_) throw std::invalid_argument("NCPoly::truncated: bound exceeds current");
    NCPoly r(nu_, M);
    for (const auto& [word, c] : terms_)
        if (word_weight(word) <= M) r.terms_.emplace(word, c);
    return r;
}

NCPoly power(const NCPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    NCPoly r = NCPoly::unit(p.nu(), p.trunc());
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

std::string NCPoly::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const NCPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::string cs = c.str();
        bool neg = false;
        if (c.terms().size() == 1) {
            Rational q = c.terms().begin()->second;
            if (q < 0) {
                neg = true;
                cs = (-c).str();
            }
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool paren = c.terms().size() > 1;
        bool trivial = (cs == "1");
        if (w.empty()) {
            os << (paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (!trivial) os << (paren ? "(" + cs + ")" : cs) << " ";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << "*";
            os << "a" << w[i];
        }
    }
    return os;
}

}  // namespace hopfdiff
