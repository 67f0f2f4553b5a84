#include "hopfdiff/commpoly.hpp"

#include <ostream>
#include <sstream>

namespace hopfdiff {

CommPoly CommPoly::unit(const Laurent& c) {
    CommPoly p;
    p.add_term(ExpVec{}, c);
    return p;
}

CommPoly CommPoly::gen(int n) {
    CommPoly p;
    p.add_term(ExpVec{{n, 1}}, Laurent(1));
    return p;
}

CommPoly CommPoly::monomial(const ExpVec& e, const Laurent& c) {
    CommPoly p;
    p.add_term(e, c);
    return p;
}

Laurent CommPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Laurent() : it->second;
}

int CommPoly::degree_weight() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, expvec_weight(e));
    return m;
}

void CommPoly::add_term(const ExpVec& e, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CommPoly CommPoly::operator-() const {
    CommPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e = ea;
            for (const auto& [g, k] : eb) e[g] += k;
            r.add_term(e, ca * cb);
        }
    return r;
}

CommPoly CommPoly::scaled(const Laurent& c) const {
    CommPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, q] : terms_) r.add_term(e, q * c);
    return r;
}

Rational CommPoly::evaluate(const std::function<Rational(int)>& point) const {
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c.rational_value();
        for (const auto& [g, k] : e)
            for (int i = 0; i < k; ++i) m *= point(g);
        s += m;
    }
    return s;
}

std::string CommPoly::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CommPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string cs = c.str();
        bool neg = false;
        if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
            neg = true;
            cs = (-c).str();
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool trivial = (cs == "1");
        if (e.empty()) {
            os << (c.terms().size() > 1 ? "(" + cs + ")" : cs);
            continue;
        }
        if (!trivial) os << (c.terms().size() > 1 ? "(" + cs + ")" : cs) << " ";
        bool started = false;
        for (const auto& [g, k] : e) {
            if (started) os << "*";
            started = true;
            os << "a" << g;
            if (k != 1) os << "^" << k;
        }
    }
    return os;
}

}  // namespace hopfdiff
