#include "hopfdiff/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfdiff {

Laurent::Laurent(const Rational& c) {
    if (c != 0) c_[0] = c;
}

Laurent Laurent::h(int exp, const Rational& c) {
    Laurent l;
    if (c != 0) l.c_[exp] = c;
    return l;
}

bool Laurent::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

int Laurent::val() const {
    if (c_.empty()) throw std::domain_error("Laurent::val: zero element");
    return c_.begin()->first;
}

int Laurent::top() const {
    if (c_.empty()) throw std::domain_error("Laurent::top: zero element");
    return c_.rbegin()->first;
}

Rational Laurent::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, q] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, q);
        } else {
            it->second += q;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, q] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, -q);
        } else {
            it->second -= q;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, q] : c_) r.c_.emplace(e, -q);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, qa] : a.c_)
        for (const auto& [eb, qb] : b.c_) {
            Rational p = qa * qb;
            auto it = r.c_.find(ea + eb);
            if (it == r.c_.end()) {
                r.c_.emplace(ea + eb, p);
            } else {
                it->second += p;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent Laurent::shifted(int d) const {
    Laurent r;
    for (const auto& [e, q] : c_) r.c_.emplace(e + d, q);
    return r;
}

Rational Laurent::at_one() const {
    Rational s(0);
    for (const auto& [e, q] : c_) s += q;
    return s;
}

Rational Laurent::at_zero() const {
    if (!polynomial())
        throw std::domain_error("Laurent::at_zero: negative h-valuation " + std::to_string(val()));
    return coeff(0);
}

Rational Laurent::rational_value() const {
    if (!is_constant()) throw std::domain_error("Laurent::rational_value: unresolved h-content");
    return coeff(0);
}

std::string Laurent::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& l) {
    if (l.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, q] : l.terms()) {
        Rational a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << " ";
            os << "h";
            if (e != 1) os << "^" << e;
        }
    }
    return os;
}

}  // namespace hopfdiff
