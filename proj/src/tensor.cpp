#include "hopfdiff/tensor.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfdiff {

namespace {
int total_weight(const TKey& k) {
    int w = 0;
    for (const auto& word : k) w += word_weight(word);
    return w;
}
}  // namespace

Tensor::Tensor(int rank, int nu, int trunc) : rank_(rank), nu_(nu), trunc_(trunc) {
    if (rank < 0) throw std::invalid_argument("Tensor: negative rank");
    if (nu < 1 || trunc < 1) throw std::invalid_argument("Tensor: nu and trunc must be positive");
}

Tensor Tensor::scalar(int nu, int trunc, const Laurent& c) {
    Tensor t(0, nu, trunc);
    t.add_term(TKey{}, c);
    return t;
}

Tensor Tensor::lift(const NCPoly& p) {
    Tensor t(1, p.nu(), p.trunc());
    for (const auto& [w, c] : p.terms()) t.terms_.emplace(TKey{w}, c);
    return t;
}

Tensor Tensor::outer(const Tensor& a, const Tensor& b) {
    a.check_compat(b, false);
    Tensor r(a.rank_ + b.rank_, a.nu_, a.trunc_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            TKey k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_term(k, ca * cb);
        }
    return r;
}

Laurent Tensor::coeff(const TKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Laurent() : it->second;
}

void Tensor::add_term(const TKey& k, const Laurent& c) {
    if (static_cast<int>(k.size()) != rank_) throw std::invalid_argument("Tensor: rank mismatch");
    if (c.is_zero() || total_weight(k) > trunc_) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Tensor::check_compat(const Tensor& o, bool same_rank) const {
    if (nu_ != o.nu_ || trunc_ != o.trunc_)
        throw std::invalid_argument("Tensor: mismatched nu or truncation weight");
    if (same_rank && rank_ != o.rank_) throw std::invalid_argument("Tensor: rank mismatch");
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_compat(o, true);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_compat(o, true);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Tensor Tensor::operator-() const {
    Tensor r(rank_, nu_, trunc_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
    a.check_compat(b, true);
    Tensor r(a.rank_, a.nu_, a.trunc_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            TKey k(a.rank_);
            for (int i = 0; i < a.rank_; ++i) k[i] = word_concat(ka[i], kb[i]);
            r.add_term(k, ca * cb);
        }
    return r;
}

Tensor Tensor::scaled(const Laurent& c) const {
    Tensor r(rank_, nu_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, q * c);
    return r;
}

bool Tensor::operator==(const Tensor& o) const {
    return rank_ == o.rank_ && nu_ == o.nu_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

Tensor Tensor::flip(int i, int j) const {
    if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
        throw std::invalid_argument("Tensor::flip: position out of range");
    Tensor r(rank_, nu_, trunc_);
    for (const auto& [k, c] : terms_) {
        TKey kk = k;
        std::swap(kk[i], kk[j]);
        r.add_term(kk, c);
    }
    return r;
}

Tensor Tensor::apply_slot(int i, int k, const std::function<Tensor(const Word&)>& f) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("Tensor::apply_slot: slot out of range");
    Tensor r(rank_ - 1 + k, nu_, trunc_);
    for (const auto& [key, c] : terms_) {
        Tensor img = f(key[i]);
        if (img.rank() != k) throw std::invalid_argument("Tensor::apply_slot: image rank mismatch");
        for (const auto& [ik, ic] : img.terms()) {
            TKey kk;
            kk.reserve(r.rank_);
            kk.insert(kk.end(), key.begin(), key.begin() + i);
            kk.insert(kk.end(), ik.begin(), ik.end());
            kk.insert(kk.end(), key.begin() + i + 1, key.end());
            r.add_term(kk, c * ic);
        }
    }
    return r;
}

Tensor Tensor::drop_unit_slots() const {
    Tensor r(rank_, nu_, trunc_);
    for (const auto& [k, c] : terms_) {
        bool keep = true;
        for (const auto& w : k)
            if (w.empty()) {
                keep = false;
                break;
            }
        if (keep) r.terms_.emplace(k, c);
    }
    return r;
}

NCPoly Tensor::multiply_out() const {
    NCPoly p(nu_, trunc_);
    for (const auto& [k, c] : terms_) {
        Word w;
        for (const auto& slot : k) w.insert(w.end(), slot.begin(), slot.end());
        p.add_term(w, c);
    }
    return p;
}

Tensor Tensor::graded_component(int w) const {
    Tensor r(rank_, nu_, trunc_);
    for (const auto& [k, c] : terms_)
        if (total_weight(k) == w) r.terms_.emplace(k, c);
    return r;
}

std::string Tensor::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Tensor& t) {
    if (t.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
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
        if (!(cs == "1")) os << (c.terms().size() > 1 ? "(" + cs + ")" : cs) << " ";
        os << "(";
        for (size_t s = 0; s < k.size(); ++s) {
            if (s) os << " \xE2\x8A\x97 ";  // ⊗
            if (k[s].empty()) {
                os << "1";
            } else {
                for (size_t i = 0; i < k[s].size(); ++i) {
                    if (i) os << "*";
                    os << "a" << k[s][i];
                }
            }
        }
        os << ")";
    }
    return os;
}

}  // namespace hopfdiff
