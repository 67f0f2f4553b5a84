#include "hopfdiff/hopf.hpp"

#include <stdexcept>

namespace hopfdiff {

HopfAlg::HopfAlg(Family f, int nu, int trunc) : family_(f), nu_(nu), trunc_(trunc) {
    if (nu < 1 || trunc < 1) throw std::invalid_argument("HopfAlg: nu and trunc must be positive");
}

std::vector<int> HopfAlg::generators() const {
    std::vector<int> g;
    if (family_ == Family::Full) {
        for (int n = 1; n <= nu_; ++n) g.push_back(n);
    } else {
        for (int n = 2; n <= nu_; n += 2) g.push_back(n);
    }
    return g;
}

bool HopfAlg::is_generator(int n) const {
    if (n < 1 || n > nu_) return false;
    return family_ == Family::Full || n % 2 == 0;
}

NCPoly HopfAlg::gen(int n) const {
    if (!is_generator(n)) throw std::invalid_argument("HopfAlg::gen: not a generator index");
    return NCPoly::gen(nu_, trunc_, n);
}

NCPoly HopfAlg::P(int t, int k) const {
    if (k < 1 || k > t) throw std::invalid_argument("HopfAlg::P: requires 1 <= k <= t");
    const int mult = family_ == Family::Full ? 1 : 2;
    NCPoly r(nu_, trunc_);
    // compositions of t into k positive parts; parts whose letter would fall
    // outside the generator range contribute nothing in this presentation
    Word parts;
    std::function<void(int, int)> rec = [&](int rem, int slots) {
        if (slots == 1) {
            if (mult * rem <= nu_) {
                parts.push_back(rem);
                Word w(parts.size());
                for (size_t i = 0; i < parts.size(); ++i) w[i] = mult * parts[i];
                r.add_term(w, Laurent(1));
                parts.pop_back();
            }
            return;
        }
        for (int j = 1; j <= rem - (slots - 1); ++j) {
            if (mult * j > nu_) break;
            parts.push_back(j);
            rec(rem - j, slots - 1);
            parts.pop_back();
        }
    };
    rec(t, k);
    return r;
}

NCPoly HopfAlg::Q(int l, int t) const {
    if (t < 0) throw std::invalid_argument("HopfAlg::Q: negative weight");
    if (l < 0) throw std::invalid_argument("HopfAlg::Q: negative upper index");
    if (t == 0) return unit();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = q_cache_.find({l, t});
        if (it != q_cache_.end()) return it->second;
    }
    const long top = family_ == Family::Full ? l + 1 : 2L * l + 1;
    NCPoly r(nu_, trunc_);
    for (int k = 1; k <= t; ++k) {
        Integer b = binomial(top, k);
        if (b == 0) continue;
        r += P(t, k).scaled(Laurent(Rational(b)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    q_cache_.emplace(std::make_pair(l, t), r);
    return r;
}

NCPoly HopfAlg::Z(int l, int t) const {
    if (family_ != Family::Full) throw std::invalid_argument("HopfAlg::Z: full family only");
    if (t < 1) throw std::invalid_argument("HopfAlg::Z: requires t >= 1");
    NCPoly a1t = NCPoly::monomial(nu_, trunc_, Word(t, 1));
    return Q(l, t) - a1t.scaled(Laurent(Rational(binomial(l + t, t))));
}

Tensor HopfAlg::coproduct_gen(int n) const {
    if (!is_generator(n)) throw std::invalid_argument("HopfAlg::coproduct_gen: not a generator");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cop_gen_.find(n);
        if (it != cop_gen_.end()) return it->second;
    }
    Tensor t(2, nu_, trunc_);
    t.add_term(TKey{Word{n}, Word{}}, Laurent(1));
    t.add_term(TKey{Word{}, Word{n}}, Laurent(1));
    const int half = family_ == Family::Full ? n : n / 2;
    for (int m = 1; m <= half - 1; ++m) {
        const int left = family_ == Family::Full ? m : 2 * m;
        NCPoly q = Q(m, half - m);
        for (const auto& [w, c] : q.terms()) t.add_term(TKey{Word{left}, w}, c);
    }
    std::lock_guard<std::mutex> lock(mu_);
    cop_gen_.emplace(n, t);
    return t;
}

Tensor HopfAlg::coproduct_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cop_word_.find(w);
        if (it != cop_word_.end()) return it->second;
    }
    Tensor t(2, nu_, trunc_);
    t.add_term(TKey{Word{}, Word{}}, Laurent(1));
    for (int g : w) t = t * coproduct_gen(g);
    std::lock_guard<std::mutex> lock(mu_);
    cop_word_.emplace(w, t);
    return t;
}

Tensor HopfAlg::coproduct(const NCPoly& p) const {
    Tensor r(2, nu_, trunc_);
    for (const auto& [w, c] : p.terms()) r += coproduct_word(w).scaled(c);
    return r;
}

NCPoly HopfAlg::antipode_gen(int n) const {
    if (!is_generator(n)) throw std::invalid_argument("HopfAlg::antipode_gen: not a generator");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = antipode_gen_.find(n);
        if (it != antipode_gen_.end()) return it->second;
    }
    // S(a_n) = -a_n - sum_m a_m S(Q^m_{n-m}); the recursion only meets
    // generators of smaller weight
    NCPoly s = -gen(n);
    const int half = family_ == Family::Full ? n : n / 2;
    for (int m = 1; m <= half - 1; ++m) {
        const int left = family_ == Family::Full ? m : 2 * m;
        s -= gen(left) * antipode(Q(m, half - m));
    }
    std::lock_guard<std::mutex> lock(mu_);
    antipode_gen_.emplace(n, s);
    return s;
}

NCPoly HopfAlg::antipode(const NCPoly& p) const {
    NCPoly r(nu_, trunc_);
    for (const auto& [w, c] : p.terms()) {
        NCPoly m = unit(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) m = m * antipode_gen(*it);
        r += m;
    }
    return r;
}

NCPoly HopfAlg::antipode_gen_second(int n) const {
    if (!is_generator(n)) throw std::invalid_argument("HopfAlg::antipode_gen_second");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = antipode2_gen_.find(n);
        if (it != antipode2_gen_.end()) return it->second;
    }
    // S(a_n) = -a_n - sum_m S(a_m) Q^m_{n-m}: a recursion purely on the
    // generator values
    NCPoly s = -gen(n);
    const int half = family_ == Family::Full ? n : n / 2;
    for (int m = 1; m <= half - 1; ++m) {
        const int left = family_ == Family::Full ? m : 2 * m;
        s -= antipode_gen_second(left) * Q(m, half - m);
    }
    std::lock_guard<std::mutex> lock(mu_);
    antipode2_gen_.emplace(n, s);
    return s;
}

CommPoly HopfAlg::abelianize(const NCPoly& p) const {
    CommPoly r;
    for (const auto& [w, c] : p.terms()) {
        ExpVec e;
        for (int g : w) e[g] += 1;
        r.add_term(e, c);
    }
    return r;
}

NCPoly HopfAlg::odd_projection(const NCPoly& p) const {
    if (family_ != Family::Full)
        throw std::invalid_argument("HopfAlg::odd_projection: domain is the full family");
    NCPoly r(nu_, trunc_);
    for (const auto& [w, c] : p.terms()) {
        bool kill = false;
        for (int g : w)
            if (g % 2 == 1) {
                kill = true;
                break;
            }
        if (!kill) r.add_term(w, c);
    }
    return r;
}

NCPoly HopfAlg::substitute(const NCPoly& p, const std::function<NCPoly(int)>& image) const {
    NCPoly r(nu_, trunc_);
    for (const auto& [w, c] : p.terms()) {
        NCPoly m = unit(c);
        for (int g : w) m = m * image(g);
        r += m;
    }
    return r;
}

NCPoly HopfAlg::alpha_from_a(const NCPoly& p) const {
    if (family_ != Family::Full)
        throw std::invalid_argument("HopfAlg::alpha_from_a: full family only");
    return substitute(p, [this](int n) {
        // a_n = alpha_n + alpha_1^n, reading result words in the alpha letters
        NCPoly img = gen(n);
        if (n > 1) img.add_term(Word(n, 1), Laurent(1));
        return img;
    });
}

NCPoly HopfAlg::a_from_alpha(const NCPoly& p) const {
    if (family_ != Family::Full)
        throw std::invalid_argument("HopfAlg::a_from_alpha: full family only");
    return substitute(p, [this](int n) {
        // alpha_n = a_n - a_1^n
        NCPoly img = gen(n);
        if (n > 1) img.add_term(Word(n, 1), Laurent(Rational(-1)));
        return img;
    });
}

Rational evaluate_at(const NCPoly& p, const std::function<Rational(int)>& point) {
    Rational s(0);
    for (const auto& [w, c] : p.terms()) {
        Rational m = c.rational_value();
        for (int g : w) m *= point(g);
        s += m;
    }
    return s;
}

}  // namespace hopfdiff
