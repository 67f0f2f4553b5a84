#include "hopfdiff/drinfeld.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfdiff {

Tensor Drinfeld::iterated_coproduct(int n, const NCPoly& p) const {
    if (n < 0) throw std::invalid_argument("iterated_coproduct: negative order");
    if (n == 0) return Tensor::scalar(p.nu(), p.trunc(), p.counit());
    Tensor t = Tensor::lift(p);
    for (int r = 1; r < n; ++r)
        t = t.apply_slot(0, 2, [this](const Word& w) { return H_.coproduct_word(w); });
    return t;
}

Tensor Drinfeld::delta_n(int n, const NCPoly& p) const {
    if (n == 0) return Tensor::scalar(p.nu(), p.trunc(), p.counit());
    if (n == 1) {
        // id - unit∘counit
        NCPoly q = p;
        q.add_term(Word{}, -p.counit());
        return Tensor::lift(q);
    }
    return iterated_coproduct(n, p).drop_unit_slots();
}

Tensor Drinfeld::embed(const Tensor& t, const std::vector<int>& phi, int n) const {
    Tensor r(n, t.nu(), t.trunc());
    for (const auto& [k, c] : t.terms()) {
        TKey key(n);
        for (size_t s = 0; s < phi.size(); ++s) key[phi[s] - 1] = k[s];
        r.add_term(key, c);
    }
    return r;
}

Tensor Drinfeld::delta_phi(const std::vector<int>& phi, int n, const NCPoly& p) const {
    for (size_t i = 0; i < phi.size(); ++i)
        if (phi[i] < 1 || phi[i] > n || (i && phi[i] <= phi[i - 1]))
            throw std::invalid_argument("delta_phi: Phi must be an ordered subset of 1..n");
    return embed(delta_n(static_cast<int>(phi.size()), p), phi, n);
}

Tensor Drinfeld::coproduct_phi(const std::vector<int>& phi, int n, const NCPoly& p) const {
    return embed(iterated_coproduct(static_cast<int>(phi.size()), p), phi, n);
}

Tensor Drinfeld::delta_phi_incl_excl(const std::vector<int>& phi, int n, const NCPoly& p) const {
    // delta_Phi = sum over subsets Psi of Phi of (-1)^{|Phi| - |Psi|} Delta_Psi
    const size_t k = phi.size();
    Tensor acc(n, p.nu(), p.trunc());
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<int> psi;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) psi.push_back(phi[i]);
        Tensor d = coproduct_phi(psi, n, p);
        if ((k - psi.size()) % 2)
            acc -= d;
        else
            acc += d;
    }
    return acc;
}

int Drinfeld::kappa(const NCPoly& p) const {
    if (p.is_zero()) throw std::domain_error("kappa: zero element");
    const int bound = p.max_weight();
    for (int k = 0; k <= bound; ++k)
        if (delta_n(k + 1, p).is_zero()) return k;
    throw std::logic_error("kappa: vanishing bound exceeded, delta did not vanish by the weight");
}

FiltrationReport Drinfeld::filtration_component(int w, const FreeLie& L) const {
    if (H_.family() != Family::Full)
        throw std::invalid_argument("filtration_component: full family only");
    if (w < 1 || w > H_.trunc()) throw std::invalid_argument("filtration_component: bad weight");
    FiltrationReport rep;
    rep.weight = w;

    // word basis of the weight-w component
    std::vector<Word> words;
    {
        std::function<void(Word&, int)> rec = [&](Word& acc, int rem) {
            if (rem == 0) {
                words.push_back(acc);
                return;
            }
            for (int g = 1; g <= std::min(H_.nu(), rem); ++g) {
                acc.push_back(g);
                rec(acc, rem - g);
                acc.pop_back();
            }
        };
        Word acc;
        rec(acc, w);
    }
    std::sort(words.begin(), words.end(), WordLess{});
    std::map<Word, int, WordLess> windex;
    for (size_t i = 0; i < words.size(); ++i) windex[words[i]] = static_cast<int>(i);
    const int dim = static_cast<int>(words.size());

    for (int k = 0; k <= w; ++k) {
        FiltrationLevel lvl;
        lvl.k = k;

        // D_k = Ker(delta_{k+1}) on the component
        std::vector<TKey> cols;
        std::map<TKey, int, TKeyLess> cindex;
        std::vector<Tensor> images;
        for (const auto& word : words) {
            Tensor img = delta_n(k + 1, NCPoly::monomial(H_.nu(), H_.trunc(), word));
            for (const auto& [key, c] : img.terms())
                if (!cindex.count(key)) {
                    cindex[key] = static_cast<int>(cols.size());
                    cols.push_back(key);
                }
            images.push_back(std::move(img));
        }
        RatMat rows;
        for (int i = 0; i < dim; ++i) {
            RatVec row(cols.size(), Rational(0));
            for (const auto& [key, c] : images[i].terms()) row[cindex.at(key)] = c.rational_value();
            rows.push_back(std::move(row));
        }
        RatMat null = kernel_of_images(rows, static_cast<int>(cols.size()));
        lvl.dimD = static_cast<int>(null.size());
        for (const auto& v : null) {
            NCPoly b(H_.nu(), H_.trunc());
            for (int i = 0; i < dim; ++i)
                if (v[i] != 0) b.add_term(words[i], Laurent(v[i]));
            lvl.basisD.push_back(std::move(b));
        }

        // Theta_k: span of alpha-PBW monomials with tau <= k at this weight
        RatMat theta_rows;
        for (const auto& m : L.pbw_monomials(w)) {
            if (L.tau(m) > k) continue;
            NCPoly in_alpha = L.pbw_expand(m);
            NCPoly in_a = H_.a_from_alpha(in_alpha);
            RatVec row(dim, Rational(0));
            for (const auto& [word, c] : in_a.terms()) row[windex.at(word)] = c.rational_value();
            theta_rows.push_back(std::move(row));
        }
        RatMat theta = row_space_echelon(theta_rows, dim);
        lvl.dimTheta = static_cast<int>(theta.size());

        // subspace equality via identical RREFs
        lvl.equal = (null == theta);
        rep.levels.push_back(std::move(lvl));
    }
    return rep;
}

MembershipCert Drinfeld::vee_membership(const NCPoly& eta) const {
    // eta must lie in the Rees form: every a-word coefficient needs
    // h-valuation >= -length (letters scale by h^{-1})
    for (const auto& [w, c] : eta.terms())
        if (c.val() + word_length(w) < 0)
            throw std::invalid_argument("vee_membership: element outside the Rees form");
    MembershipCert cert;
    cert.member = true;
    const int bound = eta.max_weight();
    for (int n = 0; n <= bound; ++n) {
        Tensor d = delta_n(n, eta);
        int slack = 0;
        bool any = false;
        for (const auto& [key, c] : d.terms()) {
            int len = 0;
            for (const auto& w : key) len += word_length(w);
            int s = c.val() + len - n;
            if (!any || s < slack) slack = s;
            any = true;
        }
        cert.slack.push_back(any ? slack : 0);
        if (any && slack < 0) cert.member = false;
    }
    return cert;
}

}  // namespace hopfdiff
