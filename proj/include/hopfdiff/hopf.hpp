#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "hopfdiff/commpoly.hpp"
#include "hopfdiff/ncpoly.hpp"
#include "hopfdiff/tensor.hpp"

namespace hopfdiff {

enum class Family { Full, Odd };

// The Hopf algebra H_nu of noncommutative formal diffeomorphisms (family
// Full), or its odd quotient K_nu (family Odd, generators at the even
// indices), truncated at weight `trunc`. Structure maps are memoised per
// generator; all values are immutable once returned.
class HopfAlg {
public:
    HopfAlg(Family f, int nu, int trunc);

    Family family() const { return family_; }
    int nu() const { return nu_; }
    int trunc() const { return trunc_; }
    std::vector<int> generators() const;  // 1..nu, or 2,4,...,2*floor(nu/2)
    bool is_generator(int n) const;

    NCPoly zero() const { return NCPoly(nu_, trunc_); }
    NCPoly unit(const Laurent& c = Laurent(1)) const { return NCPoly::unit(nu_, trunc_, c); }
    NCPoly gen(int n) const;

    // sum over compositions of t into k positive parts of a_{j1}...a_{jk};
    // odd family uses the doubled letters a_{2j}
    NCPoly P(int t, int k) const;
    // binomial-weighted sum; Q_0 := 1. Full family uses C(l+1, k), odd C(2l+1, k).
    NCPoly Q(int l, int t) const;
    // Q(l, t) - C(l+t, t) a_1^t, full family only
    NCPoly Z(int l, int t) const;

    Tensor coproduct_gen(int n) const;
    Tensor coproduct(const NCPoly& p) const;  // algebra morphism
    Tensor coproduct_word(const Word& w) const;
    Laurent counit(const NCPoly& p) const { return p.counit(); }
    NCPoly antipode_gen(int n) const;  // first recursion of the structure formulas
    NCPoly antipode(const NCPoly& p) const;
    // independent generator table from the second recursion, kept as a cross-check
    NCPoly antipode_gen_second(int n) const;

    CommPoly abelianize(const NCPoly& p) const;
    Tensor abelianized_flip_invariant(const Tensor&) const = delete;

    // graded Hopf epimorphism H_nu ->> K_nu (full family only);
    // the result lives in the odd presentation with the same nu and trunc
    NCPoly odd_projection(const NCPoly& p) const;

    // change of generators alpha_1 = a_1, alpha_n = a_n - a_1^n (full family).
    // Words of the result are read in the alpha letters and vice versa.
    NCPoly alpha_from_a(const NCPoly& p) const;
    NCPoly a_from_alpha(const NCPoly& p) const;

    // extend a generator substitution multiplicatively and linearly
    NCPoly substitute(const NCPoly& p, const std::function<NCPoly(int)>& image) const;

private:
    Family family_;
    int nu_, trunc_;
    mutable std::mutex mu_;
    mutable std::map<int, Tensor> cop_gen_;
    mutable std::map<int, NCPoly> antipode_gen_, antipode2_gen_;
    mutable std::map<std::pair<int, int>, NCPoly> q_cache_;
    mutable std::map<Word, Tensor, WordLess> cop_word_;
};

// evaluation of a polynomial with h-free coefficients at a rational point
Rational evaluate_at(const NCPoly& p, const std::function<Rational(int)>& point);

}  // namespace hopfdiff
