#pragma once

#include <vector>

#include "hopfdiff/freelie.hpp"
#include "hopfdiff/hopf.hpp"

namespace hopfdiff {

struct FiltrationLevel {
    int k = 0;
    int dimD = 0;
    int dimTheta = 0;
    bool equal = false;
    std::vector<NCPoly> basisD;  // echelon basis of D_k in the weight component
};

struct FiltrationReport {
    int weight = 0;
    std::vector<FiltrationLevel> levels;
    bool all_equal() const {
        for (const auto& l : levels)
            if (!l.equal) return false;
        return true;
    }
};

struct MembershipCert {
    bool member = false;
    // per order n, the minimal h-valuation of delta_n relative to the h^n
    // divisibility requirement (>= 0 everywhere iff member)
    std::vector<int> slack;
};

// Drinfeld delta-maps over a fixed presentation, the filtration D_n, and the
// invariant kappa.
class Drinfeld {
public:
    explicit Drinfeld(const HopfAlg& H) : H_(H) {}
    const HopfAlg& hopf() const { return H_; }

    // n-fold coproduct: rank-0 counit for n = 0, identity for n = 1
    Tensor iterated_coproduct(int n, const NCPoly& p) const;
    // delta_n = (id - unit∘counit)^{⊗n} ∘ Delta^n
    Tensor delta_n(int n, const NCPoly& p) const;
    // delta_Phi inside rank n, computed as the embedding of delta_{|Phi|}
    Tensor delta_phi(const std::vector<int>& phi, int n, const NCPoly& p) const;
    // inclusion-exclusion route, kept as a cross-check
    Tensor delta_phi_incl_excl(const std::vector<int>& phi, int n, const NCPoly& p) const;
    // embedded partial coproduct Delta_Phi
    Tensor coproduct_phi(const std::vector<int>& phi, int n, const NCPoly& p) const;

    // least k with delta_{k+1}(p) = 0; the weight bound for the search is
    // asserted, not assumed
    int kappa(const NCPoly& p) const;

    // echelon bases of D_k and Theta_k inside the weight-w component
    FiltrationReport filtration_component(int w, const FreeLie& L) const;

    // Rees-algebra membership: delta_n(eta) divisible by h^n in the basis of
    // the J-adic Rees form for every n (the bound max-weight is exhaustive)
    MembershipCert vee_membership(const NCPoly& eta) const;

private:
    const HopfAlg& H_;
    Tensor embed(const Tensor& t, const std::vector<int>& phi, int n) const;
};

}  // namespace hopfdiff
