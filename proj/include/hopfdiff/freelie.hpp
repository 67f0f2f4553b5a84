#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfdiff/linalg.hpp"
#include "hopfdiff/ncpoly.hpp"
#include "hopfdiff/tensor.hpp"

namespace hopfdiff {

// Basis element of the free Lie algebra: a Lyndon word over the alphabet
// {1..nu} together with its standard-factorization bracketing and the
// gradings weight, Lie degree, d_minus and tau.
struct HallElt {
    Word lyndon;
    int left = -1, right = -1;  // factorization ids; -1 for single letters
    int weight = 0;
    int deg = 0;     // Lie degree: number of letters
    int dminus = 0;  // sum over letters of n - 1 + [n == 1]
    int tau = 0;     // dminus - (deg - 1)
};

// All Hall elements of weight <= wmax over {1..nu}, in the total order
// "weight, then lexicographic on the Lyndon word". Ids are positions.
class HallBasis {
public:
    HallBasis(int nu, int wmax);
    int nu() const { return nu_; }
    int wmax() const { return wmax_; }
    int size() const { return static_cast<int>(elts_.size()); }
    const HallElt& operator[](int id) const { return elts_[id]; }
    int index_of(const Word& lyndon) const;  // -1 when absent
    const std::vector<int>& of_weight(int w) const;
    int letter(int n) const;  // id of the one-letter word (n)

private:
    int nu_, wmax_;
    std::vector<HallElt> elts_;
    std::map<Word, int> index_;
    std::vector<std::vector<int>> by_weight_;
};

enum class Cobracket { Bullet, Star };

// sparse Lie element and rank-2 Lie tensor over Hall ids
using LieElt = std::map<int, Laurent>;
using LiePair = std::pair<int, int>;
using LieTensor = std::map<LiePair, Laurent>;

// PBW monomial: non-decreasing sequence of Hall ids
using PBWMon = std::vector<int>;
using PBWCoords = std::map<PBWMon, Laurent>;

// The free Lie algebra L_nu with its Lyndon--Hall basis, the PBW basis of the
// enveloping algebra, and the two Lie cobrackets, all truncated at weight
// wmax. Straightening runs through exact per-weight linear solves.
class FreeLie {
public:
    FreeLie(int nu, int wmax);
    const HallBasis& basis() const { return basis_; }
    int nu() const { return basis_.nu(); }
    int wmax() const { return basis_.wmax(); }

    // associative expansion of a Hall element into the letter algebra
    const NCPoly& expansion(int id) const;
    NCPoly expand(const LieElt& x) const;
    LieElt lie_gen(int n) const;  // x_n

    LieElt bracket(const LieElt& x, const LieElt& y) const;
    const LieElt& bracket_basis(int i, int j) const;

    // exact coordinates in the Hall basis; throws when p is not a Lie element
    LieElt lie_decompose(const NCPoly& p) const;

    const std::vector<PBWMon>& pbw_monomials(int w) const;
    NCPoly pbw_expand(const PBWMon& m) const;
    PBWCoords pbw_decompose(const NCPoly& p) const;
    int tau(const PBWMon& m) const;
    int mon_weight(const PBWMon& m) const;

    // max tau over the PBW support; p must be nonzero
    int tau_degree(const NCPoly& p) const;

    LieTensor cobracket(Cobracket which, int id) const;
    LieTensor cobracket(Cobracket which, const LieElt& x) const;
    // exact basis of Ker(delta) in the weight-w component of L_nu
    std::vector<LieElt> cobracket_kernel(int w, Cobracket which) const;

    // coderivation extension of the cobracket to the enveloping algebra;
    // the result is a rank-2 tensor over letter words
    Tensor cobracket_U(Cobracket which, const NCPoly& p) const;

    // rank-2 tensor over letter words from Hall-indexed data
    Tensor lie_tensor_expand(const LieTensor& t) const;

    std::string hall_str(int id) const;
    std::string lie_str(const LieElt& x) const;
    std::string lie_tensor_str(const LieTensor& t, bool wedge) const;

private:
    HallBasis basis_;
    mutable std::mutex mu_;
    mutable std::vector<std::optional<NCPoly>> expansion_;
    mutable std::map<LiePair, LieElt> bracket_cache_;
    mutable std::map<std::pair<int, int>, LieTensor> cobracket_cache_;  // (which, id)

    struct WeightTable {
        std::vector<Word> words;           // letter words of this weight
        std::map<Word, int> word_index;    // into words
        std::vector<PBWMon> mons;          // PBW monomials of this weight
        RatMat inv;                        // (E^T)^{-1}, E = expansions of mons
        std::vector<int> hall_ids;         // weight-w Hall elements
    };
    mutable std::map<int, WeightTable> tables_;
    const WeightTable& table(int w) const;

    LieTensor act(int z, const LieTensor& t) const;  // adjoint action on both slots
};

}  // namespace hopfdiff
