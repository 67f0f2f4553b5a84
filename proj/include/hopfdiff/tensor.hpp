#pragma once

#include <functional>
#include <map>
#include <string>

#include "hopfdiff/ncpoly.hpp"

namespace hopfdiff {

using TKey = std::vector<Word>;

struct TKeyLess {
    bool operator()(const TKey& a, const TKey& b) const {
        int wa = 0, wb = 0;
        for (const auto& w : a) wa += word_weight(w);
        for (const auto& w : b) wb += word_weight(w);
        if (wa != wb) return wa < wb;
        WordLess less;
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return a.size() < b.size();
    }
};

// Element of the rank-r tensor power of the free algebra, graded by total
// weight and truncated like NCPoly. Rank-0 elements are scalars.
class Tensor {
public:
    Tensor(int rank, int nu, int trunc);
    static Tensor scalar(int nu, int trunc, const Laurent& c);
    static Tensor lift(const NCPoly& p);  // rank 1
    // rank-adding (outer) product
    static Tensor outer(const Tensor& a, const Tensor& b);

    int rank() const { return rank_; }
    int nu() const { return nu_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TKey, Laurent, TKeyLess>& terms() const { return terms_; }
    Laurent coeff(const TKey& k) const;

    void add_term(const TKey& k, const Laurent& c);

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor operator-() const;
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    // componentwise product, equal ranks
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    Tensor scaled(const Laurent& c) const;
    bool operator==(const Tensor& o) const;

    // swap factor positions i and j
    Tensor flip(int i, int j) const;
    // substitute slot i through a word-level linear map with rank-k values;
    // the result has rank rank() - 1 + k
    Tensor apply_slot(int i, int k, const std::function<Tensor(const Word&)>& f) const;
    // apply (id - unit∘counit) in every slot: drops any term with an empty slot
    Tensor drop_unit_slots() const;
    // fold all slots by multiplication
    NCPoly multiply_out() const;
    Tensor graded_component(int w) const;

    std::string str() const;

private:
    int rank_, nu_, trunc_;
    std::map<TKey, Laurent, TKeyLess> terms_;
    void check_compat(const Tensor& o, bool same_rank) const;
};

std::ostream& operator<<(std::ostream& os, const Tensor& t);

}  // namespace hopfdiff
