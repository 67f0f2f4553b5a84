#include "hopfdiff/freelie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hopfdiff {

namespace {

bool is_lyndon(const Word& w) {
    // strictly smaller than every proper rotation
    const size_t n = w.size();
    if (n == 0) return false;
    for (size_t r = 1; r < n; ++r) {
        Word rot;
        rot.insert(rot.end(), w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        if (!(w < rot)) return false;
    }
    return true;
}

void enumerate_words(int nu, int wmax, Word& acc, const std::function<void(const Word&)>& sink) {
    if (!acc.empty()) sink(acc);
    int used = word_weight(acc);
    for (int g = 1; g <= nu && used + g <= wmax; ++g) {
        acc.push_back(g);
        enumerate_words(nu, wmax, acc, sink);
        acc.pop_back();
    }
}

// split Laurent-coefficient vectors into rational slices per h-exponent
std::map<int, RatVec> h_slices(const std::vector<Laurent>& v) {
    std::map<int, RatVec> s;
    for (size_t i = 0; i < v.size(); ++i)
        for (const auto& [e, q] : v[i].terms()) {
            auto it = s.find(e);
            if (it == s.end()) it = s.emplace(e, RatVec(v.size(), Rational(0))).first;
            it->second[i] = q;
        }
    return s;
}

}  // namespace

HallBasis::HallBasis(int nu, int wmax) : nu_(nu), wmax_(wmax) {
    if (nu < 1 || wmax < 1) throw std::invalid_argument("HallBasis: positive nu and wmax");
    std::vector<Word> lyndon;
    Word acc;
    enumerate_words(nu, wmax, acc, [&](const Word& w) {
        if (is_lyndon(w)) lyndon.push_back(w);
    });
    std::sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& b) {
        int wa = word_weight(a), wb = word_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    by_weight_.assign(wmax + 1, {});
    for (const auto& w : lyndon) {
        HallElt e;
        e.lyndon = w;
        e.weight = word_weight(w);
        e.deg = word_length(w);
        e.dminus = 0;
        for (int g : w) e.dminus += g - 1 + (g == 1 ? 1 : 0);
        e.tau = e.dminus - (e.deg - 1);
        int id = static_cast<int>(elts_.size());
        index_[w] = id;
        by_weight_[e.weight].push_back(id);
        elts_.push_back(std::move(e));
    }
    // standard factorization: the longest proper Lyndon suffix
    for (auto& e : elts_) {
        if (e.deg == 1) continue;
        const Word& w = e.lyndon;
        for (size_t cut = 1; cut < w.size(); ++cut) {
            Word suffix(w.begin() + cut, w.end());
            if (is_lyndon(suffix)) {
                Word prefix(w.begin(), w.begin() + cut);
                auto u = index_.find(prefix), v = index_.find(suffix);
                if (u == index_.end() || v == index_.end())
                    throw std::logic_error("HallBasis: factorization outside basis");
                e.left = u->second;
                e.right = v->second;
                break;
            }
        }
        if (e.left < 0) throw std::logic_error("HallBasis: no standard factorization");
    }
}

int HallBasis::index_of(const Word& lyndon) const {
    auto it = index_.find(lyndon);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& HallBasis::of_weight(int w) const {
    static const std::vector<int> empty;
    if (w < 1 || w > wmax_) return empty;
    return by_weight_[w];
}

int HallBasis::letter(int n) const {
    int id = index_of(Word{n});
    if (id < 0) throw std::invalid_argument("HallBasis::letter: out of range");
    return id;
}

FreeLie::FreeLie(int nu, int wmax) : basis_(nu, wmax) {
    expansion_.resize(basis_.size());
}

const NCPoly& FreeLie::expansion(int id) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::function<const NCPoly&(int)> rec = [&](int i) -> const NCPoly& {
        if (expansion_[i]) return *expansion_[i];
        const HallElt& e = basis_[i];
        if (e.deg == 1) {
            expansion_[i] = NCPoly::gen(nu(), wmax(), e.lyndon[0]);
        } else {
            const NCPoly& u = rec(e.left);
            const NCPoly& v = rec(e.right);
            expansion_[i] = u * v - v * u;
        }
        return *expansion_[i];
    };
    return rec(id);
}

NCPoly FreeLie::expand(const LieElt& x) const {
    NCPoly r(nu(), wmax());
    for (const auto& [id, c] : x) r += expansion(id).scaled(c);
    return r;
}

LieElt FreeLie::lie_gen(int n) const { return LieElt{{basis_.letter(n), Laurent(1)}}; }

const FreeLie::WeightTable& FreeLie::table(int w) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(w);
    if (it != tables_.end()) return it->second;
    if (w < 1 || w > wmax()) throw std::invalid_argument("FreeLie: weight out of range");
    WeightTable t;
    Word acc;
    enumerate_words(nu(), w, acc, [&](const Word& word) {
        if (word_weight(word) == w) t.words.push_back(word);
    });
    std::sort(t.words.begin(), t.words.end(), WordLess{});
    for (size_t i = 0; i < t.words.size(); ++i) t.word_index[t.words[i]] = static_cast<int>(i);
    // PBW monomials of weight w: non-decreasing id sequences
    std::function<void(int, int, PBWMon&)> gen = [&](int min_id, int rem, PBWMon& m) {
        if (rem == 0) {
            t.mons.push_back(m);
            return;
        }
        for (int id = min_id; id < basis_.size(); ++id) {
            int bw = basis_[id].weight;
            if (bw > rem) continue;
            m.push_back(id);
            gen(id, rem - bw, m);
            m.pop_back();
        }
    };
    PBWMon m;
    gen(0, w, m);
    std::sort(t.mons.begin(), t.mons.end());
    if (t.mons.size() != t.words.size())
        throw std::logic_error("FreeLie: PBW dimension mismatch at weight " + std::to_string(w));
    t.hall_ids = basis_.of_weight(w);
    const int d = static_cast<int>(t.words.size());
    RatMat etrans(d, RatVec(d, Rational(0)));  // E^T: rows words, cols mons
    for (int j = 0; j < d; ++j) {
        // expansion of the j-th monomial (bypassing the cache lock: compute
        // expansions before building matrix)
        NCPoly p = NCPoly::unit(nu(), wmax());
        // expansions may recurse; release not needed since same thread &
        // recursive_mutex semantics avoided by direct access below
        for (int id : t.mons[j]) {
            // inline expansion without re-locking
            std::function<const NCPoly&(int)> rec = [&](int i) -> const NCPoly& {
                if (expansion_[i]) return *expansion_[i];
                const HallElt& e = basis_[i];
                if (e.deg == 1) {
                    expansion_[i] = NCPoly::gen(nu(), wmax(), e.lyndon[0]);
                } else {
                    const NCPoly& u = rec(e.left);
                    const NCPoly& v = rec(e.right);
                    expansion_[i] = u * v - v * u;
                }
                return *expansion_[i];
            };
            p = p * rec(id);
        }
        for (const auto& [word, c] : p.terms()) {
            auto wi = t.word_index.find(word);
            if (wi == t.word_index.end()) throw std::logic_error("FreeLie: stray word");
            etrans[wi->second][j] = c.rational_value();
        }
    }
    t.inv = inverse(etrans);
    return tables_.emplace(w, std::move(t)).first->second;
}

const std::vector<PBWMon>& FreeLie::pbw_monomials(int w) const { return table(w).mons; }

NCPoly FreeLie::pbw_expand(const PBWMon& m) const {
    NCPoly p = NCPoly::unit(nu(), wmax());
    for (int id : m) p = p * expansion(id);
    return p;
}

PBWCoords FreeLie::pbw_decompose(const NCPoly& p) const {
    PBWCoords out;
    Laurent c0 = p.counit();
    if (!c0.is_zero()) out[PBWMon{}] = c0;
    for (int w = 1; w <= p.max_weight(); ++w) {
        NCPoly comp = p.graded_component(w);
        if (comp.is_zero()) continue;
        const WeightTable& t = table(w);
        std::vector<Laurent> v(t.words.size());
        for (const auto& [word, c] : comp.terms()) v[t.word_index.at(word)] = c;
        // coords = inv * v
        for (size_t i = 0; i < t.mons.size(); ++i) {
            Laurent acc;
            for (size_t j = 0; j < v.size(); ++j) {
                if (v[j].is_zero() || t.inv[i][j] == 0) continue;
                acc += v[j] * Laurent(t.inv[i][j]);
            }
            if (!acc.is_zero()) out[t.mons[i]] = acc;
        }
    }
    return out;
}

int FreeLie::tau(const PBWMon& m) const {
    int s = 0;
    for (int id : m) s += basis_[id].tau;
    return s;
}

int FreeLie::mon_weight(const PBWMon& m) const {
    int s = 0;
    for (int id : m) s += basis_[id].weight;
    return s;
}

int FreeLie::tau_degree(const NCPoly& p) const {
    if (p.is_zero()) throw std::domain_error("tau_degree: zero element");
    int best = 0;
    for (const auto& [m, c] : pbw_decompose(p)) best = std::max(best, tau(m));
    return best;
}

const LieElt& FreeLie::bracket_basis(int i, int j) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = bracket_cache_.find({i, j});
        if (it != bracket_cache_.end()) return it->second;
    }
    if (basis_[i].weight + basis_[j].weight > wmax())
        throw std::invalid_argument("FreeLie::bracket: combined weight exceeds bound");
    LieElt r;
    if (i != j) {
        const NCPoly &u = expansion(i), &v = expansion(j);
        r = lie_decompose(u * v - v * u);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return bracket_cache_.emplace(std::make_pair(i, j), std::move(r)).first->second;
}

LieElt FreeLie::bracket(const LieElt& x, const LieElt& y) const {
    LieElt r;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            Laurent c = ci * cj;
            for (const auto& [id, q] : bracket_basis(i, j)) {
                auto it = r.find(id);
                if (it == r.end()) {
                    r.emplace(id, q * c);
                } else {
                    it->second += q * c;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
        }
    return r;
}

LieElt FreeLie::lie_decompose(const NCPoly& p) const {
    PBWCoords coords = pbw_decompose(p);
    LieElt r;
    for (const auto& [m, c] : coords) {
        if (m.size() != 1) throw std::domain_error("lie_decompose: not a Lie element");
        r[m[0]] = c;
    }
    return r;
}

LieTensor FreeLie::act(int z, const LieTensor& t) const {
    LieTensor r;
    auto add = [&r](const LiePair& k, const Laurent& c) {
        if (c.is_zero()) return;
        auto it = r.find(k);
        if (it == r.end()) {
            r.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    };
    for (const auto& [pair, c] : t) {
        for (const auto& [id, q] : bracket_basis(z, pair.first)) add({id, pair.second}, c * q);
        for (const auto& [id, q] : bracket_basis(z, pair.second)) add({pair.first, id}, c * q);
    }
    return r;
}

LieTensor FreeLie::cobracket(Cobracket which, int id) const {
    std::pair<int, int> key{static_cast<int>(which), id};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cobracket_cache_.find(key);
        if (it != cobracket_cache_.end()) return it->second;
    }
    const HallElt& e = basis_[id];
    LieTensor r;
    auto add = [&r](int i, int j, const Rational& c) {
        if (c == 0) return;
        auto it = r.find({i, j});
        if (it == r.end()) {
            r.emplace(LiePair{i, j}, Laurent(c));
        } else {
            it->second += Laurent(c);
            if (it->second.is_zero()) r.erase(it);
        }
    };
    if (e.deg == 1) {
        const int n = e.lyndon[0];
        if (which == Cobracket::Bullet) {
            // delta(x_n) = sum (l+1) x_l ^ x_{n-l}
            for (int l = 1; l <= n - 1; ++l) {
                int a = basis_.letter(l), b = basis_.letter(n - l);
                add(a, b, Rational(l + 1));
                add(b, a, Rational(-(l + 1)));
            }
        } else {
            // delta(x_n) = (n-2) x_{n-1} ^ x_1, zero for n <= 2
            if (n >= 3) {
                int a = basis_.letter(n - 1), b = basis_.letter(1);
                add(a, b, Rational(n - 2));
                add(b, a, Rational(-(n - 2)));
            }
        }
    } else {
        // 1-cocycle rule on the standard factorization [u, v]
        LieTensor du = cobracket(which, e.left), dv = cobracket(which, e.right);
        LieTensor r1 = act(e.left, dv), r2 = act(e.right, du);
        r = std::move(r1);
        for (const auto& [k, c] : r2) {
            auto it = r.find(k);
            if (it == r.end()) {
                r.emplace(k, -c);
            } else {
                it->second -= c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cobracket_cache_.emplace(key, std::move(r)).first->second;
}

LieTensor FreeLie::cobracket(Cobracket which, const LieElt& x) const {
    LieTensor r;
    for (const auto& [id, c] : x)
        for (const auto& [k, q] : cobracket(which, id)) {
            auto it = r.find(k);
            if (it == r.end()) {
                r.emplace(k, q * c);
            } else {
                it->second += q * c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

std::vector<LieElt> FreeLie::cobracket_kernel(int w, Cobracket which) const {
    const std::vector<int>& ids = basis_.of_weight(w);
    // fixed column basis: pairs with matching total weight
    std::vector<LiePair> cols;
    std::map<LiePair, int> col_index;
    for (int i = 0; i < basis_.size(); ++i) {
        int wi = basis_[i].weight;
        if (wi >= w) continue;
        for (int j = 0; j < basis_.size(); ++j)
            if (basis_[j].weight == w - wi) {
                col_index[{i, j}] = static_cast<int>(cols.size());
                cols.push_back({i, j});
            }
    }
    RatMat rows;
    for (int id : ids) {
        RatVec row(cols.size(), Rational(0));
        for (const auto& [k, c] : cobracket(which, id)) row[col_index.at(k)] = c.rational_value();
        rows.push_back(std::move(row));
    }
    RatMat null = kernel_of_images(rows, static_cast<int>(cols.size()));
    std::vector<LieElt> out;
    for (const auto& v : null) {
        LieElt x;
        for (size_t i = 0; i < ids.size(); ++i)
            if (v[i] != 0) x[ids[i]] = Laurent(v[i]);
        out.push_back(std::move(x));
    }
    return out;
}

Tensor FreeLie::lie_tensor_expand(const LieTensor& t) const {
    Tensor r(2, nu(), wmax());
    for (const auto& [k, c] : t) {
        Tensor term = Tensor::outer(Tensor::lift(expansion(k.first)), Tensor::lift(expansion(k.second)));
        r += term.scaled(c);
    }
    return r;
}

Tensor FreeLie::cobracket_U(Cobracket which, const NCPoly& p) const {
    Tensor out(2, nu(), wmax());
    auto prim = [&](int id) {
        const NCPoly& e = expansion(id);
        Tensor t(2, nu(), wmax());
        for (const auto& [w, c] : e.terms()) {
            t.add_term(TKey{w, Word{}}, c);
            t.add_term(TKey{Word{}, w}, c);
        }
        return t;
    };
    for (const auto& [m, c] : pbw_decompose(p)) {
        for (size_t i = 0; i < m.size(); ++i) {
            Tensor term(2, nu(), wmax());
            term.add_term(TKey{Word{}, Word{}}, Laurent(1));
            for (size_t j = 0; j < m.size(); ++j)
                term = term * (j == i ? lie_tensor_expand(cobracket(which, m[j])) : prim(m[j]));
            out += term.scaled(c);
        }
    }
    return out;
}

std::string FreeLie::hall_str(int id) const {
    const HallElt& e = basis_[id];
    if (e.deg == 1) return "x" + std::to_string(e.lyndon[0]);
    return "[" + hall_str(e.left) + "," + hall_str(e.right) + "]";
}

std::string FreeLie::lie_str(const LieElt& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : x) {
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
        if (cs != "1") os << cs << " ";
        os << hall_str(id);
    }
    return os.str();
}

std::string FreeLie::lie_tensor_str(const LieTensor& t, bool wedge) const {
    if (t.empty()) return "0";
    if (wedge) {
        // collect antisymmetric pairs (i, j) with i > j in the basis order
        std::map<LiePair, Laurent> half;
        for (const auto& [k, c] : t) {
            if (k.first > k.second) {
                half[k] += c;
            } else if (k.first < k.second) {
                half[{k.second, k.first}] -= c;
            }
            // diagonal terms cancel in an antisymmetric tensor
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, craw] : half) {
            Laurent c = craw;
            // built from both orientations, each contributing half
            c = c * Laurent(Rational(1, 2));
            if (c.is_zero()) continue;
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
            if (cs != "1") os << cs << " ";
            os << "(" << hall_str(k.first) << " \xE2\x88\xA7 " << hall_str(k.second) << ")";
        }
        std::string s = os.str();
        return s.empty() ? "0" : s;
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") " << hall_str(k.first) << " \xE2\x8A\x97 " << hall_str(k.second);
    }
    return os.str();
}

}  // namespace hopfdiff
