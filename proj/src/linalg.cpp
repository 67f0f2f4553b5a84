#include "hopfdiff/linalg.hpp"

#include <stdexcept>

namespace hopfdiff {

namespace {

using IntMat = std::vector<std::vector<Integer>>;

// Bareiss fraction-free forward elimination. Returns pivot columns; on exit m
// is upper echelon with exact integer entries and rows permuted in place.
std::vector<int> bareiss_echelon(IntMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    Integer denom = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        denom = m[r][c];
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

IntMat clear_denominators(const RatMat& m) {
    IntMat z(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        Integer l = 1;
        for (const auto& q : m[i])
            if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        z[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) {
            Rational s = m[i][j] * Rational(l);
            s.canonicalize();
            z[i][j] = s.get_num();
        }
    }
    return z;
}

}  // namespace

std::vector<int> rref(RatMat& m) {
    if (m.empty()) return {};
    IntMat z = clear_denominators(m);
    std::vector<int> pivots = bareiss_echelon(z);
    const size_t cols = m[0].size();
    RatMat out(z.size(), RatVec(cols, Rational(0)));
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = 0; j < cols; ++j) {
            out[i][j] = Rational(z[i][j]);
            out[i][j].canonicalize();
        }
    // normalize pivots to 1 and clear above
    for (size_t k = pivots.size(); k-- > 0;) {
        size_t r = k;
        int c = pivots[k];
        Rational inv = 1 / out[r][c];
        for (size_t j = c; j < cols; ++j) out[r][j] *= inv;
        for (size_t i = 0; i < r; ++i) {
            Rational f = out[i][c];
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j) out[i][j] -= f * out[r][j];
        }
    }
    m = std::move(out);
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

RatMat kernel_of_images(const RatMat& rows, int ncols) {
    const int n = static_cast<int>(rows.size());
    // transpose: solve Aᵀ x = 0 with Aᵀ of size ncols x n
    RatMat t(ncols, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != ncols)
            throw std::invalid_argument("kernel_of_images: ragged input");
        for (int j = 0; j < ncols; ++j) t[j][i] = rows[i][j];
    }
    std::vector<int> pivots = rref(t);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMat basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(n, Rational(0));
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -t[k][c];
        basis.push_back(std::move(v));
    }
    return row_space_echelon(basis, n);
}

bool solve_in_span(const RatMat& rows, int ncols, const RatVec& target, RatVec& x) {
    const int n = static_cast<int>(rows.size());
    RatMat aug(ncols, RatVec(n + 1, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < ncols; ++j) aug[j][i] = rows[i][j];
    for (int j = 0; j < ncols; ++j) aug[j][n] = target[j];
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == n) return false;  // inconsistent
    x.assign(n, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][n];
    return true;
}

RatMat row_space_echelon(const RatMat& rows, int ncols) {
    if (rows.empty()) return {};
    RatMat m = rows;
    std::vector<int> pivots = rref(m);
    m.resize(pivots.size(), RatVec(ncols, Rational(0)));
    return m;
}

RatMat inverse(const RatMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat aug(n, RatVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("inverse: not square");
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace hopfdiff
