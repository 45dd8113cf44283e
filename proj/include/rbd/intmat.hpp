#pragma once

// Dense exact-integer matrices and the lattice algorithms built on them:
// fraction-free determinants, Smith normal form with transforms, integer
// kernels, and row-style Hermite canonicalization.

#include "rbd/numeric.hpp"
#include "rbd/rationalmat.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rbd {

class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMat: size mismatch in product");
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (sgn(x) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    std::vector<Int> operator*(const std::vector<Int>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("IntMat: size mismatch in product");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += f * row j
    void add_row(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
    }
    // col i += f * col j
    void add_col(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

struct SmithResult {
    std::vector<Int> diagonal;  // d_1 | d_2 | ... , nonnegative, zeros last
    IntMat left;                // left * m * right is the diagonal matrix
    IntMat right;
};

/// Smith normal form with unimodular transforms.
inline SmithResult smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat d = m;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);
    const std::size_t nmin = rows < cols ? rows : cols;

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // Pick the entry of least nonzero magnitude in the trailing block.
            std::size_t pi = t, pj = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (sgn(d(i, j)) == 0) continue;
                    Int a = abs(d(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto done;  // trailing block is zero
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (sgn(d(i, t)) != 0) {
                    Int q = tdiv(d(i, t), d(t, t));
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                    if (sgn(d(i, t)) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (sgn(d(t, j)) != 0) {
                    Int q = tdiv(d(t, j), d(t, t));
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                    if (sgn(d(t, j)) != 0) clean = false;
                }
            if (!clean) continue;  // remainders left; redo with a smaller pivot

            // Divisibility fix-up: fold a bad row in and re-clear.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (!divisible(d(i, j), d(t, t))) {
                        d.add_row(t, i, Int(1));
                        u.add_row(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (sgn(d(t, t)) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
done:
    std::vector<Int> diag(nmin);
    for (std::size_t i = 0; i < nmin; ++i) diag[i] = d(i, i);
    return SmithResult{std::move(diag), std::move(u), std::move(v)};
}

/// Canonical row-echelon basis of the lattice spanned by the rows:
/// positive pivots, entries above each pivot reduced into [0, pivot).
inline IntMat hnf_rows(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat a = m;
    std::size_t r = 0;  // next pivot row
    std::vector<std::size_t> pivot_col;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        // Clear column j below row r using gcd row operations.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (sgn(a(i, j)) != 0 && (best == rows || abs(a(i, j)) < abs(a(best, j)))) best = i;
            if (best == rows) break;  // column clear
            a.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i)
                if (sgn(a(i, j)) != 0) {
                    Int q = tdiv(a(i, j), a(r, j));
                    a.add_row(i, r, -q);
                    if (sgn(a(i, j)) != 0) clean = false;
                }
            if (clean) break;
        }
        if (r < rows && sgn(a(r, j)) != 0) {
            if (sgn(a(r, j)) < 0) a.negate_row(r);
            pivot_col.push_back(j);
            ++r;
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        std::size_t j = pivot_col[k];
        for (std::size_t i = 0; i < k; ++i) {
            Int q = -mod_euclid(a(i, j), a(k, j)) + a(i, j);
            q = exact_div(q, a(k, j));
            if (sgn(q) != 0) a.add_row(i, k, -q);
        }
    }
    IntMat out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    return out;
}

inline std::size_t rank(const IntMat& m) { return hnf_rows(m).rows(); }

/// Basis of the integer kernel {x : m x = 0}, rows of the result,
/// canonicalized by hnf_rows.
inline IntMat kernel_basis(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat w = IntMat::identity(cols);
    std::vector<bool> used(cols, false);
    for (std::size_t i = 0; i < rows; ++i) {
        // Reduce row i across unused columns to a single nonzero entry.
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (!used[j] && sgn(a(i, j)) != 0 &&
                    (best == cols || abs(a(i, j)) < abs(a(i, best))))
                    best = j;
            if (best == cols) break;
            bool clean = true;
            for (std::size_t j = 0; j < cols; ++j)
                if (j != best && !used[j] && sgn(a(i, j)) != 0) {
                    Int q = tdiv(a(i, j), a(i, best));
                    a.add_col(j, best, -q);
                    w.add_col(j, best, -q);
                    if (sgn(a(i, j)) != 0) clean = false;
                }
            if (clean) {
                used[best] = true;
                break;
            }
        }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rows && zero; ++i) zero = sgn(a(i, j)) == 0;
        if (zero) free_cols.push_back(j);
    }
    IntMat k(free_cols.size(), cols);
    for (std::size_t r = 0; r < free_cols.size(); ++r)
        for (std::size_t i = 0; i < cols; ++i) k(r, i) = w(i, free_cols[r]);
    return hnf_rows(k);
}

/// Membership of v in the integer row span of an hnf_rows basis.
inline bool in_span(const IntMat& hnf_basis, std::vector<Int> v) {
    if (hnf_basis.cols() != v.size()) throw std::invalid_argument("in_span: size mismatch");
    std::size_t row = 0;
    for (std::size_t j = 0; j < v.size() && row < hnf_basis.rows(); ++j) {
        if (sgn(hnf_basis(row, j)) == 0) continue;  // not this row's pivot
        if (sgn(v[j]) != 0) {
            if (!divisible(v[j], hnf_basis(row, j))) return false;
            Int q = exact_div(v[j], hnf_basis(row, j));
            for (std::size_t k = j; k < v.size(); ++k) v[k] -= q * hnf_basis(row, k);
        }
        ++row;
    }
    for (const Int& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

/// Adjugate matrix: adj(m) * m = det(m) * I. Exact, via rational inverse.
inline IntMat adjugate(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t n = m.rows();
    Int dm = det(m);
    if (sgn(dm) == 0) throw std::invalid_argument("adjugate: singular matrix");
    RatMat inv = rat_inverse(m);
    IntMat adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat e = inv(i, j) * Rat(dm);
            if (e.get_den() != 1) throw std::logic_error("adjugate: non-integral entry");
            adj(i, j) = e.get_num();
        }
    return adj;
}

}  // namespace rbd
