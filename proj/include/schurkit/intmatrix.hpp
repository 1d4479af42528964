#pragma once

// Exact integer matrices and Smith normal form. The default entry type is
// BigInt; a checked 128-bit instantiation is available as an opt-in fast
// path (overflow raises OverflowError naming big-integer mode).
//
// smith_normal_form returns D = U*A*V with d1 | d2 | ... and both transforms
// unimodular. The factorization is re-verified by exact multiplication and a
// fraction-free determinant before returning.

#include <cstddef>
#include <string>
#include <vector>

#include "schurkit/bigint.hpp"
#include "schurkit/error.hpp"

namespace schurkit {

template <class Int>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Int(1);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw ContractError("Matrix: dimension mismatch in product");
        Matrix r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i) {
            for (std::size_t k = 0; k < x.cols; ++k) {
                const Int& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols; ++j) {
                    r.at(i, j) += xik * y.at(k, j);
                }
            }
        }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

using IntMatrix = Matrix<BigInt>;

// Fraction-free (Bareiss) determinant of a square matrix.
template <class Int>
Int determinant(Matrix<Int> m) {
    if (m.rows != m.cols) throw ContractError("determinant: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return Int(1);
    Int sign(1);
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Sylvester's identity
            }
            m.at(i, k) = Int(0);
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

template <class Int>
struct SnfResultT {
    Matrix<Int> D, U, V;      // U*A*V = D
    Matrix<Int> Uinv, Vinv;   // exact inverses of the transforms
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D.at(i, i));
        return d;
    }
};

using SnfResult = SnfResultT<BigInt>;

namespace detail {

template <class Int>
class SnfWorker {
  public:
    explicit SnfWorker(Matrix<Int> a)
        : m_(std::move(a)),
          u_(Matrix<Int>::identity(m_.rows)),
          uinv_(Matrix<Int>::identity(m_.rows)),
          v_(Matrix<Int>::identity(m_.cols)),
          vinv_(Matrix<Int>::identity(m_.cols)) {}

    SnfResultT<Int> run() {
        const std::size_t n = std::min(m_.rows, m_.cols);
        for (std::size_t t = 0; t < n; ++t) {
            if (!bring_pivot(t)) break;
            reduce_block(t);
            if (m_.at(t, t).sign() < 0) negate_row(t);
        }
        return SnfResultT<Int>{std::move(m_), std::move(u_), std::move(v_), std::move(uinv_), std::move(vinv_)};
    }

  private:
    Matrix<Int> m_, u_, uinv_, v_, vinv_;

    // Smallest-magnitude nonzero entry of the trailing block moved to (t,t).
    bool bring_pivot(std::size_t t) {
        std::size_t bi = t, bj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m_.rows; ++i) {
            for (std::size_t j = t; j < m_.cols; ++j) {
                const Int& x = m_.at(i, j);
                if (x.is_zero()) continue;
                Int ax = x.abs();
                if (!found || ax < best) {
                    best = ax;
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        }
        if (!found) return false;
        if (bi != t) swap_rows(t, bi);
        if (bj != t) swap_cols(t, bj);
        return true;
    }

    void reduce_block(std::size_t t) {
        for (;;) {
            bool dirty = false;
            // Clear column t below and above the pivot.
            for (std::size_t i = t + 1; i < m_.rows; ++i) {
                if (m_.at(i, t).is_zero()) continue;
                Int q = Int::div_round(m_.at(i, t), m_.at(t, t));
                if (!q.is_zero()) add_row(i, t, -q);
                if (!m_.at(i, t).is_zero()) {
                    // Remainder became the smaller entry: promote it.
                    swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < m_.cols; ++j) {
                if (m_.at(t, j).is_zero()) continue;
                Int q = Int::div_round(m_.at(t, j), m_.at(t, t));
                if (!q.is_zero()) add_col(j, t, -q);
                if (!m_.at(t, j).is_zero()) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Row and column are clear; enforce that the pivot divides the
            // whole trailing block (fold an offending row in and retry).
            bool divides = true;
            for (std::size_t i = t + 1; i < m_.rows && divides; ++i) {
                for (std::size_t j = t + 1; j < m_.cols && divides; ++j) {
                    if (!(m_.at(i, j) % m_.at(t, t)).is_zero()) {
                        add_row(t, i, Int(1));
                        divides = false;
                    }
                }
            }
            if (divides) return;
        }
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < m_.cols; ++c) std::swap(m_.at(i, c), m_.at(j, c));
        for (std::size_t c = 0; c < u_.cols; ++c) std::swap(u_.at(i, c), u_.at(j, c));
        for (std::size_t r = 0; r < uinv_.rows; ++r) std::swap(uinv_.at(r, i), uinv_.at(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m_.rows; ++r) std::swap(m_.at(r, i), m_.at(r, j));
        for (std::size_t r = 0; r < v_.rows; ++r) std::swap(v_.at(r, i), v_.at(r, j));
        for (std::size_t c = 0; c < vinv_.cols; ++c) std::swap(vinv_.at(i, c), vinv_.at(j, c));
    }
    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < m_.cols; ++c) m_.at(i, c) += q * m_.at(j, c);
        for (std::size_t c = 0; c < u_.cols; ++c) u_.at(i, c) += q * u_.at(j, c);
        for (std::size_t r = 0; r < uinv_.rows; ++r) uinv_.at(r, j) -= q * uinv_.at(r, i);
    }
    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < m_.rows; ++r) m_.at(r, i) += q * m_.at(r, j);
        for (std::size_t r = 0; r < v_.rows; ++r) v_.at(r, i) += q * v_.at(r, j);
        for (std::size_t c = 0; c < vinv_.cols; ++c) vinv_.at(j, c) -= q * vinv_.at(i, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < m_.cols; ++c) m_.at(i, c) = -m_.at(i, c);
        for (std::size_t c = 0; c < u_.cols; ++c) u_.at(i, c) = -u_.at(i, c);
        for (std::size_t r = 0; r < uinv_.rows; ++r) uinv_.at(r, i) = -uinv_.at(r, i);
    }
};

}  // namespace detail

template <class Int>
SnfResultT<Int> smith_normal_form_t(const Matrix<Int>& a) {
    detail::SnfWorker<Int> w(a);
    SnfResultT<Int> r = w.run();
    // Verify the factorization and the divisibility chain before returning.
    if (!(r.U * a * r.V == r.D)) throw ContractError("smith_normal_form: U*A*V != D (internal)");
    Int one(1), minus(-1);
    Int du = determinant(r.U);
    Int dv = determinant(r.V);
    if (!(du == one || du == minus) || !(dv == one || dv == minus)) {
        throw ContractError("smith_normal_form: transform not unimodular (internal)");
    }
    auto d = r.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i].is_zero()) {
            if (!d[i + 1].is_zero()) throw ContractError("smith_normal_form: chain violated (internal)");
        } else if (!(d[i + 1] % d[i]).is_zero()) {
            throw ContractError("smith_normal_form: chain violated (internal)");
        }
    }
    return r;
}

inline SnfResult smith_normal_form(const IntMatrix& a) { return smith_normal_form_t<BigInt>(a); }

// Checked fixed-width variant; raises OverflowError with a pointer to
// big-integer mode when 128 bits do not suffice.
inline SnfResultT<Checked128> smith_normal_form_checked128(const Matrix<Checked128>& a) {
    return smith_normal_form_t<Checked128>(a);
}

}  // namespace schurkit
