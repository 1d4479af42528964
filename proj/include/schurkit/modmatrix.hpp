#pragma once

// Linear algebra over Z/m. Everything decomposes by the prime powers of m
// (CRT), so the working rings are Z/p^k where pivoting by minimal p-adic
// valuation sidesteps zero divisors. Two row-echelon backends share the
// logic: a bit-packed GF(2) one (the hot path for cocycle systems) and a
// generic one for arbitrary p^k. Constraint systems are streamed row by
// row, so only O(rank) rows are ever held.

#include <cstdint>
#include <optional>
#include <vector>

#include "schurkit/abelian.hpp"
#include "schurkit/error.hpp"
#include "schurkit/intmatrix.hpp"
#include "schurkit/numtheory.hpp"

namespace schurkit {

// ---------------------------------------------------------------------------
// GF(2), bit-packed.

struct Gf2Matrix {
    std::size_t rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> bits;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), words((c + 63) / 64), bits(r * words) {}

    void set(std::size_t i, std::size_t j, bool v) {
        auto& w = bits[i * words + j / 64];
        std::uint64_t mask = 1ull << (j % 64);
        w = v ? (w | mask) : (w & ~mask);
    }
    bool get(std::size_t i, std::size_t j) const { return (bits[i * words + j / 64] >> (j % 64)) & 1; }

    std::size_t rank() const;
};

// Streaming echelon over GF(2): rows are absorbed one at a time and reduced
// against the stored pivot rows. Stored rows have distinct leading columns.
class Gf2Echelon {
  public:
    explicit Gf2Echelon(std::size_t cols) : cols_(cols), words_((cols + 63) / 64), by_pivot_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::uint64_t>& row_for_pivot(std::size_t col) const { return by_pivot_[col]; }
    bool has_pivot(std::size_t col) const { return !by_pivot_[col].empty(); }

    // Clobbers `row`; returns true when the row added a new pivot.
    bool insert(std::vector<std::uint64_t>& row) {
        std::size_t w = 0;
        while (w < words_) {
            if (row[w] == 0) {
                ++w;
                continue;
            }
            std::size_t col = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
            auto& piv = by_pivot_[col];
            if (piv.empty()) {
                by_pivot_[col] = row;
                pivots_.push_back(col);
                return true;
            }
            for (std::size_t t = w; t < words_; ++t) row[t] ^= piv[t];
        }
        return false;
    }

  private:
    std::size_t cols_, words_;
    std::vector<std::vector<std::uint64_t>> by_pivot_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t Gf2Matrix::rank() const {
    Gf2Echelon ech(cols);
    std::vector<std::uint64_t> row(words);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        row.assign(bits.begin() + static_cast<std::ptrdiff_t>(i * words),
                   bits.begin() + static_cast<std::ptrdiff_t>((i + 1) * words));
        if (ech.insert(row)) ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Z/p^k, generic.

struct PkRing {
    std::uint64_t p = 2;
    unsigned k = 1;
    std::uint64_t q = 2;  // p^k

    static PkRing make(std::uint64_t p, unsigned k) {
        PkRing r;
        r.p = p;
        r.k = k;
        r.q = 1;
        for (unsigned i = 0; i < k; ++i) r.q *= p;
        return r;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return q <= 0xffffffffull ? (a * b) % q : mul_mod(a, b, q);
    }
    unsigned val(std::uint64_t a) const { return val_p(a, p, k); }
    std::uint64_t ppow(unsigned v) const {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < v; ++i) r *= p;
        return r;
    }
    // Inverse of the unit part; a = unit * p^val(a).
    std::uint64_t unit_inv(std::uint64_t a) const { return inv_mod(a / ppow(val(a)), q); }
};

// Streaming echelon over Z/p^k. Stored rows are normalized so the leading
// entry is exactly p^v; rows keep distinct leading columns.
class PkEchelon {
  public:
    PkEchelon(PkRing ring, std::size_t cols) : R_(ring), cols_(cols), row_at_(cols, -1) {}

    const PkRing& ring() const { return R_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_col_; }
    int row_for_pivot(std::size_t col) const { return row_at_[col]; }

    // Clobbers `row`; returns true when a new pivot row was stored.
    bool insert(std::vector<std::uint64_t>& row) {
        std::size_t j = 0;
        while (j < cols_) {
            if (row[j] == 0) {
                ++j;
                continue;
            }
            int at = row_at_[j];
            if (at < 0) {
                normalize(row, j);
                row_at_[j] = static_cast<int>(rows_.size());
                pivot_col_.push_back(j);
                pivot_val_.push_back(R_.val(row[j]));
                rows_.push_back(row);
                return true;
            }
            auto& stored = rows_[static_cast<std::size_t>(at)];
            unsigned vs = pivot_val_[static_cast<std::size_t>(at)];
            if (R_.val(row[j]) >= vs) {
                std::uint64_t f = row[j] / R_.ppow(vs);
                for (std::size_t c = j; c < cols_; ++c) row[c] = R_.sub(row[c], R_.mul(f, stored[c]));
            } else {
                // Incoming row has the better pivot: swap it in, keep reducing
                // the displaced row.
                normalize(row, j);
                pivot_val_[static_cast<std::size_t>(at)] = R_.val(row[j]);
                std::swap(stored, row);
                std::uint64_t f = row[j] / R_.ppow(pivot_val_[static_cast<std::size_t>(at)]);
                for (std::size_t c = j; c < cols_; ++c) row[c] = R_.sub(row[c], R_.mul(f, stored[c]));
            }
        }
        return false;
    }

  private:
    PkRing R_;
    std::size_t cols_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivot_col_;
    std::vector<unsigned> pivot_val_;
    std::vector<int> row_at_;

    void normalize(std::vector<std::uint64_t>& row, std::size_t lead) const {
        std::uint64_t inv = R_.unit_inv(row[lead]);
        if (inv == 1) return;
        for (std::size_t c = lead; c < cols_; ++c) row[c] = R_.mul(row[c], inv);
    }
};

// Diagonalization of a small dense matrix over Z/p^k by valuation-minimal
// pivoting: row ops (untracked, optionally mirrored on an attached rhs) and
// column ops tracked in V / Vinv. Afterwards the matrix is diag(p^{v_0},
// p^{v_1}, ...) with ascending valuations.
class PkDiagonalizer {
  public:
    PkDiagonalizer(PkRing ring, std::vector<std::vector<std::uint64_t>> m, std::size_t cols,
                   std::vector<std::uint64_t>* rhs = nullptr, bool track_vinv = false)
        : R_(ring), m_(std::move(m)), cols_(cols), rhs_(rhs), track_vinv_(track_vinv) {
        v_.assign(cols_, std::vector<std::uint64_t>(cols_, 0));
        for (std::size_t i = 0; i < cols_; ++i) v_[i][i] = 1;
        if (track_vinv_) vinv_ = v_;
        run();
    }

    std::size_t pivot_count() const { return vals_.size(); }
    const std::vector<unsigned>& pivot_vals() const { return vals_; }
    const std::vector<std::vector<std::uint64_t>>& V() const { return v_; }
    const std::vector<std::vector<std::uint64_t>>& Vinv() const { return vinv_; }
    const std::vector<std::vector<std::uint64_t>>& M() const { return m_; }

    // Solves D y = rhs' (requires an attached rhs); returns x = V y, or
    // nullopt when unsolvable.
    std::optional<std::vector<std::uint64_t>> solve() const {
        std::vector<std::uint64_t> y(cols_, 0);
        for (std::size_t i = 0; i < m_.size(); ++i) {
            std::uint64_t c = (*rhs_)[i];
            if (i < vals_.size()) {
                std::uint64_t pv = R_.ppow(vals_[i]);
                if (c % pv != 0) return std::nullopt;
                y[i] = c / pv;
            } else if (c != 0) {
                return std::nullopt;
            }
        }
        std::vector<std::uint64_t> x(cols_, 0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t i = 0; i < cols_; ++i) x[i] = R_.add(x[i], R_.mul(v_[i][j], y[j]));
        }
        return x;
    }

  private:
    PkRing R_;
    std::vector<std::vector<std::uint64_t>> m_;
    std::size_t cols_;
    std::vector<std::uint64_t>* rhs_;
    bool track_vinv_;
    std::vector<std::vector<std::uint64_t>> v_, vinv_;
    std::vector<unsigned> vals_;

    void run() {
        const std::size_t rows = m_.size();
        const std::size_t steps = std::min(rows, cols_);
        for (std::size_t t = 0; t < steps; ++t) {
            std::size_t bi = t, bj = t;
            unsigned best = R_.k;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols_; ++j) {
                    if (m_[i][j] == 0) continue;
                    unsigned v = R_.val(m_[i][j]);
                    if (v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                        if (v == 0) break;
                    }
                }
                if (best == 0) break;
            }
            if (best == R_.k) break;
            if (bi != t) swap_rows(t, bi);
            if (bj != t) swap_cols(t, bj);
            std::uint64_t inv = R_.unit_inv(m_[t][t]);
            if (inv != 1) scale_row(t, inv);
            std::uint64_t pv = R_.ppow(best);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == t || m_[i][t] == 0) continue;
                add_row(i, t, R_.q - m_[i][t] / pv);
            }
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == t || m_[t][j] == 0) continue;
                add_col(j, t, R_.q - m_[t][j] / pv);
            }
            vals_.push_back(best);
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        std::swap(m_[a], m_[b]);
        if (rhs_) std::swap((*rhs_)[a], (*rhs_)[b]);
    }
    void scale_row(std::size_t r, std::uint64_t u) {
        for (auto& x : m_[r]) x = R_.mul(x, u);
        if (rhs_) (*rhs_)[r] = R_.mul((*rhs_)[r], u);
    }
    // row_a += f * row_b
    void add_row(std::size_t a, std::size_t b, std::uint64_t f) {
        for (std::size_t c = 0; c < cols_; ++c) m_[a][c] = R_.add(m_[a][c], R_.mul(f, m_[b][c]));
        if (rhs_) (*rhs_)[a] = R_.add((*rhs_)[a], R_.mul(f, (*rhs_)[b]));
    }
    // col_a += f * col_b, mirrored on V; inverse op on Vinv rows.
    void add_col(std::size_t a, std::size_t b, std::uint64_t f) {
        for (std::size_t r = 0; r < m_.size(); ++r) m_[r][a] = R_.add(m_[r][a], R_.mul(f, m_[r][b]));
        for (std::size_t r = 0; r < cols_; ++r) v_[r][a] = R_.add(v_[r][a], R_.mul(f, v_[r][b]));
        if (track_vinv_) {
            for (std::size_t c = 0; c < cols_; ++c) {
                vinv_[b][c] = R_.sub(vinv_[b][c], R_.mul(f, vinv_[a][c]));
            }
        }
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (auto& row : m_) std::swap(row[a], row[b]);
        for (std::size_t r = 0; r < cols_; ++r) std::swap(v_[r][a], v_[r][b]);
        if (track_vinv_) std::swap(vinv_[a], vinv_[b]);
    }
};

// ---------------------------------------------------------------------------
// Kernel of an echelonized system over Z/p^k.

struct PkKernel {
    // Generators of { x : A x = 0 } as a Z/p^k module; generator i has
    // additive order `orders[i]` (a power of p), and the kernel is the
    // internal direct sum of the cyclic groups they generate.
    std::vector<std::vector<std::uint64_t>> generators;
    std::vector<std::uint64_t> orders;
};

inline PkKernel kernel_of_echelon(const PkEchelon& ech) {
    const PkRing& R = ech.ring();
    const std::size_t n = ech.cols();
    PkKernel out;
    bool unit_pivots_only = true;
    for (std::size_t r = 0; r < ech.rank(); ++r) {
        if (R.val(ech.rows()[r][ech.pivot_cols()[r]]) != 0) unit_pivots_only = false;
    }
    if (unit_pivots_only) {
        // Field-style back substitution over the free columns.
        std::vector<int> row_of(n, -1);
        for (std::size_t r = 0; r < ech.rank(); ++r) row_of[ech.pivot_cols()[r]] = static_cast<int>(r);
        std::vector<std::size_t> pivots_sorted = ech.pivot_cols();
        std::sort(pivots_sorted.begin(), pivots_sorted.end());
        for (std::size_t f = 0; f < n; ++f) {
            if (row_of[f] >= 0) continue;
            std::vector<std::uint64_t> x(n, 0);
            x[f] = 1;
            for (std::size_t pi = pivots_sorted.size(); pi-- > 0;) {
                std::size_t p = pivots_sorted[pi];
                if (p > f) continue;
                const auto& row = ech.rows()[static_cast<std::size_t>(row_of[p])];
                std::uint64_t acc = 0;
                for (std::size_t j = p + 1; j <= f; ++j) {
                    if (row[j] != 0 && x[j] != 0) acc = R.add(acc, R.mul(row[j], x[j]));
                }
                x[p] = R.sub(0, R.mul(acc, R.unit_inv(row[p])));
            }
            out.generators.push_back(std::move(x));
            out.orders.push_back(R.q);
        }
        return out;
    }
    PkDiagonalizer diag(R, ech.rows(), n);
    const auto& vals = diag.pivot_vals();
    for (std::size_t i = 0; i < n; ++i) {
        unsigned v = i < vals.size() ? vals[i] : 0;
        std::uint64_t order = i < vals.size() ? R.ppow(v) : R.q;
        if (order == 1) continue;
        std::uint64_t scale = i < vals.size() ? R.ppow(R.k - v) : 1;
        std::vector<std::uint64_t> g(n, 0);
        for (std::size_t r = 0; r < n; ++r) g[r] = R.mul(diag.V()[r][i], scale);
        out.generators.push_back(std::move(g));
        out.orders.push_back(order);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Public Z/m operations (CRT over the prime powers of m).

namespace detail {

inline std::optional<std::vector<std::uint64_t>> solve_mod_pk(const std::vector<std::vector<std::uint64_t>>& a,
                                                              const std::vector<std::uint64_t>& b,
                                                              const PkRing& R) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    PkEchelon ech(R, cols + 1);
    std::vector<std::uint64_t> row(cols + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) row[j] = a[i][j] % R.q;
        row[cols] = b[i] % R.q;
        ech.insert(row);
    }
    std::vector<std::vector<std::uint64_t>> sys;
    std::vector<std::uint64_t> rhs;
    for (std::size_t r = 0; r < ech.rank(); ++r) {
        if (ech.pivot_cols()[r] == cols) return std::nullopt;  // row 0 = c with c != 0
        auto full = ech.rows()[r];
        rhs.push_back(full[cols]);
        full.resize(cols);
        sys.push_back(std::move(full));
    }
    if (cols == 0) return std::vector<std::uint64_t>{};
    PkDiagonalizer diag(R, std::move(sys), cols, &rhs);
    return diag.solve();
}

}  // namespace detail

// Some x with A x = b (mod m), or nullopt when none exists.
inline std::optional<std::vector<std::uint64_t>> solve_mod(const std::vector<std::vector<std::uint64_t>>& a,
                                                           const std::vector<std::uint64_t>& b, std::uint64_t m) {
    if (m < 2) throw ContractError("solve_mod: modulus must be >= 2");
    if (a.size() != b.size()) throw ContractError("solve_mod: row/rhs mismatch");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::uint64_t> x(cols, 0);
    for (const auto& pp : factorize(m)) {
        PkRing R = PkRing::make(pp.p, pp.k);
        auto xs = detail::solve_mod_pk(a, b, R);
        if (!xs) return std::nullopt;
        // CRT-combine into x: coefficient c = (m/p^k) * inv(m/p^k mod p^k) is
        // 1 mod p^k and 0 mod the cofactor.
        std::uint64_t cof = m / pp.pk;
        std::uint64_t c = cof == 1 ? 1 : mul_mod(cof % m, inv_mod(cof % pp.pk, pp.pk), m);
        for (std::size_t j = 0; j < cols; ++j) {
            x[j] = (x[j] + mul_mod((*xs)[j], c, m)) % m;
        }
    }
    // Re-verify before returning.
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc = (acc + mul_mod(a[i][j] % m, x[j], m)) % m;
        if (acc != b[i] % m) throw ContractError("solve_mod: verification failed (internal)");
    }
    return x;
}

struct ModKernel {
    AbelianStructure structure;
    std::vector<std::vector<std::uint64_t>> generators;  // vectors mod m
};

// Generators and abelian invariants of { x : A x = 0 (mod m) }.
inline ModKernel kernel_structure_mod(const std::vector<std::vector<std::uint64_t>>& a, std::size_t cols,
                                      std::uint64_t m) {
    if (m < 2) throw ContractError("kernel_structure_mod: modulus must be >= 2");
    ModKernel out;
    std::vector<std::int64_t> orders;
    for (const auto& pp : factorize(m)) {
        PkRing R = PkRing::make(pp.p, pp.k);
        PkEchelon ech(R, cols);
        std::vector<std::uint64_t> row(cols);
        for (const auto& arow : a) {
            for (std::size_t j = 0; j < cols; ++j) row[j] = arow[j] % R.q;
            ech.insert(row);
        }
        PkKernel ker = kernel_of_echelon(ech);
        std::uint64_t cof = m / pp.pk;
        std::uint64_t c = cof == 1 ? 1 : mul_mod(cof % m, inv_mod(cof % pp.pk, pp.pk), m);
        for (std::size_t g = 0; g < ker.generators.size(); ++g) {
            std::vector<std::uint64_t> v(cols);
            for (std::size_t j = 0; j < cols; ++j) v[j] = mul_mod(ker.generators[g][j], c, m);
            out.generators.push_back(std::move(v));
            orders.push_back(static_cast<std::int64_t>(ker.orders[g]));
        }
    }
    out.structure = AbelianStructure::from_cyclic_orders(orders);
    return out;
}

// Elementary divisors of span(big)/span(small) inside (Z/m)^d. Containment
// of the small span in the big one is verified first.
inline AbelianStructure quotient_structure(const std::vector<std::vector<std::uint64_t>>& big,
                                           const std::vector<std::vector<std::uint64_t>>& small, std::size_t dim,
                                           std::uint64_t m) {
    if (m < 2) throw ContractError("quotient_structure: modulus must be >= 2");
    // Containment check: each small generator solvable in terms of big ones.
    std::vector<std::vector<std::uint64_t>> bt(dim, std::vector<std::uint64_t>(big.size()));
    for (std::size_t g = 0; g < big.size(); ++g) {
        if (big[g].size() != dim) throw ContractError("quotient_structure: generator dimension mismatch");
        for (std::size_t j = 0; j < dim; ++j) bt[j][g] = big[g][j] % m;
    }
    for (const auto& s : small) {
        if (s.size() != dim) throw ContractError("quotient_structure: generator dimension mismatch");
        if (!solve_mod(bt, s, m)) {
            throw ContractError("quotient_structure: small span is not contained in big span");
        }
    }
    // Lattice route over Z: L_big = <big, m e_i>, L_small = <small, m e_i>;
    // the quotient is L_big / L_small.
    const std::int64_t mm = static_cast<std::int64_t>(m);
    IntMatrix lb(dim, big.size() + dim);
    for (std::size_t g = 0; g < big.size(); ++g) {
        for (std::size_t j = 0; j < dim; ++j) lb.at(j, g) = BigInt(static_cast<long long>(big[g][j] % m));
    }
    for (std::size_t j = 0; j < dim; ++j) lb.at(j, big.size() + j) = BigInt(mm);
    SnfResult snf = smith_normal_form(lb);
    // Basis of L_big: columns Uinv[:,i] scaled by D_ii; coordinates of w are
    // (U w)_i / D_ii, exact for w in the lattice.
    auto coords = [&](const std::vector<std::uint64_t>& w) {
        std::vector<BigInt> y(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            BigInt acc;
            for (std::size_t j = 0; j < dim; ++j) {
                acc += snf.U.at(i, j) * BigInt(static_cast<long long>(w[j] % m));
            }
            BigInt q, r;
            BigInt::divmod(acc, snf.D.at(i, i), q, r);
            if (!r.is_zero()) throw ContractError("quotient_structure: vector outside lattice (internal)");
            y[i] = q;
        }
        return y;
    };
    IntMatrix rel(dim, small.size() + dim);
    for (std::size_t g = 0; g < small.size(); ++g) {
        auto y = coords(small[g]);
        for (std::size_t i = 0; i < dim; ++i) rel.at(i, g) = y[i];
    }
    for (std::size_t j = 0; j < dim; ++j) {
        // Relation vector m*e_j, expressed in the lattice basis.
        std::vector<BigInt> y(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            BigInt acc = snf.U.at(i, j) * BigInt(mm);
            BigInt q, r;
            BigInt::divmod(acc, snf.D.at(i, i), q, r);
            if (!r.is_zero()) throw ContractError("quotient_structure: m-lattice outside basis (internal)");
            y[i] = q;
        }
        for (std::size_t i = 0; i < dim; ++i) rel.at(i, small.size() + j) = y[i];
    }
    SnfResult qs = smith_normal_form(rel);
    std::vector<std::int64_t> divisors;
    for (const auto& d : qs.diagonal()) {
        if (d.is_zero()) throw ContractError("quotient_structure: infinite quotient (internal)");
        std::int64_t v = d.to_int64();
        if (v > 1) divisors.push_back(v);
    }
    return AbelianStructure::from_cyclic_orders(divisors);
}

}  // namespace schurkit
