#pragma once

// The concrete matrix groups over F_q: SL_n (n <= 4), GL_n (n <= 3), Sp_4,
// SU_3 / SU_4, the projective families as permutation groups on projective
// points, Heisenberg groups, and the order bookkeeping around the
// center/quotient sequence for SL_n.
//
// All groups are fully enumerated through the generic closure; expected
// orders from the classical formulas are checked against the enumeration
// before returning.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "schurkit/closure.hpp"
#include "schurkit/error.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/finite_field.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/perm.hpp"

namespace schurkit {

inline std::uint64_t ipow64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

struct FqMat {
    std::uint8_t n = 0;
    std::array<std::uint16_t, 16> e{};

    std::uint16_t at(unsigned i, unsigned j) const { return e[i * n + j]; }
    void set(unsigned i, unsigned j, std::uint16_t v) { e[i * n + j] = v; }
    friend bool operator==(const FqMat& a, const FqMat& b) { return a.n == b.n && a.e == b.e; }
};

struct FqMatHash {
    std::size_t operator()(const FqMat& m) const {
        std::uint64_t h = 1469598103934665603ull ^ m.n;
        for (unsigned i = 0; i < static_cast<unsigned>(m.n) * m.n; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline FqMat mat_identity(unsigned n) {
    FqMat m;
    m.n = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

inline FqMat mat_mul(const FieldFq& f, const FqMat& a, const FqMat& b) {
    FqMat r;
    r.n = a.n;
    const unsigned n = a.n;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            std::uint32_t acc = 0;
            for (unsigned k = 0; k < n; ++k) acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
            r.set(i, j, static_cast<std::uint16_t>(acc));
        }
    }
    return r;
}

inline FqMat mat_inv(const FieldFq& f, FqMat a) {
    const unsigned n = a.n;
    FqMat inv = mat_identity(n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) throw ContractError("mat_inv: singular matrix");
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) {
                std::uint16_t t = a.at(c, j);
                a.set(c, j, a.at(piv, j));
                a.set(piv, j, t);
                t = inv.at(c, j);
                inv.set(c, j, inv.at(piv, j));
                inv.set(piv, j, t);
            }
        }
        std::uint32_t s = f.inv(a.at(c, c));
        for (unsigned j = 0; j < n; ++j) {
            a.set(c, j, static_cast<std::uint16_t>(f.mul(a.at(c, j), s)));
            inv.set(c, j, static_cast<std::uint16_t>(f.mul(inv.at(c, j), s)));
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            std::uint32_t fac = a.at(i, c);
            for (unsigned j = 0; j < n; ++j) {
                a.set(i, j, static_cast<std::uint16_t>(f.sub(a.at(i, j), f.mul(fac, a.at(c, j)))));
                inv.set(i, j, static_cast<std::uint16_t>(f.sub(inv.at(i, j), f.mul(fac, inv.at(c, j)))));
            }
        }
    }
    return inv;
}

inline std::uint32_t mat_det(const FieldFq& f, FqMat a) {
    const unsigned n = a.n;
    std::uint32_t det = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            det = f.neg(det);
            for (unsigned j = 0; j < n; ++j) {
                std::uint16_t t = a.at(c, j);
                a.set(c, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        }
        det = f.mul(det, a.at(c, c));
        std::uint32_t s = f.inv(a.at(c, c));
        for (unsigned i = c + 1; i < n; ++i) {
            std::uint32_t fac = f.mul(a.at(i, c), s);
            if (fac == 0) continue;
            for (unsigned j = c; j < n; ++j) {
                a.set(i, j, static_cast<std::uint16_t>(f.sub(a.at(i, j), f.mul(fac, a.at(c, j)))));
            }
        }
    }
    return det;
}

using MatClosure = ClosureResult<FqMat, FqMatHash>;

struct MatrixGroup {
    FieldFq field;
    unsigned n = 0;
    MatClosure cls;

    const FiniteGroup& group() const { return cls.group; }
    elem_t index_of(const FqMat& m) const { return cls.index_of(m); }
    const FqMat& element(elem_t i) const { return cls.element(i); }
};

// Classical order formulas.
inline std::uint64_t gl_order(unsigned n, std::uint64_t q) {
    std::uint64_t o = 1, qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    std::uint64_t qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        o *= qn - qi;
        qi *= q;
    }
    return o;
}
inline std::uint64_t sl_order(unsigned n, std::uint64_t q) { return gl_order(n, q) / (q - 1); }
inline std::uint64_t sp4_order(std::uint64_t q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }
inline std::uint64_t su_order(unsigned n, std::uint64_t q) {
    // q^(n(n-1)/2) * prod_{i=2..n} (q^i - (-1)^i)
    std::uint64_t o = 1;
    for (unsigned i = 0; i < n * (n - 1) / 2; ++i) o *= q;
    std::uint64_t qi = q;
    for (unsigned i = 2; i <= n; ++i) {
        qi *= q;
        o *= i % 2 == 0 ? qi - 1 : qi + 1;
    }
    return o;
}

namespace detail {

inline MatrixGroup close_matrix_group(FieldFq f, unsigned n, const std::vector<FqMat>& gens,
                                      std::uint64_t expected_order, const std::string& what, std::size_t cap) {
    if (expected_order > cap) {
        throw CapacityError(what + ": order " + std::to_string(expected_order) + " exceeds element cap " +
                            std::to_string(cap));
    }
    FieldFq fld = f;
    auto mul = [fld](const FqMat& a, const FqMat& b) { return mat_mul(fld, a, b); };
    auto inv = [fld](const FqMat& a) { return mat_inv(fld, a); };
    MatClosure cls = closure<FqMat, FqMatHash>(gens, mul, inv, mat_identity(n), cap);
    if (cls.group.order() != expected_order) {
        throw ContractError(what + ": enumerated order " + std::to_string(cls.group.order()) +
                            " does not match the order formula " + std::to_string(expected_order));
    }
    return MatrixGroup{std::move(f), n, std::move(cls)};
}

inline std::vector<FqMat> transvection_gens(const FieldFq& f, unsigned n) {
    std::vector<FqMat> gens;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::uint32_t b : f.additive_basis()) {
                FqMat m = mat_identity(n);
                m.set(i, j, static_cast<std::uint16_t>(b));
                gens.push_back(m);
            }
        }
    }
    return gens;
}

}  // namespace detail

inline MatrixGroup sl_group(unsigned n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 2 || n > 4) throw ContractError("sl: degree must be 2..4");
    FieldFq f(q);
    return detail::close_matrix_group(f, n, detail::transvection_gens(f, n), sl_order(n, q),
                                      "sl(" + std::to_string(n) + "," + std::to_string(q) + ")", cap);
}

inline MatrixGroup gl_group(unsigned n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 1 || n > 3) throw ContractError("gl: degree must be 1..3");
    FieldFq f(q);
    std::vector<FqMat> gens = n >= 2 ? detail::transvection_gens(f, n) : std::vector<FqMat>{};
    FqMat d = mat_identity(n);
    d.set(0, 0, static_cast<std::uint16_t>(f.generator()));
    gens.push_back(d);
    return detail::close_matrix_group(f, n, gens, gl_order(n, q),
                                      "gl(" + std::to_string(n) + "," + std::to_string(q) + ")", cap);
}

// Sp_4 for the alternating form <x,y> = x1 y4 + x2 y3 - x3 y2 - x4 y1,
// generated by symplectic transvections x -> x + c <x,v> v.
inline MatrixGroup sp4_group(std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    FieldFq f(q);
    const unsigned n = 4;
    auto form = [&f](const std::array<std::uint32_t, 4>& x, const std::array<std::uint32_t, 4>& y) {
        std::uint32_t s = f.add(f.mul(x[0], y[3]), f.mul(x[1], y[2]));
        s = f.sub(s, f.mul(x[2], y[1]));
        return f.sub(s, f.mul(x[3], y[0]));
    };
    std::vector<std::array<std::uint32_t, 4>> dirs;
    for (unsigned i = 0; i < 4; ++i) {
        std::array<std::uint32_t, 4> v{0, 0, 0, 0};
        v[i] = 1;
        dirs.push_back(v);
    }
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = i + 1; j < 4; ++j) {
            std::array<std::uint32_t, 4> v{0, 0, 0, 0};
            v[i] = 1;
            v[j] = 1;
            dirs.push_back(v);
            if (f.p() != 2) {
                v[j] = f.neg(1);
                dirs.push_back(v);
            }
        }
    }
    std::vector<FqMat> gens;
    for (const auto& v : dirs) {
        for (std::uint32_t c : f.additive_basis()) {
            FqMat m;
            m.n = 4;
            for (unsigned col = 0; col < n; ++col) {
                std::array<std::uint32_t, 4> x{0, 0, 0, 0};
                x[col] = 1;
                std::uint32_t t = f.mul(c, form(x, v));
                for (unsigned row = 0; row < n; ++row) {
                    std::uint32_t val = (row == col ? 1u : 0u);
                    val = f.add(val, f.mul(t, v[row]));
                    m.set(row, col, static_cast<std::uint16_t>(val));
                }
            }
            gens.push_back(m);
        }
    }
    return detail::close_matrix_group(f, n, gens, sp4_order(q), "sp(4," + std::to_string(q) + ")", cap);
}

// SU_n (n = 3, 4) inside GL_n(F_{q^2}) for the Hermitian form with
// antidiagonal Gram matrix; conjugation is x -> x^q. Generators come from
// an exhaustive filter over unitriangular and diagonal candidates.
inline MatrixGroup su_group(unsigned n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n != 3 && n != 4) throw ContractError("su: degree must be 3 or 4");
    std::uint64_t expected = su_order(n, q);
    if (expected > cap) {
        throw CapacityError("su(" + std::to_string(n) + "," + std::to_string(q) + "): order " +
                            std::to_string(expected) + " exceeds element cap");
    }
    FieldFq f(static_cast<std::uint32_t>(q) * q);
    auto conj = [&f, q](std::uint32_t x) { return f.pow(x, q); };
    auto is_unitary_det1 = [&](const FqMat& m) {
        if (mat_det(f, m) != 1) return false;
        // m^* J m = J with J the antidiagonal identity.
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                std::uint32_t acc = 0;
                for (unsigned k = 0; k < n; ++k) {
                    acc = f.add(acc, f.mul(conj(m.at(k, i)), m.at(n - 1 - k, j)));
                }
                std::uint32_t want = (i + j == n - 1) ? 1u : 0u;
                if (acc != want) return false;
            }
        }
        return true;
    };
    std::vector<FqMat> gens;
    const unsigned nfree = n * (n - 1) / 2;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < nfree; ++i) count *= f.q();
    for (int lower = 0; lower < 2; ++lower) {
        for (std::uint64_t v = 0; v < count; ++v) {
            FqMat m = mat_identity(n);
            std::uint64_t t = v;
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = i + 1; j < n; ++j) {
                    std::uint16_t c = static_cast<std::uint16_t>(t % f.q());
                    t /= f.q();
                    if (lower) {
                        m.set(j, i, c);
                    } else {
                        m.set(i, j, c);
                    }
                }
            }
            if (is_unitary_det1(m)) gens.push_back(m);
        }
    }
    std::uint64_t dcount = 1;
    for (unsigned i = 0; i < n; ++i) dcount *= f.q();
    for (std::uint64_t v = 0; v < dcount; ++v) {
        FqMat m;
        m.n = static_cast<std::uint8_t>(n);
        std::uint64_t t = v;
        bool ok = true;
        for (unsigned i = 0; i < n; ++i) {
            std::uint16_t c = static_cast<std::uint16_t>(t % f.q());
            t /= f.q();
            if (c == 0) {
                ok = false;
                break;
            }
            m.set(i, i, c);
        }
        if (ok && is_unitary_det1(m)) gens.push_back(m);
    }
    return detail::close_matrix_group(f, n, gens, expected,
                                      "su(" + std::to_string(n) + "," + std::to_string(q) + ")", cap);
}

// Projective families: the permutation action on the projective points of
// F_q^n (points normalized to leading coefficient 1).
namespace detail {

inline std::vector<std::vector<std::uint32_t>> projective_points(const FieldFq& f, unsigned n) {
    std::vector<std::vector<std::uint32_t>> pts;
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= f.q();
    for (std::uint64_t v = 1; v < qn; ++v) {
        std::vector<std::uint32_t> vec(n);
        std::uint64_t t = v;
        for (unsigned i = 0; i < n; ++i) {
            vec[i] = static_cast<std::uint32_t>(t % f.q());
            t /= f.q();
        }
        unsigned lead = 0;
        while (vec[lead] == 0) ++lead;
        if (vec[lead] != 1) continue;
        pts.push_back(vec);
    }
    return pts;
}

inline PermClosure projectivize(const FieldFq& f, unsigned n, const std::vector<FqMat>& gens, std::size_t cap) {
    auto pts = projective_points(f, n);
    if (pts.size() > 255) throw CapacityError("projective group: more than 255 projective points");
    std::vector<std::vector<std::uint32_t>> normed = pts;
    auto find_pt = [&](std::vector<std::uint32_t> vec) {
        unsigned lead = 0;
        while (vec[lead] == 0) ++lead;
        std::uint32_t s = f.inv(vec[lead]);
        for (auto& x : vec) x = f.mul(x, s);
        for (std::size_t i = 0; i < normed.size(); ++i) {
            if (normed[i] == vec) return static_cast<std::uint8_t>(i);
        }
        throw ContractError("projective group: point lookup failed (internal)");
    };
    std::vector<Perm> perm_gens;
    for (const FqMat& m : gens) {
        Perm p(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<std::uint32_t> img(n, 0);
            for (unsigned r = 0; r < n; ++r) {
                std::uint32_t acc = 0;
                for (unsigned c = 0; c < n; ++c) acc = f.add(acc, f.mul(m.at(r, c), pts[i][c]));
                img[r] = acc;
            }
            p[i] = find_pt(img);
        }
        perm_gens.push_back(std::move(p));
    }
    return permutation_group(std::move(perm_gens), cap);
}

}  // namespace detail

inline PermClosure pgl_group(unsigned n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 2 || n > 3) throw ContractError("pgl: degree must be 2 or 3");
    FieldFq f(q);
    std::vector<FqMat> gens = detail::transvection_gens(f, n);
    FqMat d = mat_identity(n);
    d.set(0, 0, static_cast<std::uint16_t>(f.generator()));
    gens.push_back(d);
    PermClosure pc = detail::projectivize(f, n, gens, cap);
    if (pc.group.order() != gl_order(n, q) / (q - 1)) {
        throw ContractError("pgl: enumerated order does not match |GL|/(q-1)");
    }
    return pc;
}

inline PermClosure psl_group(unsigned n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 2 || n > 3) throw ContractError("psl: degree must be 2 or 3");
    FieldFq f(q);
    PermClosure pc = detail::projectivize(f, n, detail::transvection_gens(f, n), cap);
    std::uint64_t want = sl_order(n, q) / std::gcd<std::uint64_t>(n, q - 1);
    if (pc.group.order() != want) throw ContractError("psl: enumerated order does not match |SL|/gcd(n,q-1)");
    return pc;
}

// ---------------------------------------------------------------------------
// Heisenberg groups.

// H(F_q^{2n}): tuples (a, b, c) in F_q^n x F_q^n x F_q with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b'), the product law of the
// (n+2)x(n+2) unipotent matrices with free first row and last column.
// Packaged as a central extension of F_q^{2n} by F_q.
struct HeisenbergGroup {
    CentralExtension ext;
    FieldFq field;
    unsigned n = 1;

    // Decode a base index into the (a, b) coordinate vectors.
    std::vector<std::uint32_t> base_coords(elem_t idx) const {
        std::vector<std::uint32_t> v(2 * n);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < 2 * n; ++i) {
            v[i] = static_cast<std::uint32_t>(t % field.q());
            t /= field.q();
        }
        return v;
    }
};

inline HeisenbergGroup heisenberg(unsigned n, std::uint32_t q, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 1) throw ContractError("heisenberg: n must be >= 1");
    FieldFq f(q);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < 2 * n + 1; ++i) {
        total *= q;
        if (total > cap) throw CapacityError("heisenberg: q^(2n+1) exceeds element cap");
    }
    const std::uint64_t base_n = total / q;
    FieldFq fld = f;
    unsigned nn = n;
    // Total element index: (a || b) * q + c with (a || b) base-q digits.
    auto law = [fld, nn](elem_t x, elem_t y) {
        const std::uint32_t q0 = fld.q();
        elem_t xa = x / q0, ya = y / q0;
        std::uint32_t c = fld.add(x % q0, y % q0);
        elem_t out = 0;
        std::uint64_t mult = 1;
        std::uint32_t dot = 0;
        elem_t ta = xa, tb = ya;
        for (unsigned i = 0; i < 2 * nn; ++i) {
            std::uint32_t da = ta % q0, db = tb % q0;
            ta /= q0;
            tb /= q0;
            out += static_cast<elem_t>(fld.add(da, db) * mult);
            mult *= q0;
            if (i < nn) {
                // a-part of x against b-part of y: pair digit i with digit n+i.
                std::uint32_t yb = (ya / static_cast<elem_t>(ipow64(q0, nn + i))) % q0;
                dot = fld.add(dot, fld.mul(da, yb));
            }
        }
        return static_cast<elem_t>(out * q0 + fld.add(c, dot));
    };
    std::vector<elem_t> inverse(total);
    for (elem_t x = 0; x < total; ++x) {
        // (a,b,c)^-1 = (-a, -b, -c + a.b)
        const std::uint32_t q0 = f.q();
        elem_t xa = x / q0;
        std::uint32_t c = x % q0;
        elem_t out = 0;
        std::uint64_t mult = 1;
        std::uint32_t dot = 0;
        elem_t ta = xa;
        std::vector<std::uint32_t> digits(2 * n);
        for (unsigned i = 0; i < 2 * n; ++i) {
            digits[i] = ta % q0;
            ta /= q0;
        }
        for (unsigned i = 0; i < 2 * n; ++i) {
            out += static_cast<elem_t>(f.neg(digits[i]) * mult);
            mult *= q0;
        }
        for (unsigned i = 0; i < n; ++i) dot = f.add(dot, f.mul(digits[i], digits[n + i]));
        inverse[x] = static_cast<elem_t>(out * q0 + f.add(f.neg(c), dot));
    }
    std::vector<elem_t> gens;
    for (unsigned i = 0; i < 2 * n; ++i) {
        for (std::uint32_t b : f.additive_basis()) {
            gens.push_back(static_cast<elem_t>(b * ipow64(f.q(), i) * f.q()));
        }
    }
    FiniteGroup totalg = FiniteGroup::from_law(static_cast<elem_t>(total), law, 0, std::move(inverse), gens);

    // Base F_q^{2n}, additive, with matching digit indexing.
    auto blaw = [fld, nn](elem_t x, elem_t y) {
        const std::uint32_t q0 = fld.q();
        elem_t out = 0;
        std::uint64_t mult = 1;
        for (unsigned i = 0; i < 2 * nn; ++i) {
            out += static_cast<elem_t>(fld.add(x % q0, y % q0) * mult);
            x /= q0;
            y /= q0;
            mult *= q0;
        }
        return out;
    };
    std::vector<elem_t> binv(base_n);
    for (elem_t x = 0; x < base_n; ++x) {
        elem_t out = 0;
        std::uint64_t mult = 1;
        elem_t t = x;
        for (unsigned i = 0; i < 2 * n; ++i) {
            out += static_cast<elem_t>(f.neg(t % f.q()) * mult);
            t /= f.q();
            mult *= f.q();
        }
        binv[x] = out;
    }
    std::vector<elem_t> bgens;
    for (unsigned i = 0; i < 2 * n; ++i) {
        for (std::uint32_t b : f.additive_basis()) bgens.push_back(static_cast<elem_t>(b * ipow64(f.q(), i)));
    }
    FiniteGroup baseg = FiniteGroup::from_law(static_cast<elem_t>(base_n), blaw, 0, std::move(binv), bgens);

    // Kernel: the additive group of F_q.
    FiniteGroup kerg;
    bool cyclic = f.degree() == 1;
    if (cyclic) {
        kerg = cyclic_group(f.q());
    } else {
        FieldFq fk = f;
        std::vector<elem_t> kinv(f.q());
        for (elem_t x = 0; x < f.q(); ++x) kinv[x] = f.neg(x);
        std::vector<elem_t> kgens;
        for (std::uint32_t b : f.additive_basis()) kgens.push_back(b);
        kerg = FiniteGroup::from_law(
            f.q(), [fk](elem_t a, elem_t b) { return fk.add(a, b); }, 0, std::move(kinv), kgens);
    }

    CentralExtension x;
    x.total = std::move(totalg);
    x.base = std::move(baseg);
    x.kernel = std::move(kerg);
    x.kernel_cyclic = cyclic;
    x.embed.resize(f.q());
    for (elem_t c = 0; c < f.q(); ++c) x.embed[c] = c;
    x.project.resize(total);
    for (elem_t t = 0; t < total; ++t) x.project[t] = t / f.q();
    x.section.resize(base_n);
    for (elem_t b = 0; b < base_n; ++b) x.section[b] = b * f.q();
    x.validate();
    return HeisenbergGroup{std::move(x), std::move(f), n};
}

// Order bookkeeping for 1 -> SL_n/mu_n -> PGL_n -> mu_n -> 1: the scalar
// subgroup mu_n(F_q) has order gcd(n, q-1) and |PGL_n| splits exactly as
// |SL_n / mu_n| * |mu_n|.
struct DualSequenceReport {
    unsigned n = 2;
    std::uint32_t q = 2;
    std::uint64_t sl_order = 0;
    std::uint64_t mu_order = 0;
    std::uint64_t pgl_order = 0;
    bool verified = false;
};

inline DualSequenceReport dual_sequence_check(unsigned n, std::uint32_t q,
                                              std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 2 || n > 3) throw ContractError("dual_sequence_check: degree must be 2 or 3");
    DualSequenceReport r;
    r.n = n;
    r.q = q;
    MatrixGroup sl = sl_group(n, q, cap);
    r.sl_order = sl.group().order();
    // mu_n(F_q): scalar matrices with determinant 1, counted directly.
    FieldFq f(q);
    r.mu_order = 0;
    for (std::uint32_t c = 1; c < q; ++c) {
        std::uint32_t d = 1;
        for (unsigned i = 0; i < n; ++i) d = f.mul(d, c);
        if (d == 1) ++r.mu_order;
    }
    PermClosure pgl = pgl_group(n, q, cap);
    r.pgl_order = pgl.group.order();
    r.verified = r.pgl_order == (r.sl_order / r.mu_order) * r.mu_order && r.mu_order == std::gcd<std::uint64_t>(n, q - 1);
    return r;
}

}  // namespace schurkit
