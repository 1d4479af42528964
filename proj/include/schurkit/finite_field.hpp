#pragma once

// Exact arithmetic in F_q, q = p^k <= 2^16. Elements are indices 0..q-1
// encoding coefficient vectors base p (index = sum c_i p^i). The modulus is
// the lexicographically smallest monic irreducible of degree k over F_p,
// coefficients compared low-degree-first; multiplication runs on exp/log
// tables over a stored generator of the (cyclic) multiplicative group.

#include <cstdint>
#include <string>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/numtheory.hpp"

namespace schurkit {

class FieldFq {
  public:
    explicit FieldFq(std::uint32_t q) {
        std::uint64_t p64;
        unsigned k;
        if (q > (1u << 16) || !as_prime_power(q, p64, k)) {
            throw ContractError("field: q must be a prime power between 2 and 2^16");
        }
        p_ = static_cast<std::uint32_t>(p64);
        k_ = k;
        q_ = q;
        if (k_ == 1) {
            modulus_ = {0, 1};  // x (unused; the prime field needs no reduction)
        } else {
            find_modulus();
        }
        build_tables();
    }

    std::uint32_t p() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t generator() const { return gen_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (k_ == 1) return (a + b) % p_;
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_slow(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (k_ == 1) return (p_ - a) % p_;
        std::uint32_t r = 0, mult = 1;
        for (unsigned i = 0; i < k_; ++i) {
            std::uint32_t d = (a / mult) % p_;
            r += ((p_ - d) % p_) * mult;
            mult *= p_;
        }
        return r;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw ContractError("field: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
    }
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }
    // Discrete log base the stored generator; a must be a unit.
    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw ContractError("field: log of zero");
        return log_[a];
    }

    // Additive basis 1, x, x^2, ... as element indices.
    std::vector<std::uint32_t> additive_basis() const {
        std::vector<std::uint32_t> b;
        std::uint32_t m = 1;
        for (unsigned i = 0; i < k_; ++i) {
            b.push_back(m);
            m *= p_;
        }
        return b;
    }

    std::string element_name(std::uint32_t a) const {
        if (k_ == 1) return std::to_string(a);
        return "#" + std::to_string(a);
    }

  private:
    std::uint32_t p_ = 2, q_ = 2, gen_ = 1;
    unsigned k_ = 1;
    std::vector<std::uint32_t> modulus_;  // coefficients, low degree first, monic of degree k
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint32_t> add_table_;

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0, mult = 1;
        for (unsigned i = 0; i < k_; ++i) {
            std::uint32_t s = ((a / mult) % p_ + (b / mult) % p_) % p_;
            r += s * mult;
            mult *= p_;
        }
        return r;
    }

    // Polynomial helpers over F_p, coefficients low-first.
    static std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                               std::uint32_t p) {
        while (a.size() >= b.size()) {
            std::uint32_t lead = a.back();
            if (lead != 0) {
                std::uint32_t factor = static_cast<std::uint32_t>(mul_mod(lead, inv_mod(b.back(), p), p));
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    std::uint32_t sub = static_cast<std::uint32_t>(mul_mod(factor, b[i], p));
                    a[off + i] = (a[off + i] + p - sub) % p;
                }
            }
            a.pop_back();
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    static bool poly_is_zero(const std::vector<std::uint32_t>& a) { return a.empty(); }

    void find_modulus() {
        // Candidates x^k + sum c_i x^i in lex order of (c_0, c_1, ...).
        std::uint64_t total = 1;
        for (unsigned i = 0; i < k_; ++i) total *= p_;
        for (std::uint64_t v = 0; v < total; ++v) {
            std::vector<std::uint32_t> cand(k_ + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < k_; ++i) {
                cand[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            cand[k_] = 1;
            if (poly_irreducible(cand)) {
                modulus_ = cand;
                return;
            }
        }
        throw ContractError("field: no irreducible modulus found (internal)");
    }

    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        if (f[0] == 0) return false;  // divisible by x
        // Trial division by every monic polynomial of degree 1..k/2.
        for (unsigned d = 1; 2 * d <= k_; ++d) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t v = 0; v < count; ++v) {
                std::vector<std::uint32_t> g(d + 1, 0);
                std::uint64_t t = v;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(t % p_);
                    t /= p_;
                }
                g[d] = 1;
                if (poly_is_zero(poly_mod(f, g, p_))) return false;
            }
        }
        return true;
    }

    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
        if (k_ == 1) return static_cast<std::uint32_t>(mul_mod(a, b, p_));
        std::vector<std::uint32_t> pa(k_), pb(k_), prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            pa[i] = (a / ipow(p_, i)) % p_;
            pb[i] = (b / ipow(p_, i)) % p_;
        }
        for (unsigned i = 0; i < k_; ++i) {
            if (pa[i] == 0) continue;
            for (unsigned j = 0; j < k_; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + mul_mod(pa[i], pb[j], p_)) % p_);
            }
        }
        auto rem = poly_mod(prod, modulus_, p_);
        std::uint32_t r = 0;
        for (std::size_t i = 0; i < rem.size(); ++i) r += rem[i] * ipow(p_, static_cast<unsigned>(i));
        return r;
    }
    static std::uint32_t ipow(std::uint32_t b, unsigned e) {
        std::uint32_t r = 1;
        for (unsigned i = 0; i < e; ++i) r *= b;
        return r;
    }

    std::uint32_t raw_pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e != 0) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        // Smallest element of multiplicative order q-1.
        auto facs = factorize(q_ - 1);
        gen_ = 1;
        for (std::uint32_t c = q_ == 2 ? 1 : 2; c < q_; ++c) {
            bool ok = true;
            for (const auto& f : facs) {
                if (raw_pow(c, (q_ - 1) / f.p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = c;
                break;
            }
        }
        exp_.assign(q_ - 1, 1);
        log_.assign(q_, 0);
        std::uint32_t cur = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = raw_mul(cur, gen_);
        }
        if (cur != 1) throw ContractError("field: generator order mismatch (internal)");
        if (k_ > 1 && static_cast<std::uint64_t>(q_) * q_ <= (1u << 16)) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a) {
                for (std::uint32_t b = 0; b < q_; ++b) {
                    add_table_[static_cast<std::size_t>(a) * q_ + b] = add_slow(a, b);
                }
            }
        }
    }
};

}  // namespace schurkit
