#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "schurkit/error.hpp"

namespace schurkit {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

struct PrimePower {
    std::uint64_t p;
    unsigned k;
    std::uint64_t pk;
};

inline std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            PrimePower pp{d, 0, 1};
            while (n % d == 0) {
                n /= d;
                ++pp.k;
                pp.pk *= d;
            }
            out.push_back(pp);
        }
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

// Decomposes q as p^k; returns false when q is not a prime power >= 2.
inline bool as_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    p = f[0].p;
    k = f[0].k;
    return true;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t x, y;
    std::int64_t g = ext_gcd(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m), x, y);
    if (g != 1) throw ContractError("inv_mod: argument not invertible");
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

// p-adic valuation of x in Z/p^k; val(0) is reported as k.
inline unsigned val_p(std::uint64_t x, std::uint64_t p, unsigned k) {
    if (x == 0) return k;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Deterministic splitmix64, used for sampling schedules and seeded cochains.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

}  // namespace schurkit
