#pragma once

// Arbitrary-magnitude signed integers. Sign-magnitude representation over
// 32-bit limbs, little-endian. Division is truncating (C semantics); a
// round-to-nearest quotient is provided for entry-size control in
// elimination loops.

#include <cstdint>
#include <type_traits>
#include <cstdlib>
#include <string>
#include <vector>

#include "schurkit/error.hpp"

namespace schurkit {

class BigInt {
  public:
    BigInt() = default;
    template <class T, class = std::enable_if_t<std::is_integral_v<T>>>
    BigInt(T value) {  // NOLINT: implicit by design
        auto v = static_cast<long long>(value);
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i == s.size()) throw ParseError("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("BigInt: bad digit in numeral");
            r.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = abs_u64_unchecked();
        if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
        return u <= 0x8000000000000000ull;
    }
    long long to_int64() const {
        if (!fits_int64()) throw OverflowError("BigInt: value does not fit in 64 bits");
        unsigned long long u = abs_u64_unchecked();
        return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.sign_ == b.sign_ && a.mag_ == b.mag_; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const { return sign_ < 0 ? -*this : *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.mag_[i];
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = r.mag_[i + j] + ai * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t j = i + b.mag_.size();
            while (carry != 0) {
                std::uint64_t cur = r.mag_[j] + carry;
                r.mag_[j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++j;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        if (r.mag_.empty()) r.sign_ = 0;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncating division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw ContractError("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Quotient rounded to the nearest integer (ties toward zero): the q
    // minimizing |a - q*b|.
    static BigInt div_round(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        BigInt r2 = r + r;
        if (cmp_mag(r2.mag_, b.mag_) > 0) q += BigInt(a.sign_ * b.sign_);
        return q;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    // Nonnegative residue modulo a small modulus.
    std::uint64_t mod_u64(std::uint64_t m) const {
        if (m == 0) throw ContractError("BigInt: zero modulus");
        unsigned __int128 r = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            r = ((r << 32) | mag_[i]) % m;
        }
        std::uint64_t v = static_cast<std::uint64_t>(r);
        if (sign_ < 0 && v != 0) v = m - v;
        return v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

  private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    }
    unsigned long long abs_u64_unchecked() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }
    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * mul + carry;
            mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry != 0) {
            mag_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry != 0) r.push_back(1);
        return r;
    }
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += (1ll << 32);
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        int shift = 0;
        for (std::uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
        std::vector<std::uint32_t> u = shl_mag(a, shift);
        std::vector<std::uint32_t> v = shl_mag(b, shift);
        const std::size_t n = v.size();
        const std::size_t m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const std::uint64_t vtop = v[n - 1];
        const std::uint64_t vsec = v[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / vtop;
            std::uint64_t rhat = num % vtop;
            if (qhat > 0xffffffffu) {
                qhat = 0xffffffffu;
                rhat = num - qhat * vtop;
            }
            while (rhat <= 0xffffffffu && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
            }
            // u[j..j+n] -= qhat * v
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t prod = qhat * v[i] + carry;
                carry = prod >> 32;
                std::int64_t cur = static_cast<std::int64_t>(u[j + i]) -
                                   static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
                borrow = cur < 0 ? 1 : 0;
                if (cur < 0) cur += (1ll << 32);
                u[j + i] = static_cast<std::uint32_t>(cur);
            }
            std::int64_t cur = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
            if (cur < 0) {
                // qhat was one too large: add v back.
                cur += (1ll << 32);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[j + i]) + v[i] + c2;
                    u[j + i] = static_cast<std::uint32_t>(s & 0xffffffffu);
                    c2 = s >> 32;
                }
                cur += static_cast<std::int64_t>(c2);
                cur &= 0xffffffffll;
            }
            u[j + n] = static_cast<std::uint32_t>(cur);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        r = shr_mag(u, shift);
    }
    static std::vector<std::uint32_t> shl_mag(std::vector<std::uint32_t> v, int s) {
        if (s == 0) return v;
        std::uint32_t carry = 0;
        for (auto& limb : v) {
            std::uint32_t next = limb >> (32 - s);
            limb = (limb << s) | carry;
            carry = next;
        }
        if (carry != 0) v.push_back(carry);
        return v;
    }
    static std::vector<std::uint32_t> shr_mag(std::vector<std::uint32_t> v, int s) {
        if (s != 0) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] >>= s;
                if (i + 1 < v.size()) v[i] |= v[i + 1] << (32 - s);
            }
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
};

// 128-bit integers with overflow detection, for the opt-in fixed-width fast
// path. Any overflow raises OverflowError telling the caller to switch to
// the default big-integer mode.
class Checked128 {
  public:
    Checked128() : v_(0) {}
    template <class T, class = std::enable_if_t<std::is_integral_v<T>>>
    Checked128(T v) : v_(static_cast<long long>(v)) {}  // NOLINT: implicit by design

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
    Checked128 abs() const { return v_ < 0 ? raw(-v_) : *this; }
    Checked128 operator-() const { return raw(-v_); }

    friend bool operator==(Checked128 a, Checked128 b) { return a.v_ == b.v_; }
    friend bool operator!=(Checked128 a, Checked128 b) { return a.v_ != b.v_; }
    friend bool operator<(Checked128 a, Checked128 b) { return a.v_ < b.v_; }
    friend bool operator>(Checked128 a, Checked128 b) { return a.v_ > b.v_; }
    friend bool operator<=(Checked128 a, Checked128 b) { return a.v_ <= b.v_; }
    friend bool operator>=(Checked128 a, Checked128 b) { return a.v_ >= b.v_; }

    friend Checked128 operator+(Checked128 a, Checked128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
        return raw(r);
    }
    friend Checked128 operator-(Checked128 a, Checked128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
        return raw(r);
    }
    friend Checked128 operator*(Checked128 a, Checked128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
        return raw(r);
    }
    Checked128& operator+=(Checked128 o) { return *this = *this + o; }
    Checked128& operator-=(Checked128 o) { return *this = *this - o; }
    Checked128& operator*=(Checked128 o) { return *this = *this * o; }

    static void divmod(Checked128 a, Checked128 b, Checked128& q, Checked128& r) {
        if (b.v_ == 0) throw ContractError("Checked128: division by zero");
        q = raw(a.v_ / b.v_);
        r = raw(a.v_ % b.v_);
    }
    friend Checked128 operator/(Checked128 a, Checked128 b) {
        Checked128 q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Checked128 operator%(Checked128 a, Checked128 b) {
        Checked128 q, r;
        divmod(a, b, q, r);
        return r;
    }
    static Checked128 div_round(Checked128 a, Checked128 b) {
        Checked128 q, r;
        divmod(a, b, q, r);
        __int128 r2 = r.v_ * 2;  // |r| < |b| <= 2^126, no overflow
        __int128 ab = b.v_ < 0 ? -b.v_ : b.v_;
        if ((r2 < 0 ? -r2 : r2) > ab) q += raw((a.v_ < 0) == (b.v_ < 0) ? 1 : -1);
        return q;
    }
    static Checked128 gcd(Checked128 a, Checked128 b) {
        __int128 x = a.abs().v_, y = b.abs().v_;
        while (y != 0) {
            __int128 t = x % y;
            x = y;
            y = t;
        }
        return raw(x);
    }

    long long to_int64() const {
        if (v_ > 0x7fffffffffffffffll || v_ < -0x7fffffffffffffffll - 1) {
            throw OverflowError("Checked128: value does not fit in 64 bits");
        }
        return static_cast<long long>(v_);
    }
    std::string to_string() const {
        if (v_ == 0) return "0";
        __int128 x = v_;
        bool neg = x < 0;
        std::string s;
        while (x != 0) {
            int d = static_cast<int>(x % 10);
            s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
            x /= 10;
        }
        if (neg) s.push_back('-');
        return std::string(s.rbegin(), s.rend());
    }

  private:
    __int128 v_;
    static Checked128 raw(__int128 v) {
        Checked128 c;
        c.v_ = v;
        return c;
    }
    [[noreturn]] static void overflow() {
        throw OverflowError("128-bit overflow in checked fast path; rerun in big-integer mode");
    }
};

}  // namespace schurkit
