#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace civet {

/// Arbitrary-precision signed integer, sign-magnitude over base 2^32 limbs.
/// Sized for desk-scale exact arithmetic (Weyl dimension products, polynomial
/// binomials); no attempt at sub-quadratic multiplication.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) {
            negative_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long u = ~static_cast<unsigned long long>(v) + 1ULL;
            push_u64(u);
        } else {
            push_u64(static_cast<unsigned long long>(v));
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
            r.trim();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt{};
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        r.trim();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt{};
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.negative_ = a.negative_ != b.negative_;
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Truncated quotient and remainder (remainder has the dividend's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt{};
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            uint64_t d = b.limbs_[0];
            std::vector<uint32_t> quo(a.limbs_.size());
            uint64_t rem = 0;
            for (size_t i = a.limbs_.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a.limbs_[i];
                quo[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            q.limbs_ = std::move(quo);
            q.negative_ = a.negative_ != b.negative_;
            q.trim();
            r = BigInt{};
            r.push_u64(rem);
            r.negative_ = a.negative_;
            r.trim();
            return;
        }
        // Knuth-style long division after normalizing the divisor's top limb.
        int shift = 0;
        for (uint32_t top = b.limbs_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = shl_mag(a.limbs_, shift);
        std::vector<uint32_t> v = shl_mag(b.limbs_, shift);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        std::vector<uint32_t> quo(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= (1ULL << 32) ||
                   (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= (1ULL << 32)) break;
            }
            // multiply-subtract; fix up on borrow
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) -
                            static_cast<int64_t>(p & 0xffffffffu) - borrow;
                u[i + j] = static_cast<uint32_t>(t);
                borrow = t < 0 ? 1 : 0;
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            u[j + n] = static_cast<uint32_t>(t);
            if (t < 0) {
                --qhat;
                uint64_t carry2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + carry2;
                    u[i + j] = static_cast<uint32_t>(s);
                    carry2 = s >> 32;
                }
                u[j + n] += static_cast<uint32_t>(carry2);
            }
            quo[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        q.limbs_ = std::move(quo);
        q.negative_ = a.negative_ != b.negative_;
        q.trim();
        r.limbs_ = shr_mag(u, shift);
        r.negative_ = a.negative_;
        r.trim();
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

    /// Exact division; throws if the remainder is nonzero.
    BigInt div_exact(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
        return q;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
            b.negative_ = false;
        }
        return a;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    /// Fits in long long (for interop with the small sweeps).
    bool fits_ll() const {
        if (limbs_.size() > 2) return false;
        unsigned long long m = 0;
        for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        return negative_ ? m <= 0x8000000000000000ULL : m <= 0x7fffffffffffffffULL;
    }

    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long m = 0;
        for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        return negative_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string digits;
        std::vector<uint32_t> w = limbs_;
        while (!w.empty()) {
            uint64_t rem = 0;
            for (size_t i = w.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | w[i];
                w[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!w.empty() && w.back() == 0) w.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (negative_) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros
    bool negative_ = false;

    void push_u64(unsigned long long u) {
        if (u) limbs_.push_back(static_cast<uint32_t>(u));
        if (u >> 32) limbs_.push_back(static_cast<uint32_t>(u >> 32));
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0 ? 1 : 0;
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        return r;
    }

    static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size(), 0);
        uint32_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = (a[i] << s) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
        }
        if (carry) r.push_back(carry);
        return r;
    }

    static std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size(), 0);
        uint32_t carry = 0;
        for (size_t i = a.size(); i-- > 0;) {
            r[i] = (a[i] >> s) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) << (32 - s));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline std::string to_string(const BigInt& x) { return x.to_string(); }

}  // namespace civet
