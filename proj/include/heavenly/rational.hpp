#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"

namespace heavenly {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Just enough surface for exact rational arithmetic: + - * divmod gcd.
class BigInt {
  public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT: implicit by design
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        auto mag = static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v);
        if (v < 0) mag += 1; // avoid overflow on LLONG_MIN
        while (mag) {
            mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
            mag >>= 32;
        }
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            const int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt{};
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
        if (a.is_zero() || b.is_zero()) return {};
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                const std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                          r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                const std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    /// Truncated division; remainder carries the numerator's sign.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
        if (den.is_zero()) throw DomainError("BigInt division by zero");
        if (cmp_mag(num.mag_, den.mag_) < 0) {
            q = BigInt{};
            r = num;
            return;
        }
        // binary long division on magnitudes
        std::vector<std::uint32_t> quot(num.mag_.size(), 0);
        std::vector<std::uint32_t> rem;
        for (std::size_t bit = num.mag_.size() * 32; bit-- > 0;) {
            shl1(rem);
            if ((num.mag_[bit / 32] >> (bit % 32)) & 1u) {
                if (rem.empty())
                    rem.push_back(1);
                else
                    rem[0] |= 1u;
            }
            if (cmp_mag(rem, den.mag_) >= 0) {
                rem = sub_mag(rem, den.mag_);
                quot[bit / 32] |= (1u << (bit % 32));
            }
        }
        q.mag_ = std::move(quot);
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : num.sign_ * den.sign_;
        r.mag_ = std::move(rem);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : num.sign_;
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

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? BigInt(1) : a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        const int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt n = abs();
        const BigInt ten(10);
        std::string digits;
        while (!n.is_zero()) {
            BigInt q, r;
            divmod(n, ten, q, r);
            digits.push_back(static_cast<char>('0' + (r.mag_.empty() ? 0 : r.mag_[0])));
            n = std::move(q);
        }
        if (sign_ < 0) digits.push_back('-');
        return {digits.rbegin(), digits.rend()};
    }

  private:
    using Mag = std::vector<std::uint32_t>;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const Mag& a, const Mag& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static Mag add_mag(const Mag& a, const Mag& b) {
        Mag r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires a >= b
    static Mag sub_mag(const Mag& a, const Mag& b) {
        Mag r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = 0;
            if (cur < 0) {
                cur += 0x100000000LL;
                borrow = 1;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void shl1(Mag& m) {
        std::uint32_t carry = 0;
        for (auto& w : m) {
            const std::uint32_t next = w >> 31;
            w = (w << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    int sign_ = 0;
    Mag mag_;
};

/// Exact rational in lowest terms, positive denominator.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {} // NOLINT
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Exact: every finite double is mantissa * 2^e.
    static Rat from_double(double v) {
        if (v == 0.0) return {};
        if (!std::isfinite(v)) throw DomainError("non-finite value has no rational form");
        int e = 0;
        double m = std::frexp(v, &e); // v = m * 2^e, |m| in [0.5, 1)
        auto n = static_cast<long long>(std::ldexp(m, 53));
        e -= 53;
        Rat r(n);
        BigInt two(2);
        BigInt p(1);
        for (int k = 0; k < std::abs(e); ++k) p = p * two;
        if (e >= 0) return {r.num_ * p, r.den_};
        return {r.num_, r.den_ * p};
    }

    bool is_zero() const { return num_.is_zero(); }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("rational with zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = BigInt::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }

    BigInt num_, den_;
};

/// Exact complex number with rational components.
struct RatComplex {
    Rat re, im;

    RatComplex() = default;
    RatComplex(long long r) : re(r) {} // NOLINT
    RatComplex(Rat r) : re(std::move(r)) {} // NOLINT
    RatComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static RatComplex i_unit() { return {Rat(0), Rat(1)}; }
    static RatComplex from_complex(Complex z) {
        return {Rat::from_double(z.real()), Rat::from_double(z.imag())};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    RatComplex operator-() const { return {-re, -im}; }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RatComplex operator/(const RatComplex& a, const RatComplex& b) {
        const Rat n2 = b.re * b.re + b.im * b.im;
        if (n2.is_zero()) throw DomainError("complex rational division by zero");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    friend bool operator==(const RatComplex& a, const RatComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    Complex to_complex() const { return {re.to_double(), im.to_double()}; }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        return re.to_string() + (im.to_double() < 0 ? "" : "+") + im.to_string() + "i";
    }
};

inline RatComplex conj(const RatComplex& z) { return {z.re, -z.im}; }

} // namespace heavenly
