#pragma once

// Precision-tracked elements of Q_p and Hensel lifting over Z_p.

#include "fsel/arith.hpp"
#include "fsel/int_poly.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fsel {

/// An element p^v * u + O(p^N) of Q_p. The unit u is stored modulo
/// p^(N - v). An element with v >= N is indistinguishable from zero; it is
/// stored with v = N and u = 0. Arithmetic never claims more absolute
/// precision than its inputs justify.
class PadicNumber {
  public:
    PadicNumber(BigInt p, const BigRat& value, int abs_prec) : p_(std::move(p)), prec_(abs_prec) {
        if (p_ < 2) throw std::invalid_argument("PadicNumber: bad prime");
        if (value == 0) {
            set_zero();
            return;
        }
        const int v = fsel::valuation(value, p_);
        if (v >= prec_) {
            set_zero();
            return;
        }
        val_ = v;
        BigInt num = value.get_num(), den = value.get_den();
        if (v > 0) num /= pow_int(p_, static_cast<unsigned long>(v));
        if (v < 0) den /= pow_int(p_, static_cast<unsigned long>(-v));
        const BigInt m = modulus_rel();
        unit_ = mod(num * inverse_mod(den, m), m);
    }

    static PadicNumber zero(const BigInt& p, int abs_prec) { return PadicNumber(p, BigRat(0), abs_prec); }

    const BigInt& prime() const { return p_; }
    int valuation() const { return val_; }
    int precision() const { return prec_; }
    int relative_precision() const { return prec_ - val_; }
    const BigInt& unit() const { return unit_; }
    bool is_zero() const { return val_ >= prec_; }

    /// Integer representative in [0, p^N); requires v >= 0.
    BigInt lift() const {
        if (val_ < 0) throw std::domain_error("PadicNumber::lift: not integral");
        if (is_zero()) return 0;
        return mod(unit_ * pow_int(p_, static_cast<unsigned long>(val_)), pow_int(p_, static_cast<unsigned long>(prec_)));
    }

    BigRat lift_rational() const {
        if (is_zero()) return 0;
        if (val_ >= 0) return BigRat(unit_ * pow_int(p_, static_cast<unsigned long>(val_)));
        return BigRat(unit_, pow_int(p_, static_cast<unsigned long>(-val_)));
    }

    /// True when both agree modulo p^min(N, N').
    bool agrees_with(const PadicNumber& o) const { return (*this - o).is_zero(); }

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
        check_same_prime(a, b);
        const int N = std::min(a.prec_, b.prec_);
        const int m = std::min(a.val_, b.val_);
        if (m >= N) return zero(a.p_, N);
        const BigInt mod_m = pow_int(a.p_, static_cast<unsigned long>(N - m));
        BigInt s = a.scaled(m) + b.scaled(m);
        return from_scaled(a.p_, mod(s, mod_m), m, N);
    }
    friend PadicNumber operator-(const PadicNumber& a) {
        PadicNumber r = a;
        if (!r.is_zero()) r.unit_ = mod(-r.unit_, r.modulus_rel());
        return r;
    }
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
        check_same_prime(a, b);
        const long n = std::min(static_cast<long>(a.prec_) + b.val_, static_cast<long>(b.prec_) + a.val_);
        const int N = static_cast<int>(std::clamp(n, static_cast<long>(INT_MIN / 4), static_cast<long>(INT_MAX / 4)));
        if (a.is_zero() || b.is_zero()) return zero(a.p_, N);
        PadicNumber r = zero(a.p_, N);
        r.val_ = a.val_ + b.val_;
        r.unit_ = mod(a.unit_ * b.unit_, r.modulus_rel());
        return r;
    }
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
        check_same_prime(a, b);
        if (b.is_zero()) throw std::domain_error("PadicNumber: division by an element indistinguishable from zero");
        const int rel = std::min(a.relative_precision(), b.relative_precision());
        if (a.is_zero()) return zero(a.p_, a.prec_ - b.val_);
        PadicNumber r = zero(a.p_, a.val_ - b.val_ + rel);
        r.val_ = a.val_ - b.val_;
        const BigInt m = r.modulus_rel();
        r.unit_ = mod(a.unit_ * inverse_mod(b.unit_, m), m);
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        if (is_zero()) {
            os << "O(" << p_.get_str() << "^" << prec_ << ")";
            return os.str();
        }
        os << unit_.get_str();
        if (val_ != 0) os << "*" << p_.get_str() << "^" << val_;
        os << " + O(" << p_.get_str() << "^" << prec_ << ")";
        return os.str();
    }

  private:
    PadicNumber(BigInt p, int abs_prec, bool) : p_(std::move(p)), prec_(abs_prec) { set_zero(); }
    static PadicNumber zero_raw(const BigInt& p, int N) { return PadicNumber(p, N, true); }

    void set_zero() {
        val_ = prec_;
        unit_ = 0;
    }
    BigInt modulus_rel() const { return pow_int(p_, static_cast<unsigned long>(std::max(prec_ - val_, 0))); }
    /// unit * p^(val - m) for m <= val (zero elements give 0).
    BigInt scaled(int m) const {
        if (is_zero()) return 0;
        return unit_ * pow_int(p_, static_cast<unsigned long>(val_ - m));
    }
    static PadicNumber from_scaled(const BigInt& p, BigInt x, int m, int N) {
        if (x == 0) return zero_raw(p, N);
        const int v = fsel::valuation(x, p);
        if (m + v >= N) return zero_raw(p, N);
        PadicNumber r = zero_raw(p, N);
        r.val_ = m + v;
        x /= pow_int(p, static_cast<unsigned long>(v));
        r.unit_ = mod(x, r.modulus_rel());
        return r;
    }
    static void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("PadicNumber: mismatched primes");
    }

    BigInt p_;
    int val_ = 0;
    int prec_ = 0;
    BigInt unit_;
};

/// p-adic valuation of an integer, with INT_MAX for zero.
inline int valuation_or_inf(const BigInt& a, const BigInt& p) { return a == 0 ? INT_MAX : valuation(a, p); }

/// Newton/Hensel lifting of an approximate root r0 of f. Requires
/// v(f(r0)) > 2 v(f'(r0)); returns nullopt otherwise. The result r satisfies
/// f(r) = 0 mod p^N, and r = r0 mod p^(v(f'(r0)) + 1). The returned element
/// carries the precision to which the true root is determined.
inline std::optional<PadicNumber> hensel_lift(const IntPoly& f, const BigInt& r0, const BigInt& p, int N) {
    if (N < 1) throw std::invalid_argument("hensel_lift: precision must be positive");
    const IntPoly df = f.derivative();
    const BigInt f0 = f.eval(r0);
    if (f0 == 0) return PadicNumber(p, BigRat(r0), N);
    const BigInt d0 = df.eval(r0);
    if (d0 == 0) return std::nullopt;
    const int vf = valuation(f0, p), k = valuation(d0, p);
    if (vf <= 2 * k) return std::nullopt;
    const BigInt pk = pow_int(p, static_cast<unsigned long>(k));
    const BigInt work = pow_int(p, static_cast<unsigned long>(N + k + 1));
    BigInt x = mod(r0, work);
    for (int iter = 0; iter < 4 * N + 64; ++iter) {
        const BigInt fx = f.eval(x);
        if (fx == 0 || valuation(fx, p) >= N + k) break;
        const BigInt dx = df.eval(x);
        // f(x)/f'(x) = (f(x)/p^k) / (f'(x)/p^k); the second factor is a unit
        const BigInt step = mod((fx / pk) * inverse_mod(dx / pk, work), work);
        x = mod(x - step, work);
    }
    const BigInt fx = f.eval(x);
    if (fx != 0 && valuation(fx, p) < N) throw std::logic_error("hensel_lift: Newton iteration failed to converge");
    return PadicNumber(p, BigRat(x), N - k);
}

}  // namespace fsel
