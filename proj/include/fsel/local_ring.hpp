#pragma once

// Truncated valuation rings used by the local root finder: Z_p / p^W and
// Z_p[pi] / (g, p^W) with pi = zeta_p - 1. Both expose a uniformizer pi, a
// precision cap measured in powers of pi, and residue maps to F_p.

#include "fsel/arith.hpp"
#include "fsel/padic.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

/// Z_p modulo p^W. The uniformizer is p itself.
class ZpRing {
  public:
    using Elem = BigInt;

    ZpRing(BigInt p, int digits) : p_(std::move(p)), W_(digits), mod_(pow_int(p_, static_cast<unsigned long>(digits))) {
        if (W_ < 1) throw std::invalid_argument("ZpRing: precision must be positive");
    }

    const BigInt& prime() const { return p_; }
    int ramification() const { return 1; }
    int digits() const { return W_; }
    int cap() const { return W_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const BigInt& v) const { return mod(v, mod_); }
    Elem add(const Elem& a, const Elem& b) const { return mod(a + b, mod_); }
    Elem sub(const Elem& a, const Elem& b) const { return mod(a - b, mod_); }
    Elem neg(const Elem& a) const { return mod(-a, mod_); }
    Elem mul(const Elem& a, const Elem& b) const { return mod(a * b, mod_); }

    int val(const Elem& a) const { return a == 0 ? W_ : std::min(valuation(a, p_), W_); }
    Elem pi_pow(int k) const { return mod(pow_int(p_, static_cast<unsigned long>(k)), mod_); }
    /// a / pi^k, computed on the stored representative; requires val(a) >= k.
    Elem div_pi_pow(const Elem& a, int k) const {
        const BigInt d = pow_int(p_, static_cast<unsigned long>(k));
        if (!divides(d, a)) throw std::logic_error("ZpRing::div_pi_pow: not divisible");
        return a / d;
    }
    std::uint64_t residue(const Elem& a) const { return mod_u64(a, p_.get_ui()); }
    Elem from_residue(std::uint64_t r) const { return BigInt(static_cast<unsigned long>(r)); }
    Elem inv_unit(const Elem& a) const { return inverse_mod(a, mod_); }

  private:
    BigInt p_;
    int W_;
    BigInt mod_;
};

/// Z_p[pi] / (g(pi), p^W) where g(x) = ((1+x)^p - 1)/x is Eisenstein of degree
/// e = p - 1. Elements are coordinate vectors of length e in the basis
/// 1, pi, ..., pi^(e-1); the pi-adic precision cap is e * W.
class EisensteinRing {
  public:
    using Elem = std::vector<BigInt>;

    EisensteinRing(BigInt p, int digits) : p_(std::move(p)), W_(digits), mod_(pow_int(p_, static_cast<unsigned long>(digits))) {
        if (p_ < 3 || !is_prime(p_)) throw std::invalid_argument("EisensteinRing: p must be an odd prime");
        if (W_ < 1) throw std::invalid_argument("EisensteinRing: precision must be positive");
        const unsigned long pu = p_.get_ui();
        e_ = static_cast<int>(pu - 1);
        g_.resize(pu);
        for (unsigned long i = 1; i <= pu; ++i) g_[i - 1] = binomial(pu, i);
        // pi^e = -(g_0 + g_1 pi + ... + g_{e-1} pi^{e-1})
        pi_e_.resize(static_cast<std::size_t>(e_));
        for (int i = 0; i < e_; ++i) pi_e_[static_cast<std::size_t>(i)] = mod(-g_[static_cast<std::size_t>(i)], mod_);
        // p / pi = -(g_1 + g_2 pi + ... + g_{e-1} pi^{e-2} + pi^{e-1})
        p_over_pi_.assign(static_cast<std::size_t>(e_), BigInt(0));
        for (int i = 1; i <= e_; ++i) p_over_pi_[static_cast<std::size_t>(i - 1)] = mod(-g_[static_cast<std::size_t>(i)], mod_);
    }

    const BigInt& prime() const { return p_; }
    int ramification() const { return e_; }
    int digits() const { return W_; }
    int cap() const { return e_ * W_; }
    /// Coefficients of g, constant term first (length p, monic).
    const std::vector<BigInt>& eisenstein_polynomial() const { return g_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(e_), BigInt(0)); }
    Elem one() const {
        Elem r = zero();
        r[0] = 1;
        return r;
    }
    Elem from_int(const BigInt& v) const {
        Elem r = zero();
        r[0] = mod(v, mod_);
        return r;
    }
    Elem pi() const {
        Elem r = zero();
        if (e_ == 1)
            r[0] = pi_e_[0];
        else
            r[1] = 1;
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], mod_);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] - b[i], mod_);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(-a[i], mod_);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        const std::size_t e = static_cast<std::size_t>(e_);
        std::vector<BigInt> prod(2 * e - 1, BigInt(0));
        for (std::size_t i = 0; i < e; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < e; ++j) prod[i + j] += a[i] * b[j];
        }
        for (std::size_t k = prod.size(); k-- > e;) {
            prod[k] = mod(prod[k], mod_);
            if (prod[k] == 0) continue;
            for (std::size_t i = 0; i < e; ++i) prod[k - e + i] += prod[k] * pi_e_[i];
        }
        Elem r(e);
        for (std::size_t i = 0; i < e; ++i) r[i] = mod(prod[i], mod_);
        return r;
    }

    int val(const Elem& a) const {
        int v = cap();
        for (int i = 0; i < e_; ++i) {
            const auto& c = a[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            v = std::min(v, e_ * valuation(c, p_) + i);
        }
        return v;
    }
    Elem pi_pow(int k) const {
        Elem r = one();
        const Elem P = pi();
        for (int i = 0; i < k; ++i) r = mul(r, P);
        return r;
    }
    /// a / pi^k on the stored representative; requires val(a) >= k.
    Elem div_pi_pow(Elem a, int k) const {
        for (int s = 0; s < k; ++s) a = div_pi(a);
        return a;
    }
    std::uint64_t residue(const Elem& a) const { return mod_u64(a[0], p_.get_ui()); }
    Elem from_residue(std::uint64_t r) const { return from_int(BigInt(static_cast<unsigned long>(r))); }
    Elem inv_unit(const Elem& a) const {
        if (residue(a) == 0) throw std::domain_error("EisensteinRing::inv_unit: not a unit");
        Elem y = from_int(inverse_mod(a[0], p_));
        const Elem two = from_int(2);
        for (int it = 0; it < 2 * (64 - __builtin_clzll(static_cast<unsigned long long>(cap()) | 1ULL)) + 4; ++it) {
            const Elem ay = mul(a, y);
            if (val(sub(ay, one())) >= cap()) return y;
            y = mul(y, sub(two, ay));
        }
        if (val(sub(mul(a, y), one())) < cap()) throw std::logic_error("EisensteinRing::inv_unit: no convergence");
        return y;
    }

  private:
    Elem div_pi(const Elem& a) const {
        if (!divides(p_, a[0])) throw std::logic_error("EisensteinRing::div_pi: not divisible");
        Elem r = zero();
        const BigInt c = a[0] / p_;
        for (int i = 1; i < e_; ++i) r[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(i)];
        for (int i = 0; i < e_; ++i) r[static_cast<std::size_t>(i)] += c * p_over_pi_[static_cast<std::size_t>(i)];
        for (auto& x : r) x = mod(x, mod_);
        return r;
    }

    BigInt p_;
    int W_;
    BigInt mod_;
    int e_ = 0;
    std::vector<BigInt> g_;
    Elem pi_e_;
    Elem p_over_pi_;
};

/// An element of Z_p[zeta_p] = Z_p[pi], known modulo pi^precision.
class EisensteinElement {
  public:
    EisensteinElement(BigInt p, std::vector<BigInt> coords, int pi_precision)
        : p_(std::move(p)), coords_(std::move(coords)), prec_(pi_precision) {
        if (coords_.size() + 1 != p_.get_ui()) throw std::invalid_argument("EisensteinElement: need p - 1 coordinates");
    }

    const BigInt& prime() const { return p_; }
    int ramification() const { return static_cast<int>(coords_.size()); }
    /// Absolute precision in powers of pi.
    int pi_precision() const { return prec_; }
    const std::vector<BigInt>& raw_coordinates() const { return coords_; }

    /// Coordinate i as a p-adic number, with the precision it is known to.
    PadicNumber coordinate(int i) const {
        const int e = ramification();
        const int n = std::max(0, (prec_ - i + e - 1) / e);
        return PadicNumber(p_, BigRat(coords_.at(static_cast<std::size_t>(i))), n);
    }

    /// pi-adic valuation, or the precision if the element is indistinguishable from zero.
    int pi_valuation() const {
        const int e = ramification();
        int v = prec_;
        for (int i = 0; i < e; ++i) {
            const auto& c = coords_[static_cast<std::size_t>(i)];
            if (c != 0) v = std::min(v, e * fsel::valuation(c, p_) + i);
        }
        return v;
    }
    bool is_zero() const { return pi_valuation() >= prec_; }
    /// Valuation normalised so that v(p) = 1; an element of (1/(p-1))Z.
    BigRat valuation() const {
        BigRat v(pi_valuation(), ramification());
        v.canonicalize();
        return v;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < ramification(); ++i) {
            const auto& c = coords_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!s.empty()) s += " + ";
            s += c.get_str();
            if (i > 0) s += "*pi" + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        if (s.empty()) s = "0";
        return s + " + O(pi^" + std::to_string(prec_) + ")";
    }

  private:
    BigInt p_;
    std::vector<BigInt> coords_;
    int prec_;
};

}  // namespace fsel
