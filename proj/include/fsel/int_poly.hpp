#pragma once

#include "fsel/arith.hpp"
#include "fsel/field_poly.hpp"
#include "fsel/prime_field.hpp"

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsel {

/// Dense polynomial with integer coefficients, lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> cs) {
        for (long c : cs) c_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<BigInt> cs) : c_(std::move(cs)) { trim(); }

    static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly monomial(int n, const BigInt& v) {
        std::vector<BigInt> cs(static_cast<std::size_t>(n) + 1, BigInt(0));
        cs.back() = v;
        return IntPoly(std::move(cs));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : BigInt(0);
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a) { return IntPoly() - a; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const BigInt& k, const IntPoly& a) {
        std::vector<BigInt> r = a.c_;
        for (auto& c : r) c *= k;
        return IntPoly(std::move(r));
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    BigInt eval(const BigInt& v) const {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }
    BigRat eval(const BigRat& v) const {
        BigRat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + BigRat(c_[i]);
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(r));
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : c_) g = fsel::gcd(g, c);
        return g;
    }

    /// Divides by the content and makes the leading coefficient positive.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading() < 0) g = -g;
        return divexact(g);
    }

    IntPoly divexact(const BigInt& k) const {
        std::vector<BigInt> r = c_;
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        return IntPoly(std::move(r));
    }

    /// f(x + a)
    IntPoly taylor_shift(const BigInt& a) const {
        std::vector<BigInt> r = c_;
        const auto n = r.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j-- > i;) r[j] += a * r[j + 1];
        return IntPoly(std::move(r));
    }

    /// x^deg f(1/x)
    IntPoly reversed() const {
        std::vector<BigInt> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r));
    }

    FieldPoly<PrimeField> reduce(const PrimeField& F) const {
        FieldPoly<PrimeField> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(F.from_int(c));
        fpoly::trim(F, r);
        return r;
    }

    static IntPoly lift(const FieldPoly<PrimeField>& a) {
        std::vector<BigInt> r;
        for (auto v : a) r.emplace_back(static_cast<unsigned long>(v));
        return IntPoly(std::move(r));
    }

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& c = c_[i];
            if (c == 0) continue;
            BigInt a = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// True iff b divides a in Z[x]; the quotient is written out when requested.
inline bool divides_exactly(const IntPoly& a, const IntPoly& b, IntPoly* quotient = nullptr) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size()) {
        if (quotient) *quotient = IntPoly();
        return a.is_zero();
    }
    std::vector<BigInt> q(r.size() - bc.size() + 1, BigInt(0));
    const BigInt& lb = bc.back();
    const int db = static_cast<int>(bc.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
        const auto uk = static_cast<std::size_t>(k);
        if (r[uk] == 0) continue;
        if (!divides(lb, r[uk])) return false;
        BigInt c = r[uk] / lb;
        const auto shift = static_cast<std::size_t>(k - db);
        q[shift] = c;
        for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= c * bc[j];
    }
    for (const auto& v : r)
        if (v != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!divides_exactly(a, b, &q)) throw std::logic_error("exact_quotient: not divisible");
    return q;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size()) return a;
    const BigInt& lb = bc.back();
    int steps = static_cast<int>(r.size()) - static_cast<int>(bc.size()) + 1;
    while (r.size() >= bc.size() && !r.empty()) {
        const BigInt c = r.back();
        const std::size_t shift = r.size() - bc.size();
        for (auto& v : r) v *= lb;
        for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= c * bc[j];
        --steps;
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    BigInt extra = pow_int(lb, static_cast<unsigned long>(std::max(steps, 0)));
    for (auto& v : r) v *= extra;
    return IntPoly(std::move(r));
}

/// gcd in Z[x], primitive with positive leading coefficient (primitive PRS).
inline IntPoly gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    return a.primitive_part();
}

}  // namespace fsel
