#pragma once

#include "fsel/arith.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q,
/// together with its b-, c-invariants, discriminant and j-invariant.
class WeierstrassModel {
  public:
    WeierstrassModel(BigRat a1, BigRat a2, BigRat a3, BigRat a4, BigRat a6)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
        a1_.canonicalize();
        a2_.canonicalize();
        a3_.canonicalize();
        a4_.canonicalize();
        a6_.canonicalize();
        b2_ = a1_ * a1_ + 4 * a2_;
        b4_ = 2 * a4_ + a1_ * a3_;
        b6_ = a3_ * a3_ + 4 * a6_;
        b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
        c4_ = b2_ * b2_ - 24 * b4_;
        c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
        disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
        if (disc_ == 0) throw std::invalid_argument("singular Weierstrass model (discriminant 0): " + str());
        j_ = c4_ * c4_ * c4_ / disc_;
    }

    static WeierstrassModel from_ints(const std::array<long, 5>& a) {
        return {BigRat(a[0]), BigRat(a[1]), BigRat(a[2]), BigRat(a[3]), BigRat(a[4])};
    }
    static WeierstrassModel from_bigints(const std::array<BigInt, 5>& a) {
        return {BigRat(a[0]), BigRat(a[1]), BigRat(a[2]), BigRat(a[3]), BigRat(a[4])};
    }

    const BigRat& a1() const { return a1_; }
    const BigRat& a2() const { return a2_; }
    const BigRat& a3() const { return a3_; }
    const BigRat& a4() const { return a4_; }
    const BigRat& a6() const { return a6_; }
    std::array<BigRat, 5> a_invariants() const { return {a1_, a2_, a3_, a4_, a6_}; }

    const BigRat& b2() const { return b2_; }
    const BigRat& b4() const { return b4_; }
    const BigRat& b6() const { return b6_; }
    const BigRat& b8() const { return b8_; }
    const BigRat& c4() const { return c4_; }
    const BigRat& c6() const { return c6_; }
    const BigRat& discriminant() const { return disc_; }
    const BigRat& j_invariant() const { return j_; }

    bool is_integral() const {
        for (const auto& a : a_invariants())
            if (a.get_den() != 1) return false;
        return true;
    }

    /// The a-invariants as integers; throws if the model is not integral.
    std::array<BigInt, 5> integral_a() const {
        if (!is_integral()) throw std::invalid_argument("model is not integral: " + str());
        return {a1_.get_num(), a2_.get_num(), a3_.get_num(), a4_.get_num(), a6_.get_num()};
    }

    /// Substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    WeierstrassModel transform(const BigRat& r, const BigRat& s, const BigRat& t, const BigRat& u = 1) const {
        if (u == 0) throw std::invalid_argument("transform: u must be nonzero");
        const BigRat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
        BigRat n1 = (a1_ + 2 * s) / u;
        BigRat n2 = (a2_ - s * a1_ + 3 * r - s * s) / u2;
        BigRat n3 = (a3_ + r * a1_ + 2 * t) / u3;
        BigRat n4 = (a4_ - s * a3_ + 2 * r * a2_ - (t + r * s) * a1_ + 3 * r * r - 2 * s * t) / u4;
        BigRat n6 = (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - r * t * a1_) / u6;
        return {n1, n2, n3, n4, n6};
    }

    /// An integral model obtained by scaling with u = 1/lcm(denominators).
    WeierstrassModel integral_model() const {
        BigInt d = 1;
        for (const auto& a : a_invariants()) d = lcm(d, BigInt(a.get_den()));
        if (d == 1) return *this;
        return transform(0, 0, 0, BigRat(1, 1) / BigRat(d));
    }

    std::string str() const {
        std::ostringstream os;
        os << '[' << a1_.get_str() << ',' << a2_.get_str() << ',' << a3_.get_str() << ',' << a4_.get_str() << ','
           << a6_.get_str() << ']';
        return os.str();
    }

    friend bool operator==(const WeierstrassModel& a, const WeierstrassModel& b) {
        return a.a_invariants() == b.a_invariants();
    }

  private:
    BigRat a1_, a2_, a3_, a4_, a6_;
    BigRat b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
};

/// The tuple (b2, b4, b6, b8, c4, c6, disc, j).
inline std::array<BigRat, 8> invariants(const WeierstrassModel& E) {
    return {E.b2(), E.b4(), E.b6(), E.b8(), E.c4(), E.c6(), E.discriminant(), E.j_invariant()};
}

/// Integral model with a1, a3 in {0, 1} and a2 in {-1, 0, 1}, reached by
/// translations only (u = 1).
inline WeierstrassModel reduced_model(const WeierstrassModel& E0) {
    const auto a = E0.integral_a();
    const BigInt s = (mod(a[0], BigInt(2)) - a[0]) / 2;
    WeierstrassModel E = E0.transform(0, BigRat(s), 0);
    const BigInt a2 = E.a2().get_num();
    const BigInt r = -((a2 + 1 - mod(a2 + 1, BigInt(3))) / 3);
    E = E.transform(BigRat(r), 0, 0);
    const BigInt a3 = E.a3().get_num();
    const BigInt t = (mod(a3, BigInt(2)) - a3) / 2;
    return E.transform(0, 0, BigRat(t));
}

}  // namespace fsel
