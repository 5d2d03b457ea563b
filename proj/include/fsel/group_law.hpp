#pragma once

// Group law on a long Weierstrass curve over an abstract field context.

#include "fsel/arith.hpp"
#include "fsel/weierstrass.hpp"

#include <stdexcept>
#include <string>

namespace fsel {

/// Q as a field context, for exact arithmetic on rational points.
class RationalField {
  public:
    using Elem = BigRat;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const { return BigRat(static_cast<long>(v)); }
    Elem from_int(const BigInt& v) const { return BigRat(v); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    std::string str(const Elem& a) const { return a.get_str(); }
};

/// Maps a rational into a field context; the denominator must be invertible.
template <class Field>
typename Field::Elem embed_rational(const Field& F, const BigRat& v) {
    const auto den = F.from_int(BigInt(v.get_den()));
    if (F.is_zero(den)) throw std::domain_error("embed_rational: denominator vanishes in the field");
    return F.div(F.from_int(BigInt(v.get_num())), den);
}

template <class Field>
struct Point {
    typename Field::Elem x{}, y{};
    bool infinity = true;
};

template <class Field>
class CurveOver {
  public:
    using Elem = typename Field::Elem;
    using P = Point<Field>;

    CurveOver(const Field& F, const WeierstrassModel& E)
        : F_(F),
          a1_(embed_rational(F, E.a1())),
          a2_(embed_rational(F, E.a2())),
          a3_(embed_rational(F, E.a3())),
          a4_(embed_rational(F, E.a4())),
          a6_(embed_rational(F, E.a6())) {
        if (F.is_zero(embed_rational(F, E.discriminant())))
            throw std::invalid_argument("curve is singular over this field: " + E.str());
    }

    const Field& field() const { return F_; }
    const Elem& a1() const { return a1_; }
    const Elem& a2() const { return a2_; }
    const Elem& a3() const { return a3_; }
    const Elem& a4() const { return a4_; }
    const Elem& a6() const { return a6_; }

    P identity() const { return P{F_.zero(), F_.zero(), true}; }
    P point(const Elem& x, const Elem& y) const {
        P pt{x, y, false};
        if (!on_curve(pt)) throw std::invalid_argument("point not on curve");
        return pt;
    }

    bool on_curve(const P& pt) const {
        if (pt.infinity) return true;
        const auto& F = F_;
        const Elem& x = pt.x;
        const Elem& y = pt.y;
        Elem lhs = F.add(F.mul(y, y), F.add(F.mul(F.mul(a1_, x), y), F.mul(a3_, y)));
        Elem rhs = F.add(F.mul(F.mul(x, x), F.add(x, a2_)), F.add(F.mul(a4_, x), a6_));
        return F.equal(lhs, rhs);
    }

    bool equal(const P& a, const P& b) const {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return F_.equal(a.x, b.x) && F_.equal(a.y, b.y);
    }

    P neg(const P& pt) const {
        if (pt.infinity) return pt;
        const auto& F = F_;
        return P{pt.x, F.sub(F.neg(pt.y), F.add(F.mul(a1_, pt.x), a3_)), false};
    }

    P add(const P& p1, const P& p2) const {
        if (p1.infinity) return p2;
        if (p2.infinity) return p1;
        const auto& F = F_;
        Elem lambda, nu;
        if (F.equal(p1.x, p2.x)) {
            // p2 = -p1 ?
            const Elem s = F.add(F.add(p1.y, p2.y), F.add(F.mul(a1_, p2.x), a3_));
            if (F.is_zero(s)) return identity();
            const Elem x = p1.x, y = p1.y;
            const Elem den = F.add(F.add(F.add(y, y), F.mul(a1_, x)), a3_);
            const Elem x2 = F.mul(x, x);
            Elem num = F.add(F.add(F.mul(F.from_int(3), x2), F.mul(F.add(a2_, a2_), x)), F.sub(a4_, F.mul(a1_, y)));
            lambda = F.div(num, den);
            Elem nnum = F.sub(F.add(F.neg(F.mul(x2, x)), F.add(F.mul(a4_, x), F.add(a6_, a6_))), F.mul(a3_, y));
            nu = F.div(nnum, den);
        } else {
            const Elem dx = F.sub(p2.x, p1.x);
            lambda = F.div(F.sub(p2.y, p1.y), dx);
            nu = F.div(F.sub(F.mul(p1.y, p2.x), F.mul(p2.y, p1.x)), dx);
        }
        const Elem x3 = F.sub(F.sub(F.add(F.mul(lambda, lambda), F.mul(a1_, lambda)), a2_), F.add(p1.x, p2.x));
        const Elem y3 = F.sub(F.neg(F.mul(F.add(lambda, a1_), x3)), F.add(nu, a3_));
        return P{x3, y3, false};
    }

    P dbl(const P& pt) const { return add(pt, pt); }

    /// [k]P by double-and-add; negative k uses -P.
    P scalar_mul(const P& pt, const BigInt& k) const {
        if (k < 0) return scalar_mul(neg(pt), -k);
        P result = identity();
        for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
            result = dbl(result);
            if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = add(result, pt);
        }
        return result;
    }

    /// Right-hand side of the completed square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
    Elem two_torsion_cubic(const Elem& x) const {
        const auto& F = F_;
        const Elem b2 = F.add(F.mul(a1_, a1_), F.mul(F.from_int(4), a2_));
        const Elem b4 = F.add(F.add(a4_, a4_), F.mul(a1_, a3_));
        const Elem b6 = F.add(F.mul(a3_, a3_), F.mul(F.from_int(4), a6_));
        Elem acc = F.from_int(4);
        acc = F.add(F.mul(acc, x), b2);
        acc = F.add(F.mul(acc, x), F.add(b4, b4));
        acc = F.add(F.mul(acc, x), b6);
        return acc;
    }

  private:
    Field F_;
    Elem a1_, a2_, a3_, a4_, a6_;
};

}  // namespace fsel
