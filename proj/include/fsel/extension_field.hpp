#pragma once

#include "fsel/factor_fq.hpp"
#include "fsel/prime_field.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

/// F_{l^f} = F_l[t]/(m(t)). Elements are coordinate vectors of length f with
/// respect to 1, t, ..., t^(f-1). The default modulus is the least monic
/// irreducible of degree f, ordering coefficient vectors from the t^(f-1)
/// coefficient down to the constant term; f = 1 uses m(t) = t.
class ExtensionField {
  public:
    using Elem = std::vector<std::uint64_t>;

    ExtensionField(std::uint64_t l, int f) : base_(l), f_(f) {
        if (f < 1) throw std::invalid_argument("ExtensionField: degree must be >= 1");
        modulus_ = least_irreducible(base_, f);
        init_order();
    }

    ExtensionField(std::uint64_t l, FieldPoly<PrimeField> modulus) : base_(l), f_(fpoly::degree(modulus)) {
        if (f_ < 1 || modulus.back() != 1) throw std::invalid_argument("ExtensionField: modulus must be monic");
        if (!is_irreducible(base_, modulus)) throw std::invalid_argument("ExtensionField: modulus is reducible");
        modulus_ = std::move(modulus);
        init_order();
    }

    static FieldPoly<PrimeField> least_irreducible(const PrimeField& k, int f) {
        const std::uint64_t l = k.characteristic();
        if (f == 1) return {0, 1};
        std::uint64_t total = 1;
        for (int i = 0; i < f; ++i) total *= l;
        for (std::uint64_t code = 0; code < total; ++code) {
            FieldPoly<PrimeField> m(static_cast<std::size_t>(f) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < f; ++i) {
                m[static_cast<std::size_t>(i)] = c % l;
                c /= l;
            }
            m[static_cast<std::size_t>(f)] = 1;
            if (m[0] == 0) continue;
            if (is_irreducible(k, m)) return m;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    const PrimeField& base() const { return base_; }
    const FieldPoly<PrimeField>& modulus() const { return modulus_; }
    std::uint64_t characteristic() const { return base_.characteristic(); }
    int degree() const { return f_; }
    BigInt order() const { return order_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(f_), 0); }
    Elem one() const { return from_prime_field(1); }
    Elem from_prime_field(std::uint64_t v) const {
        Elem r = zero();
        r[0] = base_.from_prime_field(v);
        return r;
    }
    Elem from_int(std::int64_t v) const { return from_prime_field(base_.from_int(v)); }
    Elem from_int(const BigInt& v) const { return from_prime_field(base_.from_int(v)); }
    /// The class of t.
    Elem generator() const {
        if (f_ == 1) return from_prime_field(base_.neg(modulus_[0]));
        Elem r = zero();
        r[1] = 1;
        return r;
    }

    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c != 0) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        const auto f = static_cast<std::size_t>(f_);
        std::vector<std::uint64_t> prod(2 * f - 1, 0);
        for (std::size_t i = 0; i < f; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < f; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
        }
        for (std::size_t k = prod.size(); k-- > f;) {
            const auto c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::size_t j = 0; j < f; ++j) prod[k - f + j] = base_.sub(prod[k - f + j], base_.mul(c, modulus_[j]));
        }
        prod.resize(f);
        return prod;
    }
    Elem pow(Elem a, const BigInt& e) const {
        Elem result = one();
        for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
            result = mul(result, result);
            if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mul(result, a);
        }
        return result;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("ExtensionField: inverse of zero");
        FieldPoly<PrimeField> pa(a.begin(), a.end());
        fpoly::trim(base_, pa);
        auto [g, s, t] = fpoly::xgcd(base_, pa, modulus_);
        (void)t;
        Elem r = zero();
        for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[i];
        return r;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    template <class Rng>
    Elem random(Rng& rng) const {
        Elem r(static_cast<std::size_t>(f_));
        for (auto& c : r) c = base_.random(rng);
        return r;
    }

    std::uint64_t size() const { return order_.get_ui(); }
    std::uint64_t index(const Elem& a) const {
        std::uint64_t idx = 0;
        for (std::size_t i = a.size(); i-- > 0;) idx = idx * base_.characteristic() + a[i];
        return idx;
    }
    Elem from_index(std::uint64_t idx) const {
        Elem r = zero();
        for (auto& c : r) {
            c = idx % base_.characteristic();
            idx /= base_.characteristic();
        }
        return r;
    }

    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
        os << ']';
        return os.str();
    }

  private:
    void init_order() { order_ = pow_int(BigInt(static_cast<unsigned long>(base_.characteristic())), static_cast<unsigned long>(f_)); }

    PrimeField base_;
    int f_;
    FieldPoly<PrimeField> modulus_;
    BigInt order_;
};

using FqElem = ExtensionField::Elem;

/// Square test in F_q via Euler's criterion; 0 counts as a square.
template <class Field>
bool is_square(const Field& F, const typename Field::Elem& x) {
    if (F.characteristic() == 2) throw std::invalid_argument("is_square: characteristic 2 is not supported");
    if (F.is_zero(x)) return true;
    return F.equal(F.pow(x, (F.order() - 1) / 2), F.one());
}

}  // namespace fsel
