#pragma once

#include "fsel/arith.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace fsel {

/// The prime field F_l for a word-sized prime l. Elements are residues in [0, l).
class PrimeField {
  public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t l) : l_(l) {
        if (l < 2 || l >= (std::uint64_t{1} << 62) || !is_prime(l))
            throw std::invalid_argument("PrimeField: " + std::to_string(l) + " is not a supported prime");
    }

    std::uint64_t characteristic() const { return l_; }
    int degree() const { return 1; }
    BigInt order() const { return BigInt(static_cast<unsigned long>(l_)); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(l_);
        return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(l_) : r);
    }
    Elem from_int(const BigInt& v) const { return mod_u64(v, l_); }
    Elem from_prime_field(std::uint64_t v) const { return v % l_; }

    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= l_ ? s - l_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + l_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : l_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % l_);
    }
    Elem pow(Elem a, const BigInt& e) const {
        Elem result = 1;
        for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
            result = mul(result, result);
            if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mul(result, a);
        }
        return result;
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem result = 1;
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, l_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    template <class Rng>
    Elem random(Rng& rng) const {
        return std::uniform_int_distribution<std::uint64_t>(0, l_ - 1)(rng);
    }

    // Enumeration of all q elements by index.
    std::uint64_t size() const { return l_; }
    std::uint64_t index(Elem a) const { return a; }
    Elem from_index(std::uint64_t i) const { return i; }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return l_ == o.l_; }

  private:
    std::uint64_t l_;
};

}  // namespace fsel
