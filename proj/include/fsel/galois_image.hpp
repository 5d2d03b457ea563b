#pragma once

// The mod-p image of Galois on E[p]: rational p-isogenies found from the
// factorisation of psi_p, a trace-sampling surjectivity test, and the
// resulting classification.

#include "fsel/arith.hpp"
#include "fsel/division_poly.hpp"
#include "fsel/factor_int.hpp"
#include "fsel/field_poly.hpp"
#include "fsel/group_law.hpp"
#include "fsel/int_poly.hpp"
#include "fsel/point_count.hpp"
#include "fsel/tate.hpp"
#include "fsel/weierstrass.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

inline constexpr std::uint64_t kIsogenyCheckBound = 100;
inline constexpr std::uint64_t kSurjectivitySampleBound = 10000;

struct StableSubgroupWitness {
    /// Primitive integer polynomial of degree (p-1)/2 whose roots are the
    /// x-coordinates of the nonzero points of the subgroup.
    IntPoly kernel;
    WeierstrassModel isogenous;
    std::vector<std::uint64_t> verified_primes;
};

enum class ImageClass { surjective_certified, two_stable_subgroups, one_stable_subgroup, inconclusive };

inline const char* to_string(ImageClass c) {
    switch (c) {
        case ImageClass::surjective_certified: return "SurjectiveCertified";
        case ImageClass::two_stable_subgroups: return "TwoStableSubgroups";
        case ImageClass::one_stable_subgroup: return "OneStableSubgroup";
        case ImageClass::inconclusive: return "Inconclusive";
    }
    return "?";
}

enum class FlagStatus { certified, inconclusive };

inline const char* to_string(FlagStatus s) { return s == FlagStatus::certified ? "certified" : "inconclusive"; }

struct TraceSample {
    std::uint64_t ell = 0;
    BigInt a;
};

/// Which of the three sampling criteria a single (a_l, l) pair meets mod p.
struct TraceCriteria {
    bool nonsplit = false;    // a != 0 and a^2 - 4l is a nonzero nonsquare
    bool split = false;       // a != 0 and a^2 - 4l is a nonzero square
    bool generic = false;     // a^2 / l not the class of a projective element of order 1, 2, 3, 4 or 5
};

inline TraceCriteria trace_criteria(std::uint64_t p, const BigInt& a, std::uint64_t ell) {
    TraceCriteria c;
    const BigInt P(static_cast<unsigned long>(p));
    const BigInt L(static_cast<unsigned long>(ell));
    if (mod(L, P) == 0) return c;
    const BigInt am = mod(a, P);
    const BigInt disc = mod(am * am - 4 * L, P);
    if (am != 0 && disc != 0) {
        if (legendre(disc, P) == 1)
            c.split = true;
        else
            c.nonsplit = true;
    }
    const BigInt u = mod(am * am * inverse_mod(L, P), P);
    c.generic = u != 0 && u != 1 && u != 2 && u != mod(BigInt(4), P) && mod(u * u - 3 * u + 1, P) != 0;
    return c;
}

struct SurjectivityResult {
    FlagStatus status = FlagStatus::inconclusive;
    std::optional<TraceSample> nonsplit, split, generic;
    std::size_t sampled = 0;
    std::uint64_t sample_bound = 0;
};

struct ImageCertificate {
    long p = 0;
    ImageClass classification = ImageClass::inconclusive;
    std::vector<StableSubgroupWitness> witnesses;
    std::optional<SurjectivityResult> surjectivity;
    FlagStatus nonsolvable = FlagStatus::inconclusive;
    FlagStatus order_coprime_to_p = FlagStatus::inconclusive;
    /// Descriptor of K = Q(E[p]) when it is determined.
    std::optional<std::string> field_K;
    std::vector<std::string> notes;
};

namespace imagedetail {

using QPoly = FieldPoly<RationalField>;

inline QPoly to_q(const IntPoly& f) {
    QPoly r;
    for (const auto& c : f.coeffs()) r.emplace_back(c);
    return r;
}

inline QPoly inverse_mod(const RationalField& Q, const QPoly& a, const QPoly& m) {
    auto [g, s, t] = fpoly::xgcd(Q, fpoly::rem(Q, a, m), m);
    (void)t;
    if (fpoly::degree(g) != 0) throw std::domain_error("not invertible modulo the kernel polynomial");
    return fpoly::rem(Q, fpoly::scale(Q, s, Q.inv(g[0])), m);
}

inline QPoly compose_mod(const RationalField& Q, const QPoly& f, const QPoly& x, const QPoly& m) {
    QPoly acc;
    for (std::size_t i = f.size(); i-- > 0;)
        acc = fpoly::add(Q, fpoly::mulmod(Q, acc, x, m), fpoly::constant(Q, f[i]));
    return fpoly::rem(Q, acc, m);
}

/// Elementary symmetric functions e1..e3 of the roots of h (zero past deg h).
inline std::array<BigRat, 3> elementary(const IntPoly& h) {
    const int d = h.degree();
    const BigRat lead(h.leading());
    std::array<BigRat, 3> e{0, 0, 0};
    for (int k = 1; k <= 3 && k <= d; ++k) {
        BigRat c = BigRat(h.coeff(d - k)) / lead;
        e[static_cast<std::size_t>(k - 1)] = (k % 2 == 1) ? BigRat(-c) : c;
    }
    return e;
}

inline std::vector<BigInt> denominator_primes(const WeierstrassModel& E) {
    BigInt den = 1;
    for (const auto& a : E.a_invariants()) den = lcm(den, BigInt(a.get_den()));
    std::vector<BigInt> out;
    for (const auto& [q, e] : factor_trial(den)) out.push_back(q);
    return out;
}

inline bool good_at(const WeierstrassModel& E, std::uint64_t l) {
    return E.is_integral() && !divides(BigInt(static_cast<unsigned long>(l)), BigInt(E.discriminant().get_num()));
}

}  // namespace imagedetail

/// True iff the roots of h are closed under P -> kP for 2 <= k <= deg h, so
/// that together with O and their y-companions they form a subgroup. Exact
/// arithmetic in Q[x]/(h).
inline bool kernel_closed_under_multiplication(const WeierstrassModel& E, const IntPoly& h) {
    using namespace imagedetail;
    const int d = h.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const RationalField Q;
    const QPoly m = fpoly::make_monic(Q, to_q(h));
    const auto f = division_polynomial_sequence(E, d + 1);
    const QPoly F2 = to_q(IntPoly(std::vector<BigInt>{BigInt(E.b6().get_num()), 2 * BigInt(E.b4().get_num()),
                                                      BigInt(E.b2().get_num()), BigInt(4)}));
    const QPoly X = fpoly::x(Q);
    for (int k = 2; k <= d; ++k) {
        const QPoly fk = to_q(f[static_cast<std::size_t>(k)]);
        QPoly num = fpoly::mul(Q, to_q(f[static_cast<std::size_t>(k + 1)]), to_q(f[static_cast<std::size_t>(k - 1)]));
        QPoly den = fpoly::mul(Q, fk, fk);
        if (k % 2 == 0)
            den = fpoly::mul(Q, den, F2);
        else
            num = fpoly::mul(Q, num, F2);
        QPoly xk;
        try {
            xk = fpoly::sub(Q, X, fpoly::mulmod(Q, fpoly::rem(Q, num, m), inverse_mod(Q, den, m), m));
        } catch (const std::domain_error&) {
            return false;
        }
        QPoly img = compose_mod(Q, m, fpoly::rem(Q, xk, m), m);
        fpoly::trim(Q, img);
        if (!img.empty()) return false;
    }
    return true;
}

/// The codomain of the isogeny with kernel cut out by h (odd order), from the
/// power sums of the roots of h, made minimal at every prime that could be
/// bad for it.
inline WeierstrassModel isogenous_curve(const WeierstrassModel& E, const IntPoly& h) {
    const auto [e1, e2, e3] = imagedetail::elementary(h);
    const BigRat d(h.degree());
    const BigRat s1 = e1;
    const BigRat s2 = e1 * e1 - 2 * e2;
    const BigRat s3 = e1 * e1 * e1 - 3 * e1 * e2 + 3 * e3;
    const BigRat t = 6 * s2 + E.b2() * s1 + d * E.b4();
    const BigRat w = 10 * s3 + 2 * E.b2() * s2 + 3 * E.b4() * s1 + d * E.b6();
    const WeierstrassModel raw(E.a1(), E.a2(), E.a3(), E.a4() - 5 * t, E.a6() - E.b2() * t - 7 * w);
    std::vector<BigInt> primes = imagedetail::denominator_primes(raw);
    primes.push_back(BigInt(2 * h.degree() + 1));
    for (const auto& [q, e] : factor_trial(abs(BigInt(E.discriminant().get_num())))) primes.push_back(q);
    for (const auto& [q, e] : factor_trial(abs(h.leading()))) primes.push_back(q);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return reduced_model(minimal_model_at(raw.integral_model(), primes));
}

/// Good primes l <= bound (for both curves) at which a_l agrees; nullopt on
/// the first disagreement.
inline std::optional<std::vector<std::uint64_t>> trace_agreement(const WeierstrassModel& E, const WeierstrassModel& E2,
                                                                 std::uint64_t bound = kIsogenyCheckBound) {
    std::vector<std::uint64_t> ok;
    for (const auto l : primes_up_to(bound)) {
        if (!imagedetail::good_at(E, l) || !imagedetail::good_at(E2, l)) continue;
        if (trace_of_frobenius(E, l) != trace_of_frobenius(E2, l)) return std::nullopt;
        ok.push_back(l);
    }
    return ok;
}

/// Galois-stable subgroups of order p, one witness per kernel polynomial.
inline std::vector<StableSubgroupWitness> find_stable_subgroups(const WeierstrassModel& E, long p) {
    const auto psi = division_polynomial(E, static_cast<int>(p)).psi;
    const int d = static_cast<int>((p - 1) / 2);
    std::vector<IntPoly> small;
    for (const auto& [g, mult] : factor_int_poly(psi).factors)
        if (g.degree() <= d) small.push_back(g);

    std::vector<IntPoly> candidates;
    // Subsets of the small factors whose degrees add up to d.
    const std::function<void(std::size_t, int, IntPoly)> walk = [&](std::size_t i, int deg, IntPoly acc) {
        if (deg == d) {
            candidates.push_back(acc.primitive_part());
            return;
        }
        for (std::size_t j = i; j < small.size(); ++j)
            if (deg + small[j].degree() <= d) walk(j + 1, deg + small[j].degree(), acc * small[j]);
    };
    walk(0, 0, IntPoly::constant(1));

    std::vector<StableSubgroupWitness> out;
    for (auto& h : candidates) {
        if (h.leading() < 0) h = BigInt(-1) * h;
        if (!divides_exactly(psi, h)) continue;
        if (!kernel_closed_under_multiplication(E, h)) continue;
        std::optional<WeierstrassModel> E2;
        try {
            E2 = isogenous_curve(E, h);
        } catch (const std::invalid_argument&) {
            continue;  // singular codomain
        }
        auto agree = trace_agreement(E, *E2);
        if (!agree) continue;
        out.push_back({h, *E2, std::move(*agree)});
    }
    return out;
}

/// Recheck a witness from scratch: exact division of psi_p, closure of the
/// kernel, the codomain, and trace agreement on the full range.
inline bool verify_witness(const WeierstrassModel& E, long p, const StableSubgroupWitness& w) {
    if (w.kernel.degree() != (p - 1) / 2) return false;
    if (!divides_exactly(division_polynomial(E, static_cast<int>(p)).psi, w.kernel)) return false;
    if (!kernel_closed_under_multiplication(E, w.kernel)) return false;
    if (!(isogenous_curve(E, w.kernel) == w.isogenous)) return false;
    const auto agree = trace_agreement(E, w.isogenous);
    return agree && *agree == w.verified_primes;
}

/// Sound test for rho-bar(G_Q) containing SL_2(F_p), p >= 5, from traces of
/// Frobenius at good primes up to `sample_bound`.
inline SurjectivityResult surjectivity_certificate(const WeierstrassModel& E, long p,
                                                   std::uint64_t sample_bound = kSurjectivitySampleBound) {
    SurjectivityResult r;
    r.sample_bound = sample_bound;
    if (p < 5) return r;
    const auto up = static_cast<std::uint64_t>(p);
    for (const auto l : primes_up_to(sample_bound)) {
        if (l == up || !imagedetail::good_at(E, l)) continue;
        const BigInt a = trace_of_frobenius(E, l);
        ++r.sampled;
        const auto c = trace_criteria(up, a, l);
        if (c.nonsplit && !r.nonsplit) r.nonsplit = TraceSample{l, a};
        if (c.split && !r.split) r.split = TraceSample{l, a};
        if (c.generic && !r.generic) r.generic = TraceSample{l, a};
        if (r.nonsplit && r.split && r.generic) {
            r.status = FlagStatus::certified;
            break;
        }
    }
    return r;
}

/// True when E is semistable and has good reduction at p.
inline bool semistable_and_good_at(const WeierstrassModel& E, long p) {
    const BigInt D = abs(BigInt(E.discriminant().get_num()));
    if (divides(BigInt(p), D)) return false;
    for (const auto& [q, e] : factor_trial(D)) {
        const auto t = tate_reduction(E, q).type;
        if (t == ReductionType::additive) return false;
    }
    return true;
}

inline ImageCertificate classify_image(const WeierstrassModel& E, long p) {
    ImageCertificate c;
    c.p = p;
    c.witnesses = find_stable_subgroups(E, p);
    const std::string qmup = "Q(mu_" + std::to_string(p) + ")";
    if (c.witnesses.size() >= 2) {
        c.classification = ImageClass::two_stable_subgroups;
        c.order_coprime_to_p = FlagStatus::certified;
        c.notes.push_back("two independent stable lines: the image is diagonal, of order dividing (p-1)^2");
        if (semistable_and_good_at(E, p)) {
            c.field_K = qmup;
            c.notes.push_back("semistable with good reduction at p: the two characters are 1 and the mod-p cyclotomic character, so K = " + qmup);
        } else {
            c.notes.push_back("the diagonal characters may ramify away from p; K is not identified");
        }
        return c;
    }
    if (c.witnesses.size() == 1) {
        c.classification = ImageClass::one_stable_subgroup;
        c.notes.push_back(
            "exactly one stable line: the image lies in a Borel subgroup; by Maschke a second stable line would exist "
            "if p did not divide the image order, so this evidence points against the order-coprime branch; "
            "both hypothesis flags stay inconclusive");
        return c;
    }
    c.surjectivity = surjectivity_certificate(E, p);
    if (c.surjectivity->status == FlagStatus::certified) {
        c.classification = ImageClass::surjective_certified;
        c.nonsolvable = FlagStatus::certified;
    }
    return c;
}

}  // namespace fsel
