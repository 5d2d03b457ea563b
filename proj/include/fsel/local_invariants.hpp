#pragma once

// Places of F in {Q, Q(mu_p)}, the sets S, S_p, S_0, and the local terms
// g_v and delta_v entering the lambda bound.

#include "fsel/arith.hpp"
#include "fsel/cyclotomic.hpp"
#include "fsel/division_poly.hpp"
#include "fsel/local_roots.hpp"
#include "fsel/point_count.hpp"
#include "fsel/tate.hpp"
#include "fsel/weierstrass.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

enum class BaseField { Q, QMuP };

inline std::string field_name(BaseField F, long p) { return F == BaseField::Q ? "Q" : "Q(mu_" + std::to_string(p) + ")"; }

struct PlaceDescriptor {
    BaseField field = BaseField::Q;
    long l = 0;      // residue characteristic
    long e = 1;      // ramification index over Q
    long f = 1;      // residue degree over Q
    long index = 0;  // among the conjugate places above l
    long count = 1;  // number of places above l

    std::string label() const {
        if (field == BaseField::Q) return std::to_string(l);
        std::string s = "v" + std::to_string(index + 1) + "|" + std::to_string(l);
        return s;
    }
};

/// Raised when E has bad reduction at a place above p.
class BadReductionAboveP : public std::runtime_error {
  public:
    BadReductionAboveP(const std::string& place, const std::string& why)
        : std::runtime_error("bad reduction above p at " + place + ": " + why), place_(place) {}
    const std::string& place() const { return place_; }

  private:
    std::string place_;
};

/// Places of F above the rational prime l.
inline std::vector<PlaceDescriptor> places_above(BaseField F, long l, long p) {
    if (F == BaseField::Q) return {PlaceDescriptor{F, l, 1, 1, 0, 1}};
    const auto d = decomposition_in_Qmup(l, p);
    std::vector<PlaceDescriptor> out;
    for (long i = 0; i < d.g; ++i) out.push_back({F, l, d.e, d.f, i, d.g});
    return out;
}

struct PlaceReduction {
    PlaceDescriptor place;
    ReductionType type;
    std::string kodaira;
    int disc_valuation;
};

/// Base change of the reduction at l != p to the places of Q(mu_p) above l.
/// These are unramified, so only nonsplit multiplicative can change: it
/// becomes split exactly when the residue degree is even.
inline std::vector<PlaceReduction> reduction_over_K(const ReductionData& rd, long p) {
    const long l = rd.prime.get_si();
    if (l == p) throw std::invalid_argument("reduction_over_K: the place above p is handled separately");
    std::vector<PlaceReduction> out;
    for (const auto& v : places_above(BaseField::QMuP, l, p)) {
        ReductionType t = rd.type;
        if (t == ReductionType::nonsplit_multiplicative && v.f % 2 == 0) t = ReductionType::split_multiplicative;
        out.push_back({v, t, rd.kodaira, rd.disc_valuation});
    }
    return out;
}

struct GValue {
    BigInt g;
    int exponent = 0;       // g = p^exponent
    int witness_valuation;  // v_p(l^f' - 1), or -1 for l = p
    long witness_power;     // f' (the power of l used in the witness)
};

/// Number of places above v in the cyclotomic Z_p-extension.
inline GValue g_v(const PlaceDescriptor& v, long p) {
    if (v.l == p) return {BigInt(1), 0, -1, 0};
    const long power = v.field == BaseField::Q ? p - 1 : v.f;
    const BigInt P(p);
    const int vp = valuation(BigInt(pow_int(BigInt(v.l), static_cast<unsigned long>(power)) - 1), P);
    const int m = std::max(0, vp - 1);
    return {pow_int(P, static_cast<unsigned long>(m)), m, vp, power};
}

/// Number of places above l in the n-th layer of the cyclotomic Z_p-extension
/// of Q (or of Q(mu_p) when f > 0 is the residue degree there), directly from
/// the decomposition group in (Z/p^(n+1))^x.
inline BigInt places_at_level(long l, long p, int n, long f_over_Qmup = 0) {
    const BigInt P(p), mod_n1 = pow_int(P, static_cast<unsigned long>(n + 1));
    const long power = f_over_Qmup > 0 ? f_over_Qmup : p - 1;
    const BigInt a = pow_mod(BigInt(l), BigInt(power), mod_n1);
    const BigInt ord = multiplicative_order(a, mod_n1);
    return pow_int(P, static_cast<unsigned long>(n)) / ord;
}

enum class DeltaStatus { exact, conservative };

inline const char* to_string(DeltaStatus s) { return s == DeltaStatus::exact ? "exact" : "conservative"; }

struct DeltaValue {
    int delta = 2;
    DeltaStatus status = DeltaStatus::conservative;
    std::string evidence;
    int working_digits = 0;
};

struct LocalInvariant {
    PlaceDescriptor place;
    ReductionType type = ReductionType::good;
    std::string kodaira = "I0";
    bool in_S = false, in_S0 = false, in_Sp = false;
    GValue g{BigInt(1), 0, -1, 0};
    bool g_user_supplied = false;
    std::optional<DeltaValue> delta;

    BigInt contribution() const {
        BigInt c = 0;
        if (in_S0) c += 2 * g.g;
        if (in_Sp && delta) c += delta->delta * g.g;
        return c;
    }
};

struct PlaceSets {
    std::vector<PlaceDescriptor> S, Sp, S0;
    std::vector<LocalInvariant> places;  // one entry per place of S
};

/// Does the completion F_v contain mu_p?
inline bool contains_mu_p(const PlaceDescriptor& v, long p) {
    if (v.field == BaseField::QMuP) return true;
    return v.l % p == 1;
}

/// Membership in S_0 for a bad place of residue characteristic != p.
inline bool in_S0(const PlaceDescriptor& v, ReductionType t, long p) {
    if (!is_bad(t)) return false;
    if (p >= 5 && contains_mu_p(v, p)) return t == ReductionType::split_multiplicative;
    return true;
}

/// Reduction at p, checked against the standing hypothesis.
inline ReductionData require_good_above_p(const WeierstrassModel& E, long p, BaseField F) {
    const auto rd = tate_reduction(E, BigInt(p));
    const std::string where = F == BaseField::Q ? std::to_string(p) : "eta_" + std::to_string(p);
    if (rd.type == ReductionType::good) return rd;
    if (F == BaseField::QMuP && rd.type == ReductionType::additive)
        throw BadReductionAboveP(where, "additive reduction at " + std::to_string(p) +
                                            " over Q; good reduction over Q_p(mu_p) is not established");
    throw BadReductionAboveP(where, std::string(to_string(rd.type)) + " reduction (Kodaira " + rd.kodaira + ")");
}

/// S, S_p and S_0 for E over F. Throws BadReductionAboveP when the standing
/// hypothesis fails.
inline PlaceSets compute_place_sets(const WeierstrassModel& E0, long p, BaseField F) {
    const WeierstrassModel E = E0.integral_model();
    const auto rdp = require_good_above_p(E, p, F);
    PlaceSets out;
    const BigInt disc = abs(E.discriminant().get_num());
    std::vector<BigInt> bad;
    for (const auto& [q, k] : factor_trial(disc)) {
        (void)k;
        if (q != p) bad.push_back(q);
    }
    for (const auto& q : bad) {
        const auto rd = tate_reduction(E, q);
        if (!is_bad(rd.type)) continue;
        std::vector<PlaceReduction> prs;
        if (F == BaseField::Q)
            prs.push_back({places_above(F, q.get_si(), p)[0], rd.type, rd.kodaira, rd.disc_valuation});
        else
            prs = reduction_over_K(rd, p);
        for (const auto& pr : prs) {
            LocalInvariant li;
            li.place = pr.place;
            li.type = pr.type;
            li.kodaira = pr.kodaira;
            li.in_S = true;
            li.in_S0 = in_S0(pr.place, pr.type, p);
            li.g = g_v(pr.place, p);
            out.S.push_back(pr.place);
            if (li.in_S0) out.S0.push_back(pr.place);
            out.places.push_back(li);
        }
    }
    for (const auto& v : places_above(F, p, p)) {
        LocalInvariant li;
        li.place = v;
        li.type = rdp.type;
        li.kodaira = rdp.kodaira;
        li.in_S = true;
        li.in_Sp = true;
        li.g = g_v(v, p);
        out.S.push_back(v);
        out.Sp.push_back(v);
        out.places.push_back(li);
    }
    // Sort by residue characteristic, then index.
    auto key = [](const PlaceDescriptor& a, const PlaceDescriptor& b) {
        return a.l != b.l ? a.l < b.l : a.index < b.index;
    };
    std::sort(out.S.begin(), out.S.end(), key);
    std::sort(out.S0.begin(), out.S0.end(), key);
    std::sort(out.places.begin(), out.places.end(), [&](const auto& a, const auto& b) { return key(a.place, b.place); });
    return out;
}

namespace deltadetail {

/// Is the ring element z a nonzero square, decided at precision P? nullopt
/// when z is indistinguishable from zero at that precision.
template <class Ring>
std::optional<bool> local_square(const Ring& R, const typename Ring::Elem& z, int P) {
    const int v = R.val(z);
    if (v >= P) return std::nullopt;
    if (v % 2 != 0) return false;
    const auto u = R.div_pi_pow(z, v);
    const long pl = R.prime().get_si();
    return legendre(BigInt(static_cast<unsigned long>(R.residue(u))), BigInt(pl)) == 1;
}

/// The completed-square cubic D(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 and its
/// reversal t^4 D(1/t), which has the same square class.
inline IntPoly two_torsion_cubic(const WeierstrassModel& E) {
    return IntPoly(std::vector<BigInt>{E.b6().get_num(), 2 * E.b4().get_num(), E.b2().get_num(), BigInt(4)});
}
inline IntPoly reversed_cubic(const WeierstrassModel& E) {
    return IntPoly(std::vector<BigInt>{BigInt(0), BigInt(4), E.b2().get_num(), 2 * E.b4().get_num(), E.b6().get_num()});
}

template <class Ring>
struct Outcome {
    int roots_certified = 0;
    int roots_inconclusive = 0;
    int undecided_squares = 0;
    bool found_point = false;
    int working_digits = 0;
};

template <class Ring>
Outcome<Ring> search_points(const WeierstrassModel& Em, long p, int N) {
    LocalRootOptions opts;
    opts.include_nonintegral = true;
    opts.initial_digits = std::max(N, 8);
    const IntPoly psi = division_polynomial(Em, static_cast<int>(p)).psi;
    const auto s = local_root_search<Ring>(psi, BigInt(p), N, opts);
    const Ring R(BigInt(p), s.working_digits);
    const auto D = localdetail::from_intpoly(R, two_torsion_cubic(Em));
    const auto Dr = localdetail::from_intpoly(R, reversed_cubic(Em));
    Outcome<Ring> out;
    out.working_digits = s.working_digits;
    for (const auto& r : s.roots) {
        if (r.certainty != RootCertainty::certified) {
            ++out.roots_inconclusive;
            continue;
        }
        ++out.roots_certified;
        const auto z = localdetail::eval(R, r.reciprocal ? Dr : D, r.value);
        const auto sq = local_square(R, z, r.precision);
        if (!sq)
            ++out.undecided_squares;
        else if (*sq)
            out.found_point = true;
    }
    return out;
}

}  // namespace deltadetail

/// delta_v = 2 if E(F_v)[p] != 0 else 0, for the place of F above p.
/// Requires good reduction there. N is the p-adic precision target.
inline DeltaValue delta_v(const WeierstrassModel& E0, long p, BaseField F, int N = 32) {
    const auto rd = require_good_above_p(E0, p, F);
    const WeierstrassModel& Em = rd.minimal_model;
    const std::string Fv = F == BaseField::Q ? "Q_" + std::to_string(p) : "Q_" + std::to_string(p) + "(mu_" + std::to_string(p) + ")";
    std::ostringstream ev;
    DeltaValue out;
    if (F == BaseField::Q) {
        const BigInt ap = trace_of_frobenius(Em, static_cast<std::uint64_t>(p));
        if (mod(ap, BigInt(p)) != 1) {
            ev << "a_" << p << " = " << ap.get_str() << " is not 1 mod " << p << ", so #E(F_" << p
               << ") is prime to " << p << " and E(" << Fv << ")[" << p << "] = 0";
            return {0, DeltaStatus::exact, ev.str(), 0};
        }
        ev << "a_" << p << " = " << ap.get_str() << " = 1 mod " << p << "; ";
        const auto o = deltadetail::search_points<ZpRing>(Em, p, N);
        out.working_digits = o.working_digits;
        ev << "psi_" << p << " has " << o.roots_certified << " certified root(s) in " << Fv;
        if (o.found_point) {
            ev << ", one of which lifts to a point of order " << p;
            return {2, DeltaStatus::exact, ev.str(), o.working_digits};
        }
        if (o.roots_inconclusive == 0 && o.undecided_squares == 0) {
            ev << ", none with y in " << Fv << "; E(" << Fv << ")[" << p << "] = 0";
            return {0, DeltaStatus::exact, ev.str(), o.working_digits};
        }
        ev << "; " << o.roots_inconclusive << " unresolved root cluster(s), " << o.undecided_squares
           << " undecided square test(s) at " << o.working_digits << " digits";
        return {2, DeltaStatus::conservative, ev.str(), o.working_digits};
    }
    const auto o = deltadetail::search_points<EisensteinRing>(Em, p, N);
    ev << "psi_" << p << " has " << o.roots_certified << " certified root(s) in " << Fv;
    if (o.found_point) {
        ev << ", one of which lifts to a point of order " << p;
        return {2, DeltaStatus::exact, ev.str(), o.working_digits};
    }
    if (o.roots_inconclusive == 0 && o.undecided_squares == 0) {
        ev << ", none with y in " << Fv << "; E(" << Fv << ")[" << p << "] = 0";
        return {0, DeltaStatus::exact, ev.str(), o.working_digits};
    }
    ev << "; " << o.roots_inconclusive << " unresolved root cluster(s), " << o.undecided_squares
       << " undecided square test(s) at " << o.working_digits << " digits";
    return {2, DeltaStatus::conservative, ev.str(), o.working_digits};
}

}  // namespace fsel
