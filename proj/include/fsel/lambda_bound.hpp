#pragma once

// Hypothesis ledger and assembly of the upper bound
//   lambda <= 2 dim Y + dim Z + sum_{v in S_0} 2 g_v + sum_{v in S_p} delta_v g_v
// in its specialized form (global terms forced to zero) and its general form
// (global terms supplied).

#include "fsel/cyclotomic.hpp"
#include "fsel/galois_image.hpp"
#include "fsel/local_invariants.hpp"
#include "fsel/weierstrass.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

namespace hyp {
inline constexpr const char* good_reduction = "good-reduction-above-p";
inline constexpr const char* finitely_decomposed = "finitely-decomposed";
inline constexpr const char* image_condition = "image-condition";
inline constexpr const char* ramification = "unique-total-ramification";
inline constexpr const char* a_k_zero = "A-K-zero";
inline constexpr const char* y_torsion = "Y-torsion-mu-zero";
}  // namespace hyp

/// Canonical hypothesis id for a user-facing name, or nullopt.
inline std::optional<std::string> canonical_assumption(const std::string& name) {
    static const std::map<std::string, std::string> table = {
        {"image-condition", hyp::image_condition},
        {"image-order-coprime", hyp::image_condition},
        {"image-nonsolvable", hyp::image_condition},
        {"unique-total-ramification", hyp::ramification},
        {"A-K-zero", hyp::a_k_zero},
        {"Y-torsion-mu-zero", hyp::y_torsion},
        {"finitely-decomposed", hyp::finitely_decomposed},
    };
    const auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

enum class HypStatus { certified, asserted, refuted, inconclusive };

inline const char* to_string(HypStatus s) {
    switch (s) {
        case HypStatus::certified: return "certified";
        case HypStatus::asserted: return "asserted";
        case HypStatus::refuted: return "refuted";
        case HypStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct LedgerEntry {
    std::string id;
    HypStatus status = HypStatus::inconclusive;
    std::string evidence;
    std::string source;
};

class HypothesisLedger {
  public:
    void set(const std::string& id, HypStatus st, std::string evidence, std::string source) {
        for (auto& e : entries_)
            if (e.id == id) {
                e = {id, st, std::move(evidence), std::move(source)};
                return;
            }
        entries_.push_back({id, st, std::move(evidence), std::move(source)});
    }
    /// A user assertion lifts an inconclusive entry; it never touches a refuted or certified one.
    void assert_if_open(const std::string& id, const std::string& why) {
        for (auto& e : entries_)
            if (e.id == id && e.status == HypStatus::inconclusive) {
                e.status = HypStatus::asserted;
                e.evidence += "; asserted: " + why;
                e.source = "user";
            }
    }
    const LedgerEntry& at(const std::string& id) const {
        for (const auto& e : entries_)
            if (e.id == id) return e;
        throw std::out_of_range("ledger has no entry " + id);
    }
    HypStatus status(const std::string& id) const { return at(id).status; }
    const std::vector<LedgerEntry>& entries() const { return entries_; }

  private:
    std::vector<LedgerEntry> entries_;
};

enum class Strength { unconditional, conditional, blocked };

inline const char* to_string(Strength s) {
    switch (s) {
        case Strength::unconditional: return "unconditional";
        case Strength::conditional: return "conditional";
        case Strength::blocked: return "blocked";
    }
    return "?";
}

/// Provenance of any number in a report.
enum class Provenance { computed_exact, conservative, asserted };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::computed_exact: return "computed-exact";
        case Provenance::conservative: return "conservative";
        case Provenance::asserted: return "asserted";
    }
    return "?";
}

inline Provenance combine(Provenance a, Provenance b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

enum class DimProvenance { certified_zero, asserted_zero, user_supplied };

inline const char* to_string(DimProvenance p) {
    switch (p) {
        case DimProvenance::certified_zero: return "certified-zero";
        case DimProvenance::asserted_zero: return "asserted-zero";
        case DimProvenance::user_supplied: return "user-supplied";
    }
    return "?";
}

struct GlobalDim {
    long value = 0;
    DimProvenance provenance = DimProvenance::certified_zero;
    Provenance number_provenance() const {
        return provenance == DimProvenance::certified_zero ? Provenance::computed_exact : Provenance::asserted;
    }
};

struct GlobalInvariants {
    std::optional<GlobalDim> dim_Y, dim_Z;
    bool p_regular = false;
    ImageCertificate image;
    /// K = F(E[p]) when determined, and whether that depends on an assertion.
    std::optional<std::string> field_K;
    bool field_K_conditional = false;
};

struct BoundTerm {
    std::string kind;   // "2*dim_Y", "dim_Z", "2*g_v", "delta_v*g_v"
    std::string place;  // empty for global terms
    BigInt coefficient; // 2, delta_v, 1
    BigInt g;           // g_v, or the dimension
    BigInt value;
    Provenance provenance = Provenance::computed_exact;
};

struct BoundCandidate {
    std::string form;  // "specialized" or "general"
    std::vector<std::string> required;
    Strength strength = Strength::blocked;
    std::vector<std::string> open;  // required ids that are neither certified nor asserted
    std::vector<BoundTerm> terms;
    BigInt value = 0;
    Provenance provenance = Provenance::computed_exact;

    BigInt sum_terms() const {
        BigInt s = 0;
        for (const auto& t : terms) s += t.value;
        return s;
    }
};

struct GTableEntry {
    long residue_char = 0;
    long residue_degree = 1;
    BigInt g;
};

struct BoundRequest {
    WeierstrassModel curve = WeierstrassModel::from_ints({0, 0, 1, -1, 0});
    std::string label;
    long p = 5;
    BaseField field = BaseField::Q;
    bool cyclotomic = true;
    std::vector<GTableEntry> g_table;
    std::set<std::string> assumptions;  // canonical ids
    std::optional<long> dim_Y, dim_Z;
    int precision = 32;
};

struct LambdaBoundReport {
    WeierstrassModel curve = WeierstrassModel::from_ints({0, 0, 1, -1, 0});
    std::string label;
    long p = 0;
    BaseField field = BaseField::Q;
    std::string extension;
    std::vector<LocalInvariant> places;
    std::optional<std::string> blocked_place;
    GlobalInvariants global;
    HypothesisLedger ledger;
    std::vector<BoundCandidate> candidates;
    std::optional<std::size_t> chosen;
    Strength strength = Strength::blocked;
    bool lambda_zero = false;
    bool cotorsion_mu_zero = false;
    std::vector<std::string> conservative_flags;
    std::vector<std::string> notes;

    const BoundCandidate* bound() const { return chosen ? &candidates[*chosen] : nullptr; }
    std::vector<std::string> S() const { return select([](const LocalInvariant& v) { return v.in_S; }); }
    std::vector<std::string> S0() const { return select([](const LocalInvariant& v) { return v.in_S0; }); }
    std::vector<std::string> Sp() const { return select([](const LocalInvariant& v) { return v.in_Sp; }); }

  private:
    template <class Pred>
    std::vector<std::string> select(Pred pred) const {
        std::vector<std::string> out;
        for (const auto& v : places)
            if (pred(v)) out.push_back(v.place.label());
        return out;
    }
};

namespace bounddetail {

inline Strength strength_of(const HypothesisLedger& L, const std::vector<std::string>& req, std::vector<std::string>& open) {
    Strength s = Strength::unconditional;
    for (const auto& id : req) {
        const auto st = L.status(id);
        if (st == HypStatus::refuted || st == HypStatus::inconclusive) {
            open.push_back(id);
            s = Strength::blocked;
        } else if (st == HypStatus::asserted && s != Strength::blocked) {
            s = Strength::conditional;
        }
    }
    return s;
}

inline std::vector<BoundTerm> local_terms(const std::vector<LocalInvariant>& places) {
    std::vector<BoundTerm> out;
    for (const auto& v : places) {
        const Provenance gp = v.g_user_supplied ? Provenance::asserted : Provenance::computed_exact;
        if (v.in_S0) out.push_back({"2*g_v", v.place.label(), BigInt(2), v.g.g, 2 * v.g.g, gp});
        if (v.in_Sp && v.delta) {
            const Provenance dp =
                v.delta->status == DeltaStatus::exact ? Provenance::computed_exact : Provenance::conservative;
            out.push_back({"delta_v*g_v", v.place.label(), BigInt(v.delta->delta), v.g.g, v.delta->delta * v.g.g,
                           combine(gp, dp)});
        }
    }
    return out;
}

inline BoundCandidate make_candidate(std::string form, std::vector<std::string> req, const HypothesisLedger& L,
                                     std::vector<BoundTerm> head, const std::vector<LocalInvariant>& places) {
    BoundCandidate c;
    c.form = std::move(form);
    c.required = std::move(req);
    c.strength = strength_of(L, c.required, c.open);
    c.terms = std::move(head);
    for (auto& t : local_terms(places)) c.terms.push_back(std::move(t));
    c.value = c.sum_terms();
    for (const auto& t : c.terms) c.provenance = combine(c.provenance, t.provenance);
    return c;
}

inline std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

}  // namespace bounddetail

inline const std::vector<std::string>& specialized_requirements() {
    static const std::vector<std::string> r = {hyp::good_reduction, hyp::finitely_decomposed, hyp::image_condition,
                                               hyp::ramification, hyp::a_k_zero};
    return r;
}

inline const std::vector<std::string>& general_requirements() {
    static const std::vector<std::string> r = {hyp::good_reduction, hyp::finitely_decomposed, hyp::y_torsion};
    return r;
}

/// Runs every computation and assembles both forms of the bound where the
/// inputs allow. Throws std::invalid_argument for malformed requests.
inline LambdaBoundReport assemble(const BoundRequest& rq) {
    using bounddetail::join;
    if (rq.p < 3 || rq.p > 13 || !is_prime(BigInt(rq.p)))
        throw std::invalid_argument("p must be an odd prime <= 13, got " + std::to_string(rq.p));
    if ((rq.dim_Y && *rq.dim_Y < 0) || (rq.dim_Z && *rq.dim_Z < 0))
        throw std::invalid_argument("dim_Y and dim_Z must be nonnegative");
    if (!rq.curve.is_integral()) throw std::invalid_argument("curve must have integral a-invariants");
    if (!rq.cyclotomic && rq.g_table.empty())
        throw std::invalid_argument("a user extension needs a g_v table");

    const long p = rq.p;
    const std::string pstr = std::to_string(p);
    const std::string Fname = field_name(rq.field, p);
    const std::string qmup = "Q(mu_" + pstr + ")";
    LambdaBoundReport R;
    R.curve = rq.curve;
    R.label = rq.label;
    R.p = p;
    R.field = rq.field;
    R.extension = rq.cyclotomic ? "cyclotomic" : "user";
    auto& L = R.ledger;
    const auto assumed = [&](const char* id) { return rq.assumptions.count(id) > 0; };

    // Local data.
    bool good_above_p = true;
    try {
        auto sets = compute_place_sets(rq.curve, p, rq.field);
        R.places = std::move(sets.places);
        L.set(hyp::good_reduction, HypStatus::certified, "good reduction at " + pstr + " (Kodaira I0)", "local-reduction");
    } catch (const BadReductionAboveP& e) {
        good_above_p = false;
        R.blocked_place = e.place();
        const auto t = tate_reduction(rq.curve, BigInt(p)).type;
        const bool open = rq.field == BaseField::QMuP && t == ReductionType::additive;
        L.set(hyp::good_reduction, open ? HypStatus::inconclusive : HypStatus::refuted, e.what(), "local-reduction");
    }

    if (good_above_p) {
        for (auto& v : R.places) {
            if (!rq.cyclotomic) {
                const auto it = std::find_if(rq.g_table.begin(), rq.g_table.end(), [&](const GTableEntry& g) {
                    return g.residue_char == v.place.l && g.residue_degree == v.place.f;
                });
                if (it == rq.g_table.end())
                    throw std::invalid_argument("g table has no entry for residue_char " + std::to_string(v.place.l) +
                                                ", residue_degree " + std::to_string(v.place.f));
                if (it->g < 1) throw std::invalid_argument("g table entries must be positive");
                v.g = GValue{it->g, 0, -1, 0};
                v.g_user_supplied = true;
            }
            if (v.in_Sp) v.delta = delta_v(rq.curve, p, rq.field, rq.precision);
        }
    }
    if (rq.cyclotomic)
        L.set(hyp::finitely_decomposed, HypStatus::certified,
              "every finite place is finitely decomposed in the cyclotomic Z_" + pstr + "-extension", "local-reduction");
    else
        L.set(hyp::finitely_decomposed, HypStatus::asserted, "g_v taken from the user table", "user");

    // Residual image and K = F(E[p]).
    auto& G = R.global;
    G.p_regular = is_regular(p);
    G.image = classify_image(rq.curve, p);
    const auto& img = G.image;
    const bool image_cert =
        img.nonsolvable == FlagStatus::certified || img.order_coprime_to_p == FlagStatus::certified;
    {
        std::ostringstream ev;
        ev << "classification " << to_string(img.classification) << " with " << img.witnesses.size()
           << " stable subgroup(s)";
        if (img.nonsolvable == FlagStatus::certified) ev << "; image contains SL_2(F_" << p << "), non-solvable";
        if (img.order_coprime_to_p == FlagStatus::certified) ev << "; image diagonal, order prime to " << p;
        L.set(hyp::image_condition, image_cert ? HypStatus::certified : HypStatus::inconclusive, ev.str(), "galois-image");
    }
    if (assumed(hyp::image_condition)) L.assert_if_open(hyp::image_condition, "image order prime to p or image non-solvable");

    if (img.field_K) {
        G.field_K = *img.field_K;
    } else if (L.status(hyp::image_condition) == HypStatus::asserted &&
               img.classification == ImageClass::one_stable_subgroup && semistable_and_good_at(rq.curve, p)) {
        // Under the assertion the image is semisimple, hence a sum of 1 and the cyclotomic character.
        G.field_K = qmup;
        G.field_K_conditional = true;
    }

    if (G.field_K) {
        const auto rc = kinf_ramification(*G.field_K, p, rq.cyclotomic);
        const HypStatus ok = G.field_K_conditional ? HypStatus::asserted : HypStatus::certified;
        if (rc.mode == CertMode::certified && rc.unique_ramified_place && rc.totally_ramified)
            L.set(hyp::ramification, ok,
                  "K = " + *G.field_K + (G.field_K_conditional ? " under the asserted image condition" : "") +
                      "; the prime above " + pstr + " is the only ramified place and is totally ramified",
                  "cyclotomic-data");
        else
            L.set(hyp::ramification, HypStatus::inconclusive, "K = " + *G.field_K + " with a non-cyclotomic extension",
                  "cyclotomic-data");
        if (G.p_regular)
            L.set(hyp::a_k_zero, ok,
                  pstr + " is regular (it divides no numerator of B_k, k even, 2 <= k <= " + std::to_string(p - 3) +
                      "), so A(" + *G.field_K + ") = 0",
                  "cyclotomic-data");
        else
            L.set(hyp::a_k_zero, G.field_K_conditional ? HypStatus::inconclusive : HypStatus::refuted,
                  pstr + " is irregular, so p divides the class number of " + *G.field_K, "cyclotomic-data");
    } else {
        L.set(hyp::ramification, HypStatus::inconclusive, "K = " + Fname + "(E[" + pstr + "]) is not determined",
              "cyclotomic-data");
        L.set(hyp::a_k_zero, HypStatus::inconclusive, "K = " + Fname + "(E[" + pstr + "]) is not determined",
              "cyclotomic-data");
    }
    if (assumed(hyp::ramification)) L.assert_if_open(hyp::ramification, "declared by the user");
    if (assumed(hyp::a_k_zero)) L.assert_if_open(hyp::a_k_zero, "declared by the user");

    {
        const auto r = L.status(hyp::ramification), a = L.status(hyp::a_k_zero);
        const auto ok = [](HypStatus s) { return s == HypStatus::certified || s == HypStatus::asserted; };
        if (r == HypStatus::certified && a == HypStatus::certified)
            L.set(hyp::y_torsion, HypStatus::certified, "Y = 0 from unique total ramification and A(K) = 0", "lambda-bound");
        else if (ok(r) && ok(a))
            L.set(hyp::y_torsion, HypStatus::asserted, "Y = 0 from asserted ramification and A(K) hypotheses",
                  "lambda-bound");
        else
            L.set(hyp::y_torsion, HypStatus::inconclusive, "Y is not controlled by the computed data", "lambda-bound");
        if (assumed(hyp::y_torsion)) L.assert_if_open(hyp::y_torsion, "declared by the user");
        if (rq.dim_Y) L.assert_if_open(hyp::y_torsion, "implied by the user-supplied dim_Y");
    }

    // Global terms.
    const auto zero_from = [&](std::initializer_list<const char*> ids) -> std::optional<GlobalDim> {
        bool all_cert = true;
        for (const char* id : ids) {
            const auto s = L.status(id);
            if (s == HypStatus::refuted || s == HypStatus::inconclusive) return std::nullopt;
            if (s != HypStatus::certified) all_cert = false;
        }
        return GlobalDim{0, all_cert ? DimProvenance::certified_zero : DimProvenance::asserted_zero};
    };
    const auto derived_Y = zero_from({hyp::ramification, hyp::a_k_zero});
    const auto derived_Z = zero_from({hyp::image_condition});
    G.dim_Y = rq.dim_Y ? std::optional<GlobalDim>(GlobalDim{*rq.dim_Y, DimProvenance::user_supplied}) : derived_Y;
    G.dim_Z = rq.dim_Z ? std::optional<GlobalDim>(GlobalDim{*rq.dim_Z, DimProvenance::user_supplied}) : derived_Z;

    // Candidates.
    if (good_above_p) {
        R.candidates.push_back(
            bounddetail::make_candidate("specialized", specialized_requirements(), L, {}, R.places));
        if (rq.dim_Y || rq.dim_Z) {
            std::vector<BoundTerm> head;
            auto gen = bounddetail::make_candidate("general", general_requirements(), L, {}, R.places);
            if (G.dim_Y && G.dim_Z) {
                head.push_back({"2*dim_Y", "", BigInt(2), BigInt(G.dim_Y->value), BigInt(2 * G.dim_Y->value),
                                G.dim_Y->number_provenance()});
                head.push_back({"dim_Z", "", BigInt(1), BigInt(G.dim_Z->value), BigInt(G.dim_Z->value),
                                G.dim_Z->number_provenance()});
                gen = bounddetail::make_candidate("general", general_requirements(), L, head, R.places);
                if (gen.strength == Strength::unconditional &&
                    (G.dim_Y->provenance != DimProvenance::certified_zero ||
                     G.dim_Z->provenance != DimProvenance::certified_zero))
                    gen.strength = Strength::conditional;
            } else {
                gen.strength = Strength::blocked;
                gen.open.push_back(G.dim_Y ? "dim_Z" : "dim_Y");
            }
            R.candidates.push_back(std::move(gen));
        }
    } else {
        R.candidates.push_back(bounddetail::make_candidate("specialized", specialized_requirements(), L, {}, {}));
        R.candidates.back().strength = Strength::blocked;
    }

    for (std::size_t i = 0; i < R.candidates.size(); ++i) {
        const auto& c = R.candidates[i];
        if (c.strength == Strength::blocked) continue;
        if (!R.chosen) {
            R.chosen = i;
            continue;
        }
        const auto& b = R.candidates[*R.chosen];
        if (c.value < b.value || (c.value == b.value && static_cast<int>(c.strength) < static_cast<int>(b.strength)))
            R.chosen = i;
    }
    R.strength = R.chosen ? R.candidates[*R.chosen].strength : Strength::blocked;

    for (const auto& v : R.places)
        if (v.delta && v.delta->status == DeltaStatus::conservative)
            R.conservative_flags.push_back("delta at " + v.place.label() + " is the conservative value 2");

    // Notes.
    for (const auto& n : img.notes) R.notes.push_back("image: " + n);
    if (G.field_K_conditional)
        R.notes.push_back("K = " + qmup + " is derived from the asserted image condition: a semisimple image with a stable "
                          "line, semistable reduction and good reduction at " + pstr + " is 1 + cyclotomic");
    if (R.bound()) {
        const auto* b = R.bound();
        R.cotorsion_mu_zero = true;
        R.notes.push_back(std::string("conclusion (") + to_string(R.strength) +
                          "): the fine Selmer group over F_inf is Lambda-cotorsion with mu = 0 and lambda <= " +
                          b->value.get_str());
        if (b->value == 0) {
            R.lambda_zero = true;
            R.notes.push_back(std::string("corollary (") + to_string(R.strength) +
                              "): S_0 is empty and delta_v = 0 exactly at every place above p, so lambda(E/F_inf) = 0");
        }
    } else if (good_above_p) {
        std::vector<std::string> open;
        for (const auto& c : R.candidates)
            for (const auto& id : c.open)
                if (std::find(open.begin(), open.end(), id) == open.end()) open.push_back(id);
        R.notes.push_back("no bound emitted: open hypotheses " + join(open) +
                          "; rerun with --assume <id> to obtain a conditional bound");
    } else {
        R.notes.push_back("blocked: " + L.at(hyp::good_reduction).evidence);
    }
    if (rq.dim_Y)
        R.notes.push_back("dim_Y is user-supplied; it equals the lambda-invariant of Y only when Y has no nonzero finite "
                          "Lambda-submodule");
    if (!R.conservative_flags.empty())
        R.notes.push_back("conservative: " + join(R.conservative_flags, "; ") + "; the bound remains valid");

    // Over Q(mu_p), compare with the base-field bound to expose how split places multiply.
    if (rq.field == BaseField::QMuP && good_above_p && rq.cyclotomic) {
        BigInt over_K = 0;
        for (const auto& t : bounddetail::local_terms(R.places)) over_K += t.value;
        BigInt over_Q = 0;
        std::string q_delta;
        try {
            auto sets = compute_place_sets(rq.curve, p, BaseField::Q);
            for (auto& v : sets.places) {
                if (v.in_Sp) {
                    v.delta = delta_v(rq.curve, p, BaseField::Q, rq.precision);
                    q_delta = std::to_string(v.delta->delta);
                }
            }
            for (const auto& t : bounddetail::local_terms(sets.places)) over_Q += t.value;
        } catch (const BadReductionAboveP&) {
            over_Q = -1;
        }
        std::map<long, long> split_count;
        BigInt s0_total = 0, sp_total = 0;
        for (const auto& v : R.places) {
            if (v.in_S0) {
                split_count[v.place.l] += 1;
                s0_total += 2 * v.g.g;
            }
            if (v.in_Sp && v.delta) sp_total += v.delta->delta * v.g.g;
        }
        if (over_Q >= 0 && over_K > over_Q) {
            std::ostringstream os;
            os << "discrepancy: over " << qmup << " the S_0 places";
            for (const auto& [l, n] : split_count) os << " (" << n << " above " << l << ")";
            os << " contribute " << s0_total.get_str() << " and the places above " << p << " contribute "
               << sp_total.get_str() << ", so the formula gives " << s0_total.get_str() << " + delta = "
               << over_K.get_str() << "; the bound over Q is " << over_Q.get_str() << " (delta_" << p << " = " << q_delta
               << ") and does not carry over to " << qmup << " by this formula";
            R.notes.push_back(os.str());
        }
    }
    return R;
}

/// Specialized form only: no global terms.
inline LambdaBoundReport assemble_specialized(const WeierstrassModel& E, long p, BaseField F,
                                              const std::set<std::string>& assumptions = {}) {
    BoundRequest rq;
    rq.curve = E;
    rq.p = p;
    rq.field = F;
    rq.assumptions = assumptions;
    return assemble(rq);
}

/// Adds the general form with user-supplied dimensions.
inline LambdaBoundReport assemble_general(const WeierstrassModel& E, long p, BaseField F, long dim_Y, long dim_Z,
                                          const std::set<std::string>& assumptions = {}) {
    BoundRequest rq;
    rq.curve = E;
    rq.p = p;
    rq.field = F;
    rq.assumptions = assumptions;
    rq.dim_Y = dim_Y;
    rq.dim_Z = dim_Z;
    return assemble(rq);
}

/// The candidate of the given form, if present.
inline const BoundCandidate* candidate(const LambdaBoundReport& R, const std::string& form) {
    for (const auto& c : R.candidates)
        if (c.form == form) return &c;
    return nullptr;
}

}  // namespace fsel
