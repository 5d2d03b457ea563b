#pragma once

// JSON and plain-text renderings of a LambdaBoundReport. Every integer is a
// decimal string wrapped with its provenance.

#include "fsel/lambda_bound.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>

namespace fsel {

using Json = nlohmann::ordered_json;

namespace reportdetail {

inline Json num(const BigInt& v, Provenance p = Provenance::computed_exact) {
    return Json{{"value", v.get_str()}, {"provenance", to_string(p)}};
}

inline Json num(long v, Provenance p = Provenance::computed_exact) { return num(BigInt(v), p); }

inline Json curve_json(const WeierstrassModel& E, const std::string& label) {
    Json a = Json::array();
    for (const auto& c : E.integral_a()) a.push_back(num(c));
    Json j;
    j["label"] = label;
    j["a_invariants"] = a;
    j["discriminant"] = num(BigInt(E.discriminant().get_num()));
    return j;
}

inline Json place_json(const LocalInvariant& v, long p) {
    Json j;
    j["label"] = v.place.label();
    j["residue_char"] = num(v.place.l);
    j["ramification_index"] = num(v.place.e);
    j["residue_degree"] = num(v.place.f);
    j["places_above_residue_char"] = num(v.place.count);
    j["reduction"] = to_string(v.type);
    j["kodaira"] = v.kodaira;
    j["in_S0"] = v.in_S0;
    j["in_Sp"] = v.in_Sp;
    Json g;
    g["g_v"] = num(v.g.g, v.g_user_supplied ? Provenance::asserted : Provenance::computed_exact);
    if (v.g_user_supplied) {
        g["source"] = "user g table";
    } else if (v.place.l == p) {
        g["source"] = "totally ramified";
    } else {
        g["source"] = "p^max(0, v_p(l^" + std::to_string(v.g.witness_power) + " - 1) - 1)";
        g["witness_power"] = num(v.g.witness_power);
        g["witness_valuation"] = num(v.g.witness_valuation);
    }
    j["g"] = g;
    if (v.delta) {
        const auto prov = v.delta->status == DeltaStatus::exact ? Provenance::computed_exact : Provenance::conservative;
        j["delta"] = Json{{"delta_v", num(v.delta->delta, prov)},
                          {"status", to_string(v.delta->status)},
                          {"working_digits", num(v.delta->working_digits)},
                          {"evidence", v.delta->evidence}};
    } else {
        j["delta"] = nullptr;
    }
    Provenance cp = v.g_user_supplied ? Provenance::asserted : Provenance::computed_exact;
    if (v.delta && v.delta->status == DeltaStatus::conservative) cp = combine(cp, Provenance::conservative);
    j["contribution"] = num(v.contribution(), cp);
    return j;
}

inline Json dim_json(const std::optional<GlobalDim>& d) {
    if (!d) return nullptr;
    return Json{{"dim", num(d->value, d->number_provenance())}, {"source", to_string(d->provenance)}};
}

inline Json image_json(const ImageCertificate& c) {
    Json j;
    j["classification"] = to_string(c.classification);
    j["nonsolvable"] = to_string(c.nonsolvable);
    j["order_coprime_to_p"] = to_string(c.order_coprime_to_p);
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
        Json a = Json::array();
        for (const auto& x : w.isogenous.integral_a()) a.push_back(x.get_str());
        Json ls = Json::array();
        for (auto l : w.verified_primes) ls.push_back(std::to_string(l));
        ws.push_back(Json{{"kernel_polynomial", w.kernel.str()},
                          {"isogenous_curve", a},
                          {"verified_primes", ls},
                          {"provenance", "computed-exact"}});
    }
    j["stable_subgroups"] = ws;
    if (c.surjectivity) {
        const auto& s = *c.surjectivity;
        Json sj;
        sj["status"] = to_string(s.status);
        sj["sample_bound"] = num(BigInt(static_cast<unsigned long>(s.sample_bound)));
        sj["primes_sampled"] = num(BigInt(static_cast<unsigned long>(s.sampled)));
        const auto sample = [](const std::optional<TraceSample>& t) -> Json {
            if (!t) return nullptr;
            return Json{{"ell", num(BigInt(static_cast<unsigned long>(t->ell)))}, {"a_ell", num(t->a)}};
        };
        sj["nonsplit_witness"] = sample(s.nonsplit);
        sj["split_witness"] = sample(s.split);
        sj["generic_witness"] = sample(s.generic);
        j["surjectivity"] = sj;
    } else {
        j["surjectivity"] = nullptr;
    }
    return j;
}

inline Json candidate_json(const BoundCandidate& c) {
    Json j;
    j["form"] = c.form;
    j["strength"] = to_string(c.strength);
    j["requires"] = c.required;
    j["open"] = c.open;
    Json ts = Json::array();
    for (const auto& t : c.terms) {
        Json tj;
        tj["term"] = t.kind;
        if (!t.place.empty()) tj["place"] = t.place;
        tj["coefficient"] = num(t.coefficient, t.provenance);
        tj["factor"] = num(t.g, t.provenance);
        tj["value"] = num(t.value, t.provenance);
        ts.push_back(tj);
    }
    j["terms"] = ts;
    j["value"] = num(c.value, c.provenance);
    return j;
}

}  // namespace reportdetail

inline Json report_to_json(const LambdaBoundReport& R) {
    using namespace reportdetail;
    Json j;
    j["curve"] = curve_json(R.curve, R.label);
    j["p"] = num(R.p);
    j["field"] = field_name(R.field, R.p);
    j["extension"] = R.extension;
    Json places = Json::array();
    for (const auto& v : R.places) places.push_back(place_json(v, R.p));
    j["places"] = places;

    Json g;
    g["dim_Y"] = dim_json(R.global.dim_Y);
    g["dim_Z"] = dim_json(R.global.dim_Z);
    g["p_regular"] = R.global.p_regular;
    g["field_K"] = R.global.field_K ? Json(*R.global.field_K) : Json(nullptr);
    g["field_K_conditional"] = R.global.field_K_conditional;
    g["sets"] = Json{{"S", R.S()}, {"S0", R.S0()}, {"Sp", R.Sp()}};
    g["residual_image"] = image_json(R.global.image);
    j["global_invariants"] = g;

    Json ledger = Json::array();
    for (const auto& e : R.ledger.entries())
        ledger.push_back(Json{{"id", e.id}, {"status", to_string(e.status)}, {"source", e.source}, {"evidence", e.evidence}});
    j["ledger"] = ledger;

    Json b;
    const auto* chosen = R.bound();
    b["emitted"] = chosen != nullptr;
    b["lambda_upper_bound"] = chosen ? num(chosen->value, chosen->provenance) : Json(nullptr);
    b["form"] = chosen ? Json(chosen->form) : Json(nullptr);
    b["cotorsion_mu_zero"] = R.cotorsion_mu_zero;
    b["lambda_zero"] = R.lambda_zero;
    b["conservative_flags"] = R.conservative_flags;
    Json cs = Json::array();
    for (const auto& c : R.candidates) cs.push_back(candidate_json(c));
    b["candidates"] = cs;
    j["bound"] = b;
    j["strength"] = to_string(R.strength);
    j["notes"] = R.notes;
    return j;
}

inline std::string report_to_text(const LambdaBoundReport& R) {
    std::ostringstream os;
    os << "curve " << R.curve.str();
    if (!R.label.empty()) os << "  (" << R.label << ")";
    os << "\np = " << R.p << ", F = " << field_name(R.field, R.p) << ", extension " << R.extension << "\n\n";
    os << "S  = {" << bounddetail::join(R.S()) << "}\nS0 = {" << bounddetail::join(R.S0()) << "}\nSp = {"
       << bounddetail::join(R.Sp()) << "}\n\n";
    os << std::left << std::setw(10) << "place" << std::setw(24) << "reduction" << std::setw(8) << "kodaira"
       << std::setw(5) << "S0" << std::setw(5) << "Sp" << std::setw(8) << "g_v" << std::setw(16) << "delta_v"
       << "term\n";
    for (const auto& v : R.places) {
        std::string d = "-";
        if (v.delta) d = std::to_string(v.delta->delta) + " (" + to_string(v.delta->status) + ")";
        os << std::setw(10) << v.place.label() << std::setw(24) << to_string(v.type) << std::setw(8) << v.kodaira
           << std::setw(5) << (v.in_S0 ? "yes" : "no") << std::setw(5) << (v.in_Sp ? "yes" : "no") << std::setw(8)
           << v.g.g.get_str() << std::setw(16) << d << v.contribution().get_str() << "\n";
    }
    os << "\nresidual image: " << to_string(R.global.image.classification) << "; p regular: "
       << (R.global.p_regular ? "yes" : "no") << "; K = " << (R.global.field_K ? *R.global.field_K : "undetermined")
       << (R.global.field_K_conditional ? " (conditional)" : "") << "\n\nhypotheses:\n";
    for (const auto& e : R.ledger.entries())
        os << "  " << std::setw(28) << e.id << std::setw(14) << to_string(e.status) << e.evidence << "\n";
    os << "\n";
    for (const auto& c : R.candidates) {
        os << c.form << " form (" << to_string(c.strength) << "): ";
        std::string sum;
        for (const auto& t : c.terms) sum += (sum.empty() ? "" : " + ") + t.value.get_str();
        os << (sum.empty() ? "0" : sum) << " = " << c.value.get_str() << "\n";
    }
    if (const auto* b = R.bound())
        os << "\nlambda(E/F_inf) <= " << b->value.get_str() << "  [" << to_string(R.strength) << "]\n";
    else
        os << "\nno bound emitted  [blocked]\n";
    if (R.lambda_zero) os << "lambda(E/F_inf) = 0\n";
    if (!R.notes.empty()) {
        os << "\nnotes:\n";
        for (const auto& n : R.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

}  // namespace fsel
