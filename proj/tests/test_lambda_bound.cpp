#include "fsel/lambda_bound.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace fsel;
using namespace fsel::testing;

namespace {

const std::vector<std::string> kIds = {hyp::good_reduction, hyp::finitely_decomposed, hyp::image_condition,
                                       hyp::ramification,   hyp::a_k_zero,            hyp::y_torsion};
const std::vector<std::string> kAssumable = {hyp::image_condition, hyp::ramification, hyp::a_k_zero, hyp::y_torsion};

bool usable(HypStatus s) { return s == HypStatus::certified || s == HypStatus::asserted; }

/// Independent value of the local sum: S_0 from Tate's algorithm and the
/// splitting rule, g_v from the order of l^(p-1) modulo p^k.
BigInt local_sum_over_Q(const CorpusCurve& c, long p, int delta) {
    BigInt s = 0;
    for (const auto& [q, e] : factor_trial(BigInt(c.conductor))) {
        (void)e;
        const long l = q.get_si();
        const auto t = tate_reduction(model(c), q).type;
        if (l % p == 1 && t != ReductionType::split_multiplicative) continue;
        long g = 1, m = p * p;
        // g = p^(v_p(l^(p-1) - 1) - 1)
        BigInt x = pow_int(BigInt(l), static_cast<unsigned long>(p - 1)) - 1;
        while (divides(BigInt(m), x)) {
            g *= p;
            m *= p;
        }
        s += 2 * g;
    }
    return s + delta;
}

}  // namespace

TEST(LambdaBound, ConductorElevenOverQ) {
    const auto blocked = assemble_specialized(model(corpus()[1]), 5, BaseField::Q);
    EXPECT_EQ(blocked.strength, Strength::blocked);
    EXPECT_EQ(blocked.bound(), nullptr);
    EXPECT_EQ(blocked.ledger.status(hyp::image_condition), HypStatus::inconclusive);

    const auto R = assemble_specialized(model(corpus()[1]), 5, BaseField::Q, {hyp::image_condition});
    ASSERT_NE(R.bound(), nullptr);
    EXPECT_EQ(R.strength, Strength::conditional);
    EXPECT_EQ(R.bound()->value, 2);
    EXPECT_EQ(R.bound()->value, local_sum_over_Q(corpus()[1], 5, 0));
    EXPECT_EQ(R.S0(), std::vector<std::string>{"11"});
    EXPECT_TRUE(R.global.field_K_conditional);
    EXPECT_TRUE(R.cotorsion_mu_zero);
    EXPECT_FALSE(R.lambda_zero);

    const auto R1 = assemble_specialized(model(corpus()[0]), 5, BaseField::Q);
    ASSERT_NE(R1.bound(), nullptr);
    EXPECT_EQ(R1.strength, Strength::unconditional);
    EXPECT_EQ(R1.bound()->value, local_sum_over_Q(corpus()[0], 5, 2));  // rational 5-torsion
}

TEST(LambdaBound, ConductorElevenOverQmu5HandSum) {
    // 11 = 1 mod 5 splits into four places, each split multiplicative with
    // g = 1; over Q_5(mu_5) the mu_5-type line of 11a2 becomes rational.
    const auto R = assemble_specialized(model(corpus()[1]), 5, BaseField::QMuP, {hyp::image_condition});
    ASSERT_NE(R.bound(), nullptr);
    EXPECT_EQ(R.S0().size(), 4u);
    EXPECT_EQ(R.bound()->value, 4 * 2 * 1 + 2 * 1);
    bool note = false;
    for (const auto& n : R.notes) note = note || n.rfind("discrepancy:", 0) == 0;
    EXPECT_TRUE(note);
}

TEST(LambdaBound, TermsRecomputeTheValue) {
    for (const auto& c : corpus())
        for (long p : {5L, 7L})
            for (auto F : {BaseField::Q, BaseField::QMuP}) {
                if (c.conductor % p == 0) continue;
                const auto R = assemble_general(model(c), p, F, 1, 2, {hyp::image_condition});
                for (const auto& cand : R.candidates) {
                    EXPECT_EQ(cand.value, cand.sum_terms());
                    for (const auto& t : cand.terms) EXPECT_EQ(t.value, t.coefficient * t.g) << c.label << " " << t.kind;
                }
            }
}

TEST(LambdaBound, LedgerWiring) {
    for (const auto& c : corpus())
        for (long p : {3L, 5L, 7L})
            for (unsigned mask = 0; mask < 16; ++mask) {
                std::set<std::string> as;
                for (std::size_t i = 0; i < kAssumable.size(); ++i)
                    if (mask & (1u << i)) as.insert(kAssumable[i]);
                const auto R = assemble_specialized(model(c), p, BaseField::Q, as);
                for (const auto& cand : R.candidates) {
                    bool all = true, any_asserted = false;
                    for (const auto& id : cand.required) {
                        const auto s = R.ledger.status(id);
                        all = all && usable(s);
                        any_asserted = any_asserted || s == HypStatus::asserted;
                    }
                    const Strength expect =
                        !all ? Strength::blocked : any_asserted ? Strength::conditional : Strength::unconditional;
                    EXPECT_EQ(cand.strength, expect) << c.label << " p=" << p << " mask=" << mask;
                }
                EXPECT_EQ(R.bound() != nullptr, R.strength != Strength::blocked);
            }
}

TEST(LambdaBound, NoAssertionsWithoutAssumptions) {
    for (const auto& c : corpus())
        for (long p : {3L, 5L, 7L, 11L}) {
            const auto R = assemble_specialized(model(c), p, BaseField::Q);
            for (const auto& id : kIds) EXPECT_NE(R.ledger.status(id), HypStatus::asserted) << c.label << " " << id;
        }
}

TEST(LambdaBound, AssumptionsAreMonotone) {
    // More assumptions only lift inconclusive entries; certified and refuted
    // entries and the bound value do not move, and strength never weakens.
    for (const auto& c : corpus())
        for (long p : {5L, 7L}) {
            const auto base = assemble_specialized(model(c), p, BaseField::Q);
            const auto all = assemble_specialized(model(c), p, BaseField::Q, {kAssumable.begin(), kAssumable.end()});
            for (const auto& id : kIds) {
                const auto a = base.ledger.status(id), b = all.ledger.status(id);
                if (a == HypStatus::certified || a == HypStatus::refuted) {
                    EXPECT_EQ(a, b) << c.label << " " << id;
                } else {
                    EXPECT_NE(b, HypStatus::certified) << c.label << " " << id;
                }
            }
            EXPECT_LE(static_cast<int>(all.strength), static_cast<int>(base.strength));
            if (base.bound() && all.bound()) {
                EXPECT_EQ(base.bound()->value, all.bound()->value);
            }
        }
}

TEST(LambdaBound, GeneralFormIsLinearInDimensions) {
    const auto E = model(corpus()[1]);
    const std::set<std::string> as = {hyp::image_condition};
    const auto spec = assemble_specialized(E, 5, BaseField::Q, as).bound()->value;
    const auto R00 = assemble_general(E, 5, BaseField::Q, 0, 0, as);
    const auto* g00 = candidate(R00, "general");
    ASSERT_NE(g00, nullptr);
    EXPECT_EQ(g00->value, spec);
    for (long y : {0L, 1L, 4L})
        for (long z : {0L, 1L, 3L}) {
            const auto R = assemble_general(E, 5, BaseField::Q, y, z, as);
            const auto* g = candidate(R, "general");
            ASSERT_NE(g, nullptr);
            EXPECT_EQ(g->value, spec + 2 * y + z);
            const auto R3 = assemble_general(E, 5, BaseField::Q, y, z + 3, as);
            EXPECT_EQ(candidate(R3, "general")->value, g->value + 3);
            EXPECT_EQ(R.bound()->value, std::min(spec, g->value));
        }
    const auto R11 = assemble_general(E, 5, BaseField::Q, 1, 1, as);
    EXPECT_EQ(candidate(R11, "general")->value, 5);
    EXPECT_EQ(candidate(R11, "general")->strength, Strength::conditional);
}

TEST(LambdaBound, BadReductionAbovePBlocks) {
    const auto R = assemble_specialized(model(corpus()[0]), 11, BaseField::Q);
    EXPECT_EQ(R.strength, Strength::blocked);
    EXPECT_EQ(R.ledger.status(hyp::good_reduction), HypStatus::refuted);
    ASSERT_TRUE(R.blocked_place.has_value());
    EXPECT_EQ(*R.blocked_place, "11");
    const auto E = WeierstrassModel::from_ints({0, 0, 0, 0, 5});
    EXPECT_EQ(assemble_specialized(E, 5, BaseField::Q).ledger.status(hyp::good_reduction), HypStatus::refuted);
    EXPECT_EQ(assemble_specialized(E, 5, BaseField::QMuP).ledger.status(hyp::good_reduction), HypStatus::inconclusive);
}

TEST(LambdaBound, UserExtensionUsesTheGTable) {
    BoundRequest rq;
    rq.curve = model(corpus()[1]);
    rq.p = 5;
    rq.cyclotomic = false;
    rq.assumptions = {hyp::image_condition, hyp::ramification, hyp::a_k_zero};
    EXPECT_THROW(assemble(rq), std::invalid_argument);
    rq.g_table = {{11, 1, BigInt(3)}};
    EXPECT_THROW(assemble(rq), std::invalid_argument);  // no entry for the place above 5
    rq.g_table.push_back({5, 1, BigInt(1)});
    const auto R = assemble(rq);
    ASSERT_NE(R.bound(), nullptr);
    EXPECT_EQ(R.bound()->value, 2 * 3);
    EXPECT_EQ(R.ledger.status(hyp::finitely_decomposed), HypStatus::asserted);
    EXPECT_EQ(R.strength, Strength::conditional);
}

TEST(LambdaBound, RejectsInvalidRequests) {
    BoundRequest rq;
    rq.p = 17;
    EXPECT_THROW(assemble(rq), std::invalid_argument);
    rq.p = 9;
    EXPECT_THROW(assemble(rq), std::invalid_argument);
    rq.p = 5;
    rq.dim_Y = -1;
    EXPECT_THROW(assemble(rq), std::invalid_argument);
    rq.dim_Y.reset();
    rq.curve = WeierstrassModel(0, 0, 0, BigRat(1, 2), 0);
    EXPECT_THROW(assemble(rq), std::invalid_argument);
}

TEST(LambdaBound, AliasesMapToCanonicalIds) {
    EXPECT_EQ(canonical_assumption("image-order-coprime"), std::optional<std::string>(hyp::image_condition));
    EXPECT_EQ(canonical_assumption("image-nonsolvable"), std::optional<std::string>(hyp::image_condition));
    EXPECT_EQ(canonical_assumption(hyp::a_k_zero), std::optional<std::string>(hyp::a_k_zero));
    EXPECT_FALSE(canonical_assumption("no-such-id").has_value());
}
