#include "sl2wt/pipeline.hpp"

#include <algorithm>

namespace sl2wt {

WitnessResult noncentrality_witness(const AdmissibleLevel& level, const SimpleCLabel& q) {
    if (canonicalize_simple(level, q) == l_r0(level, 1))
        throw PreconditionViolation("the unit object is Mueger central");
    SimpleALabel y = tau(level, q);

    std::vector<Weight> lams{Weight::omega()};
    for (int d = 2; d <= 12; ++d)
        for (int n = 1; n < d; ++n) lams.emplace_back(make_rational(n, d));
    for (std::int64_t flow2 : {0, 1}) {
        for (const auto& lam2 : lams) {
            Weight e = monodromy_exponent(level, y.flow, y.lam, flow2, lam2);
            if (!e.is_integer()) return {a_label(level, 1, 1, flow2, lam2), e};
        }
    }
    // Trivial Pi-part: pair against the Virasoro sector channel by channel.
    for (int r = 1; r < level.u; ++r) {
        for (int s = 1; s < level.v; ++s) {
            SimpleALabel z = a_label(level, r, s, 0, Weight(0));
            Weight tz = twist_exponent(level, z), ty = twist_exponent(level, y);
            GrothA channels = a_fuse(level, y, z);
            for (const auto& [w, c] : channels.terms()) {
                Weight e = twist_exponent(level, w) - ty - tz;
                if (!e.is_integer()) return {z, e};
            }
        }
    }
    throw NoWitness("no witness found for " + to_string(q));
}

static std::vector<SimpleALabel> sorted(std::vector<SimpleALabel> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Report run_pipeline(const AdmissibleLevel& level, const SampleConfig& config) {
    Report rep;
    rep.level = level;
    const int u = level.u, v = level.v;
    AFusionRule rule = config.fusion_override;
    if (!rule) rule = [&](const SimpleALabel& a, const SimpleALabel& b) { return a_fuse(level, a, b); };

    // Step 1: N and its composition factors.
    AObject n = induce_vacuum(level);
    GrothA nk = k_class(level, n);
    for (const auto& [a, c] : nk.terms())
        for (std::int64_t i = 0; i < c; ++i) rep.step1.factors.push_back(a);
    rep.step1.expected.push_back(unit_label(level));
    if (v == 2) {
        rep.step1.expected.push_back(a_label(level, 1, 1, 2, Weight(level.t)));
    } else {
        rep.step1.expected.push_back(a_label(level, 1, 2, 1, Weight(-level.t / 2)));
        rep.step1.expected.push_back(a_label(level, 1, 1, 2, Weight(-level.t)));
    }
    rep.step1.factors = sorted(rep.step1.factors);
    rep.step1.expected = sorted(rep.step1.expected);
    rep.step1.all_local = std::all_of(rep.step1.factors.begin(), rep.step1.factors.end(),
                                      [](const SimpleALabel& a) { return is_local_flow(Rational(a.flow)); });
    rep.step1.matches = rep.step1.factors == rep.step1.expected;
    rep.step1.unit_induction =
        groth_F(level, comp_factors(level, CObject::vacuum_extension())) == nk &&
        congruent(Weight(level.nu(u - 1, v - 1)), Weight(level.t), 1);
    rep.step1.pass = rep.step1.all_local && rep.step1.matches && rep.step1.unit_induction;

    // Step 2: multiplicities of Z in G(N (x)_A Y) by both routes.
    auto check = [&](const SimpleCLabel& z, const SimpleALabel& y, std::int64_t expected) {
        MultiplicityCheck mc;
        mc.label = z;
        mc.expected = expected;
        mc.got_clr = n_tensor_restriction(level, y, rule).coefficient(z);
        mc.got_cor = a_tensor_restriction(level, y).coefficient(z);
        mc.pass = mc.got_clr == expected && mc.got_cor == expected;
        return mc;
    };
    std::vector<SimpleCLabel> atypicals, typicals;
    for (std::int64_t f = config.flow_lo; f <= config.flow_hi; ++f) {
        for (int r = 1; r < u; ++r) {
            for (int s = 1; s < v; ++s) {
                atypicals.push_back(d_plus(level, r, s, f));
                if (std::pair{r, s} > std::pair{u - r, v - s}) continue;
                for (const auto& lam : config.lambda_samples)
                    if (is_typical_weight(level, r, s, lam)) typicals.push_back(typical(level, r, s, lam, f));
            }
        }
    }
    rep.step2.pass = true;
    for (const auto& z : atypicals) {
        auto mc = check(z, tau_tilde(level, z), 2);
        rep.step2.pass = rep.step2.pass && mc.pass;
        rep.step2.atypical_multiplicity_checks.push_back(mc);
    }
    for (const auto& z : typicals) {
        auto mc = check(z, tau(level, z), 1);
        rep.step2.pass = rep.step2.pass && mc.pass;
        rep.step2.typical_multiplicity_checks.push_back(mc);
    }

    // Step 3: induction intertwines the two dualities.
    rep.step3.pass = true;
    for (const auto* group : {&atypicals, &typicals}) {
        for (const auto& x : *group) {
            AObject lhs = induce_simple(level, contragredient_C(level, x));
            AObject rhs = rigid_dual_A(level, induce_simple(level, x));
            DualityCheck dc{x, same_loewy(level, lhs, rhs)};
            rep.step3.pass = rep.step3.pass && dc.pass;
            rep.step3.duality_checks.push_back(dc);
        }
    }

    // Step 4: sigma(D+_{1,1}) is not Mueger central.
    try {
        WitnessResult w = noncentrality_witness(level, d_plus(level, 1, 1, 1));
        rep.step4.z = w.z;
        rep.step4.exponent = w.exponent;
        rep.step4.pass = !w.exponent.is_integer() && w.z.r == 1 && w.z.s == 1 && w.z.flow >= 0 && w.z.flow <= 1;
    } catch (const NoWitness&) {
        rep.step4.pass = false;
    }

    rep.verdict = rep.step1.pass && rep.step2.pass && rep.step3.pass && rep.step4.pass;
    return rep;
}

}  // namespace sl2wt
