#pragma once

#include <cstdint>
#include <vector>

#include "sl2wt/fusion.hpp"

namespace sl2wt {

SL2WT_ERROR(NoWitness);

struct SampleConfig {
    std::int64_t flow_lo = -2;
    std::int64_t flow_hi = 2;
    std::vector<Weight> lambda_samples{Weight(0), Weight(make_rational(1, 2)), Weight::omega()};
    // Replaces a_fuse in the N (x)_A Y route when set; used for fault injection.
    AFusionRule fusion_override;
};

struct MultiplicityCheck {
    SimpleCLabel label;
    std::int64_t expected = 0;
    std::int64_t got_clr = 0;
    std::int64_t got_cor = 0;
    bool pass = false;
};

struct DualityCheck {
    SimpleCLabel label;
    bool pass = false;
};

struct Report {
    AdmissibleLevel level;
    struct {
        std::vector<SimpleALabel> factors;
        std::vector<SimpleALabel> expected;
        bool all_local = false;
        bool matches = false;
        bool unit_induction = false;
        bool pass = false;
    } step1;
    struct {
        std::vector<MultiplicityCheck> typical_multiplicity_checks;
        std::vector<MultiplicityCheck> atypical_multiplicity_checks;
        bool pass = false;
    } step2;
    struct {
        std::vector<DualityCheck> duality_checks;
        bool pass = false;
    } step3;
    struct {
        SimpleALabel z;
        Weight exponent;
        bool pass = false;
    } step4;
    bool verdict = false;
};

struct WitnessResult {
    SimpleALabel z;
    Weight exponent;
};

WitnessResult noncentrality_witness(const AdmissibleLevel& level, const SimpleCLabel& q);
Report run_pipeline(const AdmissibleLevel& level, const SampleConfig& config = {});

}  // namespace sl2wt
