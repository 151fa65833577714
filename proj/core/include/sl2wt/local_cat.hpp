#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sl2wt/arithmetic.hpp"
#include "sl2wt/groth.hpp"

namespace sl2wt {

// M_{r,s} (x) Pi_flow(lam), with (r,s) the lex-min of {(r,s),(u-r,v-s)} and lam mod 1.
struct SimpleALabel {
    int r = 1;
    int s = 1;
    std::int64_t flow = 0;
    Weight lam;

    friend bool operator==(const SimpleALabel& x, const SimpleALabel& y) {
        return x.r == y.r && x.s == y.s && x.flow == y.flow && x.lam == y.lam;
    }
    friend bool operator!=(const SimpleALabel& x, const SimpleALabel& y) { return !(x == y); }
    friend bool operator<(const SimpleALabel& x, const SimpleALabel& y);
};

// Canonicalizes; s must lie in [1, v-1].
SimpleALabel a_label(const AdmissibleLevel& level, int r, int s, std::int64_t flow, const Weight& lam);
SimpleALabel unit_label(const AdmissibleLevel& level);

using GrothA = Groth<SimpleALabel>;
using LayersA = Layers<SimpleALabel>;

struct AObject {
    enum class Tag { SimpleA, R, M, N, DirectSum };

    Tag tag = Tag::SimpleA;
    SimpleALabel label;
    int r = 0;
    int s = 0;
    Weight lam;
    std::int64_t flow = 0;
    std::vector<AObject> parts;

    static AObject simple(const SimpleALabel& x);
    static AObject direct_sum(std::vector<AObject> parts);

    friend bool operator==(const AObject& x, const AObject& y);
    friend bool operator!=(const AObject& x, const AObject& y) { return !(x == y); }
};

// Canonical (r,s) and lam mod 1; s in [1, v-1].
AObject build_R(const AdmissibleLevel& level, int r, int s, const Weight& lam, std::int64_t flow);
// s in [1, v]; the two ends collapse to simple objects.
AObject build_M(const AdmissibleLevel& level, int r, int s, std::int64_t flow);
AObject n_object();

LayersA loewy_A(const AdmissibleLevel& level, const AObject& x);
GrothA k_class(const AdmissibleLevel& level, const AObject& x);
bool same_loewy(const AdmissibleLevel& level, const AObject& x, const AObject& y);

std::vector<std::pair<int, int>> vir_fuse(const AdmissibleLevel& level, int r, int s, int r2, int s2);
std::pair<std::int64_t, Weight> pi_fuse(std::int64_t flow, const Weight& lam, std::int64_t flow2,
                                        const Weight& lam2);

using AFusionRule = std::function<GrothA(const SimpleALabel&, const SimpleALabel&)>;

GrothA a_fuse(const AdmissibleLevel& level, const SimpleALabel& x, const SimpleALabel& y);
GrothA groth_mul(const AdmissibleLevel& level, const GrothA& x, const GrothA& y);
GrothA groth_mul(const AFusionRule& rule, const GrothA& x, const GrothA& y);

SimpleALabel rigid_dual_A(const AdmissibleLevel& level, const SimpleALabel& x);
AObject rigid_dual_A(const AdmissibleLevel& level, const AObject& x);
GrothA rigid_dual_A(const AdmissibleLevel& level, const GrothA& x);
SimpleALabel gv_dual_A(const AdmissibleLevel& level, const SimpleALabel& x);

Weight twist_exponent(const AdmissibleLevel& level, const SimpleALabel& x);
Weight monodromy_exponent(const AdmissibleLevel& level, std::int64_t flow, const Weight& lam,
                          std::int64_t flow2, const Weight& lam2);
bool is_local_flow(const Rational& flow);

std::string to_string(const SimpleALabel& x);
std::string to_string(const AObject& x);
std::string to_string(const GrothA& x);

}  // namespace sl2wt
