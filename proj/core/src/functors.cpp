#include "sl2wt/functors.hpp"

namespace sl2wt {

CObject restrict_simple(const AdmissibleLevel& level, const SimpleALabel& y) {
    const int u = level.u, v = level.v;
    std::int64_t flow = y.flow + 1;
    if (congruent(y.lam, Weight(level.nu(y.r, y.s)), 1)) return CObject::eminus(u - y.r, v - y.s, flow);
    if (congruent(y.lam, Weight(level.nu(u - y.r, v - y.s)), 1)) return CObject::eminus(y.r, y.s, flow);
    return CObject::simple(typical(level, y.r, y.s, y.lam * 2 - Weight(level.k), flow));
}

GrothC groth_G(const AdmissibleLevel& level, const GrothA& y) {
    GrothC out;
    for (const auto& [a, c] : y.terms()) out += comp_factors(level, restrict_simple(level, a)) * c;
    return out;
}

static Weight typical_pi_weight(const AdmissibleLevel& level, const SimpleCLabel& x) {
    return (x.lam + Weight(level.k)) / 2;
}

SimpleALabel tau(const AdmissibleLevel& level, const SimpleCLabel& x) {
    if (x.is_typical()) return a_label(level, x.r, x.s, x.flow - 1, typical_pi_weight(level, x));
    if (x.s <= level.v - 2) return a_label(level, x.r, x.s + 1, x.flow, Weight(level.nu(x.r, x.s + 1)));
    int r = level.u - x.r;
    return a_label(level, r, 1, x.flow + 1, Weight(level.nu(r, 1)));
}

SimpleALabel tau_tilde(const AdmissibleLevel& level, const SimpleCLabel& x) {
    if (x.is_typical()) return tau(level, x);
    return a_label(level, x.r, x.s, x.flow - 1, Weight(level.nu(x.r, x.s)));
}

SimpleCLabel tau_inverse(const AdmissibleLevel& level, const SimpleALabel& y) {
    const int u = level.u, v = level.v;
    auto from_top = [&](int r, int s) {
        if (s >= 2) return d_plus(level, r, s - 1, y.flow);
        return d_plus(level, u - r, v - 1, y.flow - 1);
    };
    if (congruent(y.lam, Weight(level.nu(y.r, y.s)), 1)) return from_top(y.r, y.s);
    if (congruent(y.lam, Weight(level.nu(u - y.r, v - y.s)), 1)) return from_top(u - y.r, v - y.s);
    return typical(level, y.r, y.s, y.lam * 2 - Weight(level.k), y.flow + 1);
}

AObject induce_simple(const AdmissibleLevel& level, const SimpleCLabel& x) {
    if (x.is_typical()) return build_R(level, x.r, x.s, typical_pi_weight(level, x), x.flow - 1);
    return build_M(level, x.r, x.s + 1, x.flow);
}

AObject induce_vacuum(const AdmissibleLevel& level) {
    AObject a = AObject::simple(unit_label(level));
    if (level.v == 2) return AObject::direct_sum({a, AObject::simple(a_label(level, 1, 1, 2, Weight(level.t)))});
    return AObject::direct_sum({a, build_M(level, 1, 2, 1)});
}

int frobenius_dim(const AdmissibleLevel& level, const SimpleCLabel& x, const SimpleALabel& y) {
    int n = 0;
    for (const auto& z : socle_C(level, restrict_simple(level, y)))
        if (z == x) ++n;
    return n;
}

GrothA groth_F(const AdmissibleLevel& level, const GrothC& x) {
    GrothA out;
    for (const auto& [a, c] : x.terms()) out += k_class(level, induce_simple(level, a)) * c;
    return out;
}

}  // namespace sl2wt
