#include "sl2wt/local_cat.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace sl2wt {

bool operator<(const SimpleALabel& x, const SimpleALabel& y) {
    return std::tie(x.flow, x.r, x.s, x.lam) < std::tie(y.flow, y.r, y.s, y.lam);
}

SimpleALabel a_label(const AdmissibleLevel& level, int r, int s, std::int64_t flow, const Weight& lam) {
    check_kac_range(level, r, s);
    SimpleALabel x;
    std::tie(x.r, x.s) = std::min(std::pair{r, s}, std::pair{level.u - r, level.v - s});
    x.flow = flow;
    x.lam = lam.reduce(1);
    return x;
}

SimpleALabel unit_label(const AdmissibleLevel& level) { return a_label(level, 1, 1, 0, Weight(0)); }

AObject AObject::simple(const SimpleALabel& x) {
    AObject o;
    o.tag = Tag::SimpleA;
    o.label = x;
    return o;
}

AObject AObject::direct_sum(std::vector<AObject> parts) {
    AObject o;
    o.tag = Tag::DirectSum;
    o.parts = std::move(parts);
    return o;
}

bool operator==(const AObject& x, const AObject& y) {
    return x.tag == y.tag && x.label == y.label && x.r == y.r && x.s == y.s && x.lam == y.lam &&
           x.flow == y.flow && x.parts == y.parts;
}

AObject build_R(const AdmissibleLevel& level, int r, int s, const Weight& lam, std::int64_t flow) {
    SimpleALabel top = a_label(level, r, s, flow, lam);
    AObject o;
    o.tag = AObject::Tag::R;
    o.r = top.r;
    o.s = top.s;
    o.lam = top.lam;
    o.flow = flow;
    return o;
}

AObject build_M(const AdmissibleLevel& level, int r, int s, std::int64_t flow) {
    if (r < 1 || r > level.u - 1 || s < 1 || s > level.v)
        throw OutOfKacTable("M(" + std::to_string(r) + "," + std::to_string(s) + ") outside its range");
    if (s == 1) return AObject::simple(a_label(level, r, 1, flow, Weight(level.nu(r, 1))));
    if (s == level.v) return AObject::simple(a_label(level, r, level.v - 1, flow + 1, Weight(level.nu(r, level.v + 1))));
    AObject o;
    o.tag = AObject::Tag::M;
    o.r = r;
    o.s = s;
    o.flow = flow;
    return o;
}

AObject n_object() {
    AObject o;
    o.tag = AObject::Tag::N;
    return o;
}

static AObject expand_n(const AdmissibleLevel& level) {
    return AObject::direct_sum({AObject::simple(unit_label(level)), build_M(level, 1, 2, 1)});
}

static LayersA sorted_layers(LayersA layers) {
    LayersA out;
    for (auto& layer : layers) {
        if (layer.empty()) continue;
        std::sort(layer.begin(), layer.end());
        out.push_back(std::move(layer));
    }
    return out;
}

LayersA loewy_A(const AdmissibleLevel& level, const AObject& x) {
    using Tag = AObject::Tag;
    const int v = level.v;
    // Drops constituents with s-index 0 or v.
    auto node = [&](std::vector<SimpleALabel>& layer, int r, int s, std::int64_t flow, const Weight& lam) {
        if (s >= 1 && s <= v - 1) layer.push_back(a_label(level, r, s, flow, lam));
    };
    switch (x.tag) {
    case Tag::SimpleA:
        return {{x.label}};
    case Tag::R: {
        LayersA l(3);
        Weight half = x.lam - Weight(level.t / 2);
        node(l[0], x.r, x.s, x.flow, x.lam);
        node(l[1], x.r, x.s - 1, x.flow + 1, half);
        node(l[1], x.r, x.s + 1, x.flow + 1, half);
        node(l[2], x.r, x.s, x.flow + 2, x.lam - Weight(level.t));
        return sorted_layers(l);
    }
    case Tag::M: {
        LayersA l(2);
        node(l[0], x.r, x.s, x.flow, Weight(level.nu(x.r, x.s)));
        node(l[1], x.r, x.s - 1, x.flow + 1, Weight(level.nu(x.r, x.s + 1)));
        return sorted_layers(l);
    }
    case Tag::N:
        return loewy_A(level, expand_n(level));
    case Tag::DirectSum: {
        LayersA out;
        for (const auto& part : x.parts) {
            LayersA l = loewy_A(level, part);
            if (out.size() < l.size()) out.resize(l.size());
            for (std::size_t i = 0; i < l.size(); ++i) out[i].insert(out[i].end(), l[i].begin(), l[i].end());
        }
        return sorted_layers(out);
    }
    }
    throw PreconditionViolation("unknown object tag");
}

GrothA k_class(const AdmissibleLevel& level, const AObject& x) {
    GrothA out;
    for (const auto& layer : loewy_A(level, x))
        for (const auto& a : layer) out.add(a);
    return out;
}

bool same_loewy(const AdmissibleLevel& level, const AObject& x, const AObject& y) {
    return loewy_A(level, x) == loewy_A(level, y);
}

static std::vector<int> fuse_range(int a, int b, int p) {
    std::vector<int> out;
    int hi = std::min(a + b - 1, 2 * p - a - b - 1);
    for (int c = std::abs(a - b) + 1; c <= hi; c += 2) out.push_back(c);
    return out;
}

std::vector<std::pair<int, int>> vir_fuse(const AdmissibleLevel& level, int r, int s, int r2, int s2) {
    check_kac_range(level, r, s);
    check_kac_range(level, r2, s2);
    std::vector<std::pair<int, int>> out;
    for (int a : fuse_range(r, r2, level.u))
        for (int b : fuse_range(s, s2, level.v)) out.emplace_back(a, b);
    return out;
}

std::pair<std::int64_t, Weight> pi_fuse(std::int64_t flow, const Weight& lam, std::int64_t flow2,
                                        const Weight& lam2) {
    return {flow + flow2, (lam + lam2).reduce(1)};
}

GrothA a_fuse(const AdmissibleLevel& level, const SimpleALabel& x, const SimpleALabel& y) {
    GrothA out;
    auto [flow, lam] = pi_fuse(x.flow, x.lam, y.flow, y.lam);
    for (auto [r, s] : vir_fuse(level, x.r, x.s, y.r, y.s)) out.add(a_label(level, r, s, flow, lam));
    return out;
}

GrothA groth_mul(const AFusionRule& rule, const GrothA& x, const GrothA& y) {
    GrothA out;
    for (const auto& [a, c] : x.terms())
        for (const auto& [b, d] : y.terms()) out += rule(a, b) * (c * d);
    return out;
}

GrothA groth_mul(const AdmissibleLevel& level, const GrothA& x, const GrothA& y) {
    return groth_mul([&](const SimpleALabel& a, const SimpleALabel& b) { return a_fuse(level, a, b); }, x, y);
}

SimpleALabel rigid_dual_A(const AdmissibleLevel& level, const SimpleALabel& x) {
    return a_label(level, x.r, x.s, -x.flow, -x.lam);
}

AObject rigid_dual_A(const AdmissibleLevel& level, const AObject& x) {
    using Tag = AObject::Tag;
    switch (x.tag) {
    case Tag::SimpleA:
        return AObject::simple(rigid_dual_A(level, x.label));
    case Tag::R:
        return build_R(level, x.r, x.s, Weight(level.t) - x.lam, -x.flow - 2);
    case Tag::M:
        return build_M(level, level.u - x.r, level.v - x.s + 1, -x.flow - 1);
    case Tag::N:
        return rigid_dual_A(level, expand_n(level));
    case Tag::DirectSum: {
        std::vector<AObject> parts;
        for (const auto& p : x.parts) parts.push_back(rigid_dual_A(level, p));
        return AObject::direct_sum(std::move(parts));
    }
    }
    throw PreconditionViolation("unknown object tag");
}

GrothA rigid_dual_A(const AdmissibleLevel& level, const GrothA& x) {
    return x.map([&](const SimpleALabel& a) { return rigid_dual_A(level, a); });
}

SimpleALabel gv_dual_A(const AdmissibleLevel& level, const SimpleALabel& x) {
    return a_label(level, x.r, x.s, -x.flow - 2, Weight(level.t) - x.lam);
}

Weight twist_exponent(const AdmissibleLevel& level, const SimpleALabel& x) {
    return Weight(level.h(x.r, x.s)) + pi_conf_weight(level, x.flow, x.lam);
}

Weight monodromy_exponent(const AdmissibleLevel& level, std::int64_t flow, const Weight& lam,
                          std::int64_t flow2, const Weight& lam2) {
    Rational l(flow), l2(flow2);
    return Weight(level.k * l * l2 / 2) + lam * l2 + lam2 * l;
}

bool is_local_flow(const Rational& flow) { return is_integer(flow); }

std::string to_string(const SimpleALabel& x) {
    return "M(" + std::to_string(x.r) + "," + std::to_string(x.s) + ")xPi(" + std::to_string(x.flow) + ";" +
           to_string(x.lam) + ")";
}

std::string to_string(const AObject& x) {
    using Tag = AObject::Tag;
    switch (x.tag) {
    case Tag::SimpleA:
        return to_string(x.label);
    case Tag::R:
        return "R(" + std::to_string(x.r) + "," + std::to_string(x.s) + ";" + to_string(x.lam) + ")@" +
               std::to_string(x.flow);
    case Tag::M:
        return "M(" + std::to_string(x.r) + "," + std::to_string(x.s) + ")@" + std::to_string(x.flow);
    case Tag::N:
        return "N";
    case Tag::DirectSum: {
        std::string out;
        for (const auto& p : x.parts) out += (out.empty() ? "" : " + ") + to_string(p);
        return out.empty() ? "0" : out;
    }
    }
    return "?";
}

std::string to_string(const GrothA& x) {
    std::string out;
    for (const auto& [a, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += "[" + to_string(a) + "]";
    }
    return out.empty() ? "0" : out;
}

}  // namespace sl2wt
