#include "sl2wt/weight_cat.hpp"

#include <algorithm>
#include <tuple>

namespace sl2wt {

bool operator<(const SimpleCLabel& x, const SimpleCLabel& y) {
    return std::tie(x.kind, x.flow, x.r, x.s, x.lam) < std::tie(y.kind, y.flow, y.r, y.s, y.lam);
}

static std::string idx(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

static void check_r(const AdmissibleLevel& level, int r) {
    if (r < 1 || r > level.u - 1)
        throw OutOfKacTable("r=" + std::to_string(r) + " outside [1," + std::to_string(level.u - 1) + "]");
}

static void check_s(const AdmissibleLevel& level, int s, int lo, int hi) {
    if (s < lo || s > hi)
        throw OutOfKacTable("s=" + std::to_string(s) + " outside [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "] at level " + to_string(level));
}

bool is_typical_weight(const AdmissibleLevel& level, int r, int s, const Weight& lam) {
    Rational l = level.lambda(r, s);
    return !congruent(lam, Weight(l), 2) && !congruent(lam, Weight(-l), 2);
}

static SimpleCLabel atypical_label(int r, int s, std::int64_t flow) {
    SimpleCLabel x;
    x.kind = SimpleCLabel::Kind::Atypical;
    x.r = r;
    x.s = s;
    x.flow = flow;
    return x;
}

SimpleCLabel canonicalize_simple(const AdmissibleLevel& level, const RawCLabel& raw) {
    const int u = level.u, v = level.v;
    switch (raw.kind) {
    case RawCLabel::Kind::DPlus:
        check_r(level, raw.r);
        check_s(level, raw.s, 0, v - 1);
        if (raw.s == 0) return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::L, raw.r, 0, {}, raw.flow});
        return atypical_label(raw.r, raw.s, raw.flow);
    case RawCLabel::Kind::DMinus:
        check_r(level, raw.r);
        check_s(level, raw.s, 0, v - 1);
        if (raw.s == 0) return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::L, raw.r, 0, {}, raw.flow});
        if (raw.s <= v - 2) return atypical_label(u - raw.r, v - raw.s - 1, raw.flow - 1);
        return atypical_label(raw.r, v - 1, raw.flow - 2);
    case RawCLabel::Kind::L:
        check_r(level, raw.r);
        return atypical_label(u - raw.r, v - 1, raw.flow - 1);
    case RawCLabel::Kind::E: {
        check_kac_range(level, raw.r, raw.s);
        if (!is_typical_weight(level, raw.r, raw.s, raw.lam))
            throw NotSimple("E(" + to_string(raw.lam) + ";" + std::to_string(raw.r) + "," +
                            std::to_string(raw.s) + ") has an atypical weight");
        SimpleCLabel x;
        x.kind = SimpleCLabel::Kind::Typical;
        std::tie(x.r, x.s) = std::min(std::pair{raw.r, raw.s}, std::pair{u - raw.r, v - raw.s});
        x.lam = raw.lam.reduce(2);
        x.flow = raw.flow;
        return x;
    }
    }
    throw PreconditionViolation("unknown raw label kind");
}

SimpleCLabel canonicalize_simple(const AdmissibleLevel& level, const SimpleCLabel& x) {
    RawCLabel raw{x.is_typical() ? RawCLabel::Kind::E : RawCLabel::Kind::DPlus, x.r, x.s, x.lam, x.flow};
    if (!x.is_typical()) check_kac_range(level, x.r, x.s);
    return canonicalize_simple(level, raw);
}

SimpleCLabel d_plus(const AdmissibleLevel& level, int r, int s, std::int64_t flow) {
    return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::DPlus, r, s, {}, flow});
}

SimpleCLabel d_minus(const AdmissibleLevel& level, int r, int s, std::int64_t flow) {
    return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::DMinus, r, s, {}, flow});
}

SimpleCLabel l_r0(const AdmissibleLevel& level, int r, std::int64_t flow) {
    return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::L, r, 0, {}, flow});
}

SimpleCLabel typical(const AdmissibleLevel& level, int r, int s, const Weight& lam, std::int64_t flow) {
    return canonicalize_simple(level, RawCLabel{RawCLabel::Kind::E, r, s, lam, flow});
}

CObject CObject::simple(const SimpleCLabel& x) {
    CObject o;
    o.tag = Tag::Simple;
    o.label = x;
    return o;
}

static CObject tagged(CObject::Tag tag, int r, int s, std::int64_t flow) {
    CObject o;
    o.tag = tag;
    o.r = r;
    o.s = s;
    o.flow = flow;
    return o;
}

CObject CObject::eminus(int r, int s, std::int64_t flow) { return tagged(Tag::Eminus, r, s, flow); }
CObject CObject::eplus(int r, int s, std::int64_t flow) { return tagged(Tag::Eplus, r, s, flow); }
CObject CObject::lr0(int r, std::int64_t flow) { return tagged(Tag::Lr0, r, 0, flow); }
CObject CObject::dminus(int r, int s, std::int64_t flow) { return tagged(Tag::Dminus, r, s, flow); }
CObject CObject::projective(int r, int s, std::int64_t flow) { return tagged(Tag::Projective, r, s, flow); }
CObject CObject::vacuum_extension(std::int64_t flow) { return tagged(Tag::VacuumExtensionA, 0, 0, flow); }

CObject CObject::direct_sum(std::vector<CObject> parts) {
    CObject o;
    o.tag = Tag::DirectSum;
    o.parts = std::move(parts);
    return o;
}

bool operator==(const CObject& x, const CObject& y) {
    return x.tag == y.tag && x.label == y.label && x.r == y.r && x.s == y.s && x.flow == y.flow &&
           x.parts == y.parts;
}

SimpleCLabel spectral_flow(const SimpleCLabel& x, std::int64_t m) {
    SimpleCLabel y = x;
    y.flow += m;
    return y;
}

CObject spectral_flow(const CObject& x, std::int64_t m) {
    CObject y = x;
    if (y.tag == CObject::Tag::Simple) {
        y.label.flow += m;
    } else if (y.tag == CObject::Tag::DirectSum) {
        for (auto& p : y.parts) p = spectral_flow(p, m);
    } else {
        y.flow += m;
    }
    return y;
}

GrothC spectral_flow(const GrothC& x, std::int64_t m) {
    return x.map([m](const SimpleCLabel& a) { return spectral_flow(a, m); });
}

static void check_E(const AdmissibleLevel& level, const CObject& x) { check_kac_range(level, x.r, x.s); }

CObject resolve(const AdmissibleLevel& level, const CObject& x) {
    using Tag = CObject::Tag;
    switch (x.tag) {
    case Tag::Simple:
        return CObject::simple(canonicalize_simple(level, x.label));
    case Tag::Lr0:
        return CObject::simple(l_r0(level, x.r, x.flow));
    case Tag::Dminus:
        return CObject::simple(d_minus(level, x.r, x.s, x.flow));
    case Tag::VacuumExtensionA:
        return CObject::eminus(level.u - 1, level.v - 1, x.flow + 1);
    case Tag::Eminus:
    case Tag::Eplus:
    case Tag::Projective:
        check_E(level, x);
        return x;
    case Tag::DirectSum: {
        std::vector<CObject> parts;
        for (const auto& p : x.parts) {
            CObject q = resolve(level, p);
            if (q.tag == Tag::DirectSum) parts.insert(parts.end(), q.parts.begin(), q.parts.end());
            else parts.push_back(q);
        }
        return CObject::direct_sum(std::move(parts));
    }
    }
    throw PreconditionViolation("unknown object tag");
}

SimpleCLabel contragredient_C(const AdmissibleLevel& level, const SimpleCLabel& x) {
    if (x.is_typical()) return typical(level, x.r, x.s, -x.lam, -x.flow);
    return d_minus(level, x.r, x.s, -x.flow);
}

CObject contragredient_C(const AdmissibleLevel& level, const CObject& x0) {
    using Tag = CObject::Tag;
    CObject x = resolve(level, x0);
    const int u = level.u, v = level.v;
    switch (x.tag) {
    case Tag::Simple:
        return CObject::simple(contragredient_C(level, x.label));
    case Tag::Eminus:
        return CObject::eminus(u - x.r, v - x.s, -x.flow);
    case Tag::Eplus:
        return CObject::eplus(u - x.r, v - x.s, -x.flow);
    case Tag::Projective: {
        SimpleCLabel t = contragredient_C(level, d_plus(level, x.r, x.s, x.flow));
        return CObject::projective(t.r, t.s, t.flow);
    }
    case Tag::DirectSum: {
        std::vector<CObject> parts;
        for (const auto& p : x.parts) parts.push_back(contragredient_C(level, p));
        return CObject::direct_sum(std::move(parts));
    }
    default:
        break;
    }
    throw PreconditionViolation("unresolved object tag");
}

GrothC contragredient_C(const AdmissibleLevel& level, const GrothC& x) {
    return x.map([&](const SimpleCLabel& a) { return contragredient_C(level, a); });
}

static LayersC sorted_layers(LayersC layers) {
    LayersC out;
    for (auto& layer : layers) {
        if (layer.empty()) continue;
        std::sort(layer.begin(), layer.end());
        out.push_back(std::move(layer));
    }
    return out;
}

LayersC loewy_C(const AdmissibleLevel& level, const CObject& x0) {
    using Tag = CObject::Tag;
    CObject x = resolve(level, x0);
    const int u = level.u, v = level.v;
    switch (x.tag) {
    case Tag::Simple:
        return {{x.label}};
    case Tag::Eminus:
        return {{d_plus(level, u - x.r, v - x.s, x.flow)}, {d_minus(level, x.r, x.s, x.flow)}};
    case Tag::Eplus:
        return {{d_minus(level, u - x.r, v - x.s, x.flow)}, {d_plus(level, x.r, x.s, x.flow)}};
    case Tag::Projective: {
        CObject quotient = CObject::eminus(u - x.r, v - x.s, x.flow);
        CObject sub = x.s <= v - 2 ? CObject::eminus(u - x.r, v - x.s - 1, x.flow + 1)
                                   : CObject::eminus(x.r, v - 1, x.flow + 2);
        LayersC q = loewy_C(level, quotient), p = loewy_C(level, sub);
        return sorted_layers({q[0], {q[1][0], p[0][0]}, p[1]});
    }
    case Tag::DirectSum: {
        LayersC out;
        for (const auto& part : x.parts) {
            LayersC l = loewy_C(level, part);
            if (out.size() < l.size()) out.resize(l.size());
            for (std::size_t i = 0; i < l.size(); ++i) out[i].insert(out[i].end(), l[i].begin(), l[i].end());
        }
        return sorted_layers(out);
    }
    default:
        break;
    }
    throw PreconditionViolation("unresolved object tag");
}

GrothC comp_factors(const AdmissibleLevel& level, const CObject& x) {
    GrothC out;
    for (const auto& layer : loewy_C(level, x))
        for (const auto& a : layer) out.add(a);
    return out;
}

std::vector<SimpleCLabel> socle_C(const AdmissibleLevel& level, const CObject& x0) {
    CObject x = resolve(level, x0);
    if (x.tag == CObject::Tag::DirectSum) {
        std::vector<SimpleCLabel> out;
        for (const auto& p : x.parts) {
            auto s = socle_C(level, p);
            out.insert(out.end(), s.begin(), s.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    return loewy_C(level, x).back();
}

std::vector<SimpleCLabel> top_C(const AdmissibleLevel& level, const CObject& x) {
    return loewy_C(level, x).front();
}

std::string to_string(const SimpleCLabel& x) {
    std::string f = "@" + std::to_string(x.flow);
    if (x.is_typical()) return "E(" + to_string(x.lam) + ";" + std::to_string(x.r) + "," + std::to_string(x.s) + ")" + f;
    return "D+" + idx(x.r, x.s) + f;
}

std::string to_string(const CObject& x) {
    using Tag = CObject::Tag;
    std::string f = "@" + std::to_string(x.flow);
    switch (x.tag) {
    case Tag::Simple: return to_string(x.label);
    case Tag::Eminus: return "E-" + idx(x.r, x.s) + f;
    case Tag::Eplus: return "E+" + idx(x.r, x.s) + f;
    case Tag::Lr0: return "L(" + std::to_string(x.r) + ")" + f;
    case Tag::Dminus: return "D-" + idx(x.r, x.s) + f;
    case Tag::Projective: return "P" + idx(x.r, x.s) + f;
    case Tag::VacuumExtensionA: return "A" + f;
    case Tag::DirectSum: {
        std::string out;
        for (const auto& p : x.parts) out += (out.empty() ? "" : " + ") + to_string(p);
        return out.empty() ? "0" : out;
    }
    }
    return "?";
}

std::string to_string(const GrothC& x) {
    std::string out;
    for (const auto& [a, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += "[" + to_string(a) + "]";
    }
    return out.empty() ? "0" : out;
}

}  // namespace sl2wt
