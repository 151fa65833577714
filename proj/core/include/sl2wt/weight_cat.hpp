#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2wt/arithmetic.hpp"
#include "sl2wt/groth.hpp"

namespace sl2wt {

// sigma^flow(D+_{r,s}) when atypical, sigma^flow(E_{lam, Delta_{r,s}}) when typical.
struct SimpleCLabel {
    enum class Kind { Atypical, Typical };

    Kind kind = Kind::Atypical;
    int r = 1;
    int s = 1;
    Weight lam;
    std::int64_t flow = 0;

    bool is_typical() const { return kind == Kind::Typical; }

    friend bool operator==(const SimpleCLabel& x, const SimpleCLabel& y) {
        return x.kind == y.kind && x.r == y.r && x.s == y.s && x.lam == y.lam && x.flow == y.flow;
    }
    friend bool operator!=(const SimpleCLabel& x, const SimpleCLabel& y) { return !(x == y); }
    friend bool operator<(const SimpleCLabel& x, const SimpleCLabel& y);
};

// Input forms accepted by canonicalize_simple.
struct RawCLabel {
    enum class Kind { DPlus, DMinus, L, E };

    Kind kind = Kind::DPlus;
    int r = 1;
    int s = 1;
    Weight lam;
    std::int64_t flow = 0;
};

SimpleCLabel canonicalize_simple(const AdmissibleLevel& level, const RawCLabel& raw);
SimpleCLabel canonicalize_simple(const AdmissibleLevel& level, const SimpleCLabel& x);

SimpleCLabel d_plus(const AdmissibleLevel& level, int r, int s, std::int64_t flow = 0);
SimpleCLabel d_minus(const AdmissibleLevel& level, int r, int s, std::int64_t flow = 0);
SimpleCLabel l_r0(const AdmissibleLevel& level, int r, std::int64_t flow = 0);
SimpleCLabel typical(const AdmissibleLevel& level, int r, int s, const Weight& lam,
                     std::int64_t flow = 0);
bool is_typical_weight(const AdmissibleLevel& level, int r, int s, const Weight& lam);

struct CObject {
    enum class Tag { Simple, Eminus, Eplus, Lr0, Dminus, Projective, VacuumExtensionA, DirectSum };

    Tag tag = Tag::Simple;
    SimpleCLabel label;
    int r = 0;
    int s = 0;
    std::int64_t flow = 0;
    std::vector<CObject> parts;

    static CObject simple(const SimpleCLabel& x);
    static CObject eminus(int r, int s, std::int64_t flow);
    static CObject eplus(int r, int s, std::int64_t flow);
    static CObject lr0(int r, std::int64_t flow = 0);
    static CObject dminus(int r, int s, std::int64_t flow = 0);
    static CObject projective(int r, int s, std::int64_t flow);
    // sigma^flow of A viewed in C.
    static CObject vacuum_extension(std::int64_t flow = 0);
    static CObject direct_sum(std::vector<CObject> parts);

    friend bool operator==(const CObject& x, const CObject& y);
    friend bool operator!=(const CObject& x, const CObject& y) { return !(x == y); }
};

using GrothC = Groth<SimpleCLabel>;
using LayersC = Layers<SimpleCLabel>;

SimpleCLabel spectral_flow(const SimpleCLabel& x, std::int64_t m);
CObject spectral_flow(const CObject& x, std::int64_t m);
GrothC spectral_flow(const GrothC& x, std::int64_t m);

// Replaces alias tags by Simple/Eminus and flattens nested sums.
CObject resolve(const AdmissibleLevel& level, const CObject& x);

SimpleCLabel contragredient_C(const AdmissibleLevel& level, const SimpleCLabel& x);
CObject contragredient_C(const AdmissibleLevel& level, const CObject& x);
GrothC contragredient_C(const AdmissibleLevel& level, const GrothC& x);

GrothC comp_factors(const AdmissibleLevel& level, const CObject& x);
// Radical layers of an indecomposable catalog object; a direct sum is aligned at the top.
LayersC loewy_C(const AdmissibleLevel& level, const CObject& x);
std::vector<SimpleCLabel> socle_C(const AdmissibleLevel& level, const CObject& x);
std::vector<SimpleCLabel> top_C(const AdmissibleLevel& level, const CObject& x);

std::string to_string(const SimpleCLabel& x);
std::string to_string(const CObject& x);
std::string to_string(const GrothC& x);

}  // namespace sl2wt
