#pragma once

#include "sl2wt/local_cat.hpp"
#include "sl2wt/weight_cat.hpp"

namespace sl2wt {

// y = M_{r,s} (x) Pi_{l-1}(lam) restricts to a simple or to sigma^l E^-.
CObject restrict_simple(const AdmissibleLevel& level, const SimpleALabel& y);
GrothC groth_G(const AdmissibleLevel& level, const GrothA& y);

SimpleALabel tau(const AdmissibleLevel& level, const SimpleCLabel& x);
SimpleALabel tau_tilde(const AdmissibleLevel& level, const SimpleCLabel& x);
SimpleCLabel tau_inverse(const AdmissibleLevel& level, const SimpleALabel& y);

AObject induce_simple(const AdmissibleLevel& level, const SimpleCLabel& x);
AObject induce_vacuum(const AdmissibleLevel& level);

int frobenius_dim(const AdmissibleLevel& level, const SimpleCLabel& x, const SimpleALabel& y);

GrothA groth_F(const AdmissibleLevel& level, const GrothC& x);

}  // namespace sl2wt
