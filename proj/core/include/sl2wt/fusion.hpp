#pragma once

#include <vector>

#include "sl2wt/functors.hpp"

namespace sl2wt {

SL2WT_ERROR(NoSolution);

struct Ambiguous : Error {
    Ambiguous(const std::string& what, std::vector<GrothC> sols) : Error(what), solutions(std::move(sols)) {}
    const char* kind() const noexcept override { return "Ambiguous"; }
    std::vector<GrothC> solutions;
};

CObject fuse_D11plus_Dminus(const AdmissibleLevel& level, int r, int s);
CObject fuse_sigmaD11_selfsquare(const AdmissibleLevel& level);

// K-class of A (x) G(y) from the explicit composition of A (x) G(M (x) Pi).
GrothC a_tensor_restriction(const AdmissibleLevel& level, const SimpleALabel& y);
// K-class of G(N (x)_A y) through the ring GrothA.
GrothC n_tensor_restriction(const AdmissibleLevel& level, const SimpleALabel& y, const AFusionRule& rule);
GrothC n_tensor_restriction(const AdmissibleLevel& level, const SimpleALabel& y);

struct SolveResult {
    enum class Status { Unique, Ambiguous, NoSolution };
    Status status = Status::NoSolution;
    std::vector<GrothC> solutions;
    std::size_t candidates = 0;
};

// Nonnegative z with groth_F(z) = p.
SolveResult solve_induced(const AdmissibleLevel& level, const GrothA& p);
GrothC groth_fuse_C(const AdmissibleLevel& level, const GrothC& x, const GrothC& y);

}  // namespace sl2wt
