#include "sl2wt/fusion.hpp"

#include <algorithm>
#include <set>

namespace sl2wt {

CObject fuse_D11plus_Dminus(const AdmissibleLevel& level, int r, int s) {
    check_kac_range(level, r, s);
    const int v = level.v;
    std::vector<CObject> parts;
    if (s == 1) {
        parts.push_back(CObject::simple(l_r0(level, r)));
        if (v >= 3) parts.push_back(CObject::simple(typical(level, r, 2, Weight(-level.lambda(r, 0)))));
    } else if (s <= v - 2) {
        parts.push_back(CObject::simple(d_minus(level, r, s - 1)));
        parts.push_back(CObject::simple(typical(level, r, s + 1, Weight(-level.lambda(r, s - 1)))));
    } else {
        parts.push_back(CObject::simple(d_minus(level, r, v - 2)));
    }
    if (parts.size() == 1) return parts.front();
    return CObject::direct_sum(std::move(parts));
}

CObject fuse_sigmaD11_selfsquare(const AdmissibleLevel& level) {
    if (level.v == 2) return CObject::simple(l_r0(level, 1, 4));
    return CObject::direct_sum({CObject::simple(d_plus(level, 1, 2, 2)),
                                CObject::simple(typical(level, 1, 1, Weight(level.lambda(1, 3)), 3))});
}

GrothC a_tensor_restriction(const AdmissibleLevel& level, const SimpleALabel& y) {
    GrothC out = comp_factors(level, restrict_simple(level, y));
    auto add = [&](int s, std::int64_t flow, const Weight& lam) {
        if (s < 1 || s > level.v - 1) return;
        out += comp_factors(level, restrict_simple(level, a_label(level, y.r, s, flow, lam)));
    };
    add(y.s, y.flow + 2, y.lam - Weight(level.t));
    add(y.s - 1, y.flow + 1, y.lam - Weight(level.t / 2));
    add(y.s + 1, y.flow + 1, y.lam - Weight(level.t / 2));
    return out;
}

GrothC n_tensor_restriction(const AdmissibleLevel& level, const SimpleALabel& y, const AFusionRule& rule) {
    GrothA n = k_class(level, induce_vacuum(level));
    return groth_G(level, groth_mul(rule, n, GrothA(y)));
}

GrothC n_tensor_restriction(const AdmissibleLevel& level, const SimpleALabel& y) {
    return n_tensor_restriction(
        level, y, [&](const SimpleALabel& a, const SimpleALabel& b) { return a_fuse(level, a, b); });
}

namespace {

struct Column {
    SimpleCLabel label;
    GrothA image;
};

void enumerate(const std::vector<Column>& cols, std::size_t j, GrothA& rem, std::vector<std::int64_t>& z,
               std::vector<GrothC>& found, std::size_t cap) {
    if (found.size() >= cap) return;
    if (j == cols.size()) {
        if (rem.empty()) {
            GrothC sol;
            for (std::size_t i = 0; i < cols.size(); ++i) sol.add(cols[i].label, z[i]);
            found.push_back(sol);
        }
        return;
    }
    std::int64_t bound = -1;
    for (const auto& [a, c] : cols[j].image.terms()) {
        std::int64_t b = rem.coefficient(a) / c;
        bound = bound < 0 ? b : std::min(bound, b);
    }
    for (std::int64_t n = 0; n <= bound; ++n) {
        z[j] = n;
        enumerate(cols, j + 1, rem, z, found, cap);
        rem -= cols[j].image;
    }
    rem += cols[j].image * (bound + 1);
    z[j] = 0;
}

}  // namespace

SolveResult solve_induced(const AdmissibleLevel& level, const GrothA& p) {
    SolveResult result;
    std::set<SimpleALabel> rows_set;
    for (const auto& [a, c] : p.terms()) rows_set.insert(a);

    std::vector<Column> cols;
    std::set<SimpleCLabel> seen;
    for (const auto& a : rows_set) {
        SimpleCLabel x = tau_inverse(level, a);
        if (!seen.insert(x).second) continue;
        GrothA image = groth_F(level, GrothC(x));
        bool inside = true;
        for (const auto& [b, c] : image.terms()) inside = inside && rows_set.count(b) > 0;
        if (inside) cols.push_back({x, image});
    }
    result.candidates = cols.size();

    std::vector<SimpleALabel> rows(rows_set.begin(), rows_set.end());
    const std::size_t m = rows.size(), n = cols.size();
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) mat[i][j] = Rational(cols[j].image.coefficient(rows[i]));
        mat[i][n] = Rational(p.coefficient(rows[i]));
    }

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && mat[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(mat[piv], mat[row]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || mat[i][col] == 0) continue;
            Rational f = mat[i][col] / mat[row][col];
            for (std::size_t c = col; c <= n; ++c) mat[i][c] -= f * mat[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (mat[i][n] != 0) return result;

    if (pivots.size() == n) {
        GrothC sol;
        for (std::size_t i = 0; i < n; ++i) {
            Rational z = mat[i][n] / mat[i][pivots[i]];
            if (!is_integer(z) || z < 0) return result;
            sol.add(cols[pivots[i]].label, to_int64(numer(z)));
        }
        result.status = SolveResult::Status::Unique;
        result.solutions.push_back(sol);
        return result;
    }

    GrothA rem = p;
    std::vector<std::int64_t> z(n, 0);
    enumerate(cols, 0, rem, z, result.solutions, 16);
    if (result.solutions.size() == 1) result.status = SolveResult::Status::Unique;
    else if (result.solutions.size() > 1) result.status = SolveResult::Status::Ambiguous;
    return result;
}

GrothC groth_fuse_C(const AdmissibleLevel& level, const GrothC& x, const GrothC& y) {
    if (!x.is_effective() || !y.is_effective())
        throw PreconditionViolation("groth_fuse_C expects effective classes");
    GrothA p = groth_mul(level, groth_F(level, x), groth_F(level, y));
    SolveResult res = solve_induced(level, p);
    if (res.status == SolveResult::Status::NoSolution)
        throw NoSolution("no effective class induces to " + to_string(p));
    if (res.status == SolveResult::Status::Ambiguous)
        throw Ambiguous("several effective classes induce to " + to_string(p), res.solutions);
    return res.solutions.front();
}

}  // namespace sl2wt
