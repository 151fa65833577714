#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "sl2wt/arithmetic.hpp"

namespace sl2wt {

// Polynomial in w with rational coefficients; w is transcendental, so Q[w] is a domain.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Weight& w);
    QPoly(const Rational& c) : QPoly(Weight(c)) {}
    QPoly(int c) : QPoly(Weight(c)) {}

    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    // Some exact value when this is a polynomial of degree <= 1.
    bool is_weight() const { return c_.size() <= 2; }
    Weight as_weight() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rational> c_;
};

// Square matrix over Q[w], stored by columns.
class SparseMatrix {
public:
    explicit SparseMatrix(int n = 0) : cols_(n) {}

    int size() const { return static_cast<int>(cols_.size()); }
    void set(int row, int col, const QPoly& x);
    QPoly get(int row, int col) const;
    const std::map<int, QPoly>& column(int col) const { return cols_[col]; }

    static SparseMatrix identity(int n, const QPoly& x = QPoly(1));
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix scaled(const QPoly& x) const;

private:
    std::vector<std::map<int, QPoly>> cols_;
};

enum class RelaxedSign { Minus, Plus };

// Basis index i in [-N, N] stands for the vector of sl2-weight lam + 2i.
struct RelaxedWindow {
    Weight lam;
    Weight casimir;
    RelaxedSign sign = RelaxedSign::Minus;
    int window = 1;
    SparseMatrix e, f, h;

    int dim() const { return 2 * window + 1; }
    int pos(int i) const { return i + window; }
    // Coefficient of the non-unit shift: f on v_i (minus) or e on u_i (plus).
    QPoly shift_coefficient(int i) const;
    bool brackets_hold() const;
    bool casimir_holds() const;
    // Span of indices with weight >= mu+2 (minus) or <= mu-2 (plus) is closed under e and f.
    bool submodule_stable(const Rational& mu) const;
};

RelaxedWindow build_relaxed(const Weight& lam, const Weight& casimir, RelaxedSign sign, int window);
std::vector<Weight> reducibility_points(const Weight& lam, const Weight& casimir, RelaxedSign sign, int window);
Rational casimir_at(const Rational& mu);

// Generalized Verma module over the top D+_{-t}, truncated to depth <= 1.
class AffineDepth1 {
public:
    enum class Gen { E, F, H, None };
    // (depth, generator of the depth-1 mode, index n of f_0^n v).
    using Key = std::tuple<int, Gen, int>;
    using Vector = std::map<Key, Rational>;

    AffineDepth1(const AdmissibleLevel& level, int window) : level_(level), window_(window) {}

    Rational top_weight() const { return -level_.t; }
    // x_m with m in {0, 1}.
    Vector apply(Gen x, int m, const Vector& vec) const;
    Vector singular_vector(const Rational& c_h, const Rational& c_f) const;

private:
    Vector top_action(Gen x, int n) const;
    AdmissibleLevel level_;
    int window_;
};

bool affine_singular_check(const AdmissibleLevel& level, const Rational& c_h, const Rational& c_f);
bool verify_affine_singular(const AdmissibleLevel& level);

}  // namespace sl2wt
