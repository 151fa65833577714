#include "sl2wt/sl2_oracle.hpp"

#include <utility>

namespace sl2wt {

QPoly::QPoly(const Weight& w) : c_{w.a, w.b} { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Weight QPoly::as_weight() const {
    if (!is_weight()) throw PreconditionViolation("polynomial of degree > 1");
    Weight w;
    if (c_.size() > 0) w.a = c_[0];
    if (c_.size() > 1) w.b = c_[1];
    return w;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    out.trim();
    return out;
}

void SparseMatrix::set(int row, int col, const QPoly& x) {
    if (x.is_zero()) cols_[col].erase(row);
    else cols_[col][row] = x;
}

QPoly SparseMatrix::get(int row, int col) const {
    auto it = cols_[col].find(row);
    return it == cols_[col].end() ? QPoly() : it->second;
}

SparseMatrix SparseMatrix::identity(int n, const QPoly& x) {
    SparseMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, x);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(b.size());
    for (int j = 0; j < b.size(); ++j) {
        std::map<int, QPoly> col;
        for (const auto& [k, bkj] : b.cols_[j])
            for (const auto& [i, aik] : a.cols_[k]) col[i] += aik * bkj;
        for (const auto& [i, x] : col) out.set(i, j, x);
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out = a;
    for (int j = 0; j < b.size(); ++j)
        for (const auto& [i, x] : b.cols_[j]) out.set(i, j, out.get(i, j) + x);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return a + b.scaled(QPoly(-1));
}

SparseMatrix SparseMatrix::scaled(const QPoly& x) const {
    SparseMatrix out(size());
    for (int j = 0; j < size(); ++j)
        for (const auto& [i, y] : cols_[j]) out.set(i, j, y * x);
    return out;
}

Rational casimir_at(const Rational& mu) { return mu * mu / 2 + mu; }

QPoly RelaxedWindow::shift_coefficient(int i) const {
    QPoly c(casimir);
    if (sign == RelaxedSign::Minus) {
        QPoly mu(lam + Weight(2 * i - 2));
        return (c - QPoly(make_rational(1, 2)) * mu * mu - mu) * QPoly(make_rational(1, 2));
    }
    QPoly nu(lam + Weight(2 * i + 2));
    return (c - QPoly(make_rational(1, 2)) * nu * nu + nu) * QPoly(make_rational(1, 2));
}

RelaxedWindow build_relaxed(const Weight& lam, const Weight& casimir, RelaxedSign sign, int window) {
    if (window < 1) throw PreconditionViolation("window must be at least 1");
    RelaxedWindow w;
    w.lam = lam;
    w.casimir = casimir;
    w.sign = sign;
    w.window = window;
    const int n = w.dim();
    w.e = SparseMatrix(n);
    w.f = SparseMatrix(n);
    w.h = SparseMatrix(n);
    for (int i = -window; i <= window; ++i) {
        w.h.set(w.pos(i), w.pos(i), QPoly(lam + Weight(2 * i)));
        if (sign == RelaxedSign::Minus) {
            if (i < window) w.e.set(w.pos(i + 1), w.pos(i), QPoly(1));
            if (i > -window) w.f.set(w.pos(i - 1), w.pos(i), w.shift_coefficient(i));
        } else {
            if (i > -window) w.f.set(w.pos(i - 1), w.pos(i), QPoly(1));
            if (i < window) w.e.set(w.pos(i + 1), w.pos(i), w.shift_coefficient(i));
        }
    }
    return w;
}

static bool interior_equal(const RelaxedWindow& w, const SparseMatrix& a, const SparseMatrix& b) {
    for (int i = -w.window + 1; i <= w.window - 1; ++i)
        if (a.column(w.pos(i)) != b.column(w.pos(i))) return false;
    return true;
}

bool RelaxedWindow::brackets_hold() const {
    return interior_equal(*this, h * e - e * h, e.scaled(QPoly(2))) &&
           interior_equal(*this, h * f - f * h, f.scaled(QPoly(-2))) &&
           interior_equal(*this, e * f - f * e, h);
}

bool RelaxedWindow::casimir_holds() const {
    SparseMatrix shifted = h - SparseMatrix::identity(dim(), QPoly(2));
    SparseMatrix cas = (e * f).scaled(QPoly(2)) + (h * shifted).scaled(QPoly(make_rational(1, 2)));
    return interior_equal(*this, cas, SparseMatrix::identity(dim(), QPoly(casimir)));
}

bool RelaxedWindow::submodule_stable(const Rational& mu) const {
    if (!lam.is_rational()) throw PreconditionViolation("submodule test needs a rational weight");
    auto inside = [&](int i) {
        Rational wt = lam.a + 2 * i;
        return sign == RelaxedSign::Minus ? wt >= mu + 2 : wt <= mu - 2;
    };
    for (int i = -window; i <= window; ++i) {
        if (!inside(i)) continue;
        for (const SparseMatrix* m : {&e, &f})
            for (const auto& [row, x] : m->column(pos(i)))
                if (!inside(row - window)) return false;
    }
    return true;
}

std::vector<Weight> reducibility_points(const Weight& lam, const Weight& casimir, RelaxedSign sign, int window) {
    RelaxedWindow w = build_relaxed(lam, casimir, sign, window);
    std::vector<Weight> out;
    if (sign == RelaxedSign::Minus) {
        for (int i = -window + 1; i <= window; ++i)
            if (w.shift_coefficient(i).is_zero()) out.push_back(lam + Weight(2 * i - 2));
    } else {
        for (int i = -window; i <= window - 1; ++i)
            if (w.shift_coefficient(i).is_zero()) out.push_back(lam + Weight(2 * i + 2));
    }
    return out;
}

using Gen = AffineDepth1::Gen;

static std::vector<std::pair<Gen, Rational>> bracket(Gen x, Gen a) {
    if (x == a) return {};
    if (x == Gen::E && a == Gen::F) return {{Gen::H, Rational(1)}};
    if (x == Gen::F && a == Gen::E) return {{Gen::H, Rational(-1)}};
    if (x == Gen::H && a == Gen::E) return {{Gen::E, Rational(2)}};
    if (x == Gen::E && a == Gen::H) return {{Gen::E, Rational(-2)}};
    if (x == Gen::H && a == Gen::F) return {{Gen::F, Rational(-2)}};
    if (x == Gen::F && a == Gen::H) return {{Gen::F, Rational(2)}};
    return {};
}

static Rational pairing(Gen x, Gen a) {
    if (x == Gen::H && a == Gen::H) return Rational(2);
    if ((x == Gen::E && a == Gen::F) || (x == Gen::F && a == Gen::E)) return Rational(1);
    return Rational(0);
}

static void add_to(AffineDepth1::Vector& v, const AffineDepth1::Key& k, const Rational& c) {
    if (c == 0) return;
    Rational& slot = v[k];
    slot += c;
    if (slot == 0) v.erase(k);
}

AffineDepth1::Vector AffineDepth1::top_action(Gen x, int n) const {
    Vector out;
    Rational lam = top_weight();
    switch (x) {
    case Gen::H:
        add_to(out, {0, Gen::None, n}, lam - 2 * n);
        break;
    case Gen::F:
        if (n + 1 > window_) throw PreconditionViolation("affine window too small");
        add_to(out, {0, Gen::None, n + 1}, Rational(1));
        break;
    case Gen::E:
        if (n >= 1) add_to(out, {0, Gen::None, n - 1}, n * (lam - n + 1));
        break;
    case Gen::None:
        break;
    }
    return out;
}

AffineDepth1::Vector AffineDepth1::apply(Gen x, int m, const Vector& vec) const {
    Vector out;
    for (const auto& [key, c] : vec) {
        auto [depth, a, n] = key;
        if (depth == 0) {
            if (m == 0)
                for (const auto& [k2, c2] : top_action(x, n)) add_to(out, k2, c * c2);
            continue;
        }
        if (m == 0) {
            for (const auto& [g, c2] : bracket(x, a)) add_to(out, {1, g, n}, c * c2);
            for (const auto& [k2, c2] : top_action(x, n)) add_to(out, {1, a, std::get<2>(k2)}, c * c2);
        } else {
            for (const auto& [g, c2] : bracket(x, a))
                for (const auto& [k2, c3] : top_action(g, n)) add_to(out, k2, c * c2 * c3);
            add_to(out, {0, Gen::None, n}, c * pairing(x, a) * level_.k);
        }
    }
    return out;
}

AffineDepth1::Vector AffineDepth1::singular_vector(const Rational& c_h, const Rational& c_f) const {
    Vector s;
    add_to(s, {1, Gen::E, 2}, Rational(1));
    add_to(s, {1, Gen::H, 1}, c_h);
    add_to(s, {1, Gen::F, 0}, c_f);
    return s;
}

bool affine_singular_check(const AdmissibleLevel& level, const Rational& c_h, const Rational& c_f) {
    AffineDepth1 model(level, 8);
    auto s = model.singular_vector(c_h, c_f);
    return model.apply(Gen::E, 0, s).empty() && model.apply(Gen::E, 1, s).empty() &&
           model.apply(Gen::F, 1, s).empty() && model.apply(Gen::H, 1, s).empty();
}

bool verify_affine_singular(const AdmissibleLevel& level) {
    const Rational& t = level.t;
    return affine_singular_check(level, -(t + 1), -t * (t + 1));
}

}  // namespace sl2wt
