#include "sl2wt/arithmetic.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace sl2wt {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(Integer(num), Integer(den));
}

Integer numer(const Rational& x) { return boost::multiprecision::numerator(x); }
Integer denom(const Rational& x) { return boost::multiprecision::denominator(x); }

Integer floor_of(const Rational& x) {
    Integer n = numer(x);
    Integer d = denom(x);
    Integer q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

bool is_integer(const Rational& x) { return denom(x) == 1; }

Rational reduce_mod(const Rational& x, const Rational& m) {
    Rational q = x / m;
    return x - m * Rational(floor_of(q));
}

std::string to_string(const Rational& x) {
    if (is_integer(x)) return numer(x).str();
    return numer(x).str() + "/" + denom(x).str();
}

std::int64_t to_int64(const Integer& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits");
    return x.convert_to<std::int64_t>();
}

static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto slash = s.find('/');
    std::string n = slash == std::string::npos ? s : s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw ParseError("bad rational: '" + text + "'");
    Integer den(d);
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational r(Integer(n), den);
    return neg ? Rational(-r) : r;
}

bool congruent(const Weight& x, const Weight& y, int m) {
    return (x - y).reduce(m).is_zero();
}

std::string to_string(const Weight& w) {
    if (w.b == 0) return to_string(w.a);
    std::string out;
    if (w.a != 0) out = to_string(w.a);
    Rational b = w.b;
    if (b < 0) {
        out += "-";
        b = -b;
    } else if (!out.empty()) {
        out += "+";
    }
    if (b != 1) out += to_string(b);
    return out + "w";
}

Weight parse_weight(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty weight");
    Weight out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        bool neg = false;
        if (term[0] == '+' || term[0] == '-') {
            neg = term[0] == '-';
            term = term.substr(1);
        }
        if (term.empty()) throw ParseError("bad weight: '" + text + "'");
        bool is_w = term.back() == 'w';
        if (is_w) {
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
        }
        Rational c = term.empty() ? Rational(1) : parse_rational(term);
        if (neg) c = -c;
        if (is_w) out.b += c;
        else out.a += c;
    }
    return out;
}

AdmissibleLevel admissible_level(int u, int v) {
    if (u < 2 || v < 2 || std::gcd(u, v) != 1)
        throw NotAdmissible("level " + std::to_string(u) + "/" + std::to_string(v) +
                            " is not a non-integral admissible level");
    AdmissibleLevel level;
    level.u = u;
    level.v = v;
    level.t = Rational(Integer(u), Integer(v));
    level.k = level.t - 2;
    Rational kp1 = level.k + 1;
    level.c = Rational(1) - 6 * kp1 * kp1 / (level.k + 2);
    return level;
}

AdmissibleLevel parse_level(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw ParseError("level must be written u/v");
    std::string u = text.substr(0, slash), v = text.substr(slash + 1);
    if (!all_digits(u) || !all_digits(v) || u.size() > 6 || v.size() > 6)
        throw ParseError("level must be written u/v with positive integers");
    return admissible_level(std::stoi(u), std::stoi(v));
}

std::string to_string(const AdmissibleLevel& level) {
    return std::to_string(level.u) + "/" + std::to_string(level.v);
}

Rational AdmissibleLevel::lambda(int r, int s) const { return Rational(r - 1) - t * s; }

Rational AdmissibleLevel::delta(int r, int s) const {
    Rational x = Rational(r) - t * s;
    return (x * x - 1) / (4 * t);
}

Rational AdmissibleLevel::nu(int r, int s) const { return (Rational(r - 1) - t * (s - 1)) / 2; }

Rational AdmissibleLevel::h(int r, int s) const {
    Rational a(s * u - r * v);
    Rational b(u - v);
    return (a * a - b * b) / (4 * u * v);
}

void check_kac_range(const AdmissibleLevel& level, int r, int s) {
    if (r < 1 || r > level.u - 1 || s < 1 || s > level.v - 1)
        throw OutOfKacTable("(" + std::to_string(r) + "," + std::to_string(s) +
                            ") outside the Kac table at level " + to_string(level));
}

KacData kac_data(const AdmissibleLevel& level, int r, int s) {
    if (r < 1 || r > level.u - 1 || s < 0 || s > level.v)
        throw OutOfKacTable("(" + std::to_string(r) + "," + std::to_string(s) +
                            ") outside the Kac table at level " + to_string(level));
    KacData d;
    d.r = r;
    d.s = s;
    d.lambda_rs = level.lambda(r, s);
    d.delta_rs = level.delta(r, s);
    d.nu_rs = level.nu(r, s);
    if (s >= 1 && s <= level.v - 1) d.h_rs = level.h(r, s);
    return d;
}

Weight pi_conf_weight(const AdmissibleLevel& level, std::int64_t flow, const Weight& lam) {
    Rational l(flow);
    return Weight(level.k * l * l / 4) + lam * (l + 1);
}

Rational conf_wt_gap(const AdmissibleLevel& level, int r, int s) {
    check_kac_range(level, r, s);
    return level.delta(r, s + 1) - level.delta(r, s - 1);
}

Rational ks_dual_level(const AdmissibleLevel& level) { return Rational(1) / (level.k + 2) - 1; }

}  // namespace sl2wt
