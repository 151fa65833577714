#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace sl2wt {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define SL2WT_ERROR(Name)                                                    \
    struct Name : Error {                                                    \
        using Error::Error;                                                  \
        const char* kind() const noexcept override { return #Name; }         \
    }

SL2WT_ERROR(NotAdmissible);
SL2WT_ERROR(OutOfKacTable);
SL2WT_ERROR(NotSimple);
SL2WT_ERROR(PreconditionViolation);
SL2WT_ERROR(ParseError);

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Integer numer(const Rational& x);
Integer denom(const Rational& x);
Integer floor_of(const Rational& x);
bool is_integer(const Rational& x);
// Representative of x + mZ in [0, m).
Rational reduce_mod(const Rational& x, const Rational& m);
std::string to_string(const Rational& x);
// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);
std::int64_t to_int64(const Integer& x);

// a + b*w with w a fixed formal irrational.
struct Weight {
    Rational a;
    Rational b;

    Weight() = default;
    Weight(Rational a_) : a(std::move(a_)) {}
    Weight(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    Weight(int a_) : a(a_) {}

    static Weight omega() { return Weight(Rational(0), Rational(1)); }

    bool is_rational() const { return b == 0; }
    bool is_integer() const { return b == 0 && sl2wt::is_integer(a); }
    bool is_zero() const { return a == 0 && b == 0; }

    Weight reduce(int m) const { return Weight(reduce_mod(a, Rational(m)), b); }

    Weight operator-() const { return Weight(-a, -b); }
    Weight& operator+=(const Weight& o) { a += o.a; b += o.b; return *this; }
    Weight& operator-=(const Weight& o) { a -= o.a; b -= o.b; return *this; }
    Weight& operator*=(const Rational& c) { a *= c; b *= c; return *this; }

    friend Weight operator+(Weight x, const Weight& y) { return x += y; }
    friend Weight operator-(Weight x, const Weight& y) { return x -= y; }
    friend Weight operator*(Weight x, const Rational& c) { return x *= c; }
    friend Weight operator*(const Rational& c, Weight x) { return x *= c; }
    friend Weight operator/(Weight x, const Rational& c) { return Weight(x.a / c, x.b / c); }

    friend bool operator==(const Weight& x, const Weight& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
    friend bool operator<(const Weight& x, const Weight& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

// x == y in (Q + Qw) / mZ
bool congruent(const Weight& x, const Weight& y, int m);
std::string to_string(const Weight& w);
// Compact syntax: "1/5+w", "-w", "3/2w", "2".
Weight parse_weight(const std::string& text);

struct AdmissibleLevel {
    int u = 0;
    int v = 0;
    Rational t;
    Rational k;
    Rational c;

    friend bool operator==(const AdmissibleLevel& x, const AdmissibleLevel& y) {
        return x.u == y.u && x.v == y.v;
    }

    Rational lambda(int r, int s) const;
    Rational delta(int r, int s) const;
    Rational nu(int r, int s) const;
    Rational h(int r, int s) const;
};

AdmissibleLevel admissible_level(int u, int v);
// "u/v"
AdmissibleLevel parse_level(const std::string& text);
std::string to_string(const AdmissibleLevel& level);

struct KacData {
    int r = 0;
    int s = 0;
    Rational lambda_rs;
    Rational delta_rs;
    Rational nu_rs;
    std::optional<Rational> h_rs;
};

KacData kac_data(const AdmissibleLevel& level, int r, int s);

Weight pi_conf_weight(const AdmissibleLevel& level, std::int64_t flow, const Weight& lam);
Rational conf_wt_gap(const AdmissibleLevel& level, int r, int s);
Rational ks_dual_level(const AdmissibleLevel& level);

void check_kac_range(const AdmissibleLevel& level, int r, int s);

}  // namespace sl2wt
