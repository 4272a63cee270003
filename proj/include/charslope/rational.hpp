#ifndef CHARSLOPE_RATIONAL_HPP
#define CHARSLOPE_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace charslope {

// Exact rational number, always in canonical form: gcd(|num|, den) = 1 and
// den >= 1. Arithmetic is arbitrary precision (GMP underneath), so there is
// no overflow and no rounding anywhere.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(const mpz_class& n) : value_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);

    // Accepts "p/q", an integer string, or a decimal string ("2.83" parses
    // exactly as 283/100). Leading sign allowed; no exponents.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    // Exact decimal string when the denominator divides a power of ten
    // (e.g. 283/100 -> "2.83"), otherwise nothing.
    std::optional<std::string> decimal_exact() const;
    // Decimal approximation truncated toward zero to `digits` fractional
    // digits, for human-readable output only; decisions never use it.
    std::string decimal_approx(int digits) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws DomainError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) > 0;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) >= 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

// A surgery slope p/q in canonical form: gcd(|p|, q) = 1, q >= 1. The
// meridian 1/0 is a distinguished value (q = 0, p = 1); any (±1, 0) input
// normalizes to it, every other zero denominator is rejected.
class Slope {
public:
    Slope(const mpz_class& p, const mpz_class& q);
    Slope(long p, long q) : Slope(mpz_class(p), mpz_class(q)) {}
    static Slope meridian();
    static Slope parse(std::string_view text);  // "p/q" or integer, reduced

    bool is_meridian() const { return q_ == 0; }
    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }

    Rational value() const;  // throws DomainError on the meridian
    std::string str() const;  // always "p/q"; "1/0" for the meridian

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

private:
    Slope() = default;
    mpz_class p_;
    mpz_class q_;
};

// Canonicalizes an arbitrary fraction into a Slope; the operation behind
// every "written with p and q coprime and q >= 1" convention in the library.
Slope rational_normalize(const mpz_class& p, const mpz_class& q);

// Closed interval [lower, upper] with exact rational endpoints. Because the
// endpoints are exact, interval arithmetic here is outward-rounded by
// construction: the result interval contains every pointwise result.
class RationalInterval {
public:
    RationalInterval(Rational lower, Rational upper);
    static RationalInterval point(const Rational& x) {
        return RationalInterval(x, x);
    }

    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }
    Rational width() const { return upper_ - lower_; }
    bool contains(const Rational& x) const {
        return lower_ <= x && x <= upper_;
    }
    bool contains_zero() const { return contains(Rational(0)); }

    friend RationalInterval operator+(const RationalInterval& a,
                                      const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a,
                                      const RationalInterval& b);
    friend RationalInterval operator*(const RationalInterval& a,
                                      const RationalInterval& b);
    // Throws DomainError if b contains zero; the library never needs
    // unbounded intervals.
    friend RationalInterval operator/(const RationalInterval& a,
                                      const RationalInterval& b);

    friend bool operator==(const RationalInterval& a,
                           const RationalInterval& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }
    friend bool operator!=(const RationalInterval& a,
                           const RationalInterval& b) {
        return !(a == b);
    }

private:
    Rational lower_;
    Rational upper_;
};

// Hardcoded enclosure of pi of width 1e-31: both endpoints are truncations
// of the published decimal expansion of pi (down for the lower endpoint, up
// for the upper). The only transcendental constant the library ever needs.
struct PiEnclosure {
    RationalInterval interval;
};

const PiEnclosure& pi_enclosure();

// Upper endpoint of 2*pi, the value all rigorous volume-length decisions
// are made against.
const Rational& two_pi_upper();

}  // namespace charslope

#endif
