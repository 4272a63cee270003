#ifndef CHARSLOPE_LAURENT_HPP
#define CHARSLOPE_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charslope/rational.hpp"

namespace charslope {

// Laurent polynomial with integer coefficients and half-integer exponents.
// Exponents are stored doubled, so t^(1/2) has key 1 and t^-3 has key -6;
// this keeps half exponents exact while Alexander polynomials of knots,
// which only ever have integer exponents, use even keys throughout.
class LaurentPoly {
public:
    using DoubledExp = std::int64_t;
    using TermMap = std::map<DoubledExp, mpz_class>;

    LaurentPoly() = default;  // zero polynomial
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(const mpz_class& c);
    // Single term c * t^(d/2).
    static LaurentPoly term(const mpz_class& c, DoubledExp d);
    // Terms given as (doubled exponent, coefficient) pairs; duplicates add.
    static LaurentPoly from_doubled_terms(
        std::initializer_list<std::pair<DoubledExp, long>> terms);
    static LaurentPoly from_doubled_terms(
        const std::vector<std::pair<DoubledExp, mpz_class>>& terms);
    // Convenience for ordinary Laurent polynomials: (exponent, coefficient).
    static LaurentPoly from_integer_terms(
        std::initializer_list<std::pair<long, long>> terms);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coefficient(DoubledExp d) const;

    // Sum of coefficients, i.e. the value at t = 1.
    mpz_class value_at_one() const;
    // First and second derivative in t, evaluated at t = 1. Exact; the
    // results are rational because of half-integer exponents.
    Rational first_derivative_at_one() const;
    Rational second_derivative_at_one() const;

    // t -> t^s on every term: exponents scale by s, coefficients unchanged.
    LaurentPoly substitute_power(long s) const;

    bool is_palindromic() const;  // coefficient(d) == coefficient(-d)
    // Normalization contract for Alexander polynomials of knots: value 1 at
    // t = 1, palindromic, and integer exponents only.
    bool is_alexander_normalized() const;
    // Throws ValidationError naming the violated property; `what` prefixes
    // the message (used for census field paths).
    void require_alexander_normalized(const std::string& what) const;

    // Exact division; throws DomainError if the divisor is zero or the
    // division leaves a remainder (a remainder always indicates a caller
    // bug in this library).
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        return a -= b;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // Sorted term list, e.g. "2t^-1 - 3 + 2t" or "t^-1/2 + t^1/2".
    std::string str() const;
    // Sorted (doubled exponent, coefficient) pairs, the JSON wire form.
    std::vector<std::pair<DoubledExp, mpz_class>> doubled_terms() const;

private:
    void set(DoubledExp d, mpz_class c);  // erases on zero
    void add(DoubledExp d, const mpz_class& c);

    TermMap terms_;
};

// Sum_{i=0}^{k-1} t^(i + (1-k)/2): the symmetrized power sum
// t^((1-k)/2) * (t^k - 1)/(t - 1). Palindromic, value k at t = 1, second
// derivative k(k^2-1)/12 at t = 1. Half-integer exponents for even k.
LaurentPoly symmetric_power_sum(long k);

// Symmetrized Alexander polynomial of the (r,s) torus knot, computed as the
// exact quotient symmetric_power_sum(r*s) / (symmetric_power_sum(r) *
// symmetric_power_sum(s)). Requires gcd(r, s) = 1; r = 1 or s = 1 gives the
// unknot polynomial 1. Result has integer exponents and is
// alexander-normalized.
LaurentPoly torus_alexander(long r, long s);

// Closed form (r^2-1)(s^2-1)/12 for the second derivative at t = 1 of the
// (r,s) torus knot polynomial; sign-insensitive in r and s, and 0 when
// either is +-1. Requires gcd(|r|, |s|) = 1.
Rational torus_second_derivative(long r, long s);

}  // namespace charslope

#endif
