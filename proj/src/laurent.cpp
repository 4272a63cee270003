#include "charslope/laurent.hpp"

#include <numeric>
#include <sstream>

#include "charslope/errors.hpp"

namespace charslope {

namespace {

LaurentPoly::DoubledExp checked_add(LaurentPoly::DoubledExp a,
                                    LaurentPoly::DoubledExp b) {
    LaurentPoly::DoubledExp r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw DomainError("Laurent exponent overflow in multiplication");
    }
    return r;
}

LaurentPoly::DoubledExp checked_mul(LaurentPoly::DoubledExp a, long s) {
    LaurentPoly::DoubledExp r = 0;
    if (__builtin_mul_overflow(a, static_cast<LaurentPoly::DoubledExp>(s),
                               &r)) {
        throw DomainError("Laurent exponent overflow in power substitution");
    }
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
    LaurentPoly p;
    p.set(0, c);
    return p;
}

LaurentPoly LaurentPoly::term(const mpz_class& c, DoubledExp d) {
    LaurentPoly p;
    p.set(d, c);
    return p;
}

LaurentPoly LaurentPoly::from_doubled_terms(
    std::initializer_list<std::pair<DoubledExp, long>> terms) {
    LaurentPoly p;
    for (const auto& [d, c] : terms) p.add(d, mpz_class(c));
    return p;
}

LaurentPoly LaurentPoly::from_doubled_terms(
    const std::vector<std::pair<DoubledExp, mpz_class>>& terms) {
    LaurentPoly p;
    for (const auto& [d, c] : terms) p.add(d, c);
    return p;
}

LaurentPoly LaurentPoly::from_integer_terms(
    std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms)
        p.add(checked_mul(static_cast<DoubledExp>(e), 2), mpz_class(c));
    return p;
}

mpz_class LaurentPoly::coefficient(DoubledExp d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPoly::value_at_one() const {
    mpz_class sum = 0;
    for (const auto& [d, c] : terms_) sum += c;
    return sum;
}

Rational LaurentPoly::first_derivative_at_one() const {
    // d/dt of c*t^e at 1 is c*e, with e = d/2.
    Rational sum;
    for (const auto& [d, c] : terms_) {
        sum += Rational(c * mpz_class(d), mpz_class(2));
    }
    return sum;
}

Rational LaurentPoly::second_derivative_at_one() const {
    // d2/dt2 of c*t^e at 1 is c*e*(e-1) = c*d*(d-2)/4 with e = d/2.
    Rational sum;
    for (const auto& [d, c] : terms_) {
        sum += Rational(c * mpz_class(d) * mpz_class(d - 2), mpz_class(4));
    }
    return sum;
}

LaurentPoly LaurentPoly::substitute_power(long s) const {
    if (s < 1) throw DomainError("substitute_power requires s >= 1");
    LaurentPoly out;
    for (const auto& [d, c] : terms_) out.set(checked_mul(d, s), c);
    return out;
}

bool LaurentPoly::is_palindromic() const {
    for (const auto& [d, c] : terms_) {
        if (coefficient(-d) != c) return false;
    }
    return true;
}

bool LaurentPoly::is_alexander_normalized() const {
    if (value_at_one() != 1) return false;
    if (!is_palindromic()) return false;
    for (const auto& [d, c] : terms_) {
        if (d % 2 != 0) return false;
    }
    return true;
}

void LaurentPoly::require_alexander_normalized(const std::string& what) const {
    mpz_class v = value_at_one();
    if (v != 1) {
        throw ValidationError(what + ": value at 1 is " + v.get_str() +
                              ", expected 1");
    }
    if (!is_palindromic()) {
        throw ValidationError(what + ": not palindromic (coefficients must "
                              "satisfy a(e) = a(-e))");
    }
    for (const auto& [d, c] : terms_) {
        if (d % 2 != 0) {
            throw ValidationError(what + ": half-integer exponent " +
                                  std::to_string(d) +
                                  "/2 not allowed in a knot polynomial");
        }
    }
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("Laurent division by zero");
    if (is_zero()) return LaurentPoly();

    const auto lead = std::prev(divisor.terms_.end());
    const DoubledExp div_hi = lead->first;
    const mpz_class& div_lead = lead->second;
    // The exact quotient's lowest exponent is bounded below by
    // min(dividend) - min(divisor); anything under that means no exact
    // quotient exists.
    const DoubledExp min_quot_exp =
        terms_.begin()->first - divisor.terms_.begin()->first;

    LaurentPoly remainder = *this;
    LaurentPoly quotient;
    while (!remainder.is_zero()) {
        const auto rlead = std::prev(remainder.terms_.end());
        const DoubledExp qd = rlead->first - div_hi;
        if (qd < min_quot_exp || !mpz_divisible_p(rlead->second.get_mpz_t(),
                                                  div_lead.get_mpz_t())) {
            throw DomainError("inexact Laurent division (nonzero remainder)");
        }
        const mpz_class qc = rlead->second / div_lead;
        quotient.add(qd, qc);
        for (const auto& [d, c] : divisor.terms_) {
            remainder.add(checked_add(d, qd), -(c * qc));
        }
    }
    return quotient;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [d, c] : terms_) out.set(d, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            out.add(checked_add(da, db), ca * cb);
        }
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        const bool negative = c < 0;
        const mpz_class mag = ::abs(c);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool unit = mag == 1;
        if (d == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str();
            os << "t";
            if (d != 2) {
                os << "^";
                if (d % 2 == 0) {
                    os << (d / 2);
                } else {
                    os << d << "/2";
                }
            }
        }
    }
    return os.str();
}

std::vector<std::pair<LaurentPoly::DoubledExp, mpz_class>>
LaurentPoly::doubled_terms() const {
    std::vector<std::pair<DoubledExp, mpz_class>> out;
    out.reserve(terms_.size());
    for (const auto& [d, c] : terms_) out.emplace_back(d, c);
    return out;
}

void LaurentPoly::set(DoubledExp d, mpz_class c) {
    if (c == 0) {
        terms_.erase(d);
    } else {
        terms_[d] = std::move(c);
    }
}

void LaurentPoly::add(DoubledExp d, const mpz_class& c) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly symmetric_power_sum(long k) {
    if (k < 1) throw DomainError("symmetric_power_sum requires k >= 1");
    LaurentPoly p;
    for (long i = 0; i < k; ++i) {
        // exponent i + (1-k)/2, doubled: 2i + 1 - k
        p += LaurentPoly::term(1, 2 * i + 1 - k);
    }
    return p;
}

LaurentPoly torus_alexander(long r, long s) {
    if (r < 1 || s < 1) throw DomainError("torus parameters must be >= 1");
    if (std::gcd(r, s) != 1) {
        throw DomainError("torus parameters (" + std::to_string(r) + ", " +
                          std::to_string(s) + ") are not coprime: not a knot");
    }
    LaurentPoly quotient = symmetric_power_sum(r * s).divide_exact(
        symmetric_power_sum(r) * symmetric_power_sum(s));
    quotient.require_alexander_normalized("torus_alexander(" +
                                          std::to_string(r) + ", " +
                                          std::to_string(s) + ")");
    return quotient;
}

Rational torus_second_derivative(long r, long s) {
    const long ra = r < 0 ? -r : r;
    const long sa = s < 0 ? -s : s;
    if (std::gcd(ra, sa) != 1) {
        throw DomainError("torus parameters (" + std::to_string(r) + ", " +
                          std::to_string(s) + ") are not coprime: not a knot");
    }
    const mpz_class rr(r), ss(s);
    return Rational((rr * rr - 1) * (ss * ss - 1), mpz_class(12));
}

}  // namespace charslope
