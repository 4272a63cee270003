#include "charslope/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "charslope/errors.hpp"

namespace charslope {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator: " +
                          num.get_str() + "/0");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class pow10(std::size_t k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : value_(make_canonical(num, den)) {}

Rational::Rational(long num, long den)
    : value_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("rational literal is just a sign: '" +
                                    std::string(text) + "'");

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        }
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator: '" +
                                     std::string(text) + "'");
        if (negative) n = -n;
        return Rational(n, d);
    }

    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) {
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        }
        mpz_class scale = pow10(frac.size());
        mpz_class n = mpz_class(std::string(whole), 10) * scale +
                      mpz_class(std::string(frac), 10);
        if (negative) n = -n;
        return Rational(n, scale);
    }

    if (!all_digits(s)) {
        throw ParseError("malformed integer: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(s), 10);
    if (negative) n = -n;
    return Rational(n);
}

Rational Rational::abs() const {
    Rational r = *this;
    r.value_ = ::abs(r.value_);
    return r;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::optional<std::string> Rational::decimal_exact() const {
    if (is_integer()) return num().get_str();
    // den must be of the form 2^a * 5^b for a finite decimal expansion.
    mpz_class d = den();
    std::size_t a = 0, b = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        d /= 2;
        ++a;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        d /= 5;
        ++b;
    }
    if (d != 1) return std::nullopt;
    std::size_t k = std::max(a, b);
    mpz_class scaled = num() * pow10(k) / den();  // exact by construction
    bool neg = scaled < 0;
    std::string digits = ::abs(scaled).get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    return (neg ? "-" : "") + digits;
}

std::string Rational::decimal_approx(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale = pow10(static_cast<std::size_t>(digits));
    mpz_class scaled;  // truncated toward zero
    mpz_tdiv_q(scaled.get_mpz_t(), mpz_class(num() * scale).get_mpz_t(),
               den().get_mpz_t());
    bool neg = scaled < 0;
    std::string s = ::abs(scaled).get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (s.size() <= static_cast<std::size_t>(digits))
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg ? "-" : "") + s;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.value_ = -r.value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Slope::Slope(const mpz_class& p, const mpz_class& q) {
    if (q == 0) {
        if (p != 1 && p != -1) {
            throw DomainError("invalid slope " + p.get_str() +
                              "/0 (only 1/0 is a slope)");
        }
        p_ = 1;
        q_ = 0;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    p_ = p / g;
    q_ = q / g;
    if (q_ < 0) {
        p_ = -p_;
        q_ = -q_;
    }
}

Slope Slope::meridian() {
    Slope s;
    s.p_ = 1;
    s.q_ = 0;
    return s;
}

Slope Slope::parse(std::string_view text) {
    std::string_view s = text;
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        Rational r = Rational::parse(s);
        if (!r.is_integer())
            throw ParseError("slope must be p/q or an integer: '" +
                             std::string(text) + "'");
        return Slope(r.num(), mpz_class(1));
    }
    // Parse numerator and denominator separately so 1/0 stays representable.
    Rational num = Rational::parse(s.substr(0, slash));
    Rational den = Rational::parse(s.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer())
        throw ParseError("slope parts must be integers: '" +
                         std::string(text) + "'");
    return Slope(num.num(), den.num());
}

Rational Slope::value() const {
    if (is_meridian()) throw DomainError("meridian 1/0 has no rational value");
    return Rational(p_, q_);
}

std::string Slope::str() const {
    return p_.get_str() + "/" + q_.get_str();
}

Slope rational_normalize(const mpz_class& p, const mpz_class& q) {
    return Slope(p, q);
}

RationalInterval::RationalInterval(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_ > upper_) {
        throw DomainError("interval endpoints out of order: [" + lower_.str() +
                          ", " + upper_.str() + "]");
    }
}

RationalInterval operator+(const RationalInterval& a,
                           const RationalInterval& b) {
    return RationalInterval(a.lower_ + b.lower_, a.upper_ + b.upper_);
}

RationalInterval operator-(const RationalInterval& a,
                           const RationalInterval& b) {
    return RationalInterval(a.lower_ - b.upper_, a.upper_ - b.lower_);
}

RationalInterval operator*(const RationalInterval& a,
                           const RationalInterval& b) {
    const Rational c1 = a.lower_ * b.lower_;
    const Rational c2 = a.lower_ * b.upper_;
    const Rational c3 = a.upper_ * b.lower_;
    const Rational c4 = a.upper_ * b.upper_;
    Rational lo = c1, hi = c1;
    for (const Rational* c : {&c2, &c3, &c4}) {
        if (*c < lo) lo = *c;
        if (*c > hi) hi = *c;
    }
    return RationalInterval(lo, hi);
}

RationalInterval operator/(const RationalInterval& a,
                           const RationalInterval& b) {
    if (b.contains_zero()) {
        throw DomainError("interval division by an interval containing zero");
    }
    RationalInterval inv(Rational(1) / b.upper_, Rational(1) / b.lower_);
    return a * inv;
}

const PiEnclosure& pi_enclosure() {
    // First 31 decimals of pi; truncation gives the lower endpoint, adding
    // one ulp the upper. Width is exactly 1e-31.
    static const PiEnclosure enclosure{RationalInterval(
        Rational::parse("3.1415926535897932384626433832795"),
        Rational::parse("3.1415926535897932384626433832796"))};
    return enclosure;
}

const Rational& two_pi_upper() {
    static const Rational value = Rational(2) * pi_enclosure().interval.upper();
    return value;
}

}  // namespace charslope
