#ifndef CHARSLOPE_OBSTRUCTIONS_HPP
#define CHARSLOPE_OBSTRUCTIONS_HPP

#include <vector>

#include "charslope/laurent.hpp"
#include "charslope/rational.hpp"

namespace charslope {

// Casson-Walker surgery correction term q * delta2 / (2p) for p/q surgery,
// where delta2 is the Alexander polynomial's second derivative at 1. Throws
// DomainError for p = 0 (the surgery formula needs a rational homology
// sphere).
Rational casson_walker_correction(const Slope& slope, const Rational& delta2);

// Two knots with different second derivatives at 1 can never share a
// nonzero surgery slope.
bool casson_walker_excludes(const Rational& delta2_a, const Rational& delta2_b);

// A cable parameter pair satisfying the Casson-Walker cabling equation.
struct CableSolution {
    long r = 1;  // >= 1; (-r, s) is identified with (r, s)
    long s = 2;  // winding number, >= 2; coprime to r

    friend bool operator==(const CableSolution& a, const CableSolution& b) {
        return a.r == b.r && a.s == b.s;
    }
};

struct CableSearch {
    std::vector<CableSolution> solutions;
    // True when no solution can exist for any s > s_max (which the positive
    // companion bound companion * s^2 <= target guarantees); callers must
    // not treat an empty-but-incomplete search as an exclusion.
    bool complete = false;
};

// All (r, s) with r >= 1, 2 <= s <= s_max, gcd(r, s) = 1 satisfying
//   target = (r^2 - 1)(s^2 - 1)/12 + companion * s^2,
// solved per s as r^2 = 1 + 12(target - companion s^2)/(s^2 - 1) and kept
// only for exact integer perfect squares.
CableSearch cable_solutions(const Rational& target, const Rational& companion,
                            long s_max);

// Alexander polynomial of the (r, s) cable with the given companion
// polynomial: companion(t^s) * torus_alexander(|r|, s). Requires s >= 2,
// r != 0, gcd(|r|, s) = 1, and a normalized companion.
LaurentPoly cable_alexander(const LaurentPoly& companion, long r, long s);

// Non-increasing sequence of nonnegative integers, implicitly zero beyond
// the stored prefix (as every such sequence from knot Floer homology is
// eventually zero).
class VSequence {
public:
    VSequence() = default;
    explicit VSequence(std::vector<long> values);

    const std::vector<long>& values() const { return values_; }
    long value_at(const mpz_class& index) const;

private:
    std::vector<long> values_;
};

// Sum over i = 0..p-1 of max{ v[floor(i/q)], v[ceil((p-i)/q)] }; twice this
// is the total d-invariant gap between p/q surgery on the knot and on the
// unknot. Always >= v[0]. Requires p, q >= 1.
mpz_class d_invariant_gap_sum(const VSequence& v, long p, long q);

// nu_plus > 0 together with nu_plus(mirror) = 0 rules out every nonzero
// shared surgery slope between a knot and its mirror.
bool nu_plus_excludes_mirror(long nu_plus, long nu_plus_mirror);

// A p/q surgery on a satellite with winding number w is a p/(q w^2) surgery
// on the companion; returns that slope in canonical form. Requires w >= 2.
Slope satellite_slope_transform(const Slope& slope, long w);

// Satellite genus: pattern_genus + w * companion_genus.
long schubert_genus(long pattern_genus, long w, long companion_genus);

enum class GenusRigidity { PositiveRigid, NegativeRigid, None };

// Genus-rigidity thresholds for p/q surgery on a genus-g knot, evaluated on
// the (p, q) pair exactly as written (no reduction):
//   PositiveRigid  iff p >= (4g + 4) q
//   NegativeRigid  iff q >= 2 and p <= min{2q - 12 - 4q^2, -10q}
// Requires q >= 1 and g >= 1.
GenusRigidity genus_rigidity(const mpz_class& p, const mpz_class& q, long g);

}  // namespace charslope

#endif
