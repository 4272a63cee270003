#ifndef CHARSLOPE_CENSUS_HPP
#define CHARSLOPE_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "charslope/laurent.hpp"
#include "charslope/rational.hpp"

namespace charslope {

// Everything the pipeline consumes about one knot. Volumes are intervals
// because they are census inputs, not computed here; the Alexander
// polynomial must be normalized (value 1 at t=1, palindromic).
struct KnotRecord {
    std::string name;
    long genus = 0;
    LaurentPoly alexander;
    std::optional<RationalInterval> volume;
    bool hyperbolic = false;
    bool lspace_knot = false;
    long nu_plus = 0;
    long nu_plus_mirror = 0;
    // Free-form data-provenance note, e.g. why an enclosure was chosen.
    std::string provenance_note;

    Rational alexander_second_derivative() const {
        return alexander.second_derivative_at_one();
    }

    friend bool operator==(const KnotRecord& a, const KnotRecord& b);
};

// "mK" <-> "K": the naming convention tying a record to its mirror.
std::string mirror_name(const std::string& name);

class Census {
public:
    Census(std::vector<KnotRecord> records, Rational volume_threshold);

    const std::vector<KnotRecord>& records() const { return records_; }
    const Rational& volume_threshold() const { return volume_threshold_; }

    const KnotRecord* find(const std::string& name) const;
    // Throws DomainError when the name is unknown.
    const KnotRecord& require(const std::string& name) const;

    // Replaces the record with the same name; used by tests to perturb data.
    Census with_record(KnotRecord record) const;

    friend bool operator==(const Census& a, const Census& b);

private:
    std::vector<KnotRecord> records_;
    Rational volume_threshold_;
};

// The five knots with volume at most 3.07, with the invariants the
// obstruction pipeline needs. Volumes are stored as rational enclosures of
// the census values; 5_2 carries none because nothing downstream uses it.
const Census& builtin_census();

// JSON document <-> Census. Validation failures name the offending field,
// e.g. "knots[1].volume: lower 3 exceeds upper 2".
Census load_census(const std::string& json_text);
std::string save_census(const Census& census, int indent = 2);

}  // namespace charslope

#endif
