#include "charslope/census.hpp"

#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "charslope/errors.hpp"

namespace charslope {

using nlohmann::json;

namespace {

void validate_record(const KnotRecord& r, const std::string& path) {
    if (r.name.empty()) throw ValidationError(path + ".name: empty");
    if (r.genus < 0) throw ValidationError(path + ".genus: negative");
    if (r.nu_plus < 0 || r.nu_plus_mirror < 0) {
        throw ValidationError(path + ".nu_plus: negative");
    }
    r.alexander.require_alexander_normalized(path + ".alexander");
    if (r.volume && r.volume->lower() <= Rational(0)) {
        throw ValidationError(path + ".volume: lower bound " +
                              r.volume->lower().str() + " must be positive");
    }
    if (r.lspace_knot && r.genus > 0 && r.nu_plus != r.genus) {
        throw ValidationError(path + ".nu_plus: an L-space knot of genus " +
                              std::to_string(r.genus) + " must have nu_plus " +
                              std::to_string(r.genus) + ", got " +
                              std::to_string(r.nu_plus));
    }
}

std::string rational_text(const Rational& r) {
    if (auto d = r.decimal_exact()) return *d;
    return r.str();
}

json rational_json(const Rational& r) { return rational_text(r); }

Rational rational_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(mpz_class(j.get<long>()));
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    throw ValidationError(path + ": expected a rational string or integer");
}

json poly_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [d, c] : p.doubled_terms()) {
        json pair = json::array();
        pair.push_back(d);
        if (c.fits_slong_p()) {
            pair.push_back(c.get_si());
        } else {
            pair.push_back(c.get_str());
        }
        arr.push_back(pair);
    }
    return arr;
}

LaurentPoly poly_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw ValidationError(path + ": expected an array of "
                              "[doubled-exponent, coefficient] pairs");
    }
    std::vector<std::pair<LaurentPoly::DoubledExp, mpz_class>> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& pair = j[i];
        const std::string tpath = path + "[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer()) {
            throw ValidationError(tpath + ": expected [integer, integer]");
        }
        mpz_class coeff;
        if (pair[1].is_number_integer()) {
            coeff = mpz_class(pair[1].get<long>());
        } else if (pair[1].is_string()) {
            try {
                coeff = mpz_class(pair[1].get<std::string>(), 10);
            } catch (const std::invalid_argument&) {
                throw ValidationError(tpath + ": malformed coefficient");
            }
        } else {
            throw ValidationError(tpath + ": expected [integer, integer]");
        }
        terms.emplace_back(pair[0].get<LaurentPoly::DoubledExp>(), coeff);
    }
    return LaurentPoly::from_doubled_terms(terms);
}

template <typename T>
T field(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) {
        throw ValidationError(path + "." + key + ": missing");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ValidationError(path + "." + key + ": wrong type");
    }
}

}  // namespace

bool operator==(const KnotRecord& a, const KnotRecord& b) {
    return a.name == b.name && a.genus == b.genus &&
           a.alexander == b.alexander && a.volume == b.volume &&
           a.hyperbolic == b.hyperbolic && a.lspace_knot == b.lspace_knot &&
           a.nu_plus == b.nu_plus && a.nu_plus_mirror == b.nu_plus_mirror &&
           a.provenance_note == b.provenance_note;
}

std::string mirror_name(const std::string& name) {
    if (name.size() > 1 && name.front() == 'm') return name.substr(1);
    return "m" + name;
}

Census::Census(std::vector<KnotRecord> records, Rational volume_threshold)
    : records_(std::move(records)),
      volume_threshold_(std::move(volume_threshold)) {
    if (records_.empty()) {
        throw ValidationError("knots: empty record list");
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const std::string path = "knots[" + std::to_string(i) + "]";
        validate_record(records_[i], path);
        if (!names.insert(records_[i].name).second) {
            throw ValidationError(path + ".name: duplicate '" +
                                  records_[i].name + "'");
        }
    }
}

const KnotRecord* Census::find(const std::string& name) const {
    for (const auto& r : records_) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

const KnotRecord& Census::require(const std::string& name) const {
    const KnotRecord* r = find(name);
    if (!r) throw DomainError("unknown knot '" + name + "'");
    return *r;
}

Census Census::with_record(KnotRecord record) const {
    std::vector<KnotRecord> records = records_;
    for (auto& r : records) {
        if (r.name == record.name) {
            r = std::move(record);
            return Census(std::move(records), volume_threshold_);
        }
    }
    records.push_back(std::move(record));
    return Census(std::move(records), volume_threshold_);
}

bool operator==(const Census& a, const Census& b) {
    return a.records_ == b.records_ &&
           a.volume_threshold_ == b.volume_threshold_;
}

const Census& builtin_census() {
    static const Census census = [] {
        std::vector<KnotRecord> knots;

        KnotRecord fig8;
        fig8.name = "4_1";
        fig8.genus = 1;
        fig8.alexander =
            LaurentPoly::from_integer_terms({{-1, -1}, {0, 3}, {1, -1}});
        fig8.volume = RationalInterval(Rational::parse("2.0298"),
                                       Rational::parse("2.0299"));
        fig8.hyperbolic = true;
        fig8.lspace_knot = false;
        fig8.nu_plus = 0;
        fig8.nu_plus_mirror = 0;
        fig8.provenance_note =
            "volume enclosure follows the census value 2.0298832...; the "
            "alternative printed figure 2.0988 fails the 14.17 length-bound "
            "check (it would need a cap of 14.87) and is rejected";
        knots.push_back(fig8);

        KnotRecord five2;
        five2.name = "5_2";
        five2.genus = 1;
        five2.alexander =
            LaurentPoly::from_integer_terms({{-1, 2}, {0, -3}, {1, 2}});
        five2.hyperbolic = true;
        five2.lspace_knot = false;
        five2.nu_plus = 1;
        five2.nu_plus_mirror = 0;
        five2.provenance_note =
            "volume not stored: 5_2 is always excluded by its Alexander "
            "polynomial, never by volume";
        knots.push_back(five2);

        KnotRecord five2m = five2;
        five2m.name = "m5_2";
        five2m.nu_plus = 0;
        five2m.nu_plus_mirror = 1;
        knots.push_back(five2m);

        KnotRecord pretzel;
        pretzel.name = "12n242";
        pretzel.genus = 5;
        pretzel.alexander = LaurentPoly::from_integer_terms({{-5, 1},
                                                             {-4, -1},
                                                             {-2, 1},
                                                             {-1, -1},
                                                             {0, 1},
                                                             {1, -1},
                                                             {2, 1},
                                                             {4, -1},
                                                             {5, 1}});
        pretzel.volume = RationalInterval(Rational::parse("2.82"),
                                          Rational::parse("2.83"));
        pretzel.hyperbolic = true;
        pretzel.lspace_knot = true;
        pretzel.nu_plus = 5;
        pretzel.nu_plus_mirror = 0;
        pretzel.provenance_note =
            "(-2,3,7)-pretzel; L-space knot (it has lens space surgeries), "
            "so nu_plus equals the genus";
        knots.push_back(pretzel);

        KnotRecord pretzelm = pretzel;
        pretzelm.name = "m12n242";
        pretzelm.lspace_knot = false;
        pretzelm.nu_plus = 0;
        pretzelm.nu_plus_mirror = 5;
        pretzelm.provenance_note =
            "mirror of the (-2,3,7)-pretzel; mirrors of L-space knots are "
            "not L-space knots and have nu_plus 0";
        knots.push_back(pretzelm);

        return Census(std::move(knots), Rational::parse("3.07"));
    }();
    return census;
}

Census load_census(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("census document is not valid JSON: ") +
                         e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("census: expected a JSON object");
    }
    if (!doc.contains("volume_threshold")) {
        throw ValidationError("volume_threshold: missing");
    }
    Rational threshold =
        rational_from_json(doc.at("volume_threshold"), "volume_threshold");
    if (!doc.contains("knots") || !doc.at("knots").is_array()) {
        throw ValidationError("knots: missing or not an array");
    }

    std::vector<KnotRecord> records;
    const json& knots = doc.at("knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const json& k = knots[i];
        const std::string path = "knots[" + std::to_string(i) + "]";
        if (!k.is_object()) {
            throw ValidationError(path + ": expected an object");
        }
        KnotRecord r;
        r.name = field<std::string>(k, "name", path);
        r.genus = field<long>(k, "genus", path);
        if (!k.contains("alexander")) {
            throw ValidationError(path + ".alexander: missing");
        }
        r.alexander = poly_from_json(k.at("alexander"), path + ".alexander");
        if (k.contains("volume") && !k.at("volume").is_null()) {
            const json& v = k.at("volume");
            if (!v.is_object() || !v.contains("lower") ||
                !v.contains("upper")) {
                throw ValidationError(path + ".volume: expected "
                                      "{\"lower\", \"upper\"} or null");
            }
            Rational lo =
                rational_from_json(v.at("lower"), path + ".volume.lower");
            Rational hi =
                rational_from_json(v.at("upper"), path + ".volume.upper");
            if (lo > hi) {
                throw ValidationError(path + ".volume: lower " + lo.str() +
                                      " exceeds upper " + hi.str());
            }
            r.volume = RationalInterval(lo, hi);
        }
        r.hyperbolic = field<bool>(k, "hyperbolic", path);
        r.lspace_knot = field<bool>(k, "lspace_knot", path);
        r.nu_plus = field<long>(k, "nu_plus", path);
        r.nu_plus_mirror = field<long>(k, "nu_plus_mirror", path);
        if (k.contains("provenance_note") &&
            !k.at("provenance_note").is_null()) {
            r.provenance_note = field<std::string>(k, "provenance_note", path);
        }
        records.push_back(std::move(r));
    }
    return Census(std::move(records), std::move(threshold));
}

std::string save_census(const Census& census, int indent) {
    json doc;
    doc["volume_threshold"] = rational_json(census.volume_threshold());
    json knots = json::array();
    for (const auto& r : census.records()) {
        json k;
        k["name"] = r.name;
        k["genus"] = r.genus;
        k["alexander"] = poly_json(r.alexander);
        if (r.volume) {
            k["volume"] = {{"lower", rational_json(r.volume->lower())},
                           {"upper", rational_json(r.volume->upper())}};
        } else {
            k["volume"] = nullptr;
        }
        k["hyperbolic"] = r.hyperbolic;
        k["lspace_knot"] = r.lspace_knot;
        k["nu_plus"] = r.nu_plus;
        k["nu_plus_mirror"] = r.nu_plus_mirror;
        k["provenance_note"] = r.provenance_note;
        knots.push_back(std::move(k));
    }
    doc["knots"] = std::move(knots);
    return doc.dump(indent);
}

}  // namespace charslope
