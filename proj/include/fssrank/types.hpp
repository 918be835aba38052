#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Core domain model: researchers, publications, authorships, the field
// taxonomy, and the observation window. All downstream computation consumes
// these records through a validated, id-sorted Dataset.

namespace fssrank {

enum class Gender : std::uint8_t { female, male };

const char* to_string(Gender g);
// Accepts "F"/"M" (case-insensitive "f"/"m" as well).
Gender gender_from_code(const std::string& code);

struct Window {
    int start_year = 0;
    int end_year = 0;

    int length_years() const { return end_year - start_year + 1; }
    bool contains(int year) const { return year >= start_year && year <= end_year; }
};

struct Researcher {
    std::string researcher_id;
    Gender gender = Gender::female;
    std::string university_id;
    std::string sds_id;
    std::string uda_id;
    std::string academic_rank;
    double years_active = 0.0;  // t in the productivity rate; must be > 0
    double wage = 1.0;          // average yearly wage; must be > 0
};

struct Publication {
    std::string pub_id;
    int year = 0;
    std::vector<std::string> subject_categories;  // sorted, no duplicates
    long long citations = 0;
    int n_authors = 1;
};

struct Authorship {
    std::string pub_id;
    std::string researcher_id;
    int byline_position = 1;  // in [1, n_authors]
};

// Weighting scheme labels are resolved per SDS through the taxonomy.
struct FieldTaxonomy {
    std::map<std::string, std::string> sds_to_uda;
    std::map<std::string, std::string> sds_to_weighting_scheme;
};

struct Dataset {
    std::vector<Researcher> researchers;    // sorted by researcher_id
    std::vector<Publication> publications;  // sorted by pub_id
    std::vector<Authorship> authorships;    // sorted by (pub_id, researcher_id)
    FieldTaxonomy taxonomy;
    Window window;

    // Canonical ordering; makes every downstream result independent of
    // input row order.
    void sort_records();
};

struct Violation {
    std::string record_kind;  // "researcher", "publication", ...
    std::string record_id;
    std::string field;
    std::string rule;
    std::string message;
};

struct IndividualProductivity {
    std::string researcher_id;
    double fss = 0.0;
    int n_publications = 0;
    bool is_productive = false;  // n_publications >= 1
    // Publications whose every category cell is absent from the baseline
    // table; they contribute 0 to the sum.
    std::vector<std::string> pubs_without_baseline;
};

struct EligibilityThresholds {
    double min_productive_share = 0.5;  // share of SDS members with >= 1 publication
    int min_per_gender = 30;            // individuals of each gender in the SDS
    int min_professors_per_university_uda = 10;
};

struct SdsEligibilityCounts {
    int members = 0;
    int productive = 0;
    int female = 0;
    int male = 0;
};

struct EligibilityReport {
    std::set<std::string> retained_sds;
    std::set<std::string> excluded_sds_by_productivity;
    std::set<std::string> excluded_sds_by_gender_count;
    std::set<std::pair<std::string, std::string>> retained_university_uda_pairs;
    std::set<std::pair<std::string, std::string>> excluded_university_uda_pairs;
    std::map<std::string, SdsEligibilityCounts> sds_counts;
    // Professors inside retained SDSs, per (university_id, uda_id).
    std::map<std::pair<std::string, std::string>, int> university_uda_professor_counts;

    bool sds_retained(const std::string& sds_id) const {
        return retained_sds.count(sds_id) != 0;
    }
    bool pair_retained(const std::string& university_id, const std::string& uda_id) const {
        return retained_university_uda_pairs.count({university_id, uda_id}) != 0;
    }
};

}  // namespace fssrank
