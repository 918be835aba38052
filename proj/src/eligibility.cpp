#include "fssrank/eligibility.hpp"

namespace fssrank {

EligibilityReport apply_eligibility_filters(
    const Dataset& d, const std::map<std::string, IndividualProductivity>& productivity,
    const EligibilityThresholds& thresholds) {
    EligibilityReport report;

    for (const auto& r : d.researchers) {
        auto& counts = report.sds_counts[r.sds_id];
        ++counts.members;
        if (r.gender == Gender::female) {
            ++counts.female;
        } else {
            ++counts.male;
        }
        auto it = productivity.find(r.researcher_id);
        if (it != productivity.end() && it->second.is_productive) ++counts.productive;
    }

    for (const auto& [sds_id, counts] : report.sds_counts) {
        const double share = counts.members > 0 ? static_cast<double>(counts.productive) /
                                                      static_cast<double>(counts.members)
                                                : 0.0;
        if (share < thresholds.min_productive_share) {
            report.excluded_sds_by_productivity.insert(sds_id);
        } else if (counts.female < thresholds.min_per_gender ||
                   counts.male < thresholds.min_per_gender) {
            report.excluded_sds_by_gender_count.insert(sds_id);
        } else {
            report.retained_sds.insert(sds_id);
        }
    }

    for (const auto& r : d.researchers) {
        if (!report.sds_retained(r.sds_id)) continue;
        ++report.university_uda_professor_counts[{r.university_id, r.uda_id}];
    }
    for (const auto& [pair, count] : report.university_uda_professor_counts) {
        if (count >= thresholds.min_professors_per_university_uda) {
            report.retained_university_uda_pairs.insert(pair);
        } else {
            report.excluded_university_uda_pairs.insert(pair);
        }
    }

    return report;
}

}  // namespace fssrank
