#pragma once

#include <map>
#include <string>

#include "fssrank/types.hpp"

namespace fssrank {

// Filters that define the analyzable population, applied in sequence:
//   1. SDS retained only if the share of members with at least one
//      publication in the window is >= min_productive_share (inclusive);
//   2. of those, SDS retained only if it has >= min_per_gender individuals
//      of each gender (counted nationally, after the productivity filter);
//   3. (university, UDA) pair retained only if its professor count within
//      retained SDSs is >= min_professors_per_university_uda.
// Every input SDS lands in exactly one of the report's three SDS sets.
EligibilityReport apply_eligibility_filters(
    const Dataset& d, const std::map<std::string, IndividualProductivity>& productivity,
    const EligibilityThresholds& thresholds = {});

}  // namespace fssrank
