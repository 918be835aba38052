#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fssrank/types.hpp"

// Institutional aggregation: each staff member's productivity is rescaled by
// the mean productivity of the productive researchers in their field (the
// scaling factor), then averaged over the university's research staff:
//
//   fss_u = (1/RS) * sum_i fss_i / factor(field_i)
//
// The factor is taken per SDS (pooled mode) or per (SDS, gender)
// (by-gender mode). Unproductive members contribute 0 but count in RS.

namespace fssrank {

enum class ScalingMode : unsigned char { pooled, by_gender };

const char* to_string(ScalingMode m);

struct ScalingFactorTable {
    ScalingMode mode = ScalingMode::pooled;
    // Key is sds_id for pooled mode, (sds_id, gender code) for by-gender.
    std::map<std::pair<std::string, std::string>, double> factors;

    const double* find(const std::string& sds_id, Gender gender) const;
};

struct UniversityScore {
    std::string university_id;
    std::string uda_id;
    ScalingMode mode = ScalingMode::pooled;
    double fss_u = 0.0;
    int n_researchers = 0;  // RS
    // Per-researcher scaled values in ascending researcher_id order,
    // retained for the paired t-test.
    std::vector<std::string> member_ids;
    std::vector<double> scaled_values;
};

struct RankingEntry {
    int rank = 0;  // 1-based
    std::string university_id;
    double fss_u = 0.0;
};

struct RankingList {
    std::string uda_id;
    ScalingMode mode = ScalingMode::pooled;
    std::vector<RankingEntry> entries;  // ranks 1..n consecutive
};

// Mean fss over productive researchers per cell, accumulated in ascending
// researcher_id order. Cells with no productive researcher are absent.
ScalingFactorTable compute_scaling_factors(
    const std::map<std::string, IndividualProductivity>& productivity,
    const std::vector<Researcher>& researchers, ScalingMode mode);

// Members must all belong to one (university, UDA); pass them in ascending
// researcher_id order. Throws MissingScalingFactorError if a productive
// member's cell has no factor.
UniversityScore university_fss(
    const std::string& university_id, const std::string& uda_id,
    const std::vector<std::pair<const Researcher*, const IndividualProductivity*>>& members,
    const ScalingFactorTable& factors);

// Parallel kernel over (university, UDA) groups of the retained population.
// Grouping and within-group accumulation order are fixed, so output does not
// depend on the thread count.
std::vector<UniversityScore> compute_university_scores(
    const std::vector<Researcher>& researchers,
    const std::map<std::string, IndividualProductivity>& productivity,
    const EligibilityReport& eligibility, const ScalingFactorTable& factors);

// Sorted by fss_u descending; ties broken by ascending university_id.
RankingList build_rankings(const std::vector<UniversityScore>& scores, const std::string& uda_id,
                           ScalingMode mode);

}  // namespace fssrank
