#include "fssrank/aggregate.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#include "fssrank/errors.hpp"

namespace fssrank {

const char* to_string(ScalingMode m) { return m == ScalingMode::pooled ? "pooled" : "by_gender"; }

const double* ScalingFactorTable::find(const std::string& sds_id, Gender gender) const {
    const std::string gender_key = mode == ScalingMode::by_gender ? to_string(gender) : "";
    auto it = factors.find({sds_id, gender_key});
    return it == factors.end() ? nullptr : &it->second;
}

ScalingFactorTable compute_scaling_factors(
    const std::map<std::string, IndividualProductivity>& productivity,
    const std::vector<Researcher>& researchers, ScalingMode mode) {
    struct CellAccumulator {
        double sum = 0.0;
        long long count = 0;
    };
    std::map<std::pair<std::string, std::string>, CellAccumulator> acc;

    // researchers are id-sorted; accumulation order is therefore fixed.
    for (const auto& r : researchers) {
        auto it = productivity.find(r.researcher_id);
        if (it == productivity.end() || !it->second.is_productive) continue;
        const std::string gender_key = mode == ScalingMode::by_gender ? to_string(r.gender) : "";
        auto& cell = acc[{r.sds_id, gender_key}];
        cell.sum += it->second.fss;
        cell.count += 1;
    }

    ScalingFactorTable table;
    table.mode = mode;
    for (const auto& [key, cell] : acc) {
        const double mean = cell.sum / static_cast<double>(cell.count);
        // A cell whose productive researchers all have fss = 0 (only uncited
        // publications) has no usable factor; members contribute 0 anyway.
        if (mean > 0.0) table.factors.emplace(key, mean);
    }
    return table;
}

UniversityScore university_fss(
    const std::string& university_id, const std::string& uda_id,
    const std::vector<std::pair<const Researcher*, const IndividualProductivity*>>& members,
    const ScalingFactorTable& factors) {
    UniversityScore score;
    score.university_id = university_id;
    score.uda_id = uda_id;
    score.mode = factors.mode;
    score.n_researchers = static_cast<int>(members.size());
    score.member_ids.reserve(members.size());
    score.scaled_values.reserve(members.size());

    double sum = 0.0;
    for (const auto& [r, p] : members) {
        double scaled = 0.0;
        // fss = 0 contributes 0 whether or not the member is productive, so
        // the factor is only needed (and must exist) for fss > 0.
        if (p->is_productive && p->fss > 0.0) {
            const double* factor = factors.find(r->sds_id, r->gender);
            if (factor == nullptr) {
                throw MissingScalingFactorError(
                    "no " + std::string(to_string(factors.mode)) + " scaling factor for sds '" +
                    r->sds_id + "' required by productive researcher '" + r->researcher_id + "'");
            }
            scaled = p->fss / *factor;
        }
        score.member_ids.push_back(r->researcher_id);
        score.scaled_values.push_back(scaled);
        sum += scaled;
    }
    if (!members.empty()) sum /= static_cast<double>(members.size());
    score.fss_u = sum;
    return score;
}

std::vector<UniversityScore> compute_university_scores(
    const std::vector<Researcher>& researchers,
    const std::map<std::string, IndividualProductivity>& productivity,
    const EligibilityReport& eligibility, const ScalingFactorTable& factors) {
    using Members = std::vector<std::pair<const Researcher*, const IndividualProductivity*>>;
    std::map<std::pair<std::string, std::string>, Members> groups;

    // researchers are id-sorted, so each group's member list is too.
    for (const auto& r : researchers) {
        if (!eligibility.sds_retained(r.sds_id)) continue;
        if (!eligibility.pair_retained(r.university_id, r.uda_id)) continue;
        auto it = productivity.find(r.researcher_id);
        if (it == productivity.end()) {
            throw MissingScalingFactorError("researcher '" + r.researcher_id +
                                            "' has no productivity record");
        }
        groups[{r.university_id, r.uda_id}].emplace_back(&r, &it->second);
    }

    std::vector<std::pair<const std::pair<std::string, std::string>*, const Members*>> ordered;
    ordered.reserve(groups.size());
    for (const auto& [key, members] : groups) ordered.emplace_back(&key, &members);

    std::vector<UniversityScore> scores(ordered.size());
    const long long n = static_cast<long long>(ordered.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        try {
            const auto& [key, members] = ordered[static_cast<std::size_t>(i)];
            scores[static_cast<std::size_t>(i)] =
                university_fss(key->first, key->second, *members, factors);
        } catch (...) {
#pragma omp critical(fssrank_aggregate_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return scores;
}

RankingList build_rankings(const std::vector<UniversityScore>& scores, const std::string& uda_id,
                           ScalingMode mode) {
    RankingList list;
    list.uda_id = uda_id;
    list.mode = mode;

    for (const auto& s : scores) {
        if (s.uda_id != uda_id || s.mode != mode) continue;
        list.entries.push_back({0, s.university_id, s.fss_u});
    }
    std::sort(list.entries.begin(), list.entries.end(),
              [](const RankingEntry& a, const RankingEntry& b) {
                  if (a.fss_u != b.fss_u) return a.fss_u > b.fss_u;
                  return a.university_id < b.university_id;
              });
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
        list.entries[i].rank = static_cast<int>(i) + 1;
    }
    return list;
}

}  // namespace fssrank
