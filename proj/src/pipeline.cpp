#include "fssrank/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

#include "fssrank/csv.hpp"
#include "fssrank/eligibility.hpp"
#include "fssrank/errors.hpp"
#include "fssrank/fss.hpp"
#include "fssrank/student_t.hpp"
#include "fssrank/validate.hpp"

namespace fssrank {

namespace {

void hash_bytes(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x00000100000001B3ULL;
    }
    h ^= 0x1F;
    h *= 0x00000100000001B3ULL;
}

UdaDivergence divergence_for(const std::vector<int>& rank_a, const std::vector<int>& rank_b) {
    UdaDivergence out;
    if (rank_a.size() < 2) {
        // A single-university list is identical to itself: no shift, full
        // agreement, nil divergence (significance not assessable).
        out.shifts.signed_shifts.assign(rank_a.size(), 0);
        out.shifts.abs_shifts.assign(rank_a.size(), 0);
        out.spearman.rho = 1.0;
        out.spearman.p_value = 1.0;
        out.rprime = RPrimeResult{};
        return out;
    }
    out.shifts = rank_shift_stats(rank_a, rank_b);
    out.spearman = spearman_rho(rank_a, rank_b);
    out.rprime = r_prime(rank_a, rank_b);
    return out;
}

PairedTestResult paired_test_or_degenerate(const std::string& university_id,
                                           const std::vector<double>& scaled_pooled,
                                           const std::vector<double>& scaled_gendered) {
    PairedTestResult t;
    if (scaled_pooled.size() < 2) {
        t.degrees_of_freedom = static_cast<int>(scaled_pooled.size()) - 1;
        t.t_statistic = 0.0;
        t.p_value = 1.0;
    } else {
        t = paired_t_test(scaled_pooled, scaled_gendered);
    }
    t.university_id = university_id;
    return t;
}

}  // namespace

UdaDivergence compute_rank_divergence(const std::vector<int>& rank_a,
                                      const std::vector<int>& rank_b) {
    if (rank_a.size() != rank_b.size()) {
        throw LengthMismatchError("rank lists have different lengths");
    }
    if (rank_a.size() < 2) {
        throw TooFewObservationsError("rank divergence needs at least 2 universities");
    }
    return divergence_for(rank_a, rank_b);
}

std::string dataset_config_hash(const Dataset& d, const EligibilityThresholds& thresholds,
                                bool external_baselines) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    hash_bytes(h, "window");
    hash_bytes(h, std::to_string(d.window.start_year));
    hash_bytes(h, std::to_string(d.window.end_year));
    hash_bytes(h, "thresholds");
    hash_bytes(h, format_double(thresholds.min_productive_share));
    hash_bytes(h, std::to_string(thresholds.min_per_gender));
    hash_bytes(h, std::to_string(thresholds.min_professors_per_university_uda));
    hash_bytes(h, external_baselines ? "external" : "computed");
    for (const auto& r : d.researchers) {
        hash_bytes(h, r.researcher_id);
        hash_bytes(h, to_string(r.gender));
        hash_bytes(h, r.university_id);
        hash_bytes(h, r.sds_id);
        hash_bytes(h, r.uda_id);
        hash_bytes(h, r.academic_rank);
        hash_bytes(h, format_double(r.years_active));
        hash_bytes(h, format_double(r.wage));
    }
    for (const auto& p : d.publications) {
        hash_bytes(h, p.pub_id);
        hash_bytes(h, std::to_string(p.year));
        for (const auto& cat : p.subject_categories) hash_bytes(h, cat);
        hash_bytes(h, std::to_string(p.citations));
        hash_bytes(h, std::to_string(p.n_authors));
    }
    for (const auto& a : d.authorships) {
        hash_bytes(h, a.pub_id);
        hash_bytes(h, a.researcher_id);
        hash_bytes(h, std::to_string(a.byline_position));
    }
    for (const auto& [sds, uda] : d.taxonomy.sds_to_uda) {
        hash_bytes(h, sds);
        hash_bytes(h, uda);
    }
    for (const auto& [sds, scheme] : d.taxonomy.sds_to_weighting_scheme) {
        hash_bytes(h, sds);
        hash_bytes(h, scheme);
    }

    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunReport run_pipeline(const IngestConfig& cfg) {
    Dataset d;
    try {
        d = load_dataset(cfg);
    } catch (const ParseError& e) {
        throw PipelineError("load", e.what());
    } catch (const IoError& e) {
        throw PipelineError("load", e.what());
    }

    CitationBaselineTable external;
    const CitationBaselineTable* external_ptr = nullptr;
    if (cfg.use_external_baselines) {
        if (cfg.baselines_path.empty()) {
            throw PipelineError("load", "use_external_baselines set but no baselines path given");
        }
        try {
            external = load_baseline_table(cfg.baselines_path);
        } catch (const ParseError& e) {
            throw PipelineError("load", e.what());
        } catch (const IoError& e) {
            throw PipelineError("load", e.what());
        }
        external_ptr = &external;
    }

    return run_pipeline_on_dataset(d, cfg.thresholds, external_ptr);
}

RunReport run_pipeline_on_dataset(const Dataset& d, const EligibilityThresholds& thresholds,
                                  const CitationBaselineTable* external_baselines) {
    {
        const auto violations = validate_dataset(d);
        if (!violations.empty()) {
            std::string msg = std::to_string(violations.size()) + " violation(s); first: ";
            msg += violations.front().record_kind + " '" + violations.front().record_id +
                   "' field " + violations.front().field + ": " + violations.front().message;
            throw PipelineError("validate", msg);
        }
    }

    RunReport report;
    report.window = d.window;
    report.thresholds = thresholds;
    report.config_hash = dataset_config_hash(d, thresholds, external_baselines != nullptr);

    CitationBaselineTable computed;
    const CitationBaselineTable* baselines = external_baselines;
    if (baselines == nullptr) {
        computed = compute_citation_baselines(d.publications);
        baselines = &computed;
    }

    std::map<std::string, IndividualProductivity> productivity;
    try {
        productivity = compute_all_productivity(d, *baselines);
    } catch (const std::exception& e) {
        throw PipelineError("fss", e.what());
    }

    const EligibilityReport eligibility = apply_eligibility_filters(d, productivity, thresholds);
    report.eligibility.n_researchers_input = static_cast<int>(d.researchers.size());
    report.eligibility.n_sds_retained = static_cast<int>(eligibility.retained_sds.size());
    report.eligibility.n_sds_excluded_by_productivity =
        static_cast<int>(eligibility.excluded_sds_by_productivity.size());
    report.eligibility.n_sds_excluded_by_gender_count =
        static_cast<int>(eligibility.excluded_sds_by_gender_count.size());
    report.eligibility.n_university_uda_pairs_retained =
        static_cast<int>(eligibility.retained_university_uda_pairs.size());
    report.eligibility.n_university_uda_pairs_excluded =
        static_cast<int>(eligibility.excluded_university_uda_pairs.size());
    for (const auto& r : d.researchers) {
        if (eligibility.sds_retained(r.sds_id) &&
            eligibility.pair_retained(r.university_id, r.uda_id)) {
            ++report.eligibility.n_researchers_retained;
        }
    }

    const ScalingFactorTable pooled_factors =
        compute_scaling_factors(productivity, d.researchers, ScalingMode::pooled);
    const ScalingFactorTable gendered_factors =
        compute_scaling_factors(productivity, d.researchers, ScalingMode::by_gender);

    std::vector<UniversityScore> pooled_scores;
    std::vector<UniversityScore> gendered_scores;
    try {
        pooled_scores =
            compute_university_scores(d.researchers, productivity, eligibility, pooled_factors);
        gendered_scores =
            compute_university_scores(d.researchers, productivity, eligibility, gendered_factors);
    } catch (const std::exception& e) {
        throw PipelineError("aggregate", e.what());
    }

    std::set<std::string> uda_ids;
    for (const auto& s : pooled_scores) uda_ids.insert(s.uda_id);

    std::unordered_map<std::string, const UniversityScore*> pooled_by_key;
    std::unordered_map<std::string, const UniversityScore*> gendered_by_key;
    for (const auto& s : pooled_scores) pooled_by_key[s.uda_id + "\x1f" + s.university_id] = &s;
    for (const auto& s : gendered_scores) {
        gendered_by_key[s.uda_id + "\x1f" + s.university_id] = &s;
    }

    for (const auto& uda_id : uda_ids) {
        UdaReport uda;
        uda.uda_id = uda_id;

        const RankingList pooled_ranking =
            build_rankings(pooled_scores, uda_id, ScalingMode::pooled);
        const RankingList gendered_ranking =
            build_rankings(gendered_scores, uda_id, ScalingMode::by_gender);

        std::unordered_map<std::string, const RankingEntry*> gendered_rank_by_univ;
        for (const auto& e : gendered_ranking.entries) {
            gendered_rank_by_univ[e.university_id] = &e;
        }

        std::vector<int> rank_a;
        std::vector<int> rank_b;
        rank_a.reserve(pooled_ranking.entries.size());
        rank_b.reserve(pooled_ranking.entries.size());

        for (const auto& entry : pooled_ranking.entries) {
            const RankingEntry* gendered_entry = gendered_rank_by_univ.at(entry.university_id);

            UniversityComparison cmp;
            cmp.university_id = entry.university_id;
            cmp.fss_pooled = entry.fss_u;
            cmp.fss_gendered = gendered_entry->fss_u;
            cmp.rank_pooled = entry.rank;
            cmp.rank_gendered = gendered_entry->rank;
            cmp.signed_shift = entry.rank - gendered_entry->rank;
            cmp.abs_shift = std::abs(cmp.signed_shift);

            const std::string key = uda_id + "\x1f" + entry.university_id;
            const UniversityScore* pooled_score = pooled_by_key.at(key);
            const UniversityScore* gendered_score = gendered_by_key.at(key);
            cmp.t_test = paired_test_or_degenerate(
                entry.university_id, pooled_score->scaled_values, gendered_score->scaled_values);
            if (cmp.t_test.p_value < 0.10) ++uda.n_significant;

            rank_a.push_back(cmp.rank_pooled);
            rank_b.push_back(cmp.rank_gendered);
            uda.universities.push_back(std::move(cmp));
        }

        uda.n_universities = static_cast<int>(uda.universities.size());
        uda.divergence = divergence_for(rank_a, rank_b);
        report.udas.push_back(std::move(uda));
    }

    return report;
}

RanksCompareInput load_ranks_csv(const std::string& path) {
    RanksCompareInput input;
    CsvReader reader(path, {"university_id", "rank_pooled", "rank_gendered"});
    std::set<std::string> seen;
    while (reader.next_row()) {
        const std::string& univ = reader.str(0);
        if (!seen.insert(univ).second) {
            throw DuplicateIdError("university '" + univ + "' listed more than once in " + path);
        }
        input.university_ids.push_back(univ);
        input.rank_a.push_back(static_cast<int>(reader.integer(1)));
        input.rank_b.push_back(static_cast<int>(reader.integer(2)));
    }
    return input;
}

UdaDivergence ranks_compare(const RanksCompareInput& input) {
    return compute_rank_divergence(input.rank_a, input.rank_b);
}

}  // namespace fssrank
