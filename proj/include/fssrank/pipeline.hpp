#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fssrank/aggregate.hpp"
#include "fssrank/ingest.hpp"
#include "fssrank/rank_stats.hpp"
#include "fssrank/types.hpp"

// End-to-end orchestration: load -> validate -> baselines -> individual
// productivity -> eligibility filters -> scaling factors (pooled and
// by-gender) -> university scores -> rankings -> divergence statistics.
// The report is a pure function of the dataset semantics and the
// configuration; no timestamps or host state enter it.

namespace fssrank {

struct UniversityComparison {
    std::string university_id;
    double fss_pooled = 0.0;
    double fss_gendered = 0.0;
    int rank_pooled = 0;
    int rank_gendered = 0;
    int signed_shift = 0;  // rank_pooled - rank_gendered; positive = moved up
    int abs_shift = 0;
    PairedTestResult t_test;
};

// Divergence between the pooled and by-gender rankings of one UDA.
struct UdaDivergence {
    ShiftStats shifts;
    SpearmanResult spearman;
    RPrimeResult rprime;
};

struct UdaReport {
    std::string uda_id;
    std::vector<UniversityComparison> universities;  // ordered by pooled rank
    UdaDivergence divergence;
    int n_universities = 0;
    int n_significant = 0;  // universities with t-test p < 0.10
};

struct EligibilitySummary {
    int n_researchers_input = 0;
    int n_researchers_retained = 0;
    int n_sds_retained = 0;
    int n_sds_excluded_by_productivity = 0;
    int n_sds_excluded_by_gender_count = 0;
    int n_university_uda_pairs_retained = 0;
    int n_university_uda_pairs_excluded = 0;
};

struct RunReport {
    int schema_version = 1;
    std::string config_hash;
    Window window;
    EligibilityThresholds thresholds;
    std::optional<std::uint64_t> seed;  // present for synthetic runs
    EligibilitySummary eligibility;
    std::vector<UdaReport> udas;  // sorted by uda_id
};

// Rank divergence from two aligned rank permutations (n >= 2).
UdaDivergence compute_rank_divergence(const std::vector<int>& rank_a,
                                      const std::vector<int>& rank_b);

RunReport run_pipeline(const IngestConfig& cfg);

// Same pipeline starting from an in-memory dataset (used by the synthetic
// path and tests). `external_baselines` overrides the computed table.
RunReport run_pipeline_on_dataset(const Dataset& d, const EligibilityThresholds& thresholds,
                                  const CitationBaselineTable* external_baselines = nullptr);

// Ranks-only entry point: two pre-computed rank columns per university,
// no productivity values. Used when only published rank lists are
// available.
struct RanksCompareInput {
    std::vector<std::string> university_ids;
    std::vector<int> rank_a;
    std::vector<int> rank_b;
};

RanksCompareInput load_ranks_csv(const std::string& path);
UdaDivergence ranks_compare(const RanksCompareInput& input);

// FNV-1a hash of the canonical dataset content plus the semantic
// configuration; independent of file paths and row order.
std::string dataset_config_hash(const Dataset& d, const EligibilityThresholds& thresholds,
                                bool external_baselines);

}  // namespace fssrank
