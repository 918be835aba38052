#pragma once

#include <map>
#include <string>

#include "fssrank/fss.hpp"
#include "fssrank/types.hpp"

// CSV ingestion. Schemas (one header row each, '.' decimal separator,
// case-sensitive ids):
//
//   researchers.csv   researcher_id,gender,university_id,sds_id,uda_id,academic_rank,years_active
//   publications.csv  pub_id,year,subject_categories,citations,n_authors
//                     (subject_categories is a semicolon-separated list)
//   authorships.csv   pub_id,researcher_id,byline_position
//   wages.csv         academic_rank,yearly_wage            (optional)
//   baselines.csv     year,subject_category,c_bar          (optional)
//   taxonomy.csv      sds_id,uda_id,weighting_scheme

namespace fssrank {

struct WageTable {
    std::map<std::string, double> wage_by_rank;
};

struct IngestConfig {
    std::string researchers_path;
    std::string publications_path;
    std::string authorships_path;
    std::string taxonomy_path;
    std::string wages_path;      // empty: every rank defaults to wage 1.0
    std::string baselines_path;  // empty unless use_external_baselines
    bool use_external_baselines = false;
    int window_start = 0;
    int window_end = 0;
    EligibilityThresholds thresholds;
};

// Loads and cross-links all files into a canonical (id-sorted) Dataset that
// passes validate_dataset with zero violations. Row order in the input
// files does not affect the result. Throws MalformedRowError,
// DuplicateIdError, DanglingReferenceError or MissingWageForRankError with
// the offending record named.
Dataset load_dataset(const IngestConfig& cfg);

WageTable load_wage_table(const std::string& path);
CitationBaselineTable load_baseline_table(const std::string& path);

// Writes the dataset back out in the same schemas (wage table included when
// `wages_path` is non-empty). Reloading yields a semantically identical
// Dataset.
struct DatasetPaths {
    std::string researchers_path;
    std::string publications_path;
    std::string authorships_path;
    std::string taxonomy_path;
    std::string wages_path;  // optional
};

void write_dataset_csv(const Dataset& d, const WageTable& wages, const DatasetPaths& paths);

}  // namespace fssrank
