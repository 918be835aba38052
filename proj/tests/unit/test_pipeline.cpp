#include <doctest.h>

#include <cmath>
#include <string>

#include "fssrank/eligibility.hpp"
#include "fssrank/errors.hpp"
#include "fssrank/fss.hpp"
#include "fssrank/pipeline.hpp"
#include "fssrank/report.hpp"
#include "fssrank/synth.hpp"
#include "helpers.hpp"

using namespace fssrank;
using namespace fssrank::test;

namespace {

const EligibilityThresholds kPermissive{0.0, 0, 1};

// Every researcher produces exactly the same single publication profile, so
// individual productivity is constant across the population.
Dataset degenerate_dataset() {
    Dataset d;
    d.window = {2006, 2010};
    int counter = 0;
    for (const std::string uda : {"A1", "A2"}) {
        const std::string sds = "S_" + uda;
        for (int u = 0; u < 3; ++u) {
            for (int i = 0; i < 4; ++i) {
                char id[16];
                std::snprintf(id, sizeof(id), "R%03d", ++counter);
                d.researchers.push_back(make_researcher(
                    id, i % 2 ? Gender::female : Gender::male, "U" + std::to_string(u), sds,
                    uda));
                const std::string pub_id = std::string("P_") + id;
                d.publications.push_back(make_pub(pub_id, 2007, {"C_" + sds}, 4, 1));
                d.authorships.push_back({pub_id, id, 1});
            }
        }
    }
    return finalize(d);
}

}  // namespace

TEST_CASE("identical individual output collapses both evaluation modes") {
    const Dataset d = degenerate_dataset();
    const RunReport report = run_pipeline_on_dataset(d, kPermissive);

    REQUIRE(report.udas.size() == 2);
    for (const auto& uda : report.udas) {
        CHECK(uda.n_universities == 3);
        CHECK(uda.divergence.rprime.r_prime == 0.0);
        CHECK(uda.divergence.spearman.rho == 1.0);
        CHECK(uda.divergence.shifts.n_shifted == 0);
        CHECK(uda.n_significant == 0);
        for (const auto& u : uda.universities) {
            CHECK(u.fss_pooled == u.fss_gendered);
            CHECK(u.rank_pooled == u.rank_gendered);
            CHECK(u.signed_shift == 0);
            CHECK(u.t_test.t_statistic == 0.0);
            CHECK(u.t_test.p_value == 1.0);
        }
    }
    CHECK(report.eligibility.n_researchers_input == 24);
    CHECK(report.eligibility.n_researchers_retained == 24);
    CHECK(report.eligibility.n_sds_retained == 2);
}

TEST_CASE("pipeline aborts at the validate stage naming the violation") {
    Dataset d = degenerate_dataset();
    d.researchers[0].years_active = 0.0;
    try {
        run_pipeline_on_dataset(d, kPermissive);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage == "validate");
        CHECK(std::string(e.what()).find("years_active") != std::string::npos);
        CHECK(std::string(e.what()).find(d.researchers[0].researcher_id) != std::string::npos);
    }
}

TEST_CASE("pipeline report is deterministic across reruns") {
    SynthConfig cfg = make_uniform_synth_config(2, 2, 4, 8, 8);
    cfg.seed = 99;
    const Dataset d = generate_dataset(cfg);
    const RunReport a = run_pipeline_on_dataset(d, kPermissive);
    const RunReport b = run_pipeline_on_dataset(d, kPermissive);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(render_report(a, ReportFormat::text) == render_report(b, ReportFormat::text));
    CHECK(render_report(a, ReportFormat::csv) == render_report(b, ReportFormat::csv));
    CHECK(a.config_hash == b.config_hash);
}

TEST_CASE("full pipeline from csv files") {
    SynthConfig cfg = make_uniform_synth_config(1, 2, 5, 6, 6);
    cfg.seed = 31;
    const Dataset d = generate_dataset(cfg);

    TempDir dir;
    DatasetPaths paths;
    paths.researchers_path = dir.file("researchers.csv");
    paths.publications_path = dir.file("publications.csv");
    paths.authorships_path = dir.file("authorships.csv");
    paths.taxonomy_path = dir.file("taxonomy.csv");
    paths.wages_path = dir.file("wages.csv");
    write_dataset_csv(d, wage_table_of(cfg), paths);

    IngestConfig icfg;
    icfg.researchers_path = paths.researchers_path;
    icfg.publications_path = paths.publications_path;
    icfg.authorships_path = paths.authorships_path;
    icfg.taxonomy_path = paths.taxonomy_path;
    icfg.wages_path = paths.wages_path;
    icfg.window_start = cfg.window.start_year;
    icfg.window_end = cfg.window.end_year;
    icfg.thresholds = kPermissive;

    const RunReport report = run_pipeline(icfg);
    REQUIRE(report.udas.size() == 1);
    CHECK(report.udas[0].n_universities == 5);
    CHECK(report.eligibility.n_researchers_input == 120);

    // The file-based run agrees with the in-memory run on the same data.
    const RunReport direct = run_pipeline_on_dataset(d, kPermissive);
    CHECK(report_to_json(report) == report_to_json(direct));
}

TEST_CASE("eligibility thresholds flow through the pipeline") {
    SynthConfig cfg = make_uniform_synth_config(1, 1, 3, 4, 4);
    cfg.seed = 13;
    const Dataset d = generate_dataset(cfg);
    // min_per_gender of 30 cannot be met by 12 researchers per gender.
    EligibilityThresholds strict{0.0, 30, 1};
    const RunReport report = run_pipeline_on_dataset(d, strict);
    CHECK(report.udas.empty());
    CHECK(report.eligibility.n_sds_retained == 0);
    CHECK(report.eligibility.n_researchers_retained == 0);
    CHECK(report.eligibility.n_sds_excluded_by_gender_count +
              report.eligibility.n_sds_excluded_by_productivity ==
          1);
}

TEST_CASE("single-university uda reports nil divergence") {
    Dataset d;
    d.window = {2006, 2010};
    for (int i = 0; i < 3; ++i) {
        const std::string id = "R" + std::to_string(i);
        d.researchers.push_back(make_researcher(id, i % 2 ? Gender::female : Gender::male, "U1",
                                                "S1", "A1"));
        d.publications.push_back(make_pub("P" + std::to_string(i), 2007, {"C1"}, 2 + i, 1));
        d.authorships.push_back({"P" + std::to_string(i), id, 1});
    }
    d = finalize(d);
    const RunReport report = run_pipeline_on_dataset(d, kPermissive);
    REQUIRE(report.udas.size() == 1);
    REQUIRE(report.udas[0].universities.size() == 1);
    CHECK(report.udas[0].universities[0].rank_pooled == 1);
    CHECK(report.udas[0].universities[0].rank_gendered == 1);
    CHECK(report.udas[0].divergence.rprime.r_prime == 0.0);
    CHECK(report.udas[0].divergence.spearman.rho == 1.0);
}

TEST_CASE("ranks csv loads and compares") {
    TempDir dir;
    const std::string path = dir.file("ranks.csv");
    write_file(path,
               "university_id,rank_pooled,rank_gendered\n"
               "ID1,1,2\nID2,2,3\nID3,3,4\nID4,4,1\nID5,5,5\n");
    const RanksCompareInput input = load_ranks_csv(path);
    REQUIRE(input.university_ids.size() == 5);
    const UdaDivergence d = ranks_compare(input);
    CHECK(d.rprime.sum_abs_diff == 6);
    CHECK(d.rprime.max_sum == 12);
    CHECK(d.rprime.r_prime == 50.0);
    CHECK(d.shifts.max_shift == 3);
    CHECK(d.shifts.n_shifted == 4);

    SUBCASE("duplicate university id rejected") {
        write_file(path,
                   "university_id,rank_pooled,rank_gendered\n"
                   "ID1,1,1\nID1,2,2\n");
        CHECK_THROWS_AS(load_ranks_csv(path), DuplicateIdError);
    }
}

TEST_CASE("external baseline table overrides the computed one") {
    // R1 publishes in C1, R2 in C2, equal citations. Computed baselines
    // normalize both to the same impact; an external table skewed toward C2
    // separates them.
    Dataset d;
    d.window = {2006, 2010};
    d.researchers.push_back(make_researcher("R1", Gender::female, "U1", "S1", "A1", 5.0, 1.0));
    d.researchers.push_back(make_researcher("R2", Gender::female, "U2", "S1", "A1", 5.0, 1.0));
    d.publications.push_back(make_pub("P1", 2007, {"C1"}, 8, 1));
    d.publications.push_back(make_pub("P2", 2007, {"C2"}, 8, 1));
    d.authorships.push_back({"P1", "R1", 1});
    d.authorships.push_back({"P2", "R2", 1});
    d = finalize(d);

    TempDir dir;
    DatasetPaths paths;
    paths.researchers_path = dir.file("researchers.csv");
    paths.publications_path = dir.file("publications.csv");
    paths.authorships_path = dir.file("authorships.csv");
    paths.taxonomy_path = dir.file("taxonomy.csv");
    write_dataset_csv(d, {}, paths);
    write_file(dir.file("baselines.csv"),
               "year,subject_category,c_bar\n"
               "2007,C1,8.0\n"
               "2007,C2,2.0\n");

    IngestConfig cfg;
    cfg.researchers_path = paths.researchers_path;
    cfg.publications_path = paths.publications_path;
    cfg.authorships_path = paths.authorships_path;
    cfg.taxonomy_path = paths.taxonomy_path;
    cfg.window_start = 2006;
    cfg.window_end = 2010;
    cfg.thresholds = kPermissive;

    const RunReport computed = run_pipeline(cfg);
    REQUIRE(computed.udas.size() == 1);
    // Both cited at their cell mean: equal scores, tie broken by id.
    CHECK(computed.udas[0].universities[0].fss_pooled ==
          computed.udas[0].universities[1].fss_pooled);

    cfg.baselines_path = dir.file("baselines.csv");
    cfg.use_external_baselines = true;
    const RunReport external = run_pipeline(cfg);
    REQUIRE(external.udas.size() == 1);
    // fss(R1) = (1/5)(8/8) = 0.2, fss(R2) = (1/5)(8/2) = 0.8; factor 0.5.
    CHECK(external.udas[0].universities[0].university_id == "U2");
    CHECK(external.udas[0].universities[0].fss_pooled ==
          doctest::Approx(1.6).epsilon(1e-12));
    CHECK(external.udas[0].universities[1].fss_pooled ==
          doctest::Approx(0.4).epsilon(1e-12));
    CHECK(external.config_hash != computed.config_hash);
}

TEST_CASE("t-test numerator equals the gap between the two university scores") {
    SynthConfig cfg = make_uniform_synth_config(1, 2, 4, 7, 7);
    cfg.seed = 55;
    const Dataset d = generate_dataset(cfg);
    const auto baselines = compute_citation_baselines(d.publications);
    const auto productivity = compute_all_productivity(d, baselines);
    const auto eligibility = apply_eligibility_filters(d, productivity, kPermissive);
    const auto pooled =
        compute_scaling_factors(productivity, d.researchers, ScalingMode::pooled);
    const auto gendered =
        compute_scaling_factors(productivity, d.researchers, ScalingMode::by_gender);
    const auto scores_p =
        compute_university_scores(d.researchers, productivity, eligibility, pooled);
    const auto scores_g =
        compute_university_scores(d.researchers, productivity, eligibility, gendered);
    REQUIRE(scores_p.size() == scores_g.size());
    for (std::size_t i = 0; i < scores_p.size(); ++i) {
        REQUIRE(scores_p[i].member_ids == scores_g[i].member_ids);
        double mean_d = 0.0;
        for (std::size_t j = 0; j < scores_p[i].scaled_values.size(); ++j) {
            mean_d += scores_p[i].scaled_values[j] - scores_g[i].scaled_values[j];
        }
        mean_d /= static_cast<double>(scores_p[i].scaled_values.size());
        CHECK(std::fabs(mean_d - (scores_p[i].fss_u - scores_g[i].fss_u)) < 1e-12);
    }
}

TEST_CASE("config hash tracks semantics, not representation") {
    SynthConfig cfg = make_uniform_synth_config(1, 1, 2, 4, 4);
    cfg.seed = 3;
    const Dataset d = generate_dataset(cfg);
    const std::string h1 = dataset_config_hash(d, kPermissive, false);
    CHECK(h1 == dataset_config_hash(d, kPermissive, false));
    CHECK(h1 != dataset_config_hash(d, EligibilityThresholds{0.5, 30, 10}, false));
    Dataset d2 = d;
    d2.publications[0].citations += 1;
    CHECK(h1 != dataset_config_hash(d2, kPermissive, false));
}
