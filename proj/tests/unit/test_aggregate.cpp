#include <doctest.h>

#include <cmath>

#include "fssrank/aggregate.hpp"
#include "fssrank/errors.hpp"
#include "fssrank/rank_stats.hpp"
#include "fssrank/synth.hpp"
#include "helpers.hpp"

using namespace fssrank;
using namespace fssrank::test;

namespace {

IndividualProductivity productivity_of(const std::string& id, double fss) {
    IndividualProductivity p;
    p.researcher_id = id;
    p.fss = fss;
    p.n_publications = fss > 0.0 ? 1 : 0;
    p.is_productive = p.n_publications >= 1;
    return p;
}

struct AggregateFixture {
    std::vector<Researcher> researchers;
    std::map<std::string, IndividualProductivity> productivity;

    void add(const std::string& id, Gender g, const std::string& univ, const std::string& sds,
             double fss) {
        researchers.push_back(make_researcher(id, g, univ, sds, "A1"));
        productivity[id] = productivity_of(id, fss);
    }
};

}  // namespace

TEST_CASE("pooled scaling factor is the mean over productive researchers") {
    AggregateFixture fx;
    fx.add("R1", Gender::female, "U1", "S1", 0.2);
    fx.add("R2", Gender::female, "U1", "S1", 0.4);
    fx.add("R3", Gender::male, "U1", "S1", 0.6);
    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    CHECK(*table.find("S1", Gender::female) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(table.find("S1", Gender::male) == table.find("S1", Gender::female));
}

TEST_CASE("unproductive researchers are excluded from the factor mean") {
    AggregateFixture fx;
    fx.add("R1", Gender::female, "U1", "S1", 0.0);
    fx.add("R2", Gender::male, "U1", "S1", 0.0);
    fx.add("R3", Gender::male, "U1", "S1", 0.5);
    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    CHECK(*table.find("S1", Gender::male) == 0.5);
}

TEST_CASE("by-gender factors are per subpopulation") {
    AggregateFixture fx;
    fx.add("R1", Gender::female, "U1", "S1", 0.2);
    fx.add("R2", Gender::female, "U1", "S1", 0.4);
    fx.add("R3", Gender::male, "U1", "S1", 0.6);
    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::by_gender);
    CHECK(*table.find("S1", Gender::female) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(*table.find("S1", Gender::male) == 0.6);
}

TEST_CASE("cells without productive researchers are absent") {
    AggregateFixture fx;
    fx.add("R1", Gender::female, "U1", "S1", 0.0);
    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    CHECK(table.find("S1", Gender::female) == nullptr);
    CHECK(table.factors.empty());
}

TEST_CASE("productive researchers with zero fss never produce a NaN score") {
    // A researcher whose only publications are uncited is productive but has
    // fss = 0; the cell has no positive mean, so no factor is stored and the
    // member contributes 0.
    AggregateFixture fx;
    fx.researchers.push_back(make_researcher("R1", Gender::female, "U1", "S1", "A1"));
    IndividualProductivity p;
    p.researcher_id = "R1";
    p.fss = 0.0;
    p.n_publications = 2;
    p.is_productive = true;
    fx.productivity["R1"] = p;

    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    CHECK(table.factors.empty());
    const auto score = university_fss(
        "U1", "A1", {{&fx.researchers[0], &fx.productivity.at("R1")}}, table);
    CHECK(score.fss_u == 0.0);
    CHECK(score.scaled_values == std::vector<double>{0.0});
}

TEST_CASE("university score worked examples") {
    AggregateFixture fx;
    fx.add("R1", Gender::female, "U1", "S1", 0.2);
    fx.add("R2", Gender::male, "U1", "S1", 0.4);
    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    // factor 0.3 -> scaled {2/3, 4/3} -> mean 1.0... use the documented pair:
    // with factor fixed at 0.4 the scaled values are {0.5, 1.0} -> 0.75.
    ScalingFactorTable fixed;
    fixed.mode = ScalingMode::pooled;
    fixed.factors[{"S1", ""}] = 0.4;

    std::vector<std::pair<const Researcher*, const IndividualProductivity*>> members;
    for (const auto& r : fx.researchers) {
        members.emplace_back(&r, &fx.productivity.at(r.researcher_id));
    }
    const auto score = university_fss("U1", "A1", members, fixed);
    CHECK(score.fss_u == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(score.n_researchers == 2);
    REQUIRE(score.scaled_values.size() == 2);
    CHECK(score.scaled_values[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(score.scaled_values[1] == doctest::Approx(1.0).epsilon(1e-15));

    SUBCASE("self-normalization") {
        ScalingFactorTable self;
        self.mode = ScalingMode::pooled;
        self.factors[{"S1", ""}] = 0.2;
        const auto single = university_fss(
            "U1", "A1", {{&fx.researchers[0], &fx.productivity.at("R1")}}, self);
        CHECK(single.fss_u == 1.0);
    }
    SUBCASE("single unproductive member") {
        AggregateFixture unproductive;
        unproductive.add("R9", Gender::male, "U2", "S1", 0.0);
        const auto zero = university_fss(
            "U2", "A1", {{&unproductive.researchers[0], &unproductive.productivity.at("R9")}},
            table);
        CHECK(zero.fss_u == 0.0);
        CHECK(zero.n_researchers == 1);
    }
    SUBCASE("missing factor for a productive member") {
        ScalingFactorTable empty;
        empty.mode = ScalingMode::pooled;
        CHECK_THROWS_AS(university_fss("U1", "A1", members, empty), MissingScalingFactorError);
    }
}

TEST_CASE("mean decomposition: fss_u * RS equals the sum of scaled values") {
    SplitMix64 rng(5);
    AggregateFixture fx;
    for (int i = 0; i < 57; ++i) {
        fx.add("R" + std::to_string(100 + i), rng.next_below(2) ? Gender::female : Gender::male,
               "U1", "S" + std::to_string(rng.next_below(3)), rng.next_double());
    }
    const auto table =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    std::vector<std::pair<const Researcher*, const IndividualProductivity*>> members;
    for (const auto& r : fx.researchers) {
        members.emplace_back(&r, &fx.productivity.at(r.researcher_id));
    }
    const auto score = university_fss("U1", "A1", members, table);
    double sum = 0.0;
    for (double v : score.scaled_values) sum += v;
    CHECK(std::fabs(score.fss_u * score.n_researchers - sum) < 1e-12);
}

TEST_CASE("rankings are ordered by score with id tie-break") {
    std::vector<UniversityScore> scores(3);
    scores[0].university_id = "B";
    scores[0].uda_id = "A1";
    scores[0].fss_u = 0.75;
    scores[1].university_id = "A";
    scores[1].uda_id = "A1";
    scores[1].fss_u = 1.5;
    scores[2].university_id = "C";
    scores[2].uda_id = "A2";
    scores[2].fss_u = 2.0;

    const auto list = build_rankings(scores, "A1", ScalingMode::pooled);
    REQUIRE(list.entries.size() == 2);
    CHECK(list.entries[0].university_id == "A");
    CHECK(list.entries[0].rank == 1);
    CHECK(list.entries[1].university_id == "B");
    CHECK(list.entries[1].rank == 2);

    SUBCASE("equal scores break ties by ascending id") {
        scores[0].fss_u = 1.5;
        const auto tied = build_rankings(scores, "A1", ScalingMode::pooled);
        CHECK(tied.entries[0].university_id == "A");
        CHECK(tied.entries[1].university_id == "B");
    }
    SUBCASE("single university gets rank 1") {
        const auto single = build_rankings(scores, "A2", ScalingMode::pooled);
        REQUIRE(single.entries.size() == 1);
        CHECK(single.entries[0].rank == 1);
        CHECK(single.entries[0].university_id == "C");
    }
}

TEST_CASE("within-SDS scale invariance") {
    SplitMix64 rng(17);
    AggregateFixture fx;
    for (int u = 0; u < 4; ++u) {
        for (int i = 0; i < 8; ++i) {
            const std::string id = "R" + std::to_string(u * 100 + i);
            fx.add(id, rng.next_below(2) ? Gender::female : Gender::male,
                   "U" + std::to_string(u), i < 4 ? "S1" : "S2", rng.next_double());
        }
    }
    EligibilityReport everyone;
    for (const auto& r : fx.researchers) {
        everyone.retained_sds.insert(r.sds_id);
        everyone.retained_university_uda_pairs.insert({r.university_id, r.uda_id});
    }

    auto run_all = [&](const AggregateFixture& fix) {
        const auto pooled =
            compute_scaling_factors(fix.productivity, fix.researchers, ScalingMode::pooled);
        const auto gendered =
            compute_scaling_factors(fix.productivity, fix.researchers, ScalingMode::by_gender);
        const auto scores_p =
            compute_university_scores(fix.researchers, fix.productivity, everyone, pooled);
        const auto scores_g =
            compute_university_scores(fix.researchers, fix.productivity, everyone, gendered);
        return std::make_pair(scores_p, scores_g);
    };

    const auto [before_p, before_g] = run_all(fx);

    AggregateFixture scaled = fx;
    for (auto& [id, p] : scaled.productivity) {
        bool in_s1 = false;
        for (const auto& r : scaled.researchers) {
            if (r.researcher_id == id && r.sds_id == "S1") in_s1 = true;
        }
        if (in_s1) p.fss *= 7.3;
    }
    const auto [after_p, after_g] = run_all(scaled);

    REQUIRE(before_p.size() == after_p.size());
    for (std::size_t i = 0; i < before_p.size(); ++i) {
        CHECK(std::fabs(before_p[i].fss_u - after_p[i].fss_u) < 1e-9);
        CHECK(std::fabs(before_g[i].fss_u - after_g[i].fss_u) < 1e-9);
        for (std::size_t j = 0; j < before_p[i].scaled_values.size(); ++j) {
            CHECK(std::fabs(before_p[i].scaled_values[j] - after_p[i].scaled_values[j]) < 1e-9);
        }
    }
}

TEST_CASE("gender parity collapse: equal per-gender means make modes identical") {
    // Dyadic per-SDS constants keep every mean exact in binary floating
    // point, so the two modes must agree bit for bit.
    SplitMix64 rng(29);
    AggregateFixture fx;
    std::map<std::string, double> sds_value = {{"S1", 0.0}, {"S2", 0.0}};
    for (auto& [sds, value] : sds_value) {
        value = static_cast<double>(1 + rng.next_below(1 << 20)) * 0x1.0p-10;
    }
    for (int u = 0; u < 5; ++u) {
        for (int i = 0; i < 10; ++i) {
            const std::string sds = i % 2 ? "S1" : "S2";
            const std::string id = "R" + std::to_string(u * 100 + i);
            const bool productive = rng.next_below(4) != 0;
            fx.add(id, rng.next_below(2) ? Gender::female : Gender::male,
                   "U" + std::to_string(u), sds, productive ? sds_value[sds] : 0.0);
        }
    }
    EligibilityReport everyone;
    for (const auto& r : fx.researchers) {
        everyone.retained_sds.insert(r.sds_id);
        everyone.retained_university_uda_pairs.insert({r.university_id, r.uda_id});
    }
    const auto pooled =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::pooled);
    const auto gendered =
        compute_scaling_factors(fx.productivity, fx.researchers, ScalingMode::by_gender);
    const auto scores_p =
        compute_university_scores(fx.researchers, fx.productivity, everyone, pooled);
    const auto scores_g =
        compute_university_scores(fx.researchers, fx.productivity, everyone, gendered);

    REQUIRE(scores_p.size() == scores_g.size());
    std::vector<int> rank_p;
    std::vector<int> rank_g;
    for (std::size_t i = 0; i < scores_p.size(); ++i) {
        CHECK(scores_p[i].fss_u == scores_g[i].fss_u);
    }
    const auto list_p = build_rankings(scores_p, "A1", ScalingMode::pooled);
    const auto list_g = build_rankings(scores_g, "A1", ScalingMode::by_gender);
    for (std::size_t i = 0; i < list_p.entries.size(); ++i) {
        CHECK(list_p.entries[i].university_id == list_g.entries[i].university_id);
        rank_p.push_back(list_p.entries[i].rank);
        rank_g.push_back(list_g.entries[i].rank);
    }
    CHECK(r_prime(rank_p, rank_g).r_prime == 0.0);
    CHECK(spearman_rho(rank_p, rank_g).rho == 1.0);
}
