#include <doctest.h>

#include "fssrank/validate.hpp"
#include "helpers.hpp"

using namespace fssrank;
using namespace fssrank::test;

namespace {

Dataset two_researcher_dataset() {
    Dataset d;
    d.window = {2006, 2010};
    d.researchers.push_back(make_researcher("R1", Gender::female, "U1", "S1", "A1"));
    d.researchers.push_back(make_researcher("R2", Gender::male, "U1", "S1", "A1"));
    d.publications.push_back(make_pub("P1", 2007, {"C1"}, 4, 2));
    d.authorships.push_back({"P1", "R1", 1});
    d.authorships.push_back({"P1", "R2", 2});
    return finalize(d);
}

}  // namespace

TEST_CASE("well-formed dataset has no violations") {
    CHECK(validate_dataset(two_researcher_dataset()).empty());
}

TEST_CASE("authorship referencing a missing publication is flagged") {
    Dataset d = two_researcher_dataset();
    d.authorships.push_back({"P9", "R1", 1});
    d.sort_records();
    const auto violations = validate_dataset(d);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].record_kind == "authorship");
    CHECK(violations[0].rule == "dangling-reference");
    CHECK(violations[0].record_id.find("P9") != std::string::npos);
}

TEST_CASE("researcher with zero years active is flagged") {
    Dataset d = two_researcher_dataset();
    d.researchers[0].years_active = 0.0;
    const auto violations = validate_dataset(d);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].record_kind == "researcher");
    CHECK(violations[0].field == "years_active");
    CHECK(violations[0].rule == "t-positive");
}

TEST_CASE("remaining invariants are each checked") {
    SUBCASE("years active beyond the window") {
        Dataset d = two_researcher_dataset();
        d.researchers[0].years_active = 5.5;
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "t-within-window");
    }
    SUBCASE("non-positive wage") {
        Dataset d = two_researcher_dataset();
        d.researchers[1].wage = 0.0;
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "w-positive");
    }
    SUBCASE("duplicate researcher id") {
        Dataset d = two_researcher_dataset();
        d.researchers.push_back(d.researchers[0]);
        d.sort_records();
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "unique-id");
    }
    SUBCASE("sds missing from taxonomy") {
        Dataset d = two_researcher_dataset();
        d.researchers[0].sds_id = "S9";
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "taxonomy-total");
    }
    SUBCASE("sds mapped to a different uda") {
        Dataset d = two_researcher_dataset();
        d.researchers[0].uda_id = "A9";
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "sds-uda-consistency");
    }
    SUBCASE("negative citations") {
        Dataset d = two_researcher_dataset();
        d.publications[0].citations = -1;
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "citations-nonnegative");
    }
    SUBCASE("publication after the window end") {
        Dataset d = two_researcher_dataset();
        d.publications[0].year = 2011;
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "year-before-window-end");
    }
    SUBCASE("byline position beyond the author count") {
        Dataset d = two_researcher_dataset();
        d.authorships[1].byline_position = 3;
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "position-in-byline");
    }
    SUBCASE("duplicate authorship") {
        Dataset d = two_researcher_dataset();
        d.authorships.push_back({"P1", "R1", 1});
        d.sort_records();
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "unique-authorship");
    }
    SUBCASE("duplicate subject category") {
        Dataset d = two_researcher_dataset();
        d.publications[0].subject_categories = {"C1", "C1"};
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "categories-distinct");
    }
    SUBCASE("empty category list") {
        Dataset d = two_researcher_dataset();
        d.publications[0].subject_categories.clear();
        const auto v = validate_dataset(d);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "categories-nonempty");
    }
}
