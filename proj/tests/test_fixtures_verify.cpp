#include <doctest.h>

#include "polyu/fixtures.hpp"
#include "polyu/verify.hpp"

using namespace polyu;

TEST_CASE("fixture lookup") {
    CHECK_THROWS_AS(fixture("9.9"), Error);
    TableFixture fx = fixture("critical19");
    CHECK(integer_list(fx) == std::vector<i64>(critical_integers.begin(), critical_integers.end()));

    CHECK(sum_rows(fixture("eq3.1")).size() == 6);

    auto rows52 = exceptional_rows(fixture("5.2"));
    CHECK(rows52.size() == 14);
    bool found = false;
    for (const auto& row : rows52)
        if (row.sum == MixedSum::parse("1,2|5,5")) {
            found = true;
            CHECK(row.values == std::vector<i64>{15, 20});
        }
    CHECK(found);
}

TEST_CASE("closed-form exceptional family") {
    auto rows = exceptional_rows(fixture("5.2"));
    for (const auto& row : rows)
        if (row.closed_form) {
            CHECK(row.sum == MixedSum::parse("1,2|5,10"));
            CHECK(row.closed_form_values(1000) == std::vector<i64>{20, 45, 70, 95, 620});
            CHECK(row.closed_form_values(10000) ==
                  std::vector<i64>{20, 45, 70, 95, 620, 1245, 1870, 2495});
        }
}

TEST_CASE("fixture tables sizes") {
    CHECK(truant_rows(fixture("3.1")).size() == 7);
    CHECK(truant_rows(fixture("4.1")).size() == 36);
    CHECK(truant_rows(fixture("5.1")).size() == 18);
    CHECK(congruence_rows(fixture("4.3")).size() == 25);
}

TEST_CASE("every reference table recomputes") {
    for (const std::string& id : verify_table_ids()) {
        VerifyReport report = verify_table(id, 10000, 0);
        for (const auto& row : report.rows)
            CHECK_MESSAGE(row.pass, "[", id, "] ", row.label, ": expected ", row.expected, ", got ",
                          row.actual);
        CHECK(report.passed);
    }
}

TEST_CASE("verify report serialization") {
    VerifyReport report = verify_table("3.1", 10000, 1);
    ojson j = verify_report_to_json(report);
    CHECK(j["table"] == "3.1");
    CHECK(j["passed"] == true);
    CHECK(j["rows"].size() == report.rows.size());
}
