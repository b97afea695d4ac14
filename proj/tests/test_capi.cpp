// Exercises the shared-library surface end to end.
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "polyu.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    polyu_free_string(s);
    return out;
}

}  // namespace

TEST_CASE("sum lifecycle and queries") {
    polyu_sum* sum = nullptr;
    REQUIRE(polyu_sum_parse("1,2,5,5|", &sum) == POLYU_OK);
    char* notation = nullptr;
    REQUIRE(polyu_sum_notation(sum, &notation) == POLYU_OK);
    CHECK(take(notation) == "1,2,5,5|");

    size_t arity = 0;
    CHECK(polyu_sum_arity(sum, &arity) == POLYU_OK);
    CHECK(arity == 4);

    int rep = -1;
    CHECK(polyu_sum_represents(sum, 15, &rep) == POLYU_OK);
    CHECK(rep == 0);
    CHECK(polyu_sum_represents(sum, 14, &rep) == POLYU_OK);
    CHECK(rep == 1);

    int verdict = -1, criterion = -1;
    int64_t truant = 0;
    REQUIRE(polyu_sum_truant(sum, 10000, &verdict, &truant, &criterion) == POLYU_OK);
    CHECK(verdict == 0);
    CHECK(truant == 15);
    CHECK(criterion == 0);

    int64_t* values = nullptr;
    size_t count = 0;
    REQUIRE(polyu_sum_exceptional_set(sum, 1000, &values, &count) == POLYU_OK);
    REQUIRE(count == 1);
    CHECK(values[0] == 15);
    polyu_free_i64(values);

    char* json = nullptr;
    REQUIRE(polyu_sum_to_json(sum, &json) == POLYU_OK);
    auto parsed = nlohmann::json::parse(take(json));
    CHECK(parsed["squares"] == nlohmann::json({1, 2, 5, 5}));
    CHECK(parsed["octagonals"].empty());

    polyu_sum_free(sum);
}

TEST_CASE("witness and criterion") {
    polyu_sum* sum = nullptr;
    REQUIRE(polyu_sum_parse("1,1|1", &sum) == POLYU_OK);
    int universal = 0;
    CHECK(polyu_sum_criterion_universal(sum, &universal) == POLYU_OK);
    CHECK(universal == 1);

    char* witness = nullptr;
    REQUIRE(polyu_sum_witness(sum, 60, &witness) == POLYU_OK);
    auto j = nlohmann::json::parse(take(witness));
    REQUIRE(j.is_object());
    CHECK(j["x"].size() == 2);
    CHECK(j["y"].size() == 1);
    // Recompute the value from the witness.
    int64_t total = 0;
    for (auto& x : j["x"]) total += x.get<int64_t>() * x.get<int64_t>();
    for (auto& y : j["y"]) {
        int64_t v = y.get<int64_t>();
        total += 3 * v * v - 2 * v;
    }
    CHECK(total == 60);
    polyu_sum_free(sum);
}

TEST_CASE("error reporting") {
    polyu_sum* sum = nullptr;
    CHECK(polyu_sum_parse("1,2", &sum) == POLYU_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(polyu_last_error()).find("separator") != std::string::npos);
    CHECK(polyu_sum_parse(nullptr, &sum) == POLYU_ERROR_INVALID_ARGUMENT);

    polyu_form* form = nullptr;
    CHECK(polyu_form_parse("diag:1,1,0", &form) == POLYU_ERROR_INVALID_ARGUMENT);
    CHECK(polyu_fixture_json("nope", nullptr) == POLYU_ERROR_INVALID_ARGUMENT);
    char* out = nullptr;
    CHECK(polyu_fixture_json("nope", &out) == POLYU_ERROR_UNKNOWN_TABLE);
}

TEST_CASE("polygonal helpers") {
    int64_t v = 0;
    CHECK(polyu_polygonal_value(8, -1, &v) == POLYU_OK);
    CHECK(v == 5);
    CHECK(polyu_polygonal_value(5, 1, &v) == POLYU_ERROR_INVALID_ARGUMENT);
    int64_t* values = nullptr;
    size_t count = 0;
    REQUIRE(polyu_polygonal_values_up_to(8, 10, &values, &count) == POLYU_OK);
    REQUIRE(count == 4);
    CHECK(values[0] == 0);
    CHECK(values[3] == 8);
    polyu_free_i64(values);
}

TEST_CASE("reduction plan and gate") {
    polyu_sum* sum = nullptr;
    REQUIRE(polyu_sum_parse("1,5|2,10", &sum) == POLYU_OK);
    char* plan_json = nullptr;
    REQUIRE(polyu_sum_reduction_plan(sum, &plan_json) == POLYU_OK);
    auto plan = nlohmann::json::parse(take(plan_json));
    CHECK(plan["beta_sum"] == 12);
    CHECK(plan["E"] == nlohmann::json({3, 6, 9}));
    int passed = 0;
    int64_t* failing = nullptr;
    size_t nfail = 0;
    REQUIRE(polyu_sum_reduction_check(sum, &passed, &failing, &nfail) == POLYU_OK);
    CHECK(passed == 1);
    CHECK(nfail == 0);
    polyu_free_i64(failing);
    polyu_sum_free(sum);
}

TEST_CASE("form queries") {
    polyu_form* f = nullptr;
    REQUIRE(polyu_form_parse("diag:1,3,3", &f) == POLYU_OK);
    int64_t value = 0;
    CHECK(polyu_form_eval(f, 1, 1, 1, &value) == POLYU_OK);
    CHECK(value == 7);
    CHECK(polyu_form_rep_count(f, 4, &value) == POLYU_OK);
    CHECK(value == 10);

    int64_t* set = nullptr;
    size_t count = 0;
    REQUIRE(polyu_form_represented_set(f, 20, &set, &count) == POLYU_OK);
    CHECK(count > 0);
    CHECK(set[0] == 0);
    polyu_free_i64(set);
    polyu_form_free(f);
}

TEST_CASE("congruence machinery through the C surface") {
    polyu_form *f = nullptr, *g = nullptr;
    REQUIRE(polyu_form_parse("gram:7,-3,2;-3,9,3;2,3,16", &f) == POLYU_OK);
    REQUIRE(polyu_form_parse("diag:1,27,27", &g) == POLYU_OK);

    char* cert_json = nullptr;
    REQUIRE(polyu_good_partition(f, g, 5, 1, &cert_json) == POLYU_OK);
    auto cert = nlohmann::json::parse(take(cert_json));
    CHECK(cert["bad_pairs"] == nlohmann::json({{1, 0, 0}}));

    const int64_t T[9] = {5, 0, 0, 0, 4, -3, 0, 3, 4};
    char* pme_json = nullptr;
    REQUIRE(polyu_pme_check(f, g, 5, 1, T, &pme_json) == POLYU_OK);
    auto pme = nlohmann::json::parse(take(pme_json));
    CHECK(pme["verdict"] == true);
    CHECK(pme["eigenvectors"] == nlohmann::json({{1, 0, 0}}));

    int ok = 0;
    int64_t counterexample = -1;
    REQUIRE(polyu_pme_conclusion_check(f, g, 5, 1, T, 2000, &ok, &counterexample) == POLYU_OK);
    CHECK(ok == 1);

    int prec = -1;
    polyu_form *f2 = nullptr, *g2 = nullptr;
    REQUIRE(polyu_form_parse("diag:2,3,15", &f2) == POLYU_OK);
    REQUIRE(polyu_form_parse("gram:2,1,-1;1,5,1;-1,1,11", &g2) == POLYU_OK);
    CHECK(polyu_prec_check(f2, g2, 2, 0, 2000, &prec) == POLYU_OK);
    CHECK(prec == 1);

    char* classes_json = nullptr;
    REQUIRE(polyu_congruence_classes(g, 1, 0, &classes_json) == POLYU_OK);
    CHECK(nlohmann::json::parse(take(classes_json)).size() == 1);

    char* ts_json = nullptr;
    REQUIRE(polyu_transformation_set(g, g, 1, &ts_json) == POLYU_OK);
    CHECK(nlohmann::json::parse(take(ts_json)).size() == 16);

    CHECK(polyu_siegel_identity_check(500, &ok, &counterexample) == POLYU_OK);
    CHECK(ok == 1);

    polyu_form_free(f);
    polyu_form_free(g);
    polyu_form_free(f2);
    polyu_form_free(g2);
}

TEST_CASE("escalation and catalogue through the C surface") {
    char* children = nullptr;
    REQUIRE(polyu_escalate("[{\"sum\":\"|\",\"truant\":1}]", &children) == POLYU_OK);
    auto j = nlohmann::json::parse(take(children));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["sum"] == "|1");
    CHECK(j[1]["sum"] == "1|");

    polyu_catalogue* cat = nullptr;
    REQUIRE(polyu_catalogue_run(2000, 2, &cat) == POLYU_OK);
    int64_t total = 0;
    CHECK(polyu_catalogue_total(cat, &total) == POLYU_OK);
    CHECK(total == 1271);

    char* summary = nullptr;
    REQUIRE(polyu_catalogue_summary(cat, &summary) == POLYU_OK);
    CHECK(take(summary) == "3:6 4:547 5:707 6:11 total:1271");

    int64_t candidates = 0, universal = 0, proper = 0;
    REQUIRE(polyu_catalogue_counts(cat, 4, &candidates, &universal, &proper) == POLYU_OK);
    CHECK(candidates == 564);
    CHECK(universal == 547);
    CHECK(proper == 547);

    char* csv = nullptr;
    REQUIRE(polyu_catalogue_run_csv(cat, 3, &csv) == POLYU_OK);
    CHECK(take(csv).find("1 1|1,3,universal,,1") != std::string::npos);

    polyu_catalogue_free(cat);
}

TEST_CASE("table verification through the C surface") {
    int passed = 0;
    char* report = nullptr;
    REQUIRE(polyu_verify_table("3.1", 10000, 1, &passed, &report) == POLYU_OK);
    CHECK(passed == 1);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["rows"].size() == 7);

    char* fx = nullptr;
    REQUIRE(polyu_fixture_json("eq3.1", &fx) == POLYU_OK);
    CHECK(nlohmann::json::parse(take(fx))["rows"].size() == 6);
}
