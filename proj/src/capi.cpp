#include "polyu.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "polyu/escalation.hpp"
#include "polyu/fixtures.hpp"
#include "polyu/reduction.hpp"
#include "polyu/rep_count.hpp"
#include "polyu/serialize.hpp"
#include "polyu/verify.hpp"

using namespace polyu;

struct polyu_sum {
    MixedSum value;
};
struct polyu_form {
    TernaryForm value;
};
struct polyu_catalogue {
    Catalogue value;
};

namespace {

thread_local std::string last_error;

polyu_status status_of(const Error& e) {
    switch (e.code()) {
        case errc::invalid_argument: return POLYU_ERROR_INVALID_ARGUMENT;
        case errc::overflow: return POLYU_ERROR_OVERFLOW;
        case errc::indeterminate: return POLYU_ERROR_INDETERMINATE;
        case errc::unknown_table: return POLYU_ERROR_UNKNOWN_TABLE;
        case errc::io: return POLYU_ERROR_IO;
        case errc::internal: return POLYU_ERROR_INTERNAL;
    }
    return POLYU_ERROR_INTERNAL;
}

template <typename Fn>
polyu_status guarded(Fn&& fn) {
    try {
        fn();
        return POLYU_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e);
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return POLYU_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return POLYU_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int64_t* dup_i64(const std::vector<i64>& v) {
    auto* out = static_cast<int64_t*>(std::malloc(sizeof(int64_t) * std::max<std::size_t>(v.size(), 1)));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, v.data(), sizeof(int64_t) * v.size());
    return out;
}

polyu_status require(bool ok, const char* what) {
    if (!ok) {
        last_error = what;
        return POLYU_ERROR_INVALID_ARGUMENT;
    }
    return POLYU_OK;
}

Mat3 mat_of(const int64_t T[9]) {
    Mat3 m;
    for (std::size_t i = 0; i < 9; ++i) m[i] = T[i];
    return m;
}

}  // namespace

extern "C" {

const char* polyu_version(void) { return "1.0.0"; }

const char* polyu_last_error(void) { return last_error.c_str(); }

void polyu_free_string(char* s) { std::free(s); }
void polyu_free_i64(int64_t* p) { std::free(p); }

/* ---- mixed sums -------------------------------------------------------- */

polyu_status polyu_sum_parse(const char* text, polyu_sum** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new polyu_sum{MixedSum::parse(text)}; });
}

polyu_status polyu_sum_create(const int64_t* squares, size_t n_squares, const int64_t* octagonals,
                              size_t n_octagonals, polyu_sum** out) {
    if (auto st = require(out && (squares || n_squares == 0) && (octagonals || n_octagonals == 0),
                          "null argument"))
        return st;
    return guarded([&] {
        std::vector<i64> sq(squares, squares + n_squares);
        std::vector<i64> oc(octagonals, octagonals + n_octagonals);
        *out = new polyu_sum{MixedSum(std::move(sq), std::move(oc))};
    });
}

void polyu_sum_free(polyu_sum* sum) { delete sum; }

polyu_status polyu_sum_notation(const polyu_sum* sum, char** out) {
    if (auto st = require(sum && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(sum->value.notation()); });
}

polyu_status polyu_sum_to_json(const polyu_sum* sum, char** out) {
    if (auto st = require(sum && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(sum_to_json(sum->value).dump()); });
}

polyu_status polyu_sum_arity(const polyu_sum* sum, size_t* out) {
    if (auto st = require(sum && out, "null argument")) return st;
    *out = sum->value.arity();
    return POLYU_OK;
}

polyu_status polyu_polygonal_value(int m, int64_t x, int64_t* out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = polygonal_value(m, x); });
}

polyu_status polyu_polygonal_values_up_to(int m, int64_t bound, int64_t** values, size_t* count) {
    if (auto st = require(values && count, "null argument")) return st;
    return guarded([&] {
        auto v = polygonal_values_up_to(m, bound);
        *values = dup_i64(v);
        *count = v.size();
    });
}

polyu_status polyu_sum_represents(const polyu_sum* sum, int64_t n, int* out) {
    if (auto st = require(sum && out, "null argument")) return st;
    return guarded([&] { *out = is_represented(sum->value, n) ? 1 : 0; });
}

polyu_status polyu_sum_witness(const polyu_sum* sum, int64_t n, char** out) {
    if (auto st = require(sum && out, "null argument")) return st;
    return guarded([&] {
        auto w = find_witness(sum->value, n);
        *out = dup_string(w ? witness_to_json(*w).dump() : "null");
    });
}

polyu_status polyu_sum_truant(const polyu_sum* sum, int64_t bound, int* verdict, int64_t* truant_out,
                              int* criterion_passed) {
    if (auto st = require(sum && verdict, "null argument")) return st;
    return guarded([&] {
        TruantReport report = truant(sum->value, bound);
        *verdict = report.verdict == TruantReport::Verdict::universal ? 1 : 0;
        if (truant_out) *truant_out = report.truant.value_or(0);
        if (criterion_passed) *criterion_passed = report.criterion_passed ? 1 : 0;
    });
}

polyu_status polyu_sum_criterion_universal(const polyu_sum* sum, int* out) {
    if (auto st = require(sum && out, "null argument")) return st;
    return guarded([&] { *out = criterion_universal(sum->value) ? 1 : 0; });
}

polyu_status polyu_sum_exceptional_set(const polyu_sum* sum, int64_t bound, int64_t** values,
                                       size_t* count) {
    if (auto st = require(sum && values && count, "null argument")) return st;
    return guarded([&] {
        auto v = exceptional_set(sum->value, bound);
        *values = dup_i64(v);
        *count = v.size();
    });
}

polyu_status polyu_sum_reduction_plan(const polyu_sum* sum, char** out) {
    if (auto st = require(sum && out, "null argument")) return st;
    return guarded([&] {
        ReductionPlan plan = reduction_plan(sum->value.octagonals());
        *out = dup_string(reduction_plan_to_json(plan).dump());
    });
}

polyu_status polyu_sum_reduction_check(const polyu_sum* sum, int* passed, int64_t** failing,
                                       size_t* count) {
    if (auto st = require(sum && passed, "null argument")) return st;
    return guarded([&] {
        ReductionCheck check = reduction_check(sum->value);
        *passed = check.passed ? 1 : 0;
        if (failing && count) {
            *failing = dup_i64(check.failing);
            *count = check.failing.size();
        }
    });
}

/* ---- ternary forms ----------------------------------------------------- */

polyu_status polyu_form_parse(const char* text, polyu_form** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new polyu_form{TernaryForm::parse(text)}; });
}

polyu_status polyu_form_create(const int64_t gram[9], polyu_form** out) {
    if (auto st = require(gram && out, "null argument")) return st;
    return guarded([&] { *out = new polyu_form{TernaryForm::from_gram(mat_of(gram))}; });
}

void polyu_form_free(polyu_form* form) { delete form; }

polyu_status polyu_form_notation(const polyu_form* form, char** out) {
    if (auto st = require(form && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(form->value.notation()); });
}

polyu_status polyu_form_eval(const polyu_form* form, int64_t x, int64_t y, int64_t z, int64_t* out) {
    if (auto st = require(form && out, "null argument")) return st;
    return guarded([&] { *out = form->value.eval({x, y, z}); });
}

polyu_status polyu_form_rep_count(const polyu_form* form, int64_t n, int64_t* out) {
    if (auto st = require(form && out, "null argument")) return st;
    return guarded([&] { *out = rep_count(n, form->value); });
}

polyu_status polyu_form_represented_set(const polyu_form* form, int64_t bound, int64_t** values,
                                        size_t* count) {
    if (auto st = require(form && values && count, "null argument")) return st;
    return guarded([&] {
        auto v = represented_set(form->value, bound);
        *values = dup_i64(v);
        *count = v.size();
    });
}

polyu_status polyu_congruence_classes(const polyu_form* g, int64_t d, int64_t a, char** out) {
    if (auto st = require(g && out, "null argument")) return st;
    return guarded([&] {
        ojson arr = ojson::array();
        for (const Vec3& v : congruence_classes(g->value, d, a)) arr.push_back(ojson::array({v[0], v[1], v[2]}));
        *out = dup_string(arr.dump());
    });
}

polyu_status polyu_transformation_set(const polyu_form* f, const polyu_form* g, int64_t d, char** out) {
    if (auto st = require(f && g && out, "null argument")) return st;
    return guarded([&] {
        ojson arr = ojson::array();
        for (const Mat3& T : transformation_set(f->value, g->value, d)) {
            ojson rows = ojson::array();
            for (int r = 0; r < 3; ++r)
                rows.push_back(ojson::array({T[static_cast<std::size_t>(3 * r)],
                                             T[static_cast<std::size_t>(3 * r + 1)],
                                             T[static_cast<std::size_t>(3 * r + 2)]}));
            arr.push_back(std::move(rows));
        }
        *out = dup_string(arr.dump());
    });
}

polyu_status polyu_good_partition(const polyu_form* f, const polyu_form* g, int64_t d, int64_t a,
                                  char** out) {
    if (auto st = require(f && g && out, "null argument")) return st;
    return guarded([&] {
        CongruenceCertificate cert = good_partition(f->value, g->value, d, a);
        *out = dup_string(certificate_to_json(cert).dump());
    });
}

polyu_status polyu_prec_check(const polyu_form* f, const polyu_form* g, int64_t d, int64_t a,
                              int64_t spot_bound, int* out) {
    if (auto st = require(f && g && out, "null argument")) return st;
    return guarded([&] { *out = prec_check(f->value, g->value, d, a, spot_bound) ? 1 : 0; });
}

polyu_status polyu_pme_check(const polyu_form* f, const polyu_form* g, int64_t d, int64_t a,
                             const int64_t T[9], char** out) {
    if (auto st = require(f && g && T && out, "null argument")) return st;
    return guarded([&] {
        PmeResult res = pme_check(f->value, g->value, d, a, mat_of(T));
        *out = dup_string(pme_to_json(res).dump());
    });
}

polyu_status polyu_pme_conclusion_check(const polyu_form* f, const polyu_form* g, int64_t d,
                                        int64_t a, const int64_t T[9], int64_t bound, int* ok,
                                        int64_t* counterexample) {
    if (auto st = require(f && g && T && ok, "null argument")) return st;
    return guarded([&] {
        auto fail_n = pme_conclusion_first_failure(f->value, g->value, d, a, mat_of(T), bound);
        *ok = fail_n ? 0 : 1;
        if (counterexample) *counterexample = fail_n.value_or(0);
    });
}

polyu_status polyu_siegel_identity_check(int64_t bound, int* ok, int64_t* first_failure) {
    if (auto st = require(ok != nullptr, "null argument")) return st;
    return guarded([&] {
        auto fail_n = siegel_identity_first_failure(bound);
        *ok = fail_n ? 0 : 1;
        if (first_failure) *first_failure = fail_n.value_or(0);
    });
}

/* ---- escalation and the catalogue -------------------------------------- */

polyu_status polyu_escalate(const char* parents_json, char** children_json) {
    if (auto st = require(parents_json && children_json, "null argument")) return st;
    return guarded([&] {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(parents_json);
        } catch (const nlohmann::json::exception& e) {
            fail(errc::invalid_argument, std::string("bad parents JSON: ") + e.what());
        }
        std::vector<Parent> parents;
        for (const auto& p : parsed)
            parents.push_back({MixedSum::parse(p.at("sum").get<std::string>()), p.at("truant").get<i64>()});
        ojson arr = ojson::array();
        for (const EscalationNode& node : escalate(parents)) {
            ojson j;
            j["sum"] = node.sum.notation();
            j["parent"] = node.parent ? ojson(node.parent->notation()) : ojson(nullptr);
            arr.push_back(std::move(j));
        }
        *children_json = dup_string(arr.dump());
    });
}

polyu_status polyu_catalogue_run(int64_t bound, int threads, polyu_catalogue** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new polyu_catalogue{full_catalogue(bound, threads)}; });
}

void polyu_catalogue_free(polyu_catalogue* cat) { delete cat; }

polyu_status polyu_catalogue_total(const polyu_catalogue* cat, int64_t* out) {
    if (auto st = require(cat && out, "null argument")) return st;
    *out = cat->value.total_proper;
    return POLYU_OK;
}

polyu_status polyu_catalogue_summary(const polyu_catalogue* cat, char** out) {
    if (auto st = require(cat && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(catalogue_summary(cat->value)); });
}

polyu_status polyu_catalogue_arities(const polyu_catalogue* cat, int64_t** arities, size_t* count) {
    if (auto st = require(cat && arities && count, "null argument")) return st;
    return guarded([&] {
        std::vector<i64> a;
        for (const auto& run : cat->value.runs) a.push_back(run.arity);
        *arities = dup_i64(a);
        *count = a.size();
    });
}

polyu_status polyu_catalogue_counts(const polyu_catalogue* cat, int arity, int64_t* candidates,
                                    int64_t* universal, int64_t* proper_universal) {
    if (auto st = require(cat != nullptr, "null argument")) return st;
    const ClassificationRun* run = cat->value.run_for_arity(arity);
    if (auto st = require(run != nullptr, "no run for that arity")) return st;
    if (candidates) *candidates = static_cast<int64_t>(run->entries.size());
    if (universal) *universal = static_cast<int64_t>(run->universal().size());
    if (proper_universal) *proper_universal = static_cast<int64_t>(run->proper_universal().size());
    return POLYU_OK;
}

polyu_status polyu_catalogue_run_json(const polyu_catalogue* cat, int arity, char** out) {
    if (auto st = require(cat && out, "null argument")) return st;
    const ClassificationRun* run = cat->value.run_for_arity(arity);
    if (auto st = require(run != nullptr, "no run for that arity")) return st;
    return guarded([&] { *out = dup_string(run_to_json(*run).dump(2)); });
}

polyu_status polyu_catalogue_run_csv(const polyu_catalogue* cat, int arity, char** out) {
    if (auto st = require(cat && out, "null argument")) return st;
    const ClassificationRun* run = cat->value.run_for_arity(arity);
    if (auto st = require(run != nullptr, "no run for that arity")) return st;
    return guarded([&] { *out = dup_string(run_to_csv(*run)); });
}

polyu_status polyu_catalogue_json(const polyu_catalogue* cat, char** out) {
    if (auto st = require(cat && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(catalogue_to_json(cat->value).dump(2)); });
}

/* ---- fixtures and table verification ------------------------------------ */

polyu_status polyu_set_fixture_directory(const char* path) {
    if (auto st = require(path != nullptr, "null argument")) return st;
    set_fixture_directory(path);
    return POLYU_OK;
}

polyu_status polyu_fixture_json(const char* table_id, char** out) {
    if (auto st = require(table_id && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(fixture(table_id).data.dump(2)); });
}

polyu_status polyu_verify_table(const char* table_id, int64_t bound, int threads, int* passed,
                                char** report_json) {
    if (auto st = require(table_id && passed, "null argument")) return st;
    return guarded([&] {
        VerifyReport report = verify_table(table_id, bound, threads);
        *passed = report.passed ? 1 : 0;
        if (report_json) *report_json = dup_string(verify_report_to_json(report).dump(2));
    });
}

}  // extern "C"
