#include "polyu/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polyu/fixtures.hpp"

namespace polyu {

void VerifyReport::add(std::string label, bool pass, std::string expected, std::string actual) {
    passed = passed && pass;
    rows.push_back({std::move(label), pass, std::move(expected), std::move(actual)});
}

namespace {

std::string vec_str(const Vec3& v) {
    std::ostringstream os;
    os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
    return os.str();
}

std::string vec_set_str(const std::vector<Vec3>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ' ';
        os << vec_str(vs[i]);
    }
    os << '}';
    return os.str();
}

std::string int_set_str(const std::vector<i64>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
    return os.str();
}

void verify_truants(const TableFixture& fx, i64 bound, VerifyReport& report) {
    for (const TruantRow& row : truant_rows(fx)) {
        TruantReport actual = truant(row.sum, bound);
        bool pass = actual.verdict == TruantReport::Verdict::non_universal && actual.truant == row.truant;
        report.add(row.case_id + " truant(" + row.sum.notation() + ")", pass, std::to_string(row.truant),
                   actual.truant ? std::to_string(*actual.truant) : "universal");
    }
}

// Exclusion children of a stage are exactly the non-universal sums the next
// stage starts from.
void verify_exclusions(const TableFixture& fx, i64 bound, VerifyReport& report) {
    std::set<MixedSum> children;
    for (const TruantRow& row : truant_rows(fx)) {
        for (i64 c : row.square_exclusions) children.insert(row.sum.with_square(c));
        for (i64 c : row.octagonal_exclusions) children.insert(row.sum.with_octagonal(c));
    }
    for (const MixedSum& child : children) {
        TruantReport rep = truant(child, bound);
        report.add("exclusion " + child.notation() + " non-universal",
                   rep.verdict == TruantReport::Verdict::non_universal, "non_universal",
                   rep.truant ? "truant " + std::to_string(*rep.truant) : "universal");
    }
    TableFixture next = fixture("5.1");
    std::set<MixedSum> continued;
    for (const TruantRow& row : truant_rows(next))
        if (row.sum.arity() == 4) continued.insert(row.sum);
    report.add("exclusions equal the next stage's sums", children == continued,
               std::to_string(continued.size()) + " sums", std::to_string(children.size()) + " sums");
}

void verify_exceptional(const TableFixture& fx, i64 bound, VerifyReport& report) {
    for (const ExceptionalRow& row : exceptional_rows(fx)) {
        std::vector<i64> expected = row.closed_form ? row.closed_form_values(bound) : *row.values;
        std::vector<i64> actual = exceptional_set(row.sum, bound);
        report.add(row.case_id + " E(" + row.sum.notation() + ")", expected == actual, int_set_str(expected),
                   int_set_str(actual));
    }
}

void verify_universal_list(const TableFixture& fx, i64 bound, VerifyReport& report) {
    for (const MixedSum& sum : sum_rows(fx)) {
        bool crit = criterion_universal(sum);
        TruantReport rep = truant(sum, bound);
        report.add("universal " + sum.notation(),
                   crit && rep.verdict == TruantReport::Verdict::universal, "universal",
                   rep.truant ? "truant " + std::to_string(*rep.truant) : "universal");
    }
}

void verify_criterion(const TableFixture& fx, i64 bound, int threads, VerifyReport& report) {
    std::vector<i64> listed = integer_list(fx);
    std::vector<i64> expected(critical_integers.begin(), critical_integers.end());
    report.add("criterion integers", listed == expected, int_set_str(expected), int_set_str(listed));
    // Replaying the catalogue exercises the criterion/truant cross-check on
    // every candidate; any disagreement aborts with an indeterminate error.
    Catalogue cat = full_catalogue(bound, threads);
    for (auto [arity, count] : expected_proper_counts) {
        const ClassificationRun* run = cat.run_for_arity(arity);
        i64 actual = run ? static_cast<i64>(run->proper_universal().size()) : 0;
        report.add("proper universal count, arity " + std::to_string(arity), actual == count,
                   std::to_string(count), std::to_string(actual));
    }
    report.add("total proper universal", cat.total_proper == 1271, "1271", std::to_string(cat.total_proper));
}

void verify_congruence(const TableFixture& fx, VerifyReport& report) {
    for (const CongruenceRow& row : congruence_rows(fx)) {
        std::string tag = row.case_id + (row.condition.empty() ? "" : " [" + row.condition + "]");
        for (const CongruenceCheck& check : row.checks) {
            CongruenceCertificate cert = good_partition(row.f, row.g, check.d, check.a);
            std::vector<Vec3> expected;
            for (const Vec3& v : check.bad) expected.push_back(pair_representative(v, check.d));
            std::sort(expected.begin(), expected.end());
            std::vector<Vec3> actual = cert.bad_pairs();
            std::string label = tag + " bad(" + std::to_string(check.d) + "," + std::to_string(check.a) + ")";
            report.add(label, expected == actual, vec_set_str(expected), vec_set_str(actual));
            if (check.bad.empty()) {
                bool prec = prec_check(row.f, row.g, check.d, check.a);
                report.add(tag + " prec(" + std::to_string(check.d) + "," + std::to_string(check.a) + ")",
                           prec, "true", prec ? "true" : "false");
            }
            if (row.witness) {
                PmeResult pme = pme_check(row.f, row.g, check.d, check.a, *row.witness);
                report.add(label + " transport conditions", pme.verdict, "all three hold",
                           std::string(pme.infinite_order ? "" : "finite order; ") +
                               (pme.isometry_identity ? "" : "isometry identity fails; ") +
                               (pme.bad_transported ? "" : "bad class not transported; ") +
                               (pme.verdict ? "all three hold" : ""));
                std::vector<Vec3> eig_expected;
                for (const Vec3& v : row.eigenvectors) eig_expected.push_back(primitive_signed(v));
                std::sort(eig_expected.begin(), eig_expected.end());
                std::vector<Vec3> eig_actual = pme.eigenvectors;
                std::sort(eig_actual.begin(), eig_actual.end());
                report.add(tag + " eigenvectors", eig_expected == eig_actual && !pme.higher_dimensional_eigenspace,
                           vec_set_str(eig_expected), vec_set_str(eig_actual));
                if (row.conclusion_bound) {
                    auto fail_n = pme_conclusion_first_failure(row.f, row.g, check.d, check.a, *row.witness,
                                                               *row.conclusion_bound);
                    report.add(label + " conclusion to " + std::to_string(*row.conclusion_bound), !fail_n,
                               "no counterexample", fail_n ? "fails at " + std::to_string(*fail_n) : "no counterexample");
                }
            }
        }
    }
}

}  // namespace

std::vector<std::string> verify_table_ids() {
    return {"3.1", "4.1", "4.3", "5.1", "5.2", "eq3.1", "critical19"};
}

VerifyReport verify_table(const std::string& table_id, i64 bound, int threads) {
    VerifyReport report;
    report.table_id = table_id;
    TableFixture fx = fixture(table_id);
    if (table_id == "3.1" || table_id == "5.1") {
        verify_truants(fx, bound, report);
    } else if (table_id == "4.1") {
        verify_truants(fx, bound, report);
        verify_exclusions(fx, bound, report);
    } else if (table_id == "5.2") {
        verify_exceptional(fx, bound, report);
    } else if (table_id == "eq3.1") {
        verify_universal_list(fx, bound, report);
    } else if (table_id == "critical19") {
        verify_criterion(fx, bound, threads, report);
    } else if (table_id == "4.3") {
        verify_congruence(fx, report);
    } else {
        fail(errc::unknown_table, "unknown fixture table '" + table_id + "'");
    }
    return report;
}

ojson verify_report_to_json(const VerifyReport& report) {
    ojson rows = ojson::array();
    for (const VerifyRow& row : report.rows)
        rows.push_back(ojson{{"label", row.label},
                             {"pass", row.pass},
                             {"expected", row.expected},
                             {"actual", row.actual}});
    return ojson{{"table", report.table_id}, {"passed", report.passed}, {"rows", std::move(rows)}};
}

}  // namespace polyu
