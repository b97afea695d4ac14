#ifndef POLYU_FIXTURES_HPP
#define POLYU_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyu/mixed_sum.hpp"
#include "polyu/ternary_form.hpp"

namespace polyu {

// Machine-readable copies of the published classification tables, shipped as
// JSON files so each value can be audited line by line. Ids:
//   "3.1", "4.1", "5.1"  escalation stages with truants
//   "5.2"                exceptional sets
//   "4.3"                congruence transport data
//   "eq3.1"              the six universal ternary sums
//   "critical19"         the 19 criterion integers
struct TableFixture {
    std::string table_id;
    nlohmann::json data;
};

TableFixture fixture(const std::string& table_id);

// Fixture search order: explicit directory, POLYU_FIXTURES environment
// variable, then the compiled-in default.
void set_fixture_directory(const std::string& path);
std::string fixture_directory();

// Typed views over fixture rows.
struct TruantRow {
    std::string case_id;
    MixedSum sum;
    i64 truant = 0;
    std::vector<i64> square_exclusions;
    std::vector<i64> octagonal_exclusions;
};
std::vector<TruantRow> truant_rows(const TableFixture& fx);

struct ExceptionalRow {
    std::string case_id;
    MixedSum sum;
    std::optional<std::vector<i64>> values;  // absent for the closed-form row
    bool closed_form = false;
    std::vector<i64> closed_form_values(i64 bound) const;  // {r*25^s - 5} up to bound
};
std::vector<ExceptionalRow> exceptional_rows(const TableFixture& fx);

struct CongruenceCheck {
    i64 d = 1, a = 0;
    std::vector<Vec3> bad;  // expected sign-pair representatives
};
struct CongruenceRow {
    std::string case_id;
    std::string condition;
    std::string source;  // "table" or "text"
    TernaryForm f, g;
    std::vector<CongruenceCheck> checks;
    std::optional<Mat3> witness;
    std::vector<Vec3> eigenvectors;
    std::optional<i64> conclusion_bound;
};
std::vector<CongruenceRow> congruence_rows(const TableFixture& fx);

std::vector<MixedSum> sum_rows(const TableFixture& fx);  // for "eq3.1"
std::vector<i64> integer_list(const TableFixture& fx);   // for "critical19"

}  // namespace polyu

#endif
