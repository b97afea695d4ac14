#include "polyu/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

namespace polyu {

namespace {

std::mutex dir_mutex;
std::string explicit_dir;

const std::map<std::string, std::string>& fixture_files() {
    static const std::map<std::string, std::string> files = {
        {"3.1", "table_3_1.json"}, {"4.1", "table_4_1.json"}, {"4.3", "table_4_3.json"},
        {"5.1", "table_5_1.json"}, {"5.2", "table_5_2.json"}, {"eq3.1", "eq_3_1.json"},
        {"critical19", "critical19.json"},
    };
    return files;
}

}  // namespace

void set_fixture_directory(const std::string& path) {
    std::lock_guard<std::mutex> lock(dir_mutex);
    explicit_dir = path;
}

std::string fixture_directory() {
    {
        std::lock_guard<std::mutex> lock(dir_mutex);
        if (!explicit_dir.empty()) return explicit_dir;
    }
    if (const char* env = std::getenv("POLYU_FIXTURES"); env && *env) return env;
#ifdef POLYU_DEFAULT_FIXTURE_DIR
    return POLYU_DEFAULT_FIXTURE_DIR;
#else
    return "data/fixtures";
#endif
}

TableFixture fixture(const std::string& table_id) {
    auto it = fixture_files().find(table_id);
    if (it == fixture_files().end()) fail(errc::unknown_table, "unknown fixture table '" + table_id + "'");
    std::string path = fixture_directory() + "/" + it->second;
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open fixture file " + path);
    nlohmann::json data;
    try {
        in >> data;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io, "malformed fixture file " + path + ": " + e.what());
    }
    return TableFixture{table_id, std::move(data)};
}

namespace {

std::vector<i64> int_list(const nlohmann::json& j) {
    std::vector<i64> out;
    for (const auto& v : j) out.push_back(v.get<i64>());
    return out;
}

Vec3 vec3_of(const nlohmann::json& j) {
    if (j.size() != 3) fail(errc::io, "fixture vector must have 3 entries");
    return Vec3{j[0].get<i64>(), j[1].get<i64>(), j[2].get<i64>()};
}

Mat3 mat3_of(const nlohmann::json& j) {
    if (j.size() != 3) fail(errc::io, "fixture matrix must have 3 rows");
    Mat3 m{};
    for (int r = 0; r < 3; ++r) {
        Vec3 row = vec3_of(j[static_cast<std::size_t>(r)]);
        for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(3 * r + c)] = row[static_cast<std::size_t>(c)];
    }
    return m;
}

}  // namespace

std::vector<TruantRow> truant_rows(const TableFixture& fx) {
    std::vector<TruantRow> out;
    for (const auto& row : fx.data.at("rows")) {
        TruantRow r;
        r.case_id = row.at("case").get<std::string>();
        r.sum = MixedSum::parse(row.at("sum").get<std::string>());
        r.truant = row.at("truant").get<i64>();
        if (row.contains("square_exclusions")) r.square_exclusions = int_list(row["square_exclusions"]);
        if (row.contains("octagonal_exclusions")) r.octagonal_exclusions = int_list(row["octagonal_exclusions"]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<i64> ExceptionalRow::closed_form_values(i64 bound) const {
    // {r * 25^s - 5 : 1 <= r <= 4, s >= 1} up to bound.
    std::vector<i64> out;
    for (i64 pow = 25;; pow = checked_mul(pow, 25)) {
        bool any = false;
        for (i64 r = 1; r <= 4; ++r) {
            i64 v = checked_mul(r, pow) - 5;
            if (v <= bound) {
                out.push_back(v);
                any = true;
            }
        }
        if (!any) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExceptionalRow> exceptional_rows(const TableFixture& fx) {
    std::vector<ExceptionalRow> out;
    for (const auto& row : fx.data.at("rows")) {
        ExceptionalRow r;
        r.case_id = row.at("case").get<std::string>();
        r.sum = MixedSum::parse(row.at("sum").get<std::string>());
        if (row.contains("closed_form"))
            r.closed_form = true;
        else
            r.values = int_list(row.at("exceptional"));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CongruenceRow> congruence_rows(const TableFixture& fx) {
    std::vector<CongruenceRow> out;
    for (const auto& row : fx.data.at("rows")) {
        CongruenceRow r{.case_id = row.at("case").get<std::string>(),
                        .condition = row.value("condition", ""),
                        .source = row.value("source", "table"),
                        .f = TernaryForm::parse(row.at("f").get<std::string>()),
                        .g = TernaryForm::parse(row.at("g").get<std::string>()),
                        .checks = {},
                        .witness = std::nullopt,
                        .eigenvectors = {},
                        .conclusion_bound = std::nullopt};
        for (const auto& chk : row.at("checks")) {
            CongruenceCheck check;
            check.d = chk.at("d").get<i64>();
            check.a = chk.at("a").get<i64>();
            for (const auto& v : chk.at("bad")) check.bad.push_back(vec3_of(v));
            r.checks.push_back(std::move(check));
        }
        if (row.contains("witness")) r.witness = mat3_of(row["witness"]);
        if (row.contains("eigenvectors"))
            for (const auto& v : row["eigenvectors"]) r.eigenvectors.push_back(vec3_of(v));
        if (row.contains("conclusion_bound")) r.conclusion_bound = row["conclusion_bound"].get<i64>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<MixedSum> sum_rows(const TableFixture& fx) {
    std::vector<MixedSum> out;
    for (const auto& row : fx.data.at("rows")) out.push_back(MixedSum::parse(row.at("sum").get<std::string>()));
    return out;
}

std::vector<i64> integer_list(const TableFixture& fx) { return int_list(fx.data.at("integers")); }

}  // namespace polyu
