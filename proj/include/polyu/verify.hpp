#ifndef POLYU_VERIFY_HPP
#define POLYU_VERIFY_HPP

#include <string>
#include <vector>

#include "polyu/serialize.hpp"

namespace polyu {

// Recomputation of one fixture table: every row is rechecked against the
// engine and mismatches are reported with expected vs. actual.
struct VerifyRow {
    std::string label;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string table_id;
    std::vector<VerifyRow> rows;
    bool passed = true;

    void add(std::string label, bool pass, std::string expected, std::string actual);
};

// bound: scan limit for truants and exceptional sets. threads only matters
// for "critical19", which replays the whole catalogue.
VerifyReport verify_table(const std::string& table_id, i64 bound, int threads = 0);

std::vector<std::string> verify_table_ids();

ojson verify_report_to_json(const VerifyReport& report);

}  // namespace polyu

#endif
