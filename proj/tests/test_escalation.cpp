#include <doctest.h>

#include <algorithm>
#include <set>

#include "polyu/escalation.hpp"
#include "polyu/serialize.hpp"

using namespace polyu;

namespace {

std::vector<Parent> to_parents(const ClassificationRun& run) {
    std::vector<Parent> parents;
    for (const auto& [sum, t] : run.failures()) parents.push_back({sum, t});
    return parents;
}

}  // namespace

TEST_CASE("escalation from the empty sum") {
    std::vector<Parent> root = {{MixedSum{}, 1}};
    auto unary = escalate(root);
    REQUIRE(unary.size() == 2);
    // Canonical order: the empty square part sorts first.
    CHECK(unary[0].sum == MixedSum::parse("|1"));
    CHECK(unary[1].sum == MixedSum::parse("1|"));
    CHECK(unary[0].parent == MixedSum{});

    auto run1 = classify(unary, 1000, 1);
    CHECK(run1.universal().empty());

    auto binary = escalate(to_parents(run1));
    CHECK(binary.size() == 7);

    auto run2 = classify(binary, 1000, 1);
    CHECK(run2.universal().empty());
    auto ternary = escalate(to_parents(run2));
    CHECK(ternary.size() == 42);
}

TEST_CASE("universal parents are rejected") {
    CHECK_THROWS_AS(escalate({{MixedSum::parse("1,1|1"), 5}}), Error);
    CHECK_THROWS_AS(escalate({{MixedSum::parse("1|"), 0}}), Error);
}

TEST_CASE("ternary classification matches the known list") {
    Catalogue cat = full_catalogue(10000, 1);
    const ClassificationRun* r3 = cat.run_for_arity(3);
    REQUIRE(r3 != nullptr);
    CHECK(r3->entries.size() == 42);
    std::vector<MixedSum> expected = {MixedSum::parse("1,1|1"), MixedSum::parse("1,1|2"),
                                      MixedSum::parse("1,3|1"), MixedSum::parse("1|1,1"),
                                      MixedSum::parse("2,3|1"), MixedSum::parse("2|1,1")};
    std::sort(expected.begin(), expected.end());
    CHECK(r3->universal() == expected);
    CHECK(r3->proper_universal() == expected);
    CHECK(r3->failures().size() == 36);
}

TEST_CASE("catalogue counts and totals") {
    Catalogue cat = full_catalogue(10000, 1);
    REQUIRE(cat.runs.size() == 6);
    const struct {
        int arity;
        std::size_t candidates, proper;
    } expected[] = {{3, 42, 6}, {4, 564, 547}, {5, 708, 707}, {6, 11, 11}};
    for (const auto& e : expected) {
        const ClassificationRun* run = cat.run_for_arity(e.arity);
        REQUIRE(run != nullptr);
        CHECK(run->entries.size() == e.candidates);
        CHECK(run->proper_universal().size() == e.proper);
        // Candidates never contain a universal subsum, so universal implies proper.
        CHECK(run->universal() == run->proper_universal());
    }
    CHECK(cat.total_proper == 1271);
    CHECK(catalogue_summary(cat) == "3:6 4:547 5:707 6:11 total:1271");
    CHECK_THROWS_AS(full_catalogue(60, 1), Error);
}

TEST_CASE("classification is deterministic across thread counts") {
    Catalogue serial = full_catalogue(5000, 1);
    Catalogue parallel = full_catalogue(5000, 4);
    CHECK(catalogue_to_json(serial) == catalogue_to_json(parallel));
}

TEST_CASE("every candidate descends from the previous stage") {
    Catalogue cat = full_catalogue(10000, 1);
    for (std::size_t k = 1; k < cat.runs.size(); ++k) {
        const auto& prev = cat.runs[k - 1];
        std::map<MixedSum, i64> failures = prev.failures();
        for (const auto& e : cat.runs[k].entries) {
            // Some leave-one-out subsum is a non-universal candidate of the
            // previous run whose truant admits the dropped coefficient.
            bool linked = false;
            const MixedSum& child = e.node.sum;
            for (const MixedSum& sub : child.leave_one_out()) {
                auto it = failures.find(sub);
                if (it == failures.end()) continue;
                i64 dropped = 0;
                if (sub.squares().size() != child.squares().size()) {
                    i64 sum_child = 0, sum_sub = 0;
                    for (i64 c : child.squares()) sum_child += c;
                    for (i64 c : sub.squares()) sum_sub += c;
                    dropped = sum_child - sum_sub;
                } else {
                    i64 sum_child = 0, sum_sub = 0;
                    for (i64 c : child.octagonals()) sum_child += c;
                    for (i64 c : sub.octagonals()) sum_sub += c;
                    dropped = sum_child - sum_sub;
                }
                if (dropped <= it->second) {
                    linked = true;
                    break;
                }
            }
            CHECK_MESSAGE(linked, child.notation());
        }
    }
}

TEST_CASE("senary stage descends from the single open quinary sum") {
    Catalogue cat = full_catalogue(10000, 1);
    const ClassificationRun* r5 = cat.run_for_arity(5);
    auto failures = r5->failures();
    REQUIRE(failures.size() == 1);
    CHECK(failures.begin()->first == MixedSum::parse("1,2|5,5,5"));
    CHECK(failures.begin()->second == 20);
    const ClassificationRun* r6 = cat.run_for_arity(6);
    for (const auto& e : r6->entries) CHECK(e.node.parent == MixedSum::parse("1,2|5,5,5"));
}

TEST_CASE("proper universal members are sound and proper") {
    Catalogue cat = full_catalogue(10000, 1);
    // Sample across the stages: criterion holds, nothing is missed up to the
    // bound, and every leave-one-out subsum fails early.
    for (int arity : {3, 4, 5, 6}) {
        const ClassificationRun* run = cat.run_for_arity(arity);
        auto proper = run->proper_universal();
        for (std::size_t i = 0; i < proper.size(); i += std::max<std::size_t>(1, proper.size() / 5)) {
            const MixedSum& phi = proper[i];
            CHECK(criterion_universal(phi));
            CHECK(exceptional_set(phi, 10000).empty());
            for (const MixedSum& sub : phi.leave_one_out()) {
                TruantReport rep = truant(sub, 10000);
                REQUIRE(rep.verdict == TruantReport::Verdict::non_universal);
                CHECK(*rep.truant <= 61);
            }
        }
    }
}

TEST_CASE("run serialization") {
    Catalogue cat = full_catalogue(1000, 1);
    const ClassificationRun* r3 = cat.run_for_arity(3);
    std::string csv = run_to_csv(*r3);
    CHECK(csv.starts_with("notation,arity,verdict,truant,proper\n"));
    CHECK(csv.find("1 1|1,3,universal,,1") != std::string::npos);
    CHECK(csv.find("1 1|3,3,non_universal,6,0") != std::string::npos);
    // Each data row has exactly four commas.
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
        std::size_t end = csv.find('\n', pos);
        std::string line = csv.substr(pos, end - pos);
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
        pos = end + 1;
    }
    ojson j = run_to_json(*r3);
    CHECK(j["candidates"] == 42);
    CHECK(j["entries"].size() == 42);
}
