#ifndef POLYU_ESCALATION_HPP
#define POLYU_ESCALATION_HPP

#include <map>
#include <optional>
#include <vector>

#include "polyu/represent.hpp"

namespace polyu {

// A candidate produced by escalation together with one generating parent.
// The child is the parent plus one extra coefficient c with c <= t(parent).
struct EscalationNode {
    MixedSum sum;
    std::optional<MixedSum> parent;
};

struct Parent {
    MixedSum sum;
    i64 truant = 0;
};

// Children of the non-universal parents: one new square or octagonal
// coefficient c with 1 <= c <= t(parent), re-sorted into canonical form and
// globally deduplicated. Children with a universal leave-one-out subsum are
// dropped, mirroring the bookkeeping that keeps already-settled sums out of
// the candidate tables; only candidates for *proper* universality remain.
// A parent that is itself universal is rejected.
std::vector<EscalationNode> escalate(const std::vector<Parent>& parents);

struct ClassifiedSum {
    EscalationNode node;
    TruantReport report;
    bool proper = false;  // meaningful when universal: all leave-one-out subsums non-universal
};

struct ClassificationRun {
    int arity = 0;
    i64 bound = 0;
    std::vector<ClassifiedSum> entries;  // sorted by canonical sum order

    std::vector<MixedSum> candidates() const;
    std::vector<MixedSum> universal() const;
    std::vector<MixedSum> proper_universal() const;
    std::map<MixedSum, i64> failures() const;  // non-universal candidate -> truant
};

// Splits candidates by the 19-integer criterion cross-checked against a full
// scan to the bound (any disagreement aborts the run), then decides
// properness from the leave-one-out subsums. threads <= 0 picks the hardware
// count.
ClassificationRun classify(const std::vector<EscalationNode>& candidates, i64 bound, int threads = 1);

struct Catalogue {
    i64 bound = 0;
    std::vector<ClassificationRun> runs;  // arity 1, 2, ...
    i64 total_proper = 0;

    const ClassificationRun* run_for_arity(int arity) const;
};

// Published classification sizes: proper universal sums per arity.
inline constexpr std::array<std::pair<int, i64>, 4> expected_proper_counts = {
    std::pair<int, i64>{3, 6}, {4, 547}, {5, 707}, {6, 11}};

// Escalates from the empty sum (truant 1) until no non-universal candidates
// remain; that happens at arity 6. Still-open candidates past arity 6 abort
// the run.
Catalogue full_catalogue(i64 bound, int threads = 0);

}  // namespace polyu

#endif
