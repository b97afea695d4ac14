#include "polyu/escalation.hpp"

#include <algorithm>
#include <map>

#include "polyu/parallel.hpp"

namespace polyu {

std::vector<EscalationNode> escalate(const std::vector<Parent>& parents) {
    std::map<MixedSum, MixedSum> children;  // child -> first generating parent
    for (const Parent& p : parents) {
        if (p.truant < 1) fail(errc::invalid_argument, "parent truant must be positive");
        if (criterion_universal(p.sum))
            fail(errc::invalid_argument, "cannot escalate universal sum " + p.sum.notation());
        for (i64 c = 1; c <= p.truant; ++c) {
            children.try_emplace(p.sum.with_square(c), p.sum);
            children.try_emplace(p.sum.with_octagonal(c), p.sum);
        }
    }
    std::vector<EscalationNode> out;
    for (auto& [child, parent] : children) {
        bool settled = false;
        for (const MixedSum& sub : child.leave_one_out()) {
            if (criterion_universal(sub)) {
                settled = true;  // contains a universal subsum, cannot be proper
                break;
            }
        }
        if (!settled) out.push_back({child, parent});
    }
    return out;
}

std::vector<MixedSum> ClassificationRun::candidates() const {
    std::vector<MixedSum> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.node.sum);
    return out;
}

std::vector<MixedSum> ClassificationRun::universal() const {
    std::vector<MixedSum> out;
    for (const auto& e : entries)
        if (e.report.verdict == TruantReport::Verdict::universal) out.push_back(e.node.sum);
    return out;
}

std::vector<MixedSum> ClassificationRun::proper_universal() const {
    std::vector<MixedSum> out;
    for (const auto& e : entries)
        if (e.report.verdict == TruantReport::Verdict::universal && e.proper) out.push_back(e.node.sum);
    return out;
}

std::map<MixedSum, i64> ClassificationRun::failures() const {
    std::map<MixedSum, i64> out;
    for (const auto& e : entries)
        if (e.report.verdict == TruantReport::Verdict::non_universal) out.emplace(e.node.sum, *e.report.truant);
    return out;
}

ClassificationRun classify(const std::vector<EscalationNode>& candidates, i64 bound, int threads) {
    ClassificationRun run;
    run.bound = bound;
    run.entries.resize(candidates.size());
    std::vector<EscalationNode> sorted = candidates;
    std::sort(sorted.begin(), sorted.end(),
              [](const EscalationNode& a, const EscalationNode& b) { return a.sum < b.sum; });
    parallel_for(sorted.size(), threads, [&](std::size_t i) {
        ClassifiedSum entry;
        entry.node = sorted[i];
        entry.report = truant(entry.node.sum, bound);  // throws on indeterminate outcomes
        if (entry.report.verdict == TruantReport::Verdict::universal) {
            entry.proper = true;
            for (const MixedSum& sub : entry.node.sum.leave_one_out()) {
                if (criterion_universal(sub)) {
                    entry.proper = false;
                    break;
                }
            }
        }
        run.entries[i] = std::move(entry);
    });
    if (!run.entries.empty()) run.arity = static_cast<int>(run.entries.front().node.sum.arity());
    return run;
}

const ClassificationRun* Catalogue::run_for_arity(int arity) const {
    for (const auto& run : runs)
        if (run.arity == arity) return &run;
    return nullptr;
}

Catalogue full_catalogue(i64 bound, int threads) {
    if (bound < 61) fail(errc::invalid_argument, "catalogue bound must be at least 61");
    Catalogue cat;
    cat.bound = bound;
    std::vector<Parent> parents = {{MixedSum{}, 1}};  // empty sum, truant 1
    for (int arity = 1; arity <= 6; ++arity) {
        std::vector<EscalationNode> candidates = escalate(parents);
        ClassificationRun run = classify(candidates, bound, threads);
        run.arity = arity;
        parents.clear();
        for (const auto& e : run.entries)
            if (e.report.verdict == TruantReport::Verdict::non_universal)
                parents.push_back({e.node.sum, *e.report.truant});
        cat.total_proper += static_cast<i64>(run.proper_universal().size());
        cat.runs.push_back(std::move(run));
        if (parents.empty()) return cat;
    }
    fail(errc::internal, "escalation did not terminate at arity 6; " +
                             std::to_string(parents.size()) + " candidates remain open");
}

}  // namespace polyu
