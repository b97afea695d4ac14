#include "polyu/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace polyu {

ojson sum_to_json(const MixedSum& phi) {
    return ojson{{"squares", phi.squares()}, {"octagonals", phi.octagonals()}};
}

MixedSum sum_from_json(const nlohmann::json& j) {
    std::vector<i64> sq, oc;
    for (const auto& v : j.at("squares")) sq.push_back(v.get<i64>());
    for (const auto& v : j.at("octagonals")) oc.push_back(v.get<i64>());
    return MixedSum(std::move(sq), std::move(oc));
}

ojson truant_report_to_json(const TruantReport& report) {
    ojson j;
    j["verdict"] = report.verdict == TruantReport::Verdict::universal ? "universal" : "non_universal";
    if (report.truant)
        j["truant"] = *report.truant;
    else
        j["truant"] = nullptr;
    j["searched_bound"] = report.searched_bound;
    j["criterion_passed"] = report.criterion_passed;
    return j;
}

ojson witness_to_json(const Witness& w) { return ojson{{"x", w.xs}, {"y", w.ys}}; }

ojson reduction_plan_to_json(const ReductionPlan& plan) {
    ojson nu = ojson::object();
    for (const auto& [n, e] : plan.nu) nu[std::to_string(n)] = e;
    return ojson{{"beta_sum", plan.beta_sum}, {"E", plan.residues}, {"nu", std::move(nu)}};
}

namespace {

ojson entry_to_json(const ClassifiedSum& e) {
    ojson j;
    j["notation"] = e.node.sum.notation();
    j["sum"] = sum_to_json(e.node.sum);
    j["arity"] = e.node.sum.arity();
    if (e.node.parent)
        j["parent"] = e.node.parent->notation();
    else
        j["parent"] = nullptr;
    j["report"] = truant_report_to_json(e.report);
    j["proper"] = e.report.verdict == TruantReport::Verdict::universal ? ojson(e.proper) : ojson(nullptr);
    return j;
}

std::vector<const ClassifiedSum*> by_notation(const ClassificationRun& run) {
    std::vector<const ClassifiedSum*> entries;
    entries.reserve(run.entries.size());
    for (const auto& e : run.entries) entries.push_back(&e);
    std::sort(entries.begin(), entries.end(), [](const ClassifiedSum* a, const ClassifiedSum* b) {
        return a->node.sum.notation() < b->node.sum.notation();
    });
    return entries;
}

}  // namespace

ojson run_to_json(const ClassificationRun& run) {
    ojson j;
    j["arity"] = run.arity;
    j["bound"] = run.bound;
    j["candidates"] = run.entries.size();
    j["universal"] = run.universal().size();
    j["proper_universal"] = run.proper_universal().size();
    ojson entries = ojson::array();
    for (const ClassifiedSum* e : by_notation(run)) entries.push_back(entry_to_json(*e));
    j["entries"] = std::move(entries);
    return j;
}

std::string run_to_csv(const ClassificationRun& run) {
    std::ostringstream os;
    os << "notation,arity,verdict,truant,proper\n";
    for (const ClassifiedSum* e : by_notation(run)) {
        bool universal = e->report.verdict == TruantReport::Verdict::universal;
        os << e->node.sum.notation_spaced() << ',' << e->node.sum.arity() << ','
           << (universal ? "universal" : "non_universal") << ',';
        if (e->report.truant) os << *e->report.truant;
        os << ',' << (universal && e->proper ? 1 : 0) << '\n';
    }
    return os.str();
}

ojson catalogue_to_json(const Catalogue& cat) {
    ojson j;
    j["bound"] = cat.bound;
    ojson totals = ojson::object();
    for (const auto& run : cat.runs)
        totals[std::to_string(run.arity)] = run.proper_universal().size();
    j["totals"] = std::move(totals);
    j["total_proper"] = cat.total_proper;
    ojson runs = ojson::array();
    for (const auto& run : cat.runs) runs.push_back(run_to_json(run));
    j["runs"] = std::move(runs);
    return j;
}

std::string catalogue_summary(const Catalogue& cat) {
    std::ostringstream os;
    for (int arity = 3; arity <= 6; ++arity) {
        const ClassificationRun* run = cat.run_for_arity(arity);
        os << arity << ':' << (run ? run->proper_universal().size() : 0) << ' ';
    }
    os << "total:" << cat.total_proper;
    return os.str();
}

namespace {

ojson vec_to_json(const Vec3& v) { return ojson::array({v[0], v[1], v[2]}); }

ojson mat_to_json(const Mat3& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < 3; ++r)
        rows.push_back(ojson::array({m[static_cast<std::size_t>(3 * r)], m[static_cast<std::size_t>(3 * r + 1)],
                                     m[static_cast<std::size_t>(3 * r + 2)]}));
    return rows;
}

}  // namespace

ojson certificate_to_json(const CongruenceCertificate& cert) {
    ojson j;
    j["f"] = cert.f.notation();
    j["g"] = cert.g.notation();
    j["d"] = cert.d;
    j["a"] = cert.a;
    j["residue_count"] = cert.residues.size();
    j["good_count"] = cert.good.size();
    ojson bad = ojson::array();
    for (const Vec3& v : cert.bad) bad.push_back(vec_to_json(v));
    j["bad"] = std::move(bad);
    ojson pairs = ojson::array();
    for (const Vec3& v : cert.bad_pairs()) pairs.push_back(vec_to_json(v));
    j["bad_pairs"] = std::move(pairs);
    j["witness"] = cert.witness ? mat_to_json(*cert.witness) : ojson(nullptr);
    ojson eig = ojson::array();
    for (const Vec3& v : cert.eigenvectors) eig.push_back(vec_to_json(v));
    j["eigenvectors"] = std::move(eig);
    return j;
}

ojson pme_to_json(const PmeResult& res) {
    ojson j;
    j["verdict"] = res.verdict;
    j["conditions"] = ojson{{"infinite_order", res.infinite_order},
                            {"isometry_identity", res.isometry_identity},
                            {"bad_transported", res.bad_transported}};
    j["eigenvalues"] = res.eigenvalues;
    ojson eig = ojson::array();
    for (const Vec3& v : res.eigenvectors) eig.push_back(vec_to_json(v));
    j["eigenvectors"] = std::move(eig);
    j["higher_dimensional_eigenspace"] = res.higher_dimensional_eigenspace;
    return j;
}

}  // namespace polyu
