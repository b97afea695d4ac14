#ifndef POLYU_SERIALIZE_HPP
#define POLYU_SERIALIZE_HPP

#include <json.hpp>

#include "polyu/congruence.hpp"
#include "polyu/escalation.hpp"
#include "polyu/reduction.hpp"
#include "polyu/represent.hpp"

namespace polyu {

// Key order is fixed (ordered_json) so exports are byte-stable for a given
// bound.
using ojson = nlohmann::ordered_json;

ojson sum_to_json(const MixedSum& phi);
MixedSum sum_from_json(const nlohmann::json& j);

ojson truant_report_to_json(const TruantReport& report);
ojson witness_to_json(const Witness& w);
ojson reduction_plan_to_json(const ReductionPlan& plan);

ojson run_to_json(const ClassificationRun& run);
// Columns: notation,arity,verdict,truant,proper. The notation field uses
// spaces between coefficients so no field ever contains a comma.
std::string run_to_csv(const ClassificationRun& run);
ojson catalogue_to_json(const Catalogue& cat);
// "3:6 4:547 5:707 6:11 total:1271"
std::string catalogue_summary(const Catalogue& cat);

ojson certificate_to_json(const CongruenceCertificate& cert);
ojson pme_to_json(const PmeResult& res);

}  // namespace polyu

#endif
