#pragma once

#include <string>
#include <vector>

#include "f2c/duality.hpp"
#include "json.hpp"

namespace f2c {

using nlohmann::json;

// ---- input files ------------------------------------------------------------

// Parse errors become InvalidInput with the path and byte offset.
json read_json_file(const std::string& path);

// A subgroup given by generator indices, e.g. [4] or [] for {e}.
Subgroup subgroup_from_json(const json& gens, const GroupRef& g, const std::string& what);

// {"group", "subgroup", "pi", "psi", "notes"?}; psi tuples use G's indices.
Presentation presentation_from_json(const json& j, int max_order);
// {"subgroup", "omega"}; omega tuples use G's indices.
ModuleSide side_from_json(const json& j, const GroupRef& g);
// {"H", "A", "action", "beta"}
TwoGroupData two_group_from_json(const json& j, int max_order);

struct TYInput {
  GroupRef a;
  Cochain pi;  // on A wr Z/2
};
// {"A", "pi"}; pi tuples use the indices of A wr Z/2.
TYInput ty_from_json(const json& j, int max_order);
// {"A"} or a bare group spec.
GroupRef abelian_from_json(const json& j, int max_order);

// Inverse of presentation_from_json, up to the choice of subgroup generators.
json presentation_to_json(const Presentation& p);

// ---- reports ---------------------------------------------------------------

json group_summary(const GroupRef& g);
json elements_json(const GroupRef& g, const std::vector<int>& elems);

json validate_report(const Presentation& p, const ValidationReport& r);
json components_report(const Presentation& p, const std::vector<ComponentRecord>& cs,
                       const ModuleSide* other = nullptr);
json fusion_report(const Presentation& p, const FusionTable& t);
json grading_report(const Presentation& p, const Grading& gr);
json fiber_report(const Presentation& p, const std::vector<FiberFunctorDatum>& ds);
json equivalence_report(const Presentation& a, const Presentation& b, const std::optional<EquivalenceWitness>& w);
json cohomology_report(const GroupRef& g, int degree, const CohomologyResult& h, bool with_generators);
json ty_defect_json(const Presentation& p, const TYDefectReport& r);
json ty_build_report(const Presentation& p, const TYDefectReport& r, const std::vector<ComponentRecord>& cs,
                     const FusionTable& t);
json ty_classify_report(const GroupRef& a, const TYClassification& c);
json two_group_pi_report(const TwoGroupData& t, const TwoGroupPi& tp);
json two_rep_report(const TwoGroupData& t, const TwoRepDecomposition& d);

// Markdown renderings of the payloads above, keyed by command name.
std::string render_markdown(const std::string& command, const json& payload);

}  // namespace f2c
