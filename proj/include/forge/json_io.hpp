#ifndef FORGE_JSON_IO_HPP
#define FORGE_JSON_IO_HPP

#include <json.hpp>

#include "forge/extension.hpp"
#include "forge/group.hpp"
#include "forge/hilbert.hpp"
#include "forge/lattice.hpp"
#include "forge/numfield.hpp"
#include "forge/outer.hpp"

namespace forge {

using nlohmann::json;

// Group spec: {"points": n, "generators": [[...]]} or {"table": [[...]]}
GroupPtr group_from_json(const json& j, const RunConfig& cfg = default_config());
json group_summary_json(const GroupPtr& g);

// {"elements": [indices]}
Subgroup subgroup_from_json(const GroupPtr& g, const json& j);
json subgroup_to_json(const Subgroup& s);

// {"gamma": group, "target": group, "reps": {"<gamma index>": [images], ...}};
// representatives may be given on a generating set and are completed by
// breadth-first products (sound: completion changes representatives only by
// the inner ambiguity they already carry)
OuterAction outer_action_from_json(const json& j, const RunConfig& cfg = default_config());

json filtration_to_json(const Filtration& f);

// {"total": group, "kernel_elements": [indices], } or {"total": group,
// "proj_images": [...]} (kernel inferred as the projection kernel)
GroupExtension extension_from_json(const json& j, const RunConfig& cfg = default_config());

json splitting_to_json(const Splitting& s);
json cocycle_to_json(const Cocycle& c);
std::vector<int> cocycle_values_from_json(const json& j, int gamma_order);

// {"ambient_rank": m, "relations": [[col], ...], "group": group,
//  "action": {"<element index>": [[row], ...], ...}}
LatticePtr lattice_from_json(const json& j, const RunConfig& cfg = default_config());
json lattice_to_json(const GaloisLattice& m);

IntMat intmat_from_json(const json& j);
json intmat_to_json(const IntMat& m);

// rationals are "num/den" strings (or plain integers)
Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

PolyQ poly_from_json(const json& j); // coefficient array, constant first
json poly_to_json(const PolyQ& p);

Place place_from_json(const json& j); // "inf" or a prime integer
json place_to_json(const Place& v);

ThetaSpec theta_from_json(const json& j);

json certificate_to_json(const NormCertificate& c);

} // namespace forge

#endif
