#pragma once

#include <json.hpp>

#include "verify.hpp"

namespace hartogs {

using Json = nlohmann::json;

Json domain_to_json(const HartogsDomain& d);
HartogsDomain domain_from_json(const Json& j);

Json witness_to_json(const ExistenceWitness& w);

Json ellipsoid_map_to_json(const EllipsoidProperMap& m);
EllipsoidProperMap ellipsoid_map_from_json(const Json& j);

Json ellipsoid_aut_to_json(const EllipsoidAut& a);
EllipsoidAut ellipsoid_aut_from_json(const Json& j, const ExponentVec& p);

Json map_to_json(const HartogsProperMap& m);
HartogsProperMap map_from_json(const Json& j);

Json aut_to_json(const HartogsAut& a);
HartogsAut aut_from_json(const Json& j);

Json family_to_json(const AutFamilyInfo& f);

Json report_to_json(const VerificationReport& r);

// Points files: array of [re, im] pairs, split at index n into (z, w).
std::vector<ZW> points_from_json(const Json& j, int n, int m);
Json point_to_json(const ZW& pt);

} // namespace hartogs
