#pragma once

#include <json.hpp>

#include "ak/harmonic.hpp"

namespace ak::report {

using nlohmann::ordered_json;

ordered_json to_json(const harmonic::HodgeReport& rep);
std::string to_markdown(const harmonic::HodgeReport& rep);

ordered_json identities_to_json(const opcalc::IdentitySuiteReport& rep);
std::string identities_to_markdown(const opcalc::IdentitySuiteReport& rep);

ordered_json membership_to_json(const harmonic::MembershipResult& r);
ordered_json hlc_to_json(const harmonic::HlcReport& rep);
std::string hlc_to_markdown(const harmonic::HlcReport& rep);

ordered_json root_to_json(const exact::RealAlgebraicRoot& r);

// map of monomial key -> {"re": "...", "im": "..."}
ordered_json form_to_json(const exterior::FormValue& f);

ordered_json decomposition_to_json(const harmonic::FormDecomposition& d);
std::string decomposition_to_markdown(const harmonic::FormDecomposition& d);

}  // namespace ak::report
