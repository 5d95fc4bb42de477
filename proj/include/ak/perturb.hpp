#pragma once

#include "ak/catalog.hpp"

namespace ak::perturb {

// Deterministic compatible perturbation of a catalog manifold: J is conjugated
// by a random rational symplectic transvection product S (so S J S^{-1} stays
// omega-compatible and g stays SPD) and omega is scaled by a random positive
// rational. The algebra and the closedness of omega are untouched.
catalog::ManifoldManifest perturbed_manifest(const catalog::ManifoldManifest& base, unsigned seed);

structure::AKManifold perturbed(const std::string& builtin_name, unsigned seed);

}  // namespace ak::perturb
