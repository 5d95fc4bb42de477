#pragma once

#include <string>
#include <vector>

#include "ak/manifold.hpp"

namespace ak::catalog {

using exact::ExactMatrix;
using exact::Rational;
using exterior::FormValue;

// Parsed manifest; parses to a validatable AKManifold or fails structurally.
struct ManifoldManifest {
    int schema = 1;
    std::string name;
    int dimension = 0;
    lie::LieAlgebraData brackets;
    FormValue omega;                 // degree-2
    ExactMatrix j;                   // column action
    std::string compact_quotient = "assumed";
    std::vector<std::string> annotations;
};

// Structural parse error with a JSON-pointer-style location.
class ManifestError : public std::runtime_error {
  public:
    ManifestError(std::string pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

  private:
    std::string pointer_;
};

// Strict schema: unknown keys rejected, rationals parsed exactly, bracket and
// omega terms require i < j, duplicate bracket keys rejected.
ManifoldManifest parse_manifest(const std::string& json_text);

std::string serialize_manifest(const ManifoldManifest& m);

structure::AKManifold build_manifold(const ManifoldManifest& m);

std::vector<std::string> builtin_names();
ManifoldManifest builtin_manifest(const std::string& name);  // throws on unknown name
structure::AKManifold builtin(const std::string& name);

}  // namespace ak::catalog
