#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locsym/factored.hpp"
#include "locsym/plane_geometry.hpp"

namespace locsym {

struct NamedFunction {
  std::string name;
  FactoredFunction function;

  friend bool operator==(const NamedFunction&, const NamedFunction&) = default;
};

struct NamedCurve {
  std::string name;
  PlaneCurve curve;
  std::optional<std::array<Poly, 3>> param;

  friend bool operator==(const NamedCurve&, const NamedCurve&) = default;
};

struct NamedPoint {
  std::string name;
  std::vector<BigRational> coords;

  friend bool operator==(const NamedPoint&, const NamedPoint&) = default;
};

/// A text document:
///
///   space = P2
///   [functions]
///   f1 = X/Z
///   f3 = (Y + 2Z)^1 * (Z)^-1
///   [curves]
///   C = X
///   D = X*Z - Y^2 ; param = [s^2 : s*t : t^2]
///   [points]
///   P0 = [0:0:1]
///   [trust]
///   f7
///
/// '#' starts a comment. Names listed under [trust] skip the irreducibility
/// test of their factors (functions) or polynomial (curves).
struct Scene {
  Space space = Space::Plane;
  std::vector<NamedFunction> functions;
  std::vector<NamedCurve> curves;
  std::vector<NamedPoint> points;
  std::vector<std::string> trust_irreducible;

  const FactoredFunction& function(std::string_view name) const;
  const NamedCurve& curve(std::string_view name) const;
  ProjPoint1 point1(std::string_view name) const;
  ProjPoint2 point2(std::string_view name) const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Throws ParseError (with the line number) or ValidationError.
Scene parse_scene(std::string_view text);

/// Text that parses back to an equal scene.
std::string serialize_scene(const Scene& scene);

}  // namespace locsym
