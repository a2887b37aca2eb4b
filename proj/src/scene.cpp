#include "locsym/scene.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "locsym/error.hpp"
#include "locsym/poly_parser.hpp"

namespace locsym {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Entry {
  int line;
  std::string name;
  std::string value;
};

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.detail());
  }
}

std::array<Poly, 3> parse_param(int line, std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail_at(line, "param must look like [F1 : F2 : F3]");
  text = text.substr(1, text.size() - 2);
  std::array<Poly, 3> forms;
  for (int i = 0; i < 3; ++i) {
    size_t colon = text.find(':');
    if ((i < 2) != (colon != std::string_view::npos)) fail_at(line, "param needs exactly three components");
    forms[i] = parse_poly(trim(text.substr(0, colon)), Space::Line);
    if (colon != std::string_view::npos) text = text.substr(colon + 1);
  }
  return forms;
}

}  // namespace

const FactoredFunction& Scene::function(std::string_view name) const {
  for (const auto& f : functions)
    if (f.name == name) return f.function;
  throw Error(ErrorKind::ValidationError, "unknown function '" + std::string(name) + "'");
}

const NamedCurve& Scene::curve(std::string_view name) const {
  for (const auto& c : curves)
    if (c.name == name) return c;
  throw Error(ErrorKind::ValidationError, "unknown curve '" + std::string(name) + "'");
}

ProjPoint1 Scene::point1(std::string_view name) const {
  for (const auto& p : points)
    if (p.name == name) {
      if (p.coords.size() != 2) throw Error(ErrorKind::ValidationError, "point '" + p.name + "' is not on P1");
      return ProjPoint1(std::span<const BigRational>(p.coords));
    }
  throw Error(ErrorKind::ValidationError, "unknown point '" + std::string(name) + "'");
}

ProjPoint2 Scene::point2(std::string_view name) const {
  for (const auto& p : points)
    if (p.name == name) {
      if (p.coords.size() != 3) throw Error(ErrorKind::ValidationError, "point '" + p.name + "' is not on P2");
      return ProjPoint2(std::span<const BigRational>(p.coords));
    }
  throw Error(ErrorKind::ValidationError, "unknown point '" + std::string(name) + "'");
}

Scene parse_scene(std::string_view text) {
  Scene scene;
  std::vector<Entry> functions, curves, points;
  std::string section;
  bool have_space = false;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[' && s.back() == ']') {
      section = std::string(trim(s.substr(1, s.size() - 2)));
      if (section != "functions" && section != "curves" && section != "points" && section != "trust")
        fail_at(line, "unknown section [" + section + "]");
      continue;
    }
    if (section == "trust") {
      if (!valid_name(s)) fail_at(line, "invalid name '" + std::string(s) + "'");
      scene.trust_irreducible.emplace_back(s);
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string_view::npos) fail_at(line, "expected 'name = value'");
    std::string name(trim(s.substr(0, eq)));
    std::string value(trim(s.substr(eq + 1)));
    if (section.empty()) {
      if (name != "space") fail_at(line, "only 'space' may appear before the first section");
      if (value == "P1") scene.space = Space::Line;
      else if (value == "P2") scene.space = Space::Plane;
      else fail_at(line, "space must be P1 or P2");
      have_space = true;
      continue;
    }
    if (!valid_name(name)) fail_at(line, "invalid name '" + name + "'");
    if (!names.insert(name).second)
      throw Error(ErrorKind::ValidationError, "line " + std::to_string(line) + ": duplicate name '" + name + "'");
    (section == "functions" ? functions : section == "curves" ? curves : points).push_back({line, name, value});
  }
  if (!have_space) fail_at(1, "missing 'space = P1' or 'space = P2'");
  auto trusted = [&](const std::string& n) {
    return std::find(scene.trust_irreducible.begin(), scene.trust_irreducible.end(), n) !=
           scene.trust_irreducible.end();
  };
  for (const auto& n : scene.trust_irreducible)
    if (!names.count(n)) throw Error(ErrorKind::ValidationError, "trusted name '" + n + "' is not defined");

  for (const auto& e : functions)
    scene.functions.push_back(
        {e.name, at_line(e.line, [&] { return parse_function(e.value, scene.space, trusted(e.name)); })});
  for (const auto& e : curves) {
    if (scene.space != Space::Plane) fail_at(e.line, "curves need space = P2");
    std::string_view v = e.value;
    std::optional<std::array<Poly, 3>> param;
    if (auto semi = v.find(';'); semi != std::string_view::npos) {
      std::string_view rest = trim(v.substr(semi + 1));
      v = trim(v.substr(0, semi));
      if (rest.substr(0, 5) != "param") fail_at(e.line, "expected 'param = [...]' after ';'");
      rest = trim(rest.substr(5));
      if (rest.empty() || rest.front() != '=') fail_at(e.line, "expected '=' after param");
      param = parse_param(e.line, rest.substr(1));
    }
    PlaneCurve curve = at_line(e.line, [&] { return PlaneCurve(parse_poly(v, Space::Plane), trusted(e.name)); });
    if (param) at_line(e.line, [&] { return CurveParam(curve, *param); });
    scene.curves.push_back({e.name, std::move(curve), param});
  }
  const size_t dim = scene.space == Space::Line ? 2 : 3;
  for (const auto& e : points) {
    auto coords = at_line(e.line, [&] { return parse_coordinates(e.value); });
    if (coords.size() != dim) fail_at(e.line, "point needs " + std::to_string(dim) + " coordinates");
    if (std::all_of(coords.begin(), coords.end(), [](const BigRational& c) { return c == 0; }))
      fail_at(e.line, "point with all coordinates zero");
    scene.points.push_back({e.name, std::move(coords)});
  }
  return scene;
}

std::string serialize_scene(const Scene& scene) {
  std::ostringstream out;
  out << "space = " << (scene.space == Space::Line ? "P1" : "P2") << "\n";
  out << "[functions]\n";
  for (const auto& f : scene.functions) out << f.name << " = " << f.function.to_string() << "\n";
  if (!scene.curves.empty()) {
    out << "[curves]\n";
    for (const auto& c : scene.curves) {
      out << c.name << " = " << c.curve.to_string();
      if (c.param)
        out << " ; param = [" << (*c.param)[0].to_string() << " : " << (*c.param)[1].to_string() << " : "
            << (*c.param)[2].to_string() << "]";
      out << "\n";
    }
  }
  if (!scene.points.empty()) {
    out << "[points]\n";
    for (const auto& p : scene.points) {
      out << p.name << " = [";
      for (size_t i = 0; i < p.coords.size(); ++i) out << (i ? ":" : "") << to_short_string(p.coords[i]);
      out << "]\n";
    }
  }
  if (!scene.trust_irreducible.empty()) {
    out << "[trust]\n";
    for (const auto& n : scene.trust_irreducible) out << n << "\n";
  }
  return out.str();
}

}  // namespace locsym
