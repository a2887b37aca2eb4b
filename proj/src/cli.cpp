#include "locsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "locsym/error.hpp"
#include "locsym/milnor_k.hpp"
#include "locsym/numeric.hpp"
#include "locsym/poly_parser.hpp"
#include "locsym/random_configs.hpp"
#include "locsym/riemann_sphere.hpp"
#include "locsym/scene.hpp"
#include "locsym/surface_symbols.hpp"

namespace locsym {

namespace {

using nlohmann::json;

struct Options {
  std::string group, command;
  std::string scene_path, curve, point, at, functions, base_point;
  std::uint64_t seed = 20240611;
  bool json = false;
  double tol = 1e-8;
  std::string p = "0", q = "1/2", radius = "1/10", radii = "0.1,0.05,0.01";
  int random = 0;
};

class Command {
 public:
  Command(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int run();

 private:
  const Scene& scene() {
    if (!scene_) {
      if (o_.scene_path.empty()) throw Error(ErrorKind::ValidationError, "this command needs --scene");
      std::ifstream in(o_.scene_path);
      if (!in) throw Error(ErrorKind::ValidationError, "cannot read scene file " + o_.scene_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      scene_ = parse_scene(buffer.str());
    }
    return *scene_;
  }

  std::vector<FactoredFunction> functions(Space space, size_t min_count, size_t max_count) {
    if (scene().space != space)
      throw Error(ErrorKind::ValidationError,
                  std::string("this command needs space = ") + (space == Space::Line ? "P1" : "P2"));
    std::vector<FactoredFunction> fs;
    std::stringstream list(o_.functions);
    std::string name;
    while (std::getline(list, name, ','))
      if (!name.empty()) fs.push_back(scene().function(name));
    if (fs.size() < min_count || fs.size() > max_count)
      throw Error(ErrorKind::ValidationError,
                  "--functions needs " + std::to_string(min_count) +
                      (max_count != min_count ? " to " + std::to_string(max_count) : "") + " names");
    return fs;
  }

  const std::string& required(const std::string& value, const char* flag) {
    if (value.empty()) throw Error(ErrorKind::ValidationError, std::string("this command needs ") + flag);
    return value;
  }

  CurveParam curve_param() {
    const NamedCurve& c = scene().curve(required(o_.curve, "--curve"));
    return parametrize(c.curve, c.param);
  }

  int symbol();
  int check();
  int numeric();
  int random_weil();

  int print_value(const std::string& name, const std::string& where, const BigRational& v);
  int print_report(const ReciprocityReport& r);
  int print_hypothesis_failure(const std::string& name, const std::vector<std::string>& issues);
  int print_numeric(const std::vector<numeric::NumericReport>& reports);

  const Options& o_;
  std::ostream& out_;
  std::optional<Scene> scene_;
};

json fraction(const BigRational& v) { return json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}}; }

json report_json(const ReciprocityReport& r) {
  json sites = json::array();
  for (const auto& s : r.sites) sites.push_back(json{{"site", s.site}, {"value", fraction(s.value)}});
  return json{{"law", r.law},
              {"sites", sites},
              {"product", fraction(r.product)},
              {"hypotheses_ok", r.hypotheses_ok},
              {"diagnostics", r.diagnostics},
              {"pass", r.pass}};
}

double parse_real(const std::string& text) {
  try {
    return parse_rational(text).get_d();
  } catch (const Error&) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw Error(ErrorKind::ParseError, "not a number: '" + text + "'");
    return v;
  }
}

BigRational parse_affine(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    // Decimal input such as 0.5, converted exactly.
    size_t dot = text.find('.');
    if (dot == std::string::npos) throw;
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return make_rational(parse_rational(digits).get_num(), den);
  }
}

std::string complex_text(numeric::Complex z) {
  std::ostringstream s;
  s << std::setprecision(12) << "(" << z.real() << ", " << z.imag() << ")";
  return s.str();
}

int Command::print_value(const std::string& name, const std::string& where, const BigRational& v) {
  if (o_.json) {
    out_ << json{{"symbol", name}, {"site", where}, {"value", fraction(v)}}.dump(2) << "\n";
  } else {
    out_ << "symbol " << name << " at " << where << ": " << to_fraction_string(v) << "\n";
  }
  return 0;
}

int Command::print_hypothesis_failure(const std::string& name, const std::vector<std::string>& issues) {
  if (o_.json) {
    out_ << json{{"symbol", name}, {"hypotheses_ok", false}, {"diagnostics", issues}}.dump(2) << "\n";
  } else {
    out_ << "symbol " << name << ": hypotheses violated\n";
    for (const auto& i : issues) out_ << "  - " << i << "\n";
  }
  return 2;
}

int Command::print_report(const ReciprocityReport& r) {
  if (o_.json) {
    out_ << report_json(r).dump(2) << "\n";
    return r.exit_code();
  }
  out_ << "law: " << r.law << "\n";
  size_t width = 0;
  for (const auto& s : r.sites) width = std::max(width, s.site.size());
  for (const auto& s : r.sites)
    out_ << "  " << std::left << std::setw(static_cast<int>(width)) << s.site << "  " << to_fraction_string(s.value)
         << "\n";
  out_ << "product: " << to_fraction_string(r.product) << "\n";
  out_ << "hypotheses: " << (r.hypotheses_ok ? "ok" : "violated") << "\n";
  for (const auto& d : r.diagnostics) out_ << "  - " << d << "\n";
  out_ << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.exit_code();
}

int Command::print_numeric(const std::vector<numeric::NumericReport>& reports) {
  bool pass = true;
  json all = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    if (o_.json) {
      json rows = json::array();
      for (const auto& row : r.rows)
        rows.push_back(json{{"label", row.label},
                            {"numeric", {row.numeric.real(), row.numeric.imag()}},
                            {"expected", {row.expected.real(), row.expected.imag()}},
                            {"deviation", row.deviation}});
      all.push_back(json{{"name", r.name}, {"rows", rows}, {"max_deviation", r.max_deviation}, {"pass", r.pass}});
      continue;
    }
    out_ << "numeric: " << r.name << "\n";
    for (const auto& row : r.rows)
      out_ << "  " << row.label << "  numeric " << complex_text(row.numeric) << "  expected "
           << complex_text(row.expected) << "  deviation " << std::scientific << std::setprecision(3)
           << row.deviation << std::defaultfloat << "\n";
    out_ << "max deviation: " << std::scientific << std::setprecision(3) << r.max_deviation << std::defaultfloat
         << "\n";
    out_ << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  if (o_.json) out_ << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return pass ? 0 : 1;
}

int Command::symbol() {
  const std::string& c = o_.command;
  if (c == "tame") {
    auto fs = functions(Space::Line, 2, 2);
    ProjPoint1 P = scene().point1(required(!o_.at.empty() ? o_.at : o_.point, "--at"));
    return print_value("tame", P.to_string(), tame_symbol(fs[0], fs[1], P));
  }
  if (c == "bilocal" && scene().space == Space::Line) {
    auto fs = functions(Space::Line, 2, 2);
    ProjPoint1 P = scene().point1(required(o_.point, "--point"));
    ProjPoint1 Q = scene().point1(required(o_.base_point, "--base-point"));
    return print_value("bilocal", P.to_string() + " base " + Q.to_string(), bilocal_symbol(fs[0], fs[1], P, Q));
  }
  static const std::vector<std::string> surface{"bilocal", "parshin", "parshin2", "four1", "four2", "ksym", "sign"};
  if (std::find(surface.begin(), surface.end(), c) == surface.end())
    throw Error(ErrorKind::ValidationError, "unknown symbol '" + c + "'");
  const bool three = c == "parshin" || c == "parshin2";
  auto fs = functions(Space::Plane, c == "bilocal" ? 3 : (three ? 3 : 4), three ? 3 : 4);
  CurveParam param = curve_param();
  ProjPoint2 P = scene().point2(required(!o_.point.empty() ? o_.point : o_.at, "--point"));
  auto issues = normal_crossing_issues_at(fs, param, P);
  if (!issues.empty()) return print_hypothesis_failure(c, issues);
  std::optional<ProjPoint2> Q;
  if (c == "bilocal") Q = scene().point2(required(o_.base_point, "--base-point"));
  LocalData data = site_data(fs, param, P, Q);
  const std::string where = site_label(param.curve(), P);
  if (c == "bilocal") {
    const ProjPoint1 q = param.preimage(*Q);
    BigRational v = fs.size() == 3 ? parshin_refinement(data, q) : four_bilocal(data, q);
    return print_value("bilocal", where + " base " + Q->to_string(), v);
  }
  if (c == "parshin") return print_value(c, where, parshin_symbol(data));
  if (c == "parshin2") return print_value(c, where, parshin_symbol_second(data));
  if (c == "four1") return print_value(c, where, four_symbol_first(data));
  if (c == "four2") return print_value(c, where, four_symbol_second(data));
  if (c == "ksym") return print_value(c, where, k_symbol_first(data));
  return print_value(c, where, sign_symbol_first(data));
}

int Command::random_weil() {
  Rng rng(o_.seed);
  int worst = 0;
  json all = json::array();
  for (int i = 0; i < o_.random; ++i) {
    P1Function f = random_split_function(rng), g = random_split_function(rng);
    ReciprocityReport r = check_weil(f, g);
    r.law = "weil f=" + f.to_string() + " g=" + g.to_string();
    if (o_.json) {
      all.push_back(report_json(r));
      worst = std::max(worst, r.exit_code());
    } else {
      worst = std::max(worst, print_report(r));
    }
  }
  if (o_.json) out_ << all.dump(2) << "\n";
  return worst;
}

int Command::check() {
  const std::string& c = o_.command;
  if (c == "weil") {
    if (o_.random > 0) return random_weil();
    auto fs = functions(Space::Line, 2, 2);
    return print_report(check_weil(fs[0], fs[1]));
  }
  if (c == "parshin-first" || c == "four-first") {
    const bool three = c == "parshin-first";
    auto fs = functions(Space::Plane, three ? 3 : 4, three ? 3 : 4);
    CurveParam param = curve_param();
    if (!o_.base_point.empty()) {
      ProjPoint2 Q = scene().point2(o_.base_point);
      return print_report(three ? check_parshin_bilocal(fs, param, Q) : check_four_bilocal(fs, param, Q));
    }
    return print_report(three ? check_parshin_first(fs, param) : check_four_first(fs, param));
  }
  if (c == "parshin-second") {
    auto fs = functions(Space::Plane, 3, 3);
    return print_report(check_parshin_second(fs, scene().point2(required(o_.point, "--point"))));
  }
  if (c == "four-second") {
    auto fs = functions(Space::Plane, 4, 4);
    return print_report(check_four_second(fs, scene().point2(required(o_.point, "--point"))));
  }
  if (c == "sign" || c == "ksym") {
    auto fs = functions(Space::Plane, 4, 4);
    if (!o_.curve.empty()) {
      CurveParam param = curve_param();
      return print_report(c == "sign" ? check_sign_first(fs, param) : check_k_first(fs, param));
    }
    ProjPoint2 P = scene().point2(required(o_.point, "--curve or --point"));
    return print_report(c == "sign" ? check_sign_second(fs, P) : check_k_second(fs, P));
  }
  throw Error(ErrorKind::ValidationError, "unknown check '" + c + "'");
}

int Command::numeric() {
  const std::string& c = o_.command;
  auto pair = [&](const char* default1, const char* default2) {
    if (!o_.functions.empty()) return functions(Space::Line, 2, 2);
    return std::vector<FactoredFunction>{parse_function(default1, Space::Line), parse_function(default2, Space::Line)};
  };
  if (c == "verify-bilocal") {
    auto fs = pair("s/t", "(s - t)/t");
    return print_numeric({numeric::verify_bilocal(fs[0], fs[1], parse_affine(o_.p), parse_affine(o_.q),
                                                  parse_real(o_.radius), o_.tol)});
  }
  if (c == "verify-limit") {
    auto fs = pair("s/t", "s*(s + t)/t^2");
    std::vector<double> radii;
    std::stringstream list(o_.radii);
    std::string item;
    while (std::getline(list, item, ','))
      if (!item.empty()) radii.push_back(parse_real(item));
    return print_numeric({numeric::verify_residue_limit(fs[0], fs[1], parse_affine(o_.p), radii, o_.tol)});
  }
  if (c == "verify-composition")
    return print_numeric({numeric::verify_homotopy(o_.tol), numeric::verify_composition(o_.tol),
                          numeric::verify_commutator(o_.tol)});
  throw Error(ErrorKind::ValidationError, "unknown numeric command '" + c + "'");
}

int Command::run() {
  if (o_.group == "symbol") return symbol();
  if (o_.group == "check") return check();
  return numeric();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact local symbols on P1 and P2 and their reciprocity laws"};
  app.name("locsym");
  app.add_option("group", o.group, "symbol | check | numeric")
      ->required()
      ->check(CLI::IsMember({"symbol", "check", "numeric"}));
  app.add_option("command", o.command,
                 "symbol: tame bilocal parshin parshin2 four1 four2 ksym sign\n"
                 "check: weil parshin-first parshin-second four-first four-second sign ksym\n"
                 "numeric: verify-bilocal verify-limit verify-composition")
      ->required();
  app.add_option("--scene", o.scene_path, "scene file");
  app.add_option("--curve", o.curve, "curve name");
  app.add_option("--point", o.point, "point name");
  app.add_option("--at", o.at, "point name for symbol tame");
  app.add_option("--functions", o.functions, "comma separated function names");
  app.add_option("--base-point", o.base_point, "base point name for bi-local symbols");
  app.add_option("--seed", o.seed, "seed for --random");
  app.add_option("--random", o.random, "check weil on this many seeded random pairs");
  app.add_flag("--json", o.json, "structured output");
  app.add_option("--tol", o.tol, "numeric integration tolerance");
  app.add_option("--p", o.p, "affine point P for numeric commands");
  app.add_option("--q", o.q, "affine base point Q for numeric commands");
  app.add_option("--radius", o.radius, "loop radius for verify-bilocal");
  app.add_option("--radii", o.radii, "comma separated radii for verify-limit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }

  try {
    Command cmd(o, out);
    return cmd.run();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::HypothesisViolation ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace locsym
