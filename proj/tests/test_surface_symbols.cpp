#include "helpers.hpp"

#include "locsym/random_configs.hpp"
#include "locsym/riemann_sphere.hpp"
#include "locsym/surface_symbols.hpp"

using namespace testing;

namespace {

ProjPoint2 pt(long x, long y, long z) { return ProjPoint2{x, y, z}; }
CurveParam line_x() { return parametrize(PlaneCurve(plane_poly("X"))); }

std::vector<SurfaceFunction> config_a() { return {p2("X/Z"), p2("Y/Z"), p2("(Y + 2Z)/Z")}; }
std::vector<SurfaceFunction> config_b() { return {p2("X/Z"), p2("Y/Z"), p2("X/(X + Y + Z)"), p2("(Y + 2Z)/Z")}; }

LocalData synthetic(std::vector<long> a, std::vector<long> b) {
  LocalData d;
  d.preimage = ProjPoint1{0, 1};
  for (long bk : b) d.restricted.push_back(p1("s/t").pow(bk));
  d.a = std::move(a);
  d.b = std::move(b);
  return d;
}

// Merges data for f and f' into data for f * f' at position i.
LocalData multiply_entry(const LocalData& d, int i, int j) {
  LocalData out = d;
  out.a[i] += d.a[j];
  out.b[i] += d.b[j];
  out.restricted[i] = d.restricted[i] * d.restricted[j];
  return out;
}

}  // namespace

TEST_CASE("membrane limits") {
  CHECK(membrane_limit_11(synthetic({1, 0}, {0, 1})).coefficient == 0);
  CHECK(membrane_limit_11(synthetic({1, 2}, {3, 4})).coefficient == 6);
  CHECK(membrane_limit_11_antisymmetric(synthetic({2, 2}, {5, 5})) == 0);
  CHECK(membrane_limit_12(synthetic({1, 1, 1}, {1, 0, 0})).value == -1);
  CHECK(membrane_limit_12(synthetic({3, 2, 1}, {1, 5, 7})).value == 1);
  CHECK(membrane_limit_12(synthetic({0, 1, 1}, {1, 1, 1})).value == -1);
  CHECK(membrane_limit_12(synthetic({0, 1, 1}, {1, 1, 1})).coefficient == 1);
  CHECK(membrane_limit_21(synthetic({0, 1, 1}, {1, 1, 1}), ProjPoint1{1, 1}).value == 1);
  CHECK(membrane_limit_22(synthetic({1, 0, 1, 1}, {1, 1, 1, 1}), ProjPoint1{1, 1}).value == 1);
}

TEST_CASE("membrane limits on config A") {
  auto d = site_data(config_a(), line_x(), pt(0, 0, 1), pt(0, 1, 1));
  // Restrictions s/t and (s+2t)/t with orders 1 and 0 at [0:1]: the
  // bi-local symbol against [1:1] is (1/2) / (1/3), then raised to -a1 = -1.
  BigRational bl = bilocal_symbol(d.restricted[1], d.restricted[2], d.preimage, ProjPoint1{1, 1});
  CHECK(bl == q(3, 2));
  CHECK(membrane_limit_21(d, ProjPoint1{1, 1}).value == q(2, 3));
}

TEST_CASE("Parshin symbol on config A") {
  auto param = line_x();
  CHECK(parshin_symbol(site_data(config_a(), param, pt(0, 0, 1))) == 2);
  CHECK(parshin_symbol(site_data(config_a(), param, pt(0, -2, 1))) == q(-1, 2));
  auto inf = site_data(config_a(), param, pt(0, 1, 0));
  CHECK(parshin_K(inf) == 1);
  CHECK(parshin_D(inf) == std::vector<long>{0, 1, -1});
  CHECK(parshin_symbol(inf) == -1);

  auto r = check_parshin_first(config_a(), param);
  REQUIRE(r.sites.size() == 3);
  CHECK(r.sites[0].value == 2);
  CHECK(r.sites[1].value == -1);
  CHECK(r.sites[2].value == q(-1, 2));
  CHECK(r.pass);

  CHECK(check_parshin_first({p2("X/Z"), p2("Y/Z"), p2("(Y + 3Z)/Z")}, param).pass);
  CHECK(check_parshin_first({p2("X/Z"), p2("(Y + 2Z)/Z"), p2("(Y + 2Z)/Z")}, param).pass);
}

TEST_CASE("Parshin refinement on config A") {
  auto param = line_x();
  ProjPoint2 Q = pt(0, 1, 1);
  ProjPoint1 q1 = param.preimage(Q);
  CHECK(parshin_refinement(site_data(config_a(), param, pt(0, 0, 1), Q), q1) == q(2, 3));
  auto r = check_parshin_bilocal(config_a(), param, Q);
  REQUIRE(r.sites.size() == 3);
  CHECK(r.sites[0].value == q(2, 3));
  CHECK(r.product == 1);
  auto zero = synthetic({0, 0, 0}, {1, -1, 2});
  CHECK(parshin_refinement(zero, ProjPoint1{1, 1}) == 1);
}

TEST_CASE("second Parshin symbol") {
  auto param = line_x();
  CHECK(parshin_symbol_second(site_data(config_a(), param, pt(0, 0, 1))) == q(1, 2));
  CHECK(parshin_symbol_second(site_data(config_a(), param, pt(0, 1, 0))) == -1);
  CHECK(parshin_symbol_second(synthetic({0, 0, 0}, {0, 0, 0})) == 1);

  auto r = check_parshin_second({p2("X/Z"), p2("Y/Z"), p2("(X + Y + 2Z)/Z")}, pt(0, 0, 1));
  REQUIRE(r.sites.size() == 2);
  CHECK(r.sites[0].value * r.sites[1].value == 1);
  CHECK(r.sites[0].site == "X @ [0:0:1]");
  CHECK(r.sites[0].value == 2);
  CHECK(r.sites[1].value == q(1, 2));
  CHECK(r.pass);

  auto empty = check_parshin_second(config_a(), pt(1, 1, 1));
  CHECK(empty.sites.empty());
  CHECK(empty.pass);

  auto concurrent = check_parshin_second({p2("X/Z"), p2("Y/Z"), p2("(X + Y)/Z")}, pt(0, 0, 1));
  CHECK(concurrent.sites.size() == 3);
  CHECK(concurrent.pass);
}

TEST_CASE("4-function symbols on config B") {
  auto param = line_x();
  auto d = site_data(config_b(), param, pt(0, 0, 1));
  CHECK(d.a == std::vector<long>{1, 0, 1, 0});
  CHECK(d.b == std::vector<long>{0, 1, 0, 0});
  CHECK(four_symbol_first(d) == 2);
  CHECK(four_symbol_first(select(d, {1, 0, 2, 3})) == q(1, 2));
  CHECK(four_symbol_first(synthetic({1, 2, 0, 0}, {3, 1, 0, 0})) == 1);
  CHECK(riemann_symmetry_check(d));

  auto r = check_four_first(config_b(), param);
  CHECK(r.sites.size() == 4);
  CHECK(r.pass);

  // With c = a + b = (1,1,1,0): M34 = 0 and M12 = 1, so the bracket is
  // 1 / (g3^{c4} / g4^{c3}) = g4, and the symbol is its inverse 1/g4(P).
  CHECK(four_symbol_second(d) == q(1, 2));
  CHECK(four_symbol_second(synthetic({1, -1, 0, 0}, {-1, 1, 0, 0})) == 1);

  auto second = check_four_second(config_b(), pt(0, 0, 1));
  REQUIRE(second.sites.size() == 2);
  CHECK(second.pass);
  CHECK(check_four_second(config_b(), pt(1, 1, 1)).sites.empty());
}

TEST_CASE("4-function bi-local symbol on config B") {
  auto param = line_x();
  ProjPoint2 Q = pt(0, 1, 1);
  auto r = check_four_bilocal(config_b(), param, Q);
  CHECK(r.product == 1);
  auto d = site_data(config_b(), param, pt(0, 0, 1), Q);
  // Closed form at Q: 1 / (g4(Q))^{-1} with g4 = (s+2t)/t = 3 at [1:1].
  CHECK(four_bilocal(d, param.preimage(Q)) == q(2, 3));
  CHECK(four_bilocal(synthetic({0, 0, 0, 0}, {2, 1, 1, 3}), ProjPoint1{1, 1}) == 1);
  // With a2 = a4 = 0 the limit {g2,g4}^{-a1 a3} survives; here it is the
  // sign (-1)^L with L = M12 * M34 = 1 * 3.
  CHECK(four_bilocal(synthetic({1, 0, 1, 0}, {2, 1, 1, 3}), ProjPoint1{1, 1}) == -1);
}

TEST_CASE("symbols at points on no other component are trivial") {
  auto param = line_x();
  for (long u : {3L, 5L, -7L}) {
    ProjPoint2 P = param.point_at(ProjPoint1{u, 1});
    auto d = site_data(config_b(), param, P);
    CHECK(parshin_symbol(select(d, {0, 1, 2})) == 1);
    CHECK(four_symbol_first(d) == 1);
    CHECK(four_symbol_second(d) == 1);
  }
}

TEST_CASE("property: uniformizer independence") {
  Rng rng(41);
  int done = 0;
  while (done < 40) {
    Arrangement arr = random_arrangement(rng, 6, 4);
    CurveParam param = parametrize(arr.curve);
    std::vector<ProjPoint2> sites;
    try {
      sites = enumerate_sites(arr.functions, param);
    } catch (const Error&) {
      continue;
    }
    for (const auto& P : sites) {
      std::vector<BigRational> parshin, first, second;
      for (int skip = 0; skip < 3; ++skip) {
        LocalData d = site_data(arr.functions, param, P, std::nullopt, skip);
        parshin.push_back(parshin_symbol(select(d, {0, 1, 2})));
        first.push_back(four_symbol_first(d));
        second.push_back(four_symbol_second(d));
      }
      for (int k = 1; k < 3; ++k) {
        CHECK(parshin[k] == parshin[0]);
        CHECK(first[k] == first[0]);
        CHECK(second[k] == second[0]);
      }
    }
    ++done;
  }
}

TEST_CASE("property: refinements match closed forms on random local data") {
  Rng rng(42);
  ProjPoint1 q1{1, 1};
  for (int i = 0; i < 300; ++i) {
    LocalData d = random_local_data(rng, 4);
    BigRational pr = parshin_refinement(d, q1);
    CHECK(pr == parshin_symbol(d) / restricted_monomial_at(d, parshin_D(d), q1));
    CHECK_NOTHROW(four_bilocal(d, q1));
    CHECK(parshin_symbol_second(d) * parshin_symbol(d) == 1);
    CHECK(riemann_symmetry_check(d));
  }
}

TEST_CASE("property: Parshin symbol is multiplicative and alternating") {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    LocalData d = random_local_data(rng, 4);
    // Position 0 holds f * f' where f' is entry 3.
    LocalData prod = multiply_entry(d, 0, 3);
    CHECK(parshin_symbol(select(prod, {0, 1, 2})) ==
          parshin_symbol(select(d, {0, 1, 2})) * parshin_symbol(select(d, {3, 1, 2})));
    BigRational v = parshin_symbol(select(d, {0, 1, 2}));
    CHECK(parshin_symbol(select(d, {1, 0, 2})) * v == 1);
    CHECK(parshin_symbol(select(d, {0, 2, 1})) * v == 1);
    CHECK(parshin_symbol(select(d, {2, 0, 1})) == v);
  }
}

TEST_CASE("property: first-type reciprocity on random arrangements") {
  Rng rng(44);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 80; ++i) {
    Arrangement arr = random_arrangement(rng, 6, 4);
    CurveParam param = parametrize(arr.curve);
    auto pr = check_parshin_first({arr.functions[0], arr.functions[1], arr.functions[2]}, param);
    auto fr = check_four_first(arr.functions, param);
    if (!fr.hypotheses_ok) continue;
    CHECK(pr.product == 1);
    CHECK(fr.product == 1);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("property: base-point independence of bi-local products") {
  Rng rng(45);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 40; ++i) {
    Arrangement arr = random_arrangement(rng, 6, 4);
    CurveParam param = parametrize(arr.curve);
    std::vector<ProjPoint2> sites;
    try {
      sites = enumerate_sites(arr.functions, param);
    } catch (const Error&) {
      continue;
    }
    if (!validate_normal_crossings(arr.functions, param).empty()) continue;
    std::vector<ProjPoint2> bases;
    for (long u = 1; bases.size() < 2; ++u) {
      ProjPoint2 Q = param.point_at(ProjPoint1{u, 7});
      if (std::find(sites.begin(), sites.end(), Q) == sites.end()) bases.push_back(Q);
    }
    std::vector<SurfaceFunction> three{arr.functions[0], arr.functions[1], arr.functions[2]};
    for (const auto& Q : bases) {
      CHECK(check_parshin_bilocal(three, param, Q).product == 1);
      CHECK(check_four_bilocal(arr.functions, param, Q).product == 1);
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("property: second-type reciprocity through a common point") {
  Rng rng(46);
  ProjPoint2 P = pt(1, -1, 2);
  for (int i = 0; i < 60; ++i) {
    Arrangement arr = random_arrangement_through(rng, P, 3, 2, 4);
    std::vector<SurfaceFunction> three{arr.functions[0], arr.functions[1], arr.functions[2]};
    auto pr = check_parshin_second(three, P);
    auto fr = check_four_second(arr.functions, P);
    CHECK(pr.hypotheses_ok);
    CHECK(pr.product == 1);
    CHECK(fr.product == 1);
  }
}
