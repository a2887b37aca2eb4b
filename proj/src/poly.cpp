#include "locsym/poly.hpp"

#include <algorithm>
#include <sstream>

#include "locsym/error.hpp"

namespace locsym {

char variable_name(Space space, int index) {
  static constexpr char plane[] = {'X', 'Y', 'Z'};
  static constexpr char line[] = {'s', 't'};
  return space == Space::Plane ? plane[index] : line[index];
}

Poly::Poly(Space space, const BigRational& constant) : space_(space) {
  if (constant != 0) terms_.emplace(Exponent{0, 0, 0}, constant);
}

Poly Poly::variable(Space space, int index) {
  Exponent e{0, 0, 0};
  e[index] = 1;
  return monomial(space, e, BigRational(1));
}

Poly Poly::monomial(Space space, const Exponent& exponent, const BigRational& coefficient) {
  Poly p(space);
  p.add_term(exponent, coefficient);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Poly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

Poly Poly::coefficient_in(int var, int k) const {
  Poly r(space_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

const BigRational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return terms_.begin()->second;
}

const Exponent& Poly::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading exponent of zero");
  return terms_.begin()->first;
}

BigRational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

Poly Poly::derivative(int var) const {
  Poly r(space_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

BigRational Poly::evaluate(std::span<const BigRational> point) const {
  BigRational sum(0);
  const int n = variable_count(space_);
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term *= locsym::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

Poly Poly::compose(std::span<const Poly> images) const {
  const int n = variable_count(space_);
  Space target = images.empty() ? space_ : images[0].space();
  // Cache powers of each image; degrees in scope are small.
  std::vector<std::vector<Poly>> powers(n);
  for (int i = 0; i < n; ++i) {
    int d = std::max(0, degree_in(i));
    powers[i].reserve(d + 1);
    powers[i].push_back(Poly(target, BigRational(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly term(target, c);
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term = term * powers[i][e[i]];
    r += term;
  }
  return r;
}

void Poly::add_term(const Exponent& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.space_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(space_, BigRational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool Poly::divide_exact(const Poly& divisor, Poly& quotient) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  quotient = Poly(space_);
  Poly rem = *this;
  const Exponent& le = divisor.leading_exponent();
  const BigRational& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponent& re = rem.leading_exponent();
    Exponent qe{re[0] - le[0], re[1] - le[1], re[2] - le[2]};
    if (qe[0] < 0 || qe[1] < 0 || qe[2] < 0) return false;
    Poly t = monomial(space_, qe, rem.leading_coefficient() / lc);
    quotient += t;
    rem -= t * divisor;
  }
  return true;
}

BigRational Poly::content() const {
  if (terms_.empty()) return BigRational(0);
  BigInt g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(abs(g), l);
}

namespace {

std::string monomial_string(Space space, const Exponent& e) {
  std::string out;
  for (int i = 0; i < variable_count(space); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(space, i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(space_, e);
    if (mono.empty()) {
      out << to_short_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else if (mag.get_den() == 1) {
      out << to_short_string(mag) << "*" << mono;
    } else {
      out << "(" << to_short_string(mag) << ")*" << mono;
    }
  }
  return out.str();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.space() != b.space()) return a.space() < b.space();
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

HomPoly::HomPoly(Poly p) : poly_(std::move(p)) {
  if (poly_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "homogeneous polynomial must be nonzero");
  if (!poly_.is_homogeneous())
    throw Error(ErrorKind::ValidationError, "polynomial is not homogeneous: " + poly_.to_string());
  degree_ = poly_.total_degree();
}

Poly normalize(const Poly& p, BigRational* scale) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
  BigRational s = p.content();
  if (p.leading_coefficient() < 0) s = -s;
  if (scale) *scale = s;
  Poly r = p;
  r *= BigRational(1) / s;
  return r;
}

HomPoly normalize(const HomPoly& p, BigRational* scale) {
  return HomPoly(normalize(p.poly(), scale));
}

}  // namespace locsym
