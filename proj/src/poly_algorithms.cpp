#include "locsym/poly_algorithms.hpp"

#include <algorithm>
#include <map>

#include "locsym/error.hpp"

namespace locsym {

// ---------------------------------------------------------------------------
// Projective points

template <int N>
ProjectivePoint<N>::ProjectivePoint(std::span<const BigRational> coords) {
  if (static_cast<int>(coords.size()) != N)
    throw Error(ErrorKind::ValidationError, "wrong number of point coordinates");
  BigInt l = 1;
  for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (int i = 0; i < N; ++i) {
    BigRational v = coords[i] * l;
    coords_[i] = v.get_num();
  }
  normalize_in_place();
}

template <int N>
ProjectivePoint<N>::ProjectivePoint(std::initializer_list<long> coords) {
  if (static_cast<int>(coords.size()) != N)
    throw Error(ErrorKind::ValidationError, "wrong number of point coordinates");
  int i = 0;
  for (long c : coords) coords_[i++] = c;
  normalize_in_place();
}

template <int N>
void ProjectivePoint<N>::normalize_in_place() {
  BigInt g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw Error(ErrorKind::ValidationError, "projective point with all coordinates zero");
  int first = 0;
  while (coords_[first] == 0) ++first;
  if (coords_[first] < 0) g = -g;
  for (auto& c : coords_) c /= g;
}

template <int N>
std::array<BigRational, N> ProjectivePoint<N>::rational_coords() const {
  std::array<BigRational, N> out;
  for (int i = 0; i < N; ++i) out[i] = BigRational(coords_[i]);
  return out;
}

template <int N>
std::string ProjectivePoint<N>::to_string() const {
  std::string out = "[";
  for (int i = 0; i < N; ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + "]";
}

template class ProjectivePoint<2>;
template class ProjectivePoint<3>;

// ---------------------------------------------------------------------------
// Univariate helpers over Q (dense, low degree first)

namespace {

using Dense = std::vector<BigRational>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_mod(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    BigRational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

// Binary form with no factor t, as a dense polynomial in s (t = 1).
Dense dehomogenize(const Poly& form) {
  Dense d(form.degree_in(0) + 1);
  for (const auto& [e, c] : form.terms()) d[e[0]] += c;
  trim(d);
  return d;
}

Poly homogenize(const Dense& d, int degree) {
  Poly p(Space::Line);
  for (size_t i = 0; i < d.size(); ++i)
    p.add_term({static_cast<int>(i), degree - static_cast<int>(i), 0}, d[i]);
  return p;
}

Poly strip_t(const Poly& form, int k) {
  Poly r(Space::Line);
  for (const auto& [e, c] : form.terms()) r.add_term({e[0], e[1] - k, 0}, c);
  return r;
}

BigRational eval_dense(const Dense& d, const BigRational& x) {
  BigRational v(0);
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * x + *it;
  return v;
}

Dense deflate(const Dense& d, const BigRational& root) {
  // Synthetic division by (z - root).
  Dense q(d.size() - 1);
  BigRational carry(0);
  for (size_t i = d.size(); i-- > 1;) {
    carry = carry * root + d[i];
    q[i - 1] = carry;
  }
  return q;
}

std::vector<BigInt> divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  BigInt p = 2;
  const BigInt bound = 1000000;
  while (p * p <= n && p <= bound) {
    if (n % p == 0) {
      int k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      factors.emplace_back(p, k);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (p * p <= n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error(ErrorKind::ValidationError, "coefficient too large to factor for root search");
    factors.emplace_back(n, 1);
  }
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [q, k] : factors) {
    size_t base = out.size();
    BigInt pw = 1;
    for (int j = 1; j <= k; ++j) {
      pw *= q;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

Poly line_restriction(const Poly& p, int dropped) {
  // Sets variable `dropped` of a plane polynomial to zero and maps the two
  // remaining variables, in order, to (s, t).
  std::array<Poly, 3> images{Poly(Space::Line), Poly(Space::Line), Poly(Space::Line)};
  int next = 0;
  for (int i = 0; i < 3; ++i)
    if (i != dropped) images[i] = Poly::variable(Space::Line, next++);
  return p.compose(images);
}

}  // namespace

// ---------------------------------------------------------------------------

Poly resultant(const Poly& p, const Poly& q, int var) {
  Space space = p.space();
  if (p.is_zero() || q.is_zero()) return Poly(space);
  const int m = p.degree_in(var), n = q.degree_in(var);
  const int size = m + n;
  if (size == 0) return Poly(space, BigRational(1));

  std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly(space)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[i][i + k] = p.coefficient_in(var, m - k);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) mat[n + j][j + k] = q.coefficient_in(var, n - k);

  // Fraction-free Bareiss elimination; every division below is exact.
  Poly prev(space, BigRational(1));
  bool negate = false;
  for (int k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (!mat[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly(space);
      std::swap(mat[k], mat[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Poly num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        Poly quot(space);
        if (!num.divide_exact(prev, quot))
          throw Error(ErrorKind::InternalInconsistency, "inexact Bareiss division");
        mat[i][j] = std::move(quot);
      }
      mat[i][k] = Poly(space);
    }
    prev = mat[k][k];
  }
  Poly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

Poly binary_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const int ka = a.min_degree_in(1), kb = b.min_degree_in(1);
  Dense g = dense_gcd(dehomogenize(strip_t(a, ka)), dehomogenize(strip_t(b, kb)));
  Poly result = homogenize(g, static_cast<int>(g.size()) - 1);
  const int k = std::min(ka, kb);
  if (k > 0) result = result * Poly::monomial(Space::Line, {0, k, 0}, BigRational(1));
  return normalize(result);
}

bool coprime(const HomPoly& a, const HomPoly& b) {
  if (a.space() != b.space()) throw Error(ErrorKind::ValidationError, "coprime: mixed spaces");
  if (a.degree() == 0 || b.degree() == 0) return true;
  if (a.space() == Space::Line) return binary_gcd(a.poly(), b.poly()).total_degree() == 0;
  // A common factor involves some variable v, and then res_v vanishes.
  for (int v = 0; v < 3; ++v) {
    if (a.poly().degree_in(v) <= 0 || b.poly().degree_in(v) <= 0) continue;
    if (resultant(a.poly(), b.poly(), v).is_zero()) return false;
  }
  return true;
}

int order_at(const Poly& form, const ProjPoint1& p) {
  if (form.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "order of the zero form");
  Poly linear = Poly::monomial(Space::Line, {1, 0, 0}, BigRational(p[1])) -
                Poly::monomial(Space::Line, {0, 1, 0}, BigRational(p[0]));
  int k = 0;
  Poly current = form, quot(Space::Line);
  while (current.divide_exact(linear, quot)) {
    current = quot;
    ++k;
  }
  return k;
}

RationalRoots rational_roots(const HomPoly& b) {
  if (b.space() != Space::Line) throw Error(ErrorKind::ValidationError, "rational_roots needs a binary form");
  RationalRoots out;
  const Poly& form = b.poly();
  const int d = b.degree();
  const int k_inf = form.min_degree_in(1);
  const int k_zero = form.min_degree_in(0);
  std::map<ProjPoint1, int> found;
  if (k_inf > 0) found[ProjPoint1{1, 0}] = k_inf;
  if (k_zero > 0) found[ProjPoint1{0, 1}] = k_zero;

  Dense u(d - k_inf - k_zero + 1);
  for (const auto& [e, c] : form.terms()) u[e[0] - k_zero] += c;
  trim(u);

  // Integer coefficients for the rational root theorem.
  BigInt l = 1;
  for (const auto& c : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : u) c *= l;

  while (u.size() > 1) {
    bool progress = false;
    if (u.size() == 2) {
      BigRational root = -u[0] / u[1];
      found[ProjPoint1(std::array<BigRational, 2>{root, BigRational(1)})] += 1;
      u = {u[1]};
      break;
    }
    BigInt a0 = u.front().get_num(), an = u.back().get_num();
    // Refresh integrality after deflation.
    BigInt lc = 1;
    for (const auto& c : u) mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), c.get_den_mpz_t());
    if (lc != 1) {
      for (auto& c : u) c *= lc;
      a0 = u.front().get_num();
      an = u.back().get_num();
    }
    for (const BigInt& q : divisors(an)) {
      for (const BigInt& p : divisors(a0)) {
        if (gcd(p, q) != 1) continue;
        for (int sgn : {1, -1}) {
          BigRational cand = make_rational(p * sgn, q);
          int mult = 0;
          while (u.size() > 1 && eval_dense(u, cand) == 0) {
            u = deflate(u, cand);
            ++mult;
          }
          if (mult > 0) {
            found[ProjPoint1(std::array<BigRational, 2>{cand, BigRational(1)})] += mult;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
    if (!progress) break;
  }
  for (const auto& kv : found) out.roots.emplace_back(kv.first, kv.second);
  const int rem_degree = static_cast<int>(u.size()) - 1;
  out.nonsplit = rem_degree > 0;
  out.remainder = rem_degree > 0 ? normalize(homogenize(u, rem_degree)) : Poly(Space::Line, BigRational(1));
  return out;
}

namespace {

bool plane_has_linear_factor(const Poly& p) {
  std::array<Poly, 3> sections;
  for (int v = 0; v < 3; ++v) {
    sections[v] = line_restriction(p, v);
    if (sections[v].is_zero()) return true;  // the coordinate line v divides p
  }
  auto factors_of = [](const Poly& section) {
    std::vector<std::pair<BigRational, BigRational>> out;  // (first, second) coefficients
    for (const auto& [pt, mult] : rational_roots(HomPoly(section)).roots)
      out.emplace_back(BigRational(pt[1]), BigRational(-pt[0]));
    return out;
  };
  auto on_z = factors_of(sections[2]);  // (alpha, beta)
  auto on_y = factors_of(sections[1]);  // (alpha, gamma)
  auto on_x = factors_of(sections[0]);  // (beta, gamma)
  auto divides = [&p](const BigRational& al, const BigRational& be, const BigRational& ga) {
    Poly lin = Poly::monomial(Space::Plane, {1, 0, 0}, al) + Poly::monomial(Space::Plane, {0, 1, 0}, be) +
               Poly::monomial(Space::Plane, {0, 0, 1}, ga);
    Poly q;
    return p.divide_exact(lin, q);
  };
  for (const auto& [al, be] : on_z) {
    if (al != 0) {
      for (const auto& [al2, ga] : on_y)
        if (al2 != 0 && divides(BigRational(1), be / al, ga / al2)) return true;
    } else {
      for (const auto& [be2, ga] : on_x)
        if (be2 != 0 && divides(BigRational(0), BigRational(1), ga / be2)) return true;
    }
  }
  return false;
}

BigRational conic_determinant(const Poly& p) {
  // Symmetric matrix M with p(v) = v^T M v.
  BigRational m[3][3];
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += c;
    } else {
      m[idx[0]][idx[1]] += c / 2;
      m[idx[1]][idx[0]] += c / 2;
    }
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

bool low_degree_irreducible(const HomPoly& p) {
  const int d = p.degree();
  if (d > 3) throw Error(ErrorKind::DegreeTooHigh, "irreducibility is only decided up to degree 3");
  if (d == 0) return false;
  if (d == 1) return true;
  // A reducible form of degree 2 or 3 always has a linear factor.
  if (p.space() == Space::Line) return rational_roots(p).roots.empty();
  if (d == 2 && conic_determinant(p.poly()) != 0) return true;
  return !plane_has_linear_factor(p.poly());
}

void validate_param_forms(const std::array<Poly, 3>& forms) {
  int degree = -1;
  Poly g(Space::Line);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (f.space() != Space::Line || !f.is_homogeneous())
      throw Error(ErrorKind::InvalidParametrization, "components must be binary forms in s,t");
    if (degree >= 0 && f.total_degree() != degree)
      throw Error(ErrorKind::InvalidParametrization, "components must share one degree");
    degree = f.total_degree();
    g = g.is_zero() ? normalize(f) : binary_gcd(g, f);
  }
  if (degree <= 0) throw Error(ErrorKind::InvalidParametrization, "parametrization is constant");
  if (g.total_degree() > 0)
    throw Error(ErrorKind::InvalidParametrization, "components share the common factor " + g.to_string());
}

std::optional<HomPoly> substitute_param(const HomPoly& p, const std::array<Poly, 3>& forms) {
  if (p.space() != Space::Plane) throw Error(ErrorKind::ValidationError, "substitute_param needs a plane polynomial");
  validate_param_forms(forms);
  Poly r = p.poly().compose(forms);
  if (r.is_zero()) return std::nullopt;
  return HomPoly(std::move(r));
}

}  // namespace locsym
