#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "locsym/rational.hpp"

namespace locsym {

/// Point of P^{N-1} with coprime integer coordinates, first nonzero entry
/// positive. The normal form is unique per projective point.
template <int N>
class ProjectivePoint {
 public:
  ProjectivePoint() { coords_.fill(0); coords_[N - 1] = 1; }

  /// Accepts any rational representative; throws ValidationError on (0,..,0).
  explicit ProjectivePoint(std::span<const BigRational> coords);
  ProjectivePoint(std::initializer_list<long> coords);

  const std::array<BigInt, N>& coords() const { return coords_; }
  const BigInt& operator[](int i) const { return coords_[i]; }
  std::array<BigRational, N> rational_coords() const;
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    for (int i = 0; i < N; ++i)
      if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
    return false;
  }

 private:
  void normalize_in_place();
  std::array<BigInt, N> coords_;
};

using ProjPoint1 = ProjectivePoint<2>;
using ProjPoint2 = ProjectivePoint<3>;

extern template class ProjectivePoint<2>;
extern template class ProjectivePoint<3>;

}  // namespace locsym
