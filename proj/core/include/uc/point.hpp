#pragma once

#include <array>
#include <string>

#include "uc/field.hpp"

namespace uc {

// Point of the projective plane, scaled so the first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(const Scalar& a, const Scalar& b, const Scalar& c);
  static ProjPoint from_ints(const FieldSpec& spec, long a, long b, long c);
  // "a,b,c" or "a:b:c" with scalars in field syntax.
  static ProjPoint parse(const FieldSpec& spec, std::string_view text);

  const Scalar& operator[](int i) const { return c_[i]; }
  const std::array<Scalar, 3>& coords() const { return c_; }
  const FieldSpec& spec() const { return c_[0].spec(); }
  // Index of the first / last nonzero coordinate.
  int first_nonzero() const;
  int last_nonzero() const;

  Scalar dot(const ProjPoint& o) const;
  ProjPoint cross(const ProjPoint& o) const;  // throws InvalidInput when equal
  ProjPoint embed(const FieldSpec& ff) const;
  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const { return str() < o.str(); }
  std::string str() const;

 private:
  std::array<Scalar, 3> c_;
};

// Determinant of the 3x3 matrix with rows a, b, c.
Scalar det3(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

}  // namespace uc
