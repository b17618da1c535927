#include "uc/point.hpp"

#include <sstream>

namespace uc {

ProjPoint::ProjPoint(const Scalar& a, const Scalar& b, const Scalar& c) : c_{a, b, c} {
  if (a.spec() != b.spec() || a.spec() != c.spec())
    fail(ErrorCode::FieldMismatch, "point coordinates from different fields");
  int k = first_nonzero();
  if (k < 0) fail(ErrorCode::InvalidInput, "the zero vector is not a projective point");
  if (!c_[k].is_one()) {
    Scalar inv = c_[k].inverse();
    for (auto& x : c_) x = x * inv;
  }
}

ProjPoint ProjPoint::from_ints(const FieldSpec& spec, long a, long b, long c) {
  return {Scalar::from_int(spec, a), Scalar::from_int(spec, b), Scalar::from_int(spec, c)};
}

ProjPoint ProjPoint::parse(const FieldSpec& spec, std::string_view text) {
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == ',' || ch == ':')) {
      parts.emplace_back();
      continue;
    }
    if (ch == '[' || ch == ']') continue;
    parts.back() += ch;
  }
  if (parts.size() != 3) fail(ErrorCode::Parse, "point needs three coordinates: " + std::string(text));
  return {Scalar::parse(spec, parts[0]), Scalar::parse(spec, parts[1]), Scalar::parse(spec, parts[2])};
}

int ProjPoint::first_nonzero() const {
  for (int i = 0; i < 3; ++i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

int ProjPoint::last_nonzero() const {
  for (int i = 2; i >= 0; --i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

Scalar ProjPoint::dot(const ProjPoint& o) const {
  return c_[0] * o.c_[0] + c_[1] * o.c_[1] + c_[2] * o.c_[2];
}

ProjPoint ProjPoint::cross(const ProjPoint& o) const {
  Scalar x = c_[1] * o.c_[2] - c_[2] * o.c_[1];
  Scalar y = c_[2] * o.c_[0] - c_[0] * o.c_[2];
  Scalar z = c_[0] * o.c_[1] - c_[1] * o.c_[0];
  if (x.is_zero() && y.is_zero() && z.is_zero())
    fail(ErrorCode::InvalidInput, "cross product of equal points " + str());
  return {x, y, z};
}

ProjPoint ProjPoint::embed(const FieldSpec& ff) const {
  return {c_[0].embed(ff), c_[1].embed(ff), c_[2].embed(ff)};
}

std::string ProjPoint::str() const {
  return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
}

Scalar det3(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det3(a, b, c).is_zero();
}

}  // namespace uc
