#pragma once

#include <string>

#include "uc/poly.hpp"
#include "uc/schemes.hpp"

namespace th {

inline uc::FieldSpec Q() { return uc::FieldSpec::rationals(); }
inline uc::FieldSpec Fp(std::uint64_t p) { return uc::FieldSpec::prime(p); }
inline uc::FieldSpec QST() { return uc::FieldSpec::function_field(Q()); }

inline uc::Scalar num(const uc::FieldSpec& k, const std::string& text) { return uc::Scalar::parse(k, text); }
inline uc::ProjPoint pt(const uc::FieldSpec& k, long a, long b, long c) { return uc::ProjPoint::from_ints(k, a, b, c); }
inline uc::HomPoly poly(const uc::FieldSpec& k, const std::string& text) { return uc::HomPoly::parse(k, text); }

inline uc::Mat mat(const uc::FieldSpec& k, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  uc::Mat m(r, c, k);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) m.at(i, j++) = uc::Scalar::parse(k, e);
    ++i;
  }
  return m;
}

// Distinct random points [a:b:1].
inline uc::PointConfig generic_points(const uc::FieldSpec& k, std::size_t n, uc::Rng& rng) {
  std::vector<uc::ProjPoint> pts;
  while (pts.size() < n) {
    uc::ProjPoint p(uc::random_scalar(k, 50, rng), uc::random_scalar(k, 50, rng), uc::Scalar::one(k));
    bool fresh = true;
    for (const auto& q : pts) fresh = fresh && q != p;
    if (fresh) pts.push_back(p);
  }
  return uc::PointConfig(k, pts);
}

}  // namespace th
