#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uc/schemes.hpp"

namespace uc {

int compute_tZ(const PointConfig& z);

struct Splitting {
  int a = 0, b = 0;
  // ramp[j] = generic dim [I_{Z+jP}]_{j+1} for 0 <= j <= b + 1.
  std::vector<GenericDim> ramp;
  DimCertificate cert;
};

// Value of max(0, j - a + 1) + max(0, j - b + 1).
std::size_t ramp_value(int a, int b, int j);

Splitting compute_splitting(const PointConfig& z, const GenericMode& mode, Rng& rng);

struct InvariantsReport {
  std::size_t d = 0;
  std::vector<std::size_t> hilbert;  // h_Z(t) for t = 0 .. regularity
  std::vector<std::size_t> delta_h;
  int t_Z = 0, m_Z = 0, u_Z = 0;
  Splitting splitting;
  bool criterion_i = false, criterion_ii = false, criterion_iii = false;
  bool unexpected = false;
  std::vector<int> unexpected_degrees;
  std::size_t max_collinear = 0;
  std::size_t hZ_at_tZ = 0;
  long self_intersection = 0;  // (m+1)^2 - m^2 - d
};

InvariantsReport unexpected_report(const PointConfig& z, const GenericMode& mode, Rng& rng);

// Degree j+1 unexpected in the sense of the definition: generic D(j) exceeds
// max(0, dim [I_Z]_{j+1} - C(j+1, 2)).
bool unexpected_in_degree_by_definition(const PointConfig& z, int j, const Splitting& s);

struct SmallTzClass {
  enum class Kind { NotApplicable, CompleteIntersection, Collinear };
  Kind kind = Kind::NotApplicable;
  int t_Z = 0;
  int conic_degree = 0, curve_degree = 0;  // complete intersection case
  std::optional<ProjPoint> line;            // collinear case: the line's coefficients
  std::size_t on_line = 0;
};
const char* small_tz_kind_name(SmallTzClass::Kind k);

SmallTzClass small_tZ_classify(const PointConfig& z, const GenericMode& mode, Rng& rng);

struct AddPointPrediction {
  std::optional<ProjPoint> q;  // empty when a random point was drawn internally
  ProjPoint used;
  int t_lo = 0, t_hi = 0;
  int m_lo = 0, m_hi = 0;
  int t_actual = 0, m_actual = 0;
  int a_actual = 0, b_actual = 0;
  std::string rule;
};

// Q = nullopt draws a general point.
AddPointPrediction add_point_predictions(const PointConfig& z, const std::optional<ProjPoint>& q,
                                         const GenericMode& mode, Rng& rng);

}  // namespace uc
