#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uc/field.hpp"
#include "uc/linalg.hpp"
#include "uc/point.hpp"
#include "uc/poly.hpp"

namespace uc {

// Reduced set of distinct points.
class PointConfig {
 public:
  PointConfig() = default;
  PointConfig(const FieldSpec& spec, std::vector<ProjPoint> points);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return pts_.size(); }
  const ProjPoint& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<ProjPoint>& points() const { return pts_; }
  std::optional<std::size_t> index_of(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return index_of(p).has_value(); }
  PointConfig with_point(const ProjPoint& p) const;
  PointConfig without(std::size_t i) const;

 private:
  FieldSpec spec_;
  std::vector<ProjPoint> pts_;
};

// Lines given by coefficient vectors, scaled so the first nonzero coefficient is 1.
class LineArrangement {
 public:
  LineArrangement() = default;
  LineArrangement(const FieldSpec& spec, std::vector<ProjPoint> forms);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return forms_.size(); }
  const ProjPoint& coeffs(std::size_t i) const { return forms_[i]; }
  const std::vector<ProjPoint>& all_coeffs() const { return forms_; }
  HomPoly form(std::size_t i) const { return HomPoly::linear(forms_[i]); }
  HomPoly product() const;
  LineArrangement without(std::size_t i) const;
  LineArrangement with_line(const ProjPoint& coeffs) const;

 private:
  FieldSpec spec_;
  std::vector<ProjPoint> forms_;
};

LineArrangement dual_lines(const PointConfig& z);
PointConfig dual_points(const LineArrangement& a);

struct GenericMode {
  enum class Kind { Symbolic, Probe };
  Kind kind = Kind::Probe;
  std::size_t samples = 2;
  std::uint64_t bound = 10000;
  std::uint64_t seed = 1;
  bool avoid_lines = false;

  static GenericMode symbolic() { return {Kind::Symbolic, 0, 0, 1, false}; }
  static GenericMode probe(std::size_t samples = 2, std::uint64_t bound = 10000, std::uint64_t seed = 1) {
    return {Kind::Probe, samples, bound, seed, false};
  }
  bool is_symbolic() const { return kind == Kind::Symbolic; }
};

enum class CertLevel { MonteCarlo = 0, RampConsistent = 1, Certified = 2 };
const char* cert_level_name(CertLevel c);

struct DimCertificate {
  CertLevel level = CertLevel::MonteCarlo;
  bool symbolic = false;
  std::vector<ProjPoint> probes;
  std::string note;
};
// Weakest of the two, merging witness data.
DimCertificate weakest(const DimCertificate& a, const DimCertificate& b);

struct GenericDim {
  std::size_t value = 0;
  DimCertificate cert;
};

std::size_t ideal_dim(const PointConfig& z, int t);
std::size_t hilbert_function(const PointConfig& z, int t);
// First differences of h_Z up to the degree where h_Z reaches |Z|.
std::vector<std::size_t> delta_hf(const PointConfig& z);

// dim [I_Z \cap I_P^j]_t at a concrete point P of the same field.
std::size_t fatpoint_dim(const PointConfig& z, const ProjPoint& p, int j, int t);
// Same with P = [s:t:1] over the function field: exact generic value.
GenericDim generic_fatpoint_dim(const PointConfig& z, int j, int t, const GenericMode& mode, Rng& rng);
// Draw a probe point [r0:r1:1], rejecting points of Z (and lines through two of them when requested).
ProjPoint sample_point(const PointConfig& z, const GenericMode& mode, Rng& rng);

std::size_t max_collinear(const PointConfig& z);
std::size_t h1_fatpoint(const PointConfig& z, int j, const GenericMode& mode, Rng& rng);

// Fat-point condition matrix with P = [s:t:1] evaluated over an extension of the base field.
Mat symbolic_fatpoint_matrix(const PointConfig& z, int j, int t);

}  // namespace uc
