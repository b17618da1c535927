#pragma once

#include <array>
#include <optional>
#include <vector>

#include "uc/invariants.hpp"
#include "uc/poly.hpp"
#include "uc/schemes.hpp"

namespace uc {

struct PeeledLine {
  HomPoly line;
  std::size_t point;  // index into Z
};

struct CurveRecord {
  ProjPoint P;
  int m_Z = 0;
  std::vector<HomPoly> basis;  // one form, or two when the kernel is a pencil
  std::vector<PeeledLine> peeled;
  std::optional<HomPoly> core;
  std::vector<std::size_t> z_prime;
  int mult_F = -1, mult_core = -1;
  int m_Z_prime = -1;
  bool irreducible_for_this_P = false;

  bool is_pencil() const { return basis.size() == 2; }
  const HomPoly& F() const { return basis.front(); }
};

// Forms of degree m + 1 through Z with multiplicity m at P. P may lie in the
// field of Z or in its function field; the kernel must have dimension 1 or 2.
CurveRecord curve_CP(const PointConfig& z, const ProjPoint& p, int m_Z);

// Peels the lines joining P to points of Z and fills the core data.
CurveRecord decompose(CurveRecord rec, const PointConfig& z, const GenericMode& mode, Rng& rng);

struct DegreeFamily {
  CurveRecord curve;
  int free_lines = 0;
  std::size_t dim = 0;
};
DegreeFamily unexpected_in_degree(const PointConfig& z, const ProjPoint& p, int t, const Splitting& s);

bool irreducibility_by_deletion(const PointConfig& z, const GenericMode& mode, Rng& rng);

struct SyzygyTriple {
  std::array<HomPoly, 3> s;
  std::optional<HomPoly> mod_ell;
  std::optional<HomPoly> s3;
  int degree() const { return s[0].degree(); }
};

// Basis of the global syzygies of (f_x, f_y, f_z) of degree m.
std::vector<SyzygyTriple> global_syzygies(const HomPoly& f, int m);
// Syzygy of (f_x, f_y, f_z) (with ell: of (f_x, f_y, f_z, ell)) whose first
// three entries have degree m and are not all divisible by ell; nullopt when none exists.
std::optional<SyzygyTriple> syzygy_min_degree(const HomPoly& f, const std::optional<HomPoly>& ell, int m);
// Least such degree, searching m = 0 .. deg f.
std::optional<SyzygyTriple> least_syzygy(const HomPoly& f, const std::optional<HomPoly>& ell);

struct Parametrization {
  std::array<BinaryForm, 3> phi;
  BinaryForm h;
  int n = 0;
  int component_degree = 0;
  bool h_splits = true;
};

// (t0, t1, t2) = (x, y, z) x (s0, s1, s2).
std::array<HomPoly, 3> cross_with_xyz(const SyzygyTriple& syz);
// G(phi0, phi1, phi2) as a binary form.
BinaryForm compose(const HomPoly& g, const std::array<BinaryForm, 3>& phi);

Parametrization parametrize(const PointConfig& z, const ProjPoint& p, const SyzygyTriple& syz,
                            const GenericMode& mode, Rng& rng);

std::optional<bool> irreducible_by_global_syzygy(const PointConfig& z, const GenericMode& mode, Rng& rng);

bool mz_after_adding_dual(const PointConfig& z, const ProjPoint& q, const SyzygyTriple& syz);

// Points of the plane over GF(p), outside Z, with m_{Z+Q} = m_Z.
std::vector<ProjPoint> common_points(const PointConfig& z, const GenericMode& mode, Rng& rng);

}  // namespace uc
