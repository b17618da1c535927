#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uc/invariants.hpp"
#include "uc/linalg.hpp"
#include "uc/poly.hpp"
#include "uc/schemes.hpp"

namespace uc {

struct PowerIdeal {
  FieldSpec spec;
  std::vector<std::pair<ProjPoint, int>> generators;  // (coefficients of l_i, a_i)

  PowerIdeal() = default;
  PowerIdeal(const FieldSpec& k, std::vector<std::pair<ProjPoint, int>> gens);
  // Every form of the arrangement raised to the same power.
  static PowerIdeal uniform(const LineArrangement& a, int exponent);
  int max_exponent() const;
  int min_exponent() const;
};

// Rows spanning [I]_t as dense coefficient vectors on monomial_basis(t).
Mat power_ideal_rows(const PowerIdeal& pi, int t);

// dim [R/I]_j.
std::size_t power_ideal_hf(const PowerIdeal& pi, int j);
std::vector<std::size_t> power_ideal_hf_sequence(const PowerIdeal& pi);  // up to the first zero

// dim [R/(I, L^k)]_j.
std::size_t quotient_hf(const PowerIdeal& pi, const ProjPoint& L, int k, int j);

struct SLPReport {
  int k = 0, dlow = 0;
  std::size_t dim_source = 0, dim_target = 0;
  std::size_t cokernel = 0;
  std::size_t rank = 0;
  bool maximal_rank = false;
  std::size_t delta = 0;
  ProjPoint L;
  DimCertificate cert;
};

// Rank of x L^k : [R/I]_dlow -> [R/I]_{dlow+k}, by the cokernel and by the
// pairing with the inverse system of [I]_{dlow+k}; both must agree.
std::pair<std::size_t, std::size_t> multiplication_rank(const PowerIdeal& pi, const ProjPoint& L, int k, int dlow);

SLPReport slp_at(const PowerIdeal& pi, int k, int dlow, const GenericMode& mode, Rng& rng,
                 const std::optional<ProjPoint>& L = std::nullopt);

struct SLPTable {
  ProjPoint L;
  int k = 0;
  std::vector<std::size_t> hf, quotient;  // indexed by degree
  std::vector<bool> maximal;               // maximal[i]: x L^k from degree i - k to i
  DimCertificate cert;
};
SLPTable slp_table(const PowerIdeal& pi, int k, const GenericMode& mode, Rng& rng);

enum class DualSide { Power, FatPoint };
// Both sides of Macaulay duality at degree j; fails over fields other than Q.
std::size_t macaulay_dual_dim(const PowerIdeal& pi, int j, DualSide side);

struct SLPEquivalence {
  bool unexpected = false;
  bool fails_slp = false;
  SLPReport slp;
};
SLPEquivalence slp_unexpected_equivalence(const PointConfig& z, int j, const GenericMode& mode, Rng& rng);

struct TeraoReport {
  bool surjective = false;
  std::size_t cokernel = 0;
  std::size_t generals = 0;
  DimCertificate cert;
};
TeraoReport terao_surjectivity(const LineArrangement& g, int a, int b, const GenericMode& mode, Rng& rng);

}  // namespace uc
