#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uc/curves.hpp"
#include "uc/invariants.hpp"
#include "uc/schemes.hpp"

namespace uc {

struct IncidencePoint {
  ProjPoint point;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> incident;
};

std::vector<IncidencePoint> singular_points(const LineArrangement& a);

// dim (R/J)_t with J = (f_x, f_y, f_z, f).
std::size_t jacobian_dim(const LineArrangement& a, int t);

struct JacobianDegree {
  std::size_t value = 0;
  std::vector<std::pair<int, std::size_t>> sequence;  // (t, dim) pairs examined
  std::string method;                                 // "exact" or "bounds"
};
JacobianDegree deg_jacobian(const LineArrangement& a);

long c2(const LineArrangement& a);

// Two logarithmic derivations of degrees a and b whose Saito determinant
// with the Euler derivation is a nonzero multiple of f.
struct SaitoCertificate {
  SyzygyTriple first, second;
  Scalar factor;
};
std::optional<SaitoCertificate> saito_certificate(const LineArrangement& arr, int a, int b);

struct FreenessReport {
  int a = 0, b = 0;
  DimCertificate splitting_cert;
  std::size_t deg_jac = 0;
  long c2 = 0;
  bool free = false;
  bool c2_route = true;  // false when char K divides d
  std::optional<ProjPoint> modular_point;
  bool saito = false;
  std::vector<std::string> notes;
};
FreenessReport freeness(const LineArrangement& a, const GenericMode& mode, Rng& rng);

struct AddDelClaims {
  std::optional<std::pair<int, int>> a_exp, a_prime_exp;
  std::optional<std::size_t> restriction;
};
struct AddDelVerdict {
  enum class Kind { Implied, Inconsistent };
  Kind kind = Kind::Inconsistent;
  std::size_t restriction = 0;  // computed |A''|
  std::pair<int, int> a_exp{0, 0}, a_prime_exp{0, 0};
  std::string message;
};
// Number of distinct points where the other lines meet line i.
std::size_t restriction_count(const LineArrangement& a, std::size_t i);
AddDelVerdict addition_deletion(const LineArrangement& a, std::size_t line, const AddDelClaims& claims);

std::vector<ProjPoint> modular_points(const LineArrangement& a);
// Splitting (m - 1, d - m) from a modular point on m lines, sorted.
std::optional<std::pair<int, int>> supersolvable(const LineArrangement& a);

struct IncidenceSignature {
  std::vector<std::size_t> multiplicities;
  std::vector<std::vector<std::size_t>> per_line;
  bool operator==(const IncidenceSignature& o) const {
    return multiplicities == o.multiplicities && per_line == o.per_line;
  }
  std::string str() const;
};
IncidenceSignature incidence_signature(const LineArrangement& a);

}  // namespace uc
