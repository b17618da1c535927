#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uc/field.hpp"
#include "uc/linalg.hpp"
#include "uc/point.hpp"

namespace uc {

struct Monomial {
  int a = 0, b = 0, c = 0;  // exponents of x, y, z
  int degree() const { return a + b + c; }
  bool operator==(const Monomial& o) const { return a == o.a && b == o.b && c == o.c; }
  Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c}; }
  std::string str() const;
};

// Graded lex with x > y > z; "greater" sorts the leading monomial first.
struct GrlexGreater {
  bool operator()(const Monomial& m, const Monomial& n) const {
    if (m.degree() != n.degree()) return m.degree() > n.degree();
    if (m.a != n.a) return m.a > n.a;
    return m.b > n.b;
  }
};

std::size_t basis_size(int t);
// Monomials of degree t in decreasing graded-lex order.
std::vector<Monomial> monomial_basis(int t);
// Position of m inside monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m);

// Homogeneous polynomial in x, y, z.
class HomPoly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  HomPoly() = default;
  HomPoly(const FieldSpec& spec, int degree) : spec_(spec), deg_(degree) {}
  static HomPoly monomial(const Monomial& m, const Scalar& c);
  static HomPoly linear(const Scalar& a, const Scalar& b, const Scalar& c);
  static HomPoly linear(const ProjPoint& coeffs);
  // Coefficients listed in monomial_basis(degree) order.
  static HomPoly from_dense(const FieldSpec& spec, int degree, const std::vector<Scalar>& coeffs);
  // "x^2*y - 3*z^3"; the expression must be homogeneous and nonzero unless degree is given.
  static HomPoly parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const { return spec_; }
  int degree() const { return deg_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const Terms& terms() const { return t_; }
  Scalar coeff(const Monomial& m) const;
  std::vector<Scalar> dense() const;
  void add_term(const Monomial& m, const Scalar& c);

  HomPoly operator+(const HomPoly& o) const;
  HomPoly operator-(const HomPoly& o) const;
  HomPoly operator*(const HomPoly& o) const;
  HomPoly operator-() const;
  HomPoly scaled(const Scalar& k) const;
  HomPoly pow(unsigned e) const;
  bool operator==(const HomPoly& o) const;
  bool operator!=(const HomPoly& o) const { return !(*this == o); }

  Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z) const;
  Scalar eval(const ProjPoint& p) const { return eval(p[0], p[1], p[2]); }
  Scalar leading_coeff() const;
  // Scaled so the graded-lex leading coefficient is 1.
  HomPoly normalized() const;
  HomPoly embed(const FieldSpec& ff) const;
  std::string str() const;

 private:
  FieldSpec spec_;
  int deg_ = 0;
  Terms t_;
};

struct Partials {
  HomPoly fx, fy, fz;
  bool euler_holds = true;  // x*fx + y*fy + z*fz == deg(F) * F
};
Partials partials(const HomPoly& f);

class ProjTransform {
 public:
  ProjTransform() = default;
  explicit ProjTransform(const Mat& m);  // throws SingularTransform
  static ProjTransform identity(const FieldSpec& spec);
  static ProjTransform from_rows(const std::array<ProjPoint, 3>& rows);

  const Mat& matrix() const { return m_; }
  ProjTransform inverse() const;
  ProjTransform compose(const ProjTransform& inner) const;  // this * inner
  std::array<Scalar, 3> apply(const std::array<Scalar, 3>& v) const;

 private:
  Mat m_;
};

// F(M * (x,y,z)^T): each variable is replaced by the corresponding row of M.
HomPoly apply_transform(const HomPoly& f, const ProjTransform& m);
// Transform sending [0:0:1] to P (P = M * e_2) and its inverse moves P to [0:0:1].
ProjTransform transform_moving_origin_to(const ProjPoint& p);

int multiplicity_at(const HomPoly& f, const ProjPoint& p);
std::optional<HomPoly> divide_by_linear(const HomPoly& f, const HomPoly& l);

// Binary form sum c_i alpha^(deg-i) beta^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(const FieldSpec& spec, int degree);
  BinaryForm(const FieldSpec& spec, std::vector<Scalar> coeffs);

  const FieldSpec& spec() const { return spec_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar& operator[](int i) { return c_[i]; }
  const Scalar& operator[](int i) const { return c_[i]; }
  bool is_zero() const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm scaled(const Scalar& k) const;
  bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
  // First nonzero coefficient scaled to 1.
  BinaryForm monic() const;
  std::optional<BinaryForm> divide(const BinaryForm& d) const;
  Scalar eval(const Scalar& alpha, const Scalar& beta) const;
  std::string str() const;

 private:
  FieldSpec spec_;
  std::vector<Scalar> c_;
};

// Basis B1, B2 of the plane P.Q = 0 obtained by dropping the last nonzero coordinate of P.
std::array<ProjPoint, 2> dual_line_basis(const ProjPoint& p);
// F(alpha*B1 + beta*B2).
BinaryForm restrict_to_line(const HomPoly& f, const ProjPoint& p);
BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);

}  // namespace uc
