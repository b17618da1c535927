#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace uc {

// Coefficient arithmetic shared by the polynomial types below. p == 0 means Q;
// otherwise coefficients are residues mod p held as integers in [0, p).
struct CoeffRing {
  std::uint64_t p = 0;

  mpq_class norm(const mpq_class& a) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return norm(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return norm(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return norm(a * b); }
  mpq_class neg(const mpq_class& a) const { return norm(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
};

// Dense univariate polynomial in t, coefficients low to high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::uint64_t p) : p_(p) {}
  UPoly(std::vector<mpq_class> coeffs, std::uint64_t p);

  static UPoly constant(const mpq_class& c, std::uint64_t p);
  static UPoly variable(std::uint64_t p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  std::uint64_t modulus() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  const mpq_class& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const mpq_class& k) const;
  UPoly shifted(int k) const;  // multiply by t^k
  bool operator==(const UPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  static UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0
  UPoly monic() const;
  mpq_class eval(const mpq_class& x) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
  std::uint64_t p_ = 0;
};

// Polynomial in s with coefficients in K[t]; lex order with s > t.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::uint64_t p) : p_(p) {}
  BiPoly(std::vector<UPoly> coeffs, std::uint64_t p);

  static BiPoly constant(const mpq_class& c, std::uint64_t p);
  static BiPoly var_s(std::uint64_t p);
  static BiPoly var_t(std::uint64_t p);
  static BiPoly from_upoly(const UPoly& u);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  int deg_s() const { return static_cast<int>(c_.size()) - 1; }
  int deg_t() const;
  std::uint64_t modulus() const { return p_; }
  const std::vector<UPoly>& coeffs() const { return c_; }
  std::size_t term_count() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly scaled(const mpq_class& k) const;
  BiPoly times_upoly(const UPoly& u) const;
  bool operator==(const BiPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  // Leading coefficient in lex order (s first, then t).
  mpq_class lex_lead() const;
  BiPoly monic() const;
  UPoly content() const;
  BiPoly primitive_part() const;
  // Quotient when b divides a exactly; throws Internal otherwise.
  static BiPoly exact_div(const BiPoly& a, const BiPoly& b);
  static bool divides(const BiPoly& b, const BiPoly& a, BiPoly* quotient);
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);  // monic

  mpq_class eval(const mpq_class& s, const mpq_class& t) const;
  std::string str() const;

 private:
  void trim();
  static BiPoly pseudo_rem(const BiPoly& a, const BiPoly& b);
  std::vector<UPoly> c_;
  std::uint64_t p_ = 0;
};

// Reduced fraction num/den of bivariate polynomials; den is lex-monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(std::uint64_t p);
  RatFunc(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  std::uint64_t modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc canonical() const;
  std::string str() const;

 private:
  void canonicalize();
  BiPoly num_;
  BiPoly den_;
};

}  // namespace uc
