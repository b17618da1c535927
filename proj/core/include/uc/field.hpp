#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "uc/bipoly.hpp"
#include "uc/errors.hpp"

namespace uc {

namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
// Largest prime strictly below n.
std::uint64_t prime_below(std::uint64_t n);
std::uint64_t reduce(const mpz_class& a, std::uint64_t p);
std::uint64_t reduce(const mpq_class& a, std::uint64_t p);  // denominator must be a unit
}  // namespace modp

// Coefficient domain: Q, GF(p), or the rational function field base(s,t).
class FieldSpec {
 public:
  enum class Base { Rationals, Prime };

  FieldSpec() = default;
  static FieldSpec rationals();
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec function_field(const FieldSpec& base);
  // Accepts "Q", "Fp:7", "Q(s,t)", "Fp:2(s,t)".
  static FieldSpec parse(std::string_view text);

  Base base() const { return base_; }
  bool is_rationals() const { return base_ == Base::Rationals && !ff_; }
  bool is_prime_field() const { return base_ == Base::Prime && !ff_; }
  bool is_function_field() const { return ff_; }
  std::uint64_t characteristic() const { return p_; }
  // Number of elements of the base field, 0 meaning infinite.
  std::uint64_t base_size() const { return p_; }
  FieldSpec base_spec() const;
  FieldSpec with_function_field() const { return function_field(base_spec()); }
  std::string str() const;

  bool operator==(const FieldSpec& o) const {
    return base_ == o.base_ && p_ == o.p_ && ff_ == o.ff_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  Base base_ = Base::Rationals;
  std::uint64_t p_ = 0;
  bool ff_ = false;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Immutable exact field element tagged with its FieldSpec.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q

  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar from_int(const FieldSpec& spec, long v);
  static Scalar from_mpz(const FieldSpec& spec, const mpz_class& v);
  static Scalar from_rational(const FieldSpec& spec, const mpq_class& v);
  static Scalar from_ratfunc(const FieldSpec& spec, const RatFunc& f);
  static Scalar var_s(const FieldSpec& spec);
  static Scalar var_t(const FieldSpec& spec);
  // Field syntax: "3", "-2/5"; over function fields any expression in s,t.
  static Scalar parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  // Valid over Q: the rational value. Over GF(p): the residue as an integer.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const;
  const RatFunc& ratfunc() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar canonicalize() const;
  // Image under the inclusion of the base field into base(s,t).
  Scalar embed(const FieldSpec& function_field) const;
  // Specialize s,t to base-field values; throws DivisionByZero at a pole.
  Scalar specialize(const Scalar& s, const Scalar& t) const;
  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  FieldSpec spec_;
  mpq_class q_;
  std::shared_ptr<const RatFunc> f_;
};

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op);

// Deterministic generator; all randomized choices in the toolkit draw from one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : seed_(seed), eng_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return eng_(); }
  // Uniform in [0, n).
  std::uint64_t uniform(std::uint64_t n);
  // Uniform in [lo, hi].
  long range(long lo, long hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

// Uniform integer in [-bound, bound] over Q, uniform residue over GF(p).
Scalar random_scalar(const FieldSpec& spec, std::uint64_t bound, Rng& rng);

}  // namespace uc
