#include "uc/field.hpp"

#include <charconv>

#include "expr_parser.hpp"

namespace uc {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero mod p");
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit integers
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t prime_below(std::uint64_t n) {
  for (std::uint64_t c = n - 1; c >= 2; --c)
    if (is_prime(c)) return c;
  fail(ErrorCode::NotPrime, "no prime below bound");
}

std::uint64_t reduce(const mpz_class& a, std::uint64_t p) {
  mpz_class r = a % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t reduce(const mpq_class& a, std::uint64_t p) {
  std::uint64_t n = reduce(a.get_num(), p);
  if (a.get_den() == 1) return n;
  return mul(n, inv(reduce(a.get_den(), p), p), p);
}

}  // namespace modp

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::rationals() { return FieldSpec(); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!modp::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  FieldSpec f;
  f.base_ = Base::Prime;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::function_field(const FieldSpec& base) {
  if (base.ff_) fail(ErrorCode::UnsupportedField, "function field over a function field");
  FieldSpec f = base;
  f.ff_ = true;
  return f;
}

FieldSpec FieldSpec::base_spec() const {
  FieldSpec f = *this;
  f.ff_ = false;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string_view core = text;
  bool ff = false;
  if (core.size() >= 5 && core.substr(core.size() - 5) == "(s,t)") {
    ff = true;
    core = core.substr(0, core.size() - 5);
  }
  FieldSpec base;
  if (core == "Q") {
    base = rationals();
  } else if (core.size() > 3 && core.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto digits = core.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      fail(ErrorCode::Parse, "bad field literal \"" + std::string(text) + "\"");
    base = prime(p);
  } else {
    fail(ErrorCode::Parse, "bad field literal \"" + std::string(text) + "\"");
  }
  return ff ? function_field(base) : base;
}

std::string FieldSpec::str() const {
  std::string b = base_ == Base::Rationals ? "Q" : "Fp:" + std::to_string(p_);
  return ff_ ? b + "(s,t)" : b;
}

// ---------------------------------------------------------------- Scalar

namespace {

const RatFunc& zero_ratfunc(std::uint64_t p) {
  thread_local std::uint64_t cached_p = ~0ull;
  thread_local RatFunc cached;
  if (cached_p != p) {
    cached = RatFunc(p);
    cached_p = p;
  }
  return cached;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& spec) {
  Scalar s;
  s.spec_ = spec;
  if (spec.is_function_field()) s.f_ = std::make_shared<RatFunc>(spec.characteristic());
  return s;
}

Scalar Scalar::one(const FieldSpec& spec) { return from_int(spec, 1); }

Scalar Scalar::from_int(const FieldSpec& spec, long v) { return from_mpz(spec, mpz_class(v)); }

Scalar Scalar::from_mpz(const FieldSpec& spec, const mpz_class& v) {
  return from_rational(spec, mpq_class(v));
}

Scalar Scalar::from_rational(const FieldSpec& spec, const mpq_class& v) {
  Scalar s;
  s.spec_ = spec;
  std::uint64_t p = spec.characteristic();
  if (spec.is_function_field()) {
    CoeffRing R{p};
    s.f_ = std::make_shared<RatFunc>(BiPoly::constant(R.norm(v), p), BiPoly::constant(1, p));
  } else if (p) {
    s.q_ = mpq_class(static_cast<unsigned long>(modp::reduce(v, p)));
  } else {
    s.q_ = v;
    s.q_.canonicalize();
  }
  return s;
}

Scalar Scalar::from_ratfunc(const FieldSpec& spec, const RatFunc& f) {
  if (!spec.is_function_field()) fail(ErrorCode::FieldMismatch, "rational function in a base field");
  if (f.modulus() != spec.characteristic() && !f.num().is_zero())
    fail(ErrorCode::FieldMismatch, "rational function characteristic mismatch");
  Scalar s;
  s.spec_ = spec;
  s.f_ = std::make_shared<RatFunc>(f.canonical());
  return s;
}

Scalar Scalar::var_s(const FieldSpec& spec) {
  if (!spec.is_function_field()) fail(ErrorCode::UnsupportedField, "s requires a function field");
  std::uint64_t p = spec.characteristic();
  return from_ratfunc(spec, RatFunc(BiPoly::var_s(p), BiPoly::constant(1, p)));
}

Scalar Scalar::var_t(const FieldSpec& spec) {
  if (!spec.is_function_field()) fail(ErrorCode::UnsupportedField, "t requires a function field");
  std::uint64_t p = spec.characteristic();
  return from_ratfunc(spec, RatFunc(BiPoly::var_t(p), BiPoly::constant(1, p)));
}

namespace {

struct ScalarOps {
  FieldSpec spec;
  Scalar number(const mpq_class& q) { return Scalar::from_rational(spec, q); }
  Scalar variable(std::string_view name) {
    if (spec.is_function_field() && name == "s") return Scalar::var_s(spec);
    if (spec.is_function_field() && name == "t") return Scalar::var_t(spec);
    fail(ErrorCode::Parse, "unknown symbol '" + std::string(name) + "' for field " + spec.str());
  }
  Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
  Scalar neg(const Scalar& a) { return -a; }
  Scalar pow(const Scalar& a, unsigned e) { return a.pow(e); }
};

}  // namespace

Scalar Scalar::parse(const FieldSpec& spec, std::string_view text) {
  ScalarOps ops{spec};
  detail::ExprParser<Scalar, ScalarOps> parser(text, ops);
  return parser.parse();
}

bool Scalar::is_zero() const {
  if (f_) return f_->is_zero();
  return q_ == 0;
}

bool Scalar::is_one() const {
  if (f_) return f_->num().is_one() && f_->den().is_one();
  return q_ == 1;
}

std::uint64_t Scalar::residue() const {
  if (!spec_.is_prime_field()) fail(ErrorCode::FieldMismatch, "residue of a non-prime-field scalar");
  return q_.get_num().get_ui();
}

const RatFunc& Scalar::ratfunc() const {
  if (!spec_.is_function_field()) fail(ErrorCode::FieldMismatch, "ratfunc of a base-field scalar");
  if (!f_) return zero_ratfunc(spec_.characteristic());
  return *f_;
}

void Scalar::check_same(const Scalar& o) const {
  if (spec_ != o.spec_)
    fail(ErrorCode::FieldMismatch, "operands over " + spec_.str() + " and " + o.spec_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (spec_.is_function_field()) return from_ratfunc(spec_, ratfunc() + o.ratfunc());
  return from_rational(spec_, q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (spec_.is_function_field()) return from_ratfunc(spec_, ratfunc() - o.ratfunc());
  return from_rational(spec_, q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (spec_.is_function_field()) return from_ratfunc(spec_, ratfunc() * o.ratfunc());
  return from_rational(spec_, q_ * o.q_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (spec_.is_function_field()) return from_ratfunc(spec_, ratfunc() / o.ratfunc());
  std::uint64_t p = spec_.characteristic();
  if (p) return from_rational(spec_, mpq_class(static_cast<unsigned long>(modp::mul(
                                         residue(), modp::inv(o.residue(), p), p))));
  return from_rational(spec_, q_ / o.q_);
}

Scalar Scalar::operator-() const { return zero(spec_) - *this; }

Scalar Scalar::inverse() const { return one(spec_) / *this; }

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one(spec_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  if (spec_.is_function_field()) return ratfunc() == o.ratfunc();
  return q_ == o.q_;
}

Scalar Scalar::canonicalize() const {
  if (spec_.is_function_field()) return from_ratfunc(spec_, ratfunc());
  return from_rational(spec_, q_);
}

Scalar Scalar::embed(const FieldSpec& function_field) const {
  if (!function_field.is_function_field() || function_field.base_spec() != spec_)
    fail(ErrorCode::FieldMismatch, "cannot embed " + spec_.str() + " into " + function_field.str());
  return from_rational(function_field, q_);
}

Scalar Scalar::specialize(const Scalar& s, const Scalar& t) const {
  if (!spec_.is_function_field()) return *this;
  FieldSpec b = spec_.base_spec();
  if (s.spec() != b || t.spec() != b) fail(ErrorCode::FieldMismatch, "specialization values");
  CoeffRing R{b.characteristic()};
  mpq_class den = ratfunc().den().eval(s.rational(), t.rational());
  if (den == 0) fail(ErrorCode::DivisionByZero, "specialization at a pole");
  return from_rational(b, R.div(ratfunc().num().eval(s.rational(), t.rational()), den));
}

std::string Scalar::str() const {
  if (spec_.is_function_field()) return ratfunc().str();
  return q_.get_str();
}

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  fail(ErrorCode::Internal, "unknown arithmetic op");
}

// ---------------------------------------------------------------- Rng

std::uint64_t Rng::uniform(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "uniform over an empty range");
  std::uint64_t limit = ~0ull - (~0ull % n);
  while (true) {
    std::uint64_t x = eng_();
    if (x < limit) return x % n;
  }
}

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar random_scalar(const FieldSpec& spec, std::uint64_t bound, Rng& rng) {
  if (spec.is_function_field())
    fail(ErrorCode::UnsupportedField, "no random sampling in a function field");
  if (spec.is_prime_field())
    return Scalar::from_mpz(spec, mpz_class(static_cast<unsigned long>(rng.uniform(spec.characteristic()))));
  if (bound == 0) fail(ErrorCode::InvalidInput, "bound must be positive");
  long b = static_cast<long>(bound);
  return Scalar::from_int(spec, rng.range(-b, b));
}

}  // namespace uc
