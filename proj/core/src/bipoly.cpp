#include "uc/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "uc/errors.hpp"

namespace uc {

namespace {

mpz_class to_mod(const mpz_class& a, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class m = a % pz;
  if (m < 0) m += pz;
  return m;
}

}  // namespace

mpq_class CoeffRing::norm(const mpq_class& a) const {
  if (p == 0) return a;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = to_mod(a.get_num(), p);
  if (a.get_den() == 1) return mpq_class(n);
  mpz_class d = to_mod(a.get_den(), p);
  mpz_class di;
  if (mpz_invert(di.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
    fail(ErrorCode::DivisionByZero, "denominator not invertible mod p");
  return mpq_class(to_mod(n * di, p));
}

mpq_class CoeffRing::inv(const mpq_class& a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (p == 0) return 1 / a;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = to_mod(a.get_num(), p);
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()) == 0)
    fail(ErrorCode::DivisionByZero, "inverse of zero mod p");
  return mpq_class(r);
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<mpq_class> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  CoeffRing R{p_};
  for (auto& x : c_) x = R.norm(x);
  trim();
}

UPoly UPoly::constant(const mpq_class& c, std::uint64_t p) { return UPoly({c}, p); }

UPoly UPoly::variable(std::uint64_t p) { return UPoly({0, 1}, p); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
  CoeffRing R{p_ ? p_ : o.p_};
  UPoly r(R.p);
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = R.add(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  CoeffRing R{p_};
  UPoly r = *this;
  for (auto& x : r.c_) x = R.neg(x);
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  CoeffRing R{p_ ? p_ : o.p_};
  UPoly r(R.p);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  for (auto& x : r.c_) x = R.norm(x);
  r.trim();
  return r;
}

UPoly UPoly::scaled(const mpq_class& k) const {
  CoeffRing R{p_};
  UPoly r = *this;
  for (auto& x : r.c_) x = R.mul(x, k);
  r.trim();
  return r;
}

UPoly UPoly::shifted(int k) const {
  if (is_zero()) return *this;
  UPoly r = *this;
  r.c_.insert(r.c_.begin(), k, mpq_class(0));
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  CoeffRing R{a.p_ ? a.p_ : b.p_};
  q = UPoly(R.p);
  r = a;
  r.p_ = R.p;
  if (r.degree() < b.degree()) return;
  q.c_.assign(r.degree() - b.degree() + 1, 0);
  mpq_class lbinv = R.inv(b.lead());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    mpq_class f = R.mul(r.lead(), lbinv);
    q.c_[k] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + k] = R.sub(r.c_[i + k], R.mul(f, b.c_[i]));
    r.trim();
  }
  q.trim();
}

UPoly UPoly::exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  ensure(r.is_zero(), "UPoly::exact_div remainder nonzero");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  CoeffRing R{p_};
  return scaled(R.inv(lead()));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

mpq_class UPoly::eval(const mpq_class& x) const {
  CoeffRing R{p_};
  mpq_class acc = 0;
  for (int i = degree(); i >= 0; --i) acc = R.add(R.mul(acc, x), c_[i]);
  return acc;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<UPoly> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  for (auto& u : c_)
    if (u.modulus() != p_) u = UPoly(u.coeffs(), p_);
  trim();
}

BiPoly BiPoly::constant(const mpq_class& c, std::uint64_t p) {
  return BiPoly({UPoly::constant(c, p)}, p);
}

BiPoly BiPoly::var_s(std::uint64_t p) {
  return BiPoly({UPoly(p), UPoly::constant(1, p)}, p);
}

BiPoly BiPoly::var_t(std::uint64_t p) { return BiPoly({UPoly::variable(p)}, p); }

BiPoly BiPoly::from_upoly(const UPoly& u) { return BiPoly({u}, u.modulus()); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool BiPoly::is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].degree() <= 0); }

bool BiPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

int BiPoly::deg_t() const {
  int d = -1;
  for (const auto& u : c_) d = std::max(d, u.degree());
  return d;
}

std::size_t BiPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& u : c_)
    for (const auto& x : u.coeffs())
      if (x != 0) ++n;
  return n;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  std::uint64_t p = p_ ? p_ : o.p_;
  BiPoly r(p);
  r.c_.resize(std::max(c_.size(), o.c_.size()), UPoly(p));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  r.trim();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& u : r.c_) u = -u;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  std::uint64_t p = p_ ? p_ : o.p_;
  BiPoly r(p);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, UPoly(p));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

BiPoly BiPoly::scaled(const mpq_class& k) const {
  BiPoly r = *this;
  for (auto& u : r.c_) u = u.scaled(k);
  r.trim();
  return r;
}

BiPoly BiPoly::times_upoly(const UPoly& u) const {
  BiPoly r = *this;
  for (auto& x : r.c_) x = x * u;
  r.trim();
  return r;
}

mpq_class BiPoly::lex_lead() const {
  if (is_zero()) return 0;
  return c_.back().lead();
}

BiPoly BiPoly::monic() const {
  if (is_zero()) return *this;
  CoeffRing R{p_};
  return scaled(R.inv(lex_lead()));
}

UPoly BiPoly::content() const {
  UPoly g(p_);
  for (const auto& u : c_) {
    g = UPoly::gcd(g, u);
    if (g.is_one()) break;
  }
  return g;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return *this;
  UPoly g = content();
  BiPoly r = *this;
  if (!g.is_one())
    for (auto& u : r.c_) u = UPoly::exact_div(u, g);
  return r;
}

BiPoly BiPoly::pseudo_rem(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  const UPoly& lb = b.c_.back();
  while (!r.is_zero() && r.deg_s() >= b.deg_s()) {
    int k = r.deg_s() - b.deg_s();
    UPoly lr = r.c_.back();
    BiPoly next = r.times_upoly(lb);
    for (int i = 0; i <= b.deg_s(); ++i) next.c_[i + k] = next.c_[i + k] - b.c_[i] * lr;
    next.trim();
    r = std::move(next);
  }
  return r;
}

bool BiPoly::divides(const BiPoly& b, const BiPoly& a, BiPoly* quotient) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "BiPoly division by zero");
  std::uint64_t p = a.p_ ? a.p_ : b.p_;
  BiPoly r = a;
  BiPoly q(p);
  if (!a.is_zero()) q.c_.assign(std::max(0, a.deg_s() - b.deg_s() + 1), UPoly(p));
  const UPoly& lb = b.c_.back();
  while (!r.is_zero()) {
    if (r.deg_s() < b.deg_s()) return false;
    int k = r.deg_s() - b.deg_s();
    UPoly qq, rr;
    UPoly::divmod(r.c_.back(), lb, qq, rr);
    if (!rr.is_zero()) return false;
    q.c_[k] = qq;
    for (int i = 0; i <= b.deg_s(); ++i) r.c_[i + k] = r.c_[i + k] - b.c_[i] * qq;
    r.trim();
  }
  q.trim();
  if (quotient) *quotient = std::move(q);
  return true;
}

BiPoly BiPoly::exact_div(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  ensure(divides(b, a, &q), "BiPoly::exact_div remainder nonzero");
  return q;
}

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::uint64_t p = a.p_ ? a.p_ : b.p_;
  UPoly cg = UPoly::gcd(a.content(), b.content());
  BiPoly A = a.primitive_part(), B = b.primitive_part();
  if (A.deg_s() < B.deg_s()) std::swap(A, B);
  BiPoly G(p);
  if (B.deg_s() == 0) {
    G = constant(1, p);
  } else {
    while (true) {
      BiPoly R = pseudo_rem(A, B);
      if (R.is_zero()) {
        G = B;
        break;
      }
      if (R.deg_s() == 0) {
        G = constant(1, p);
        break;
      }
      A = std::move(B);
      B = R.primitive_part();
    }
  }
  return G.primitive_part().times_upoly(cg).monic();
}

mpq_class BiPoly::eval(const mpq_class& s, const mpq_class& t) const {
  CoeffRing R{p_};
  mpq_class acc = 0;
  for (int i = deg_s(); i >= 0; --i) acc = R.add(R.mul(acc, s), c_[i].eval(t));
  return acc;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_s(); i >= 0; --i) {
    const UPoly& u = c_[i];
    for (int j = u.degree(); j >= 0; --j) {
      mpq_class c = u.coeff(j);
      if (c == 0) continue;
      bool neg = p_ == 0 && c < 0;
      mpq_class a = neg ? mpq_class(-c) : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (a == 1);
      if (!unit || (i == 0 && j == 0)) {
        os << a.get_str();
        if (i || j) os << "*";
      }
      if (i) {
        os << "s";
        if (i > 1) os << "^" << i;
        if (j) os << "*";
      }
      if (j) {
        os << "t";
        if (j > 1) os << "^" << j;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(std::uint64_t p) : num_(p), den_(BiPoly::constant(1, p)) {}

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RatFunc::canonicalize() {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  std::uint64_t p = num_.modulus() ? num_.modulus() : den_.modulus();
  if (num_.is_zero()) {
    num_ = BiPoly(p);
    den_ = BiPoly::constant(1, p);
    return;
  }
  if (!den_.is_constant()) {
    BiPoly g = BiPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = BiPoly::exact_div(num_, g);
      den_ = BiPoly::exact_div(den_, g);
    }
  }
  mpq_class lc = den_.lex_lead();
  if (lc != 1) {
    CoeffRing R{p};
    mpq_class k = R.inv(lc);
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

RatFunc RatFunc::canonical() const {
  RatFunc r = *this;
  r.canonicalize();
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace uc
