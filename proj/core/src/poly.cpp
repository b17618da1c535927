#include "uc/poly.hpp"

#include <sstream>

#include "expr_parser.hpp"

namespace uc {

std::string Monomial::str() const {
  std::string s;
  auto put = [&](char v, int e) {
    if (!e) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put('x', a);
  put('y', b);
  put('z', c);
  return s.empty() ? "1" : s;
}

std::size_t basis_size(int t) {
  return t < 0 ? 0 : static_cast<std::size_t>(t + 1) * static_cast<std::size_t>(t + 2) / 2;
}

std::vector<Monomial> monomial_basis(int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  out.reserve(basis_size(t));
  for (int a = t; a >= 0; --a)
    for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  return out;
}

std::size_t monomial_index(const Monomial& m) {
  int t = m.degree();
  std::size_t k = static_cast<std::size_t>(t - m.a);
  std::size_t before = k * (k + 1) / 2;
  return before + static_cast<std::size_t>(t - m.a - m.b);
}

// ---------------------------------------------------------------- HomPoly

HomPoly HomPoly::monomial(const Monomial& m, const Scalar& c) {
  HomPoly p(c.spec(), m.degree());
  p.add_term(m, c);
  return p;
}

HomPoly HomPoly::linear(const Scalar& a, const Scalar& b, const Scalar& c) {
  HomPoly p(a.spec(), 1);
  p.add_term({1, 0, 0}, a);
  p.add_term({0, 1, 0}, b);
  p.add_term({0, 0, 1}, c);
  return p;
}

HomPoly HomPoly::linear(const ProjPoint& q) { return linear(q[0], q[1], q[2]); }

HomPoly HomPoly::from_dense(const FieldSpec& spec, int degree, const std::vector<Scalar>& coeffs) {
  auto basis = monomial_basis(degree);
  ensure(coeffs.size() == basis.size(), "HomPoly::from_dense size");
  HomPoly p(spec, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

void HomPoly::add_term(const Monomial& m, const Scalar& c) {
  ensure(m.degree() == deg_, "HomPoly term of wrong degree");
  if (c.spec() != spec_) fail(ErrorCode::FieldMismatch, "coefficient from " + c.spec().str());
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

Scalar HomPoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar::zero(spec_) : it->second;
}

std::vector<Scalar> HomPoly::dense() const {
  std::vector<Scalar> out(basis_size(deg_), Scalar::zero(spec_));
  for (const auto& [m, c] : t_) out[monomial_index(m)] = c;
  return out;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (o.deg_ != deg_) fail(ErrorCode::InvalidInput, "sum of forms of different degrees");
  HomPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator-() const {
  HomPoly r(spec_, deg_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
  if (o.spec_ != spec_) fail(ErrorCode::FieldMismatch, "product of forms over different fields");
  HomPoly r(spec_, deg_ + o.deg_);
  for (const auto& [m, c] : t_)
    for (const auto& [n, d] : o.t_) r.add_term(m * n, c * d);
  return r;
}

HomPoly HomPoly::scaled(const Scalar& k) const {
  HomPoly r(spec_, deg_);
  if (k.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * k);
  return r;
}

HomPoly HomPoly::pow(unsigned e) const {
  HomPoly r = monomial({0, 0, 0}, Scalar::one(spec_));
  HomPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool HomPoly::operator==(const HomPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero() && spec_ == o.spec_;
  return deg_ == o.deg_ && spec_ == o.spec_ && t_ == o.t_;
}

Scalar HomPoly::eval(const Scalar& x, const Scalar& y, const Scalar& z) const {
  std::vector<Scalar> px{Scalar::one(spec_)}, py{Scalar::one(spec_)}, pz{Scalar::one(spec_)};
  for (int i = 1; i <= deg_; ++i) {
    px.push_back(px.back() * x);
    py.push_back(py.back() * y);
    pz.push_back(pz.back() * z);
  }
  Scalar acc = Scalar::zero(spec_);
  for (const auto& [m, c] : t_) acc = acc + c * px[m.a] * py[m.b] * pz[m.c];
  return acc;
}

Scalar HomPoly::leading_coeff() const {
  return t_.empty() ? Scalar::zero(spec_) : t_.begin()->second;
}

HomPoly HomPoly::normalized() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

HomPoly HomPoly::embed(const FieldSpec& ff) const {
  HomPoly r(ff, deg_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, c.embed(ff));
  return r;
}

std::string HomPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    std::string cs = c.str();
    bool compound = spec_.is_function_field() && cs.find_first_of("+-/ ", 1) != std::string::npos;
    bool neg = !compound && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool mono = m.degree() > 0;
    if (cs != "1" || !mono) {
      os << (compound ? "(" + cs + ")" : cs);
      if (mono) os << "*";
    }
    if (mono) os << m.str();
  }
  return os.str();
}

namespace {

struct SparsePoly {
  std::map<Monomial, Scalar, GrlexGreater> t;
};

struct PolyOps {
  FieldSpec spec;

  static void add_into(SparsePoly& r, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = r.t.find(m);
    if (it == r.t.end()) {
      r.t.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) r.t.erase(it);
  }
  SparsePoly constant(const Scalar& c) {
    SparsePoly r;
    add_into(r, {0, 0, 0}, c);
    return r;
  }
  SparsePoly number(const mpq_class& q) { return constant(Scalar::from_rational(spec, q)); }
  SparsePoly variable(std::string_view name) {
    SparsePoly r;
    Scalar one = Scalar::one(spec);
    if (name == "x") r.t.emplace(Monomial{1, 0, 0}, one);
    else if (name == "y") r.t.emplace(Monomial{0, 1, 0}, one);
    else if (name == "z") r.t.emplace(Monomial{0, 0, 1}, one);
    else if (spec.is_function_field() && name == "s") return constant(Scalar::var_s(spec));
    else if (spec.is_function_field() && name == "t") return constant(Scalar::var_t(spec));
    else fail(ErrorCode::Parse, "unknown symbol '" + std::string(name) + "' in polynomial");
    return r;
  }
  SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (const auto& [m, c] : b.t) add_into(r, m, c);
    return r;
  }
  SparsePoly neg(const SparsePoly& a) {
    SparsePoly r;
    for (const auto& [m, c] : a.t) r.t.emplace(m, -c);
    return r;
  }
  SparsePoly sub(const SparsePoly& a, const SparsePoly& b) { return add(a, neg(b)); }
  SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [m, c] : a.t)
      for (const auto& [n, d] : b.t) add_into(r, m * n, c * d);
    return r;
  }
  SparsePoly div(const SparsePoly& a, const SparsePoly& b) {
    if (b.t.size() != 1 || b.t.begin()->first.degree() != 0)
      fail(ErrorCode::Parse, "division by a non-constant polynomial");
    Scalar inv = b.t.begin()->second.inverse();
    SparsePoly r;
    for (const auto& [m, c] : a.t) add_into(r, m, c * inv);
    return r;
  }
  SparsePoly pow(const SparsePoly& a, unsigned e) {
    SparsePoly r = constant(Scalar::one(spec));
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
};

}  // namespace

HomPoly HomPoly::parse(const FieldSpec& spec, std::string_view text) {
  PolyOps ops{spec};
  detail::ExprParser<SparsePoly, PolyOps> parser(text, ops);
  SparsePoly sp = parser.parse();
  if (sp.t.empty()) return HomPoly(spec, 0);
  int deg = sp.t.begin()->first.degree();
  HomPoly p(spec, deg);
  for (const auto& [m, c] : sp.t) {
    if (m.degree() != deg) fail(ErrorCode::Parse, "polynomial is not homogeneous: " + std::string(text));
    p.add_term(m, c);
  }
  return p;
}

// ---------------------------------------------------------------- partials

Partials partials(const HomPoly& f) {
  const FieldSpec& k = f.spec();
  int d = f.degree();
  if (d < 1) fail(ErrorCode::InvalidInput, "partials of a constant form");
  Partials p{HomPoly(k, d - 1), HomPoly(k, d - 1), HomPoly(k, d - 1), true};
  for (const auto& [m, c] : f.terms()) {
    if (m.a) p.fx.add_term({m.a - 1, m.b, m.c}, c * Scalar::from_int(k, m.a));
    if (m.b) p.fy.add_term({m.a, m.b - 1, m.c}, c * Scalar::from_int(k, m.b));
    if (m.c) p.fz.add_term({m.a, m.b, m.c - 1}, c * Scalar::from_int(k, m.c));
  }
  Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  HomPoly euler = HomPoly::linear(one, zero, zero) * p.fx + HomPoly::linear(zero, one, zero) * p.fy +
                  HomPoly::linear(zero, zero, one) * p.fz;
  p.euler_holds = euler == f.scaled(Scalar::from_int(k, d));
  return p;
}

// ---------------------------------------------------------------- transforms

ProjTransform::ProjTransform(const Mat& m) : m_(m) {
  ensure(m.rows() == 3 && m.cols() == 3, "ProjTransform needs a 3x3 matrix");
  if (rank(m) < 3) fail(ErrorCode::SingularTransform, "transform matrix is singular");
}

ProjTransform ProjTransform::identity(const FieldSpec& spec) {
  Mat m(3, 3, spec);
  for (int i = 0; i < 3; ++i) m.at(i, i) = Scalar::one(spec);
  return ProjTransform(m);
}

ProjTransform ProjTransform::from_rows(const std::array<ProjPoint, 3>& rows) {
  Mat m(3, 3, rows[0].spec());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.set(i, j, rows[i][j]);
  return ProjTransform(m);
}

ProjTransform ProjTransform::inverse() const {
  const FieldSpec& k = m_.spec();
  std::vector<std::vector<Scalar>> a(3, std::vector<Scalar>(6, Scalar::zero(k)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = m_.at(i, j);
    a[i][3 + i] = Scalar::one(k);
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    while (a[piv][c].is_zero()) ++piv;
    std::swap(a[c], a[piv]);
    Scalar inv = a[c][c].inverse();
    for (auto& x : a[c]) x = x * inv;
    for (int i = 0; i < 3; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int j = 0; j < 6; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  Mat r(3, 3, k);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = a[i][3 + j];
  return ProjTransform(r);
}

ProjTransform ProjTransform::compose(const ProjTransform& inner) const {
  Mat r(3, 3, m_.spec());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar acc = Scalar::zero(m_.spec());
      for (int k = 0; k < 3; ++k) acc = acc + m_.at(i, k) * inner.m_.at(k, j);
      r.at(i, j) = acc;
    }
  return ProjTransform(r);
}

std::array<Scalar, 3> ProjTransform::apply(const std::array<Scalar, 3>& v) const {
  std::array<Scalar, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = m_.at(i, 0) * v[0] + m_.at(i, 1) * v[1] + m_.at(i, 2) * v[2];
  return out;
}

HomPoly apply_transform(const HomPoly& f, const ProjTransform& t) {
  const FieldSpec& k = f.spec();
  const Mat& m = t.matrix();
  if (m.spec() != k) fail(ErrorCode::FieldMismatch, "transform and form over different fields");
  std::array<HomPoly, 3> lin;
  for (int i = 0; i < 3; ++i) lin[i] = HomPoly::linear(m.at(i, 0), m.at(i, 1), m.at(i, 2));
  std::array<std::vector<HomPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(HomPoly::monomial({0, 0, 0}, Scalar::one(k)));
    for (int e = 1; e <= f.degree(); ++e) pw[i].push_back(pw[i].back() * lin[i]);
  }
  HomPoly out(k, f.degree());
  for (const auto& [mono, c] : f.terms()) out = out + (pw[0][mono.a] * pw[1][mono.b] * pw[2][mono.c]).scaled(c);
  return out;
}

ProjTransform transform_moving_origin_to(const ProjPoint& p) {
  const FieldSpec& k = p.spec();
  int piv = p.first_nonzero();
  Mat m(3, 3, k);
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == piv) continue;
    m.at(i, col++) = Scalar::one(k);
  }
  for (int i = 0; i < 3; ++i) m.at(i, 2) = p[i];
  return ProjTransform(m);
}

int multiplicity_at(const HomPoly& f, const ProjPoint& p) {
  if (f.is_zero()) fail(ErrorCode::InvalidInput, "multiplicity of the zero form");
  HomPoly g = apply_transform(f, transform_moving_origin_to(p));
  int best = g.degree();
  for (const auto& [m, c] : g.terms()) best = std::min(best, m.a + m.b);
  return best;
}

std::optional<HomPoly> divide_by_linear(const HomPoly& f, const HomPoly& l) {
  if (l.is_zero() || l.degree() != 1) fail(ErrorCode::InvalidInput, "divisor must be a nonzero linear form");
  const FieldSpec& k = f.spec();
  if (f.is_zero()) return HomPoly(k, std::max(0, f.degree() - 1));
  if (f.degree() < 1) return std::nullopt;
  Monomial lead = l.terms().begin()->first;
  Scalar inv = l.terms().begin()->second.inverse();
  HomPoly rem = f;
  HomPoly q(k, f.degree() - 1);
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().begin();
    if ((lead.a && !m.a) || (lead.b && !m.b) || (lead.c && !m.c)) return std::nullopt;
    Monomial qm{m.a - lead.a, m.b - lead.b, m.c - lead.c};
    HomPoly term = HomPoly::monomial(qm, c * inv);
    q = q + term;
    rem = rem - term * l;
  }
  return q;
}

// ---------------------------------------------------------------- binary forms

BinaryForm::BinaryForm(const FieldSpec& spec, int degree)
    : spec_(spec), c_(static_cast<std::size_t>(degree + 1), Scalar::zero(spec)) {}

BinaryForm::BinaryForm(const FieldSpec& spec, std::vector<Scalar> coeffs) : spec_(spec), c_(std::move(coeffs)) {}

bool BinaryForm::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (o.degree() != degree()) fail(ErrorCode::InvalidInput, "sum of binary forms of different degrees");
  BinaryForm r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o.scaled(-Scalar::one(o.spec_)); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r(spec_, degree() + o.degree());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  return r;
}

BinaryForm BinaryForm::scaled(const Scalar& k) const {
  BinaryForm r = *this;
  for (auto& x : r.c_) x = x * k;
  return r;
}

BinaryForm BinaryForm::monic() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return scaled(x.inverse());
  return *this;
}

std::optional<BinaryForm> BinaryForm::divide(const BinaryForm& d) const {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero binary form");
  int n = degree(), m = d.degree();
  if (is_zero()) return BinaryForm(spec_, std::max(0, n - m));
  if (m > n) return std::nullopt;
  int lead = 0;
  while (d.c_[lead].is_zero()) ++lead;
  Scalar inv = d.c_[lead].inverse();
  std::vector<Scalar> rem = c_;
  BinaryForm q(spec_, n - m);
  for (int i = 0; i + m <= n; ++i) {
    int pos = i + lead;
    if (pos > n) break;
    if (rem[pos].is_zero()) continue;
    Scalar f = rem[pos] * inv;
    q.c_[i] = f;
    for (int j = 0; j <= m; ++j)
      if (!d.c_[j].is_zero()) rem[i + j] = rem[i + j] - f * d.c_[j];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return std::nullopt;
  return q;
}

Scalar BinaryForm::eval(const Scalar& alpha, const Scalar& beta) const {
  Scalar acc = Scalar::zero(spec_);
  int n = degree();
  for (int i = 0; i <= n; ++i) acc = acc + c_[i] * alpha.pow(n - i) * beta.pow(i);
  return acc;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  int n = degree();
  for (int i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].str();
    bool neg = cs[0] == '-' && !spec_.is_function_field();
    if (neg) cs = cs.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool mono = n > 0;
    if (cs != "1" || !mono) os << cs << (mono ? "*" : "");
    std::string m;
    if (n - i) m += "a" + (n - i > 1 ? "^" + std::to_string(n - i) : "");
    if (i) m += std::string(m.empty() ? "" : "*") + "b" + (i > 1 ? "^" + std::to_string(i) : "");
    os << m;
  }
  return first ? "0" : os.str();
}

std::array<ProjPoint, 2> dual_line_basis(const ProjPoint& p) {
  const FieldSpec& k = p.spec();
  int drop = p.last_nonzero();
  std::array<ProjPoint, 2> out;
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == drop) continue;
    std::array<Scalar, 3> v{Scalar::zero(k), Scalar::zero(k), Scalar::zero(k)};
    v[i] = Scalar::one(k);
    v[drop] = -(p[i] / p[drop]);
    out[n++] = ProjPoint(v[0], v[1], v[2]);
  }
  return out;
}

BinaryForm restrict_to_line(const HomPoly& f, const ProjPoint& p) {
  const FieldSpec& k = f.spec();
  auto basis = dual_line_basis(p);
  int d = f.degree();
  std::array<std::vector<BinaryForm>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    BinaryForm lin(k, std::vector<Scalar>{basis[0][v], basis[1][v]});
    pw[v].push_back(BinaryForm(k, std::vector<Scalar>{Scalar::one(k)}));
    for (int e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * lin);
  }
  BinaryForm out(k, d);
  for (const auto& [m, c] : f.terms()) out = out + (pw[0][m.a] * pw[1][m.b] * pw[2][m.c]).scaled(c);
  return out;
}

namespace {

using UniPoly = std::vector<Scalar>;  // low to high

void trim(UniPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
  Scalar inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Scalar f = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidInput, "gcd of two zero binary forms");
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  const FieldSpec& k = f.spec();
  auto beta_power = [](const BinaryForm& h) {
    int i = 0;
    while (h[i].is_zero()) ++i;
    return i;
  };
  int kb = std::min(beta_power(f), beta_power(g));
  auto dehom = [](const BinaryForm& h) {
    UniPoly u(h.coeffs().rbegin(), h.coeffs().rend());
    trim(u);
    return u;
  };
  UniPoly a = dehom(f), b = dehom(g);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int da = static_cast<int>(a.size()) - 1;
  std::vector<Scalar> c(static_cast<std::size_t>(da + kb + 1), Scalar::zero(k));
  for (int j = 0; j <= da; ++j) c[static_cast<std::size_t>(kb + da - j)] = a[static_cast<std::size_t>(j)];
  return BinaryForm(k, std::move(c)).monic();
}

}  // namespace uc
