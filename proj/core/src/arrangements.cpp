#include "uc/arrangements.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace uc {

namespace {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Rows spanning [J]_t, each as dense coefficients in monomial_basis(t).
std::vector<std::vector<Scalar>> jacobian_rows(const HomPoly& f, int t) {
  const FieldSpec& k = f.spec();
  const int d = f.degree();
  std::vector<std::vector<Scalar>> rows;
  auto add_multiples = [&](const HomPoly& g, int deg) {
    if (deg < 0 || g.is_zero()) return;
    for (const auto& mon : monomial_basis(deg)) {
      std::vector<Scalar> row(basis_size(t), Scalar::zero(k));
      for (const auto& [m, c] : g.terms()) row[monomial_index(m * mon)] = c;
      rows.push_back(std::move(row));
    }
  };
  Partials pd = partials(f);
  add_multiples(pd.fx, t - d + 1);
  add_multiples(pd.fy, t - d + 1);
  add_multiples(pd.fz, t - d + 1);
  add_multiples(f, t - d);
  return rows;
}

la::IntMatrix integer_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<mpq_class> q;
  q.reserve(rows.size() * cols);
  for (const auto& r : rows)
    for (const auto& e : r) q.push_back(e.rational());
  return la::clear_denominators(q, rows.size(), cols);
}

std::size_t exact_rank(const std::vector<std::vector<Scalar>>& rows, std::size_t cols, const FieldSpec& k) {
  Mat m(rows.size(), cols, k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return rank(m);
}

// Local inverse system at an ordinary point of multiplicity m: for each degree
// k <= 2m - 4, vectors orthogonal to the degree-k part of (g_u, g_v).
struct LocalDual {
  ProjPoint q;
  int i1 = 0, i2 = 0;  // coordinates playing u and v
  std::vector<std::pair<int, std::vector<mpq_class>>> functionals;
};

LocalDual local_dual(const LineArrangement& arr, const IncidencePoint& ip) {
  const FieldSpec& k = arr.spec();
  LocalDual out;
  out.q = ip.point;
  int c = ip.point.first_nonzero();
  std::array<int, 2> other{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != c) other[n++] = i;
  out.i1 = other[0];
  out.i2 = other[1];
  BinaryForm g(k, std::vector<Scalar>{Scalar::one(k)});
  for (auto li : ip.incident) {
    const ProjPoint& l = arr.coeffs(li);
    g = g * BinaryForm(k, std::vector<Scalar>{l[out.i1], l[out.i2]});
  }
  const int m = static_cast<int>(ip.multiplicity);
  std::vector<Scalar> gu(m, Scalar::zero(k)), gv(m, Scalar::zero(k));
  for (int i = 0; i <= m; ++i) {
    if (i < m) gu[i] = g[i] * Scalar::from_int(k, m - i);
    if (i > 0) gv[i - 1] = g[i] * Scalar::from_int(k, i);
  }
  std::size_t total = 0;
  for (int deg = 0; deg <= 2 * m - 4; ++deg) {
    int hdeg = deg - (m - 1);
    Mat rel(hdeg >= 0 ? 2 * static_cast<std::size_t>(hdeg + 1) : 0, static_cast<std::size_t>(deg + 1), k);
    for (int h = 0; h <= hdeg; ++h)
      for (int i = 0; i < m; ++i) {
        rel.at(2 * h, h + i) = gu[i];
        rel.at(2 * h + 1, h + i) = gv[i];
      }
    for (const auto& v : kernel_basis(rel)) {
      std::vector<mpq_class> w;
      for (const auto& s : v) w.push_back(s.rational());
      out.functionals.push_back({deg, std::move(w)});
      ++total;
    }
  }
  ensure(total == static_cast<std::size_t>((m - 1) * (m - 1)), "local inverse system has the wrong length");
  return out;
}

// Rows of the local functionals on [R]_t, reduced mod p.
void append_local_rows(const LocalDual& ld, int t, std::uint64_t p, std::vector<std::vector<std::uint64_t>>& rows) {
  int K = 0;
  for (const auto& f : ld.functionals) K = std::max(K, f.first);
  // Truncated series in u, v: index (deg, j) -> coefficient of u^(deg-j) v^j.
  const std::size_t S = static_cast<std::size_t>((K + 1) * (K + 2) / 2);
  auto idx = [](int deg, int j) { return static_cast<std::size_t>(deg * (deg + 1) / 2 + j); };
  using Series = std::vector<std::uint64_t>;
  auto mul = [&](const Series& a, const Series& b) {
    Series r(S, 0);
    for (int da = 0; da <= K; ++da)
      for (int ja = 0; ja <= da; ++ja) {
        std::uint64_t x = a[idx(da, ja)];
        if (!x) continue;
        for (int db = 0; da + db <= K; ++db)
          for (int jb = 0; jb <= db; ++jb) {
            std::uint64_t y = b[idx(db, jb)];
            if (!y) continue;
            std::size_t o = idx(da + db, ja + jb);
            r[o] = (r[o] + modp::mul(x, y, p)) % p;
          }
      }
    return r;
  };
  // x_v = u * [v == i1] + v * [v == i2] + w * q_v.
  std::array<std::vector<Series>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    Series lin(S, 0);
    lin[idx(0, 0)] = modp::reduce(ld.q[v].rational(), p);
    if (K >= 1) {
      if (v == ld.i1) lin[idx(1, 0)] = 1;
      if (v == ld.i2) lin[idx(1, 1)] = 1;
    }
    Series one(S, 0);
    one[0] = 1;
    pw[v].push_back(one);
    for (int e = 1; e <= t; ++e) pw[v].push_back(mul(pw[v].back(), lin));
  }
  auto basis = monomial_basis(t);
  std::vector<Series> images;
  images.reserve(basis.size());
  for (const auto& mon : basis) images.push_back(mul(mul(pw[0][mon.a], pw[1][mon.b]), pw[2][mon.c]));
  for (const auto& [deg, w] : ld.functionals) {
    std::vector<std::uint64_t> row(basis.size(), 0);
    std::vector<std::uint64_t> wm;
    for (const auto& x : w) wm.push_back(modp::reduce(x, p));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      std::uint64_t acc = 0;
      for (int j = 0; j <= deg; ++j) acc = (acc + modp::mul(wm[j], images[c][idx(deg, j)], p)) % p;
      row[c] = acc;
    }
    rows.push_back(std::move(row));
  }
}

std::optional<std::size_t> bounded_jacobian_dim(const LineArrangement& arr, const std::vector<LocalDual>& duals,
                                                int t, std::uint64_t p) {
  HomPoly f = arr.product();
  auto rows = jacobian_rows(f, t);
  std::size_t cols = basis_size(t);
  la::ModMatrix jm = la::reduce_mod(integer_rows(rows, cols), p);
  std::size_t upper = cols - la::rank_mod(std::move(jm));
  std::vector<std::vector<std::uint64_t>> lr;
  for (const auto& ld : duals) append_local_rows(ld, t, p, lr);
  la::ModMatrix lm(lr.size(), cols, p);
  for (std::size_t i = 0; i < lr.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) lm.at(i, j) = lr[i][j];
  std::size_t lower = la::rank_mod(std::move(lm));
  if (lower == upper) return lower;
  return std::nullopt;
}

HomPoly det_with_euler(const SyzygyTriple& s1, const SyzygyTriple& s2) {
  const FieldSpec& k = s1.s[0].spec();
  HomPoly x = HomPoly::monomial({1, 0, 0}, Scalar::one(k));
  HomPoly y = HomPoly::monomial({0, 1, 0}, Scalar::one(k));
  HomPoly z = HomPoly::monomial({0, 0, 1}, Scalar::one(k));
  const auto& a = s1.s;
  const auto& b = s2.s;
  return x * (a[1] * b[2] - a[2] * b[1]) - y * (a[0] * b[2] - a[2] * b[0]) + z * (a[0] * b[1] - a[1] * b[0]);
}

}  // namespace

std::vector<IncidencePoint> singular_points(const LineArrangement& a) {
  if (a.size() < 2) fail(ErrorCode::InvalidInput, "need at least two lines");
  std::map<std::string, std::size_t> where;
  std::vector<IncidencePoint> out;
  std::vector<std::set<std::size_t>> inc;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      ProjPoint p = a.coeffs(i).cross(a.coeffs(j));
      auto [it, fresh] = where.emplace(p.str(), out.size());
      if (fresh) {
        out.push_back({p, 0, {}});
        inc.emplace_back();
      }
      inc[it->second].insert(i);
      inc[it->second].insert(j);
    }
  long sum = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].incident.assign(inc[k].begin(), inc[k].end());
    out[k].multiplicity = inc[k].size();
    sum += binom2(static_cast<long>(out[k].multiplicity));
  }
  ensure(sum == binom2(static_cast<long>(a.size())), "incidence count does not add up to C(d, 2)");
  return out;
}

std::size_t jacobian_dim(const LineArrangement& a, int t) {
  if (t < 0) return 0;
  HomPoly f = a.product();
  auto rows = jacobian_rows(f, t);
  return basis_size(t) - exact_rank(rows, basis_size(t), a.spec());
}

JacobianDegree deg_jacobian(const LineArrangement& a) {
  const int d = static_cast<int>(a.size());
  if (d < 2) fail(ErrorCode::InvalidInput, "need at least two lines");
  JacobianDegree out;
  const int start = std::max(0, 2 * (d - 2)), cap = 3 * d;
  std::vector<LocalDual> duals;
  bool use_bounds = false;
  for (int t = start; t <= cap; ++t) {
    std::size_t cols = basis_size(t);
    std::size_t rows = 3 * basis_size(t - d + 1) + (t >= d ? basis_size(t - d) : 0);
    std::optional<std::size_t> v;
    if (a.spec().is_rationals() && rows * cols > 60000) {
      if (duals.empty())
        for (const auto& ip : singular_points(a)) duals.push_back(local_dual(a, ip));
      for (std::size_t k = 0; k < 3 && !v; ++k) v = bounded_jacobian_dim(a, duals, t, la::large_prime(k));
      use_bounds = use_bounds || v.has_value();
    }
    if (!v) v = jacobian_dim(a, t);
    out.sequence.push_back({t, *v});
    std::size_t n = out.sequence.size();
    if (n >= 3 && out.sequence[n - 1].second == out.sequence[n - 2].second &&
        out.sequence[n - 2].second == out.sequence[n - 3].second) {
      out.value = *v;
      out.method = use_bounds ? "bounds" : "exact";
      return out;
    }
  }
  fail(ErrorCode::NoStabilization, "Jacobian dimension not constant over three degrees by t = " + std::to_string(cap));
}

long c2(const LineArrangement& a) {
  long d = static_cast<long>(a.size());
  return (d - 1) * (d - 1) - static_cast<long>(deg_jacobian(a).value);
}

std::optional<SaitoCertificate> saito_certificate(const LineArrangement& arr, int a, int b) {
  HomPoly f = arr.product();
  if (a < 0 || b < a) return std::nullopt;
  auto sa = global_syzygies(f, a);
  if (sa.empty()) return std::nullopt;
  auto sb = a == b ? sa : global_syzygies(f, b);
  for (std::size_t i = 0; i < sa.size(); ++i)
    for (std::size_t j = a == b ? i + 1 : 0; j < sb.size(); ++j) {
      HomPoly det = det_with_euler(sa[i], sb[j]);
      if (det.is_zero()) continue;
      Scalar c = det.leading_coeff() / f.leading_coeff();
      ensure(det == f.scaled(c), "Saito determinant is not a multiple of f");
      return SaitoCertificate{sa[i], sb[j], c};
    }
  return std::nullopt;
}

FreenessReport freeness(const LineArrangement& arr, const GenericMode& mode, Rng& rng) {
  FreenessReport r;
  const long d = static_cast<long>(arr.size());
  GenericMode sym = GenericMode::symbolic();
  sym.seed = mode.seed;
  Splitting s = compute_splitting(dual_points(arr), sym, rng);
  r.a = s.a;
  r.b = s.b;
  r.splitting_cert = s.cert;
  std::uint64_t ch = arr.spec().characteristic();
  r.c2_route = ch == 0 || d % static_cast<long>(ch) != 0;
  auto mods = modular_points(arr);
  if (!mods.empty()) {
    r.modular_point = mods.front();
    auto ss = supersolvable(arr);
    ensure(ss && ss->first == r.a && ss->second == r.b, "modular point splitting differs from the computed one");
  }
  if (r.c2_route) {
    auto dj = deg_jacobian(arr);
    r.deg_jac = dj.value;
    r.c2 = (d - 1) * (d - 1) - static_cast<long>(dj.value);
    ensure(r.c2 >= static_cast<long>(r.a) * r.b, "c2 below a * b");
    r.free = r.c2 == static_cast<long>(r.a) * r.b;
    r.saito = saito_certificate(arr, r.a, r.b).has_value();
    ensure(r.saito == r.free, "Saito criterion disagrees with the Chern class test");
    if (r.modular_point) ensure(r.free, "supersolvable arrangement reported not free");
    r.notes.push_back("Jacobian degree by " + dj.method);
  } else {
    r.free = r.modular_point.has_value();
    r.notes.push_back("characteristic divides the number of lines: Chern class route disabled");
    if (!r.free) fail(ErrorCode::CharDividesDegree, r.notes.back() + "; freeness undetermined");
    r.notes.push_back("free by a modular point");
  }
  return r;
}

std::size_t restriction_count(const LineArrangement& a, std::size_t i) {
  std::set<std::string> pts;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) pts.insert(a.coeffs(i).cross(a.coeffs(j)).str());
  return pts.size();
}

AddDelVerdict addition_deletion(const LineArrangement& a, std::size_t line, const AddDelClaims& claims) {
  if (line >= a.size()) fail(ErrorCode::InvalidInput, "line index out of range");
  auto sorted = [](std::pair<int, int> p) { return p.first <= p.second ? p : std::make_pair(p.second, p.first); };
  AddDelVerdict v;
  v.restriction = restriction_count(a, line);
  const std::size_t n = v.restriction;
  if (claims.restriction && *claims.restriction != n) {
    v.message = "claimed restriction count " + std::to_string(*claims.restriction) + " but A'' has " +
                std::to_string(n) + " points";
    return v;
  }
  const int bn = static_cast<int>(n) - 1;
  if (claims.a_prime_exp) {
    auto [x, y] = sorted(*claims.a_prime_exp);
    v.a_prime_exp = {x, y};
    std::optional<std::pair<int, int>> implied;
    if (bn == y) implied = sorted({x + 1, y});
    else if (bn == x) implied = sorted({x, y + 1});
    if (!implied) {
      v.message = "A'' has " + std::to_string(n) + " points, matching neither exponent of A' plus one";
      return v;
    }
    if (claims.a_exp && sorted(*claims.a_exp) != *implied) {
      v.message = "claimed exponents of A contradict A' and A''";
      return v;
    }
    v.a_exp = *implied;
    v.kind = AddDelVerdict::Kind::Implied;
    v.message = "A is free";
    return v;
  }
  if (claims.a_exp) {
    auto [x, y] = sorted(*claims.a_exp);
    v.a_exp = {x, y};
    std::optional<std::pair<int, int>> implied;
    if (bn == y && x >= 1) implied = sorted({x - 1, y});
    else if (bn == x && y >= 1) implied = sorted({x, y - 1});
    if (!implied) {
      v.message = "A'' has " + std::to_string(n) + " points, matching neither exponent of A";
      return v;
    }
    v.a_prime_exp = *implied;
    v.kind = AddDelVerdict::Kind::Implied;
    v.message = "A' is free";
    return v;
  }
  v.message = "exponents of A or A' are required";
  return v;
}

std::vector<ProjPoint> modular_points(const LineArrangement& a) {
  std::vector<ProjPoint> out;
  if (a.size() < 2) return out;
  auto sing = singular_points(a);
  std::set<std::string> lines;
  for (const auto& c : a.all_coeffs()) lines.insert(c.str());
  for (const auto& p : sing) {
    bool ok = true;
    for (const auto& q : sing) {
      if (q.point == p.point) continue;
      if (!lines.count(p.point.cross(q.point).str())) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p.point);
  }
  return out;
}

std::optional<std::pair<int, int>> supersolvable(const LineArrangement& a) {
  auto mods = modular_points(a);
  if (mods.empty()) return std::nullopt;
  int m = 0;
  for (const auto& c : a.all_coeffs())
    if (c.dot(mods.front()).is_zero()) ++m;
  int x = m - 1, y = static_cast<int>(a.size()) - m;
  return std::make_pair(std::min(x, y), std::max(x, y));
}

std::string IncidenceSignature::str() const {
  std::ostringstream os;
  os << "points[";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) os << (i ? "," : "") << multiplicities[i];
  os << "] lines[";
  for (std::size_t i = 0; i < per_line.size(); ++i) {
    os << (i ? " " : "") << "(";
    for (std::size_t j = 0; j < per_line[i].size(); ++j) os << (j ? "," : "") << per_line[i][j];
    os << ")";
  }
  os << "]";
  return os.str();
}

IncidenceSignature incidence_signature(const LineArrangement& a) {
  IncidenceSignature s;
  s.per_line.resize(a.size());
  for (const auto& p : singular_points(a)) {
    s.multiplicities.push_back(p.multiplicity);
    for (auto i : p.incident) s.per_line[i].push_back(p.multiplicity);
  }
  std::sort(s.multiplicities.begin(), s.multiplicities.end());
  for (auto& l : s.per_line) std::sort(l.begin(), l.end());
  std::sort(s.per_line.begin(), s.per_line.end());
  return s;
}

}  // namespace uc
