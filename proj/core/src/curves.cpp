#include "uc/curves.hpp"

#include <algorithm>

#include "uc/arrangements.hpp"
#include "fatpoint.hpp"

namespace uc {

namespace {

// Matrix A with moved coordinates q' = A q, as used by the fat-point evaluation.
ProjTransform moving_matrix(const ProjPoint& p) {
  const FieldSpec& k = p.spec();
  int c = p.first_nonzero();
  std::array<int, 2> other{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != c) other[n++] = i;
  Mat a(3, 3, k);
  for (int r = 0; r < 2; ++r) {
    a.at(r, other[r]) = Scalar::one(k);
    a.at(r, c) = -p[other[r]];
  }
  a.at(2, c) = Scalar::one(k);
  return ProjTransform(a);
}

HomPoly lift_binary(const BinaryForm& g, int i1, int i2) {
  const FieldSpec& k = g.spec();
  HomPoly out(k, g.degree());
  for (int i = 0; i <= g.degree(); ++i) {
    if (g[i].is_zero()) continue;
    int e[3] = {0, 0, 0};
    e[i1] = g.degree() - i;
    e[i2] = i;
    out.add_term({e[0], e[1], e[2]}, g[i]);
  }
  return out;
}

std::array<int, 2> free_indices(const ProjPoint& p) {
  int drop = p.last_nonzero();
  std::array<int, 2> out{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != drop) out[n++] = i;
  return out;
}

ProjPoint coefficient_point(const HomPoly& l) {
  return ProjPoint(l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1}));
}

PointConfig embed_config(const PointConfig& z, const FieldSpec& k) {
  if (z.spec() == k) return z;
  std::vector<ProjPoint> pts;
  for (const auto& q : z.points()) pts.push_back(q.embed(k));
  return PointConfig(k, std::move(pts));
}

int index_of_config(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  if (z.size() == 0) return -1;
  if (z.size() == 1) return 0;
  return compute_splitting(z, mode, rng).a;
}

}  // namespace

CurveRecord curve_CP(const PointConfig& z, const ProjPoint& p, int m_Z) {
  const FieldSpec& k = p.spec();
  if (k != z.spec() && k != z.spec().with_function_field())
    fail(ErrorCode::FieldMismatch, "P must lie over the field of Z or its function field");
  if (z.contains(p)) fail(ErrorCode::PointInZ, p.str() + " lies in Z");
  auto cols = detail::fat_columns(m_Z, m_Z + 1);
  auto pts = detail::moved_coords(z, p);
  Mat m(pts.size(), cols.size(), k);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.at(i, c) = pts[i][0].pow(static_cast<unsigned>(cols[c].a)) * pts[i][1].pow(static_cast<unsigned>(cols[c].b)) *
                   pts[i][2].pow(static_cast<unsigned>(cols[c].c));
  auto ker = kernel_basis(m);
  if (ker.empty() || ker.size() > 2)
    fail(ErrorCode::UnexpectedKernelDim, "kernel of dimension " + std::to_string(ker.size()) + " at " + p.str());
  CurveRecord rec;
  rec.P = p;
  rec.m_Z = m_Z;
  ProjTransform a = moving_matrix(p);
  PointConfig zk = embed_config(z, k);
  for (const auto& v : ker) {
    HomPoly g(k, m_Z + 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!v[c].is_zero()) g.add_term(cols[c], v[c]);
    HomPoly f = apply_transform(g, a).normalized();
    for (const auto& q : zk.points()) ensure(f.eval(q).is_zero(), "curve misses a point of Z");
    rec.basis.push_back(f);
  }
  if (rec.basis.size() == 1) {
    rec.mult_F = multiplicity_at(rec.F(), p);
    ensure(rec.mult_F == m_Z, "curve has the wrong multiplicity at P");
  }
  return rec;
}

CurveRecord decompose(CurveRecord rec, const PointConfig& z, const GenericMode& mode, Rng& rng) {
  if (rec.basis.size() != 1) fail(ErrorCode::InvalidInput, "decompose needs a single curve, not a pencil");
  const FieldSpec& k = rec.P.spec();
  PointConfig zk = embed_config(z, k);
  HomPoly core = rec.F();
  std::vector<std::string> seen;
  rec.peeled.clear();
  for (std::size_t i = 0; i < zk.size(); ++i) {
    HomPoly l = HomPoly::linear(rec.P.cross(zk[i]));
    std::string key = l.normalized().str();
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      fail(ErrorCode::StructureViolation, "P lies on a line through two points of Z");
    seen.push_back(key);
    if (auto q = divide_by_linear(core, l)) {
      core = *q;
      rec.peeled.push_back({l, i});
    }
  }
  HomPoly prod = core;
  for (const auto& pl : rec.peeled) prod = prod * pl.line;
  ensure(prod == rec.F(), "F differs from core times peeled lines");

  rec.z_prime.clear();
  std::vector<ProjPoint> zp;
  for (std::size_t i = 0; i < zk.size(); ++i) {
    bool peeled = std::any_of(rec.peeled.begin(), rec.peeled.end(), [&](const PeeledLine& pl) { return pl.point == i; });
    bool on = core.eval(zk[i]).is_zero();
    if (peeled && on) fail(ErrorCode::StructureViolation, "core passes through a peeled point");
    if (!peeled) {
      ensure(on, "core misses a point of Z'");
      rec.z_prime.push_back(i);
      zp.push_back(z[i]);
    }
  }
  rec.core = core.normalized();
  rec.mult_core = core.degree() == 0 ? 0 : multiplicity_at(core, rec.P);
  rec.m_Z_prime = zp.empty() ? -1 : index_of_config(PointConfig(z.spec(), zp), mode, rng);
  ensure(core.degree() == rec.m_Z_prime + 1, "core degree differs from m_{Z'} + 1");
  ensure(core.degree() == 0 || rec.mult_core == core.degree() - 1, "core multiplicity at P is not deg - 1");
  ensure(static_cast<int>(rec.peeled.size()) == rec.m_Z - rec.m_Z_prime, "peeled count differs from m_Z - m_{Z'}");
  rec.irreducible_for_this_P = rec.peeled.empty();
  return rec;
}

DegreeFamily unexpected_in_degree(const PointConfig& z, const ProjPoint& p, int t, const Splitting& s) {
  int m = s.a, u = s.b - 1;
  if (t <= m || t > u)
    fail(ErrorCode::OutOfRange, "degree " + std::to_string(t) + " outside the unexpected range " +
                                    std::to_string(m + 1) + ".." + std::to_string(u));
  DegreeFamily out;
  out.curve = curve_CP(z, p, m);
  out.free_lines = t - m - 1;
  auto cols = detail::fat_columns(t - 1, t);
  out.dim = cols.size() - detail::eval_rank(detail::moved_coords(z, p), cols, p.spec());
  if (out.dim != static_cast<std::size_t>(out.free_lines + 1))
    fail(ErrorCode::StructureViolation, "dimension in degree " + std::to_string(t) + " is " +
                                            std::to_string(out.dim) + ", expected " +
                                            std::to_string(out.free_lines + 1));
  return out;
}

bool irreducibility_by_deletion(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  if (z.size() < 3) fail(ErrorCode::InvalidInput, "deletion test needs at least three points");
  int m = compute_splitting(z, mode, rng).a;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (compute_splitting(z.without(i), mode, rng).a != m) return false;
  return true;
}

std::vector<SyzygyTriple> global_syzygies(const HomPoly& f, int m) {
  const FieldSpec& k = f.spec();
  const int d = f.degree();
  std::vector<SyzygyTriple> out;
  if (m < 0 || d < 1) return out;
  if (k.characteristic() != 0 && d % static_cast<long>(k.characteristic()) == 0)
    fail(ErrorCode::CharDividesDegree, "characteristic divides deg f");
  Partials pd = partials(f);
  const std::array<const HomPoly*, 3> df{&pd.fx, &pd.fy, &pd.fz};
  auto src = monomial_basis(m);
  Mat mat(basis_size(m + d - 1), 3 * src.size(), k);
  for (int b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [mon, coef] : df[b]->terms()) mat.at(monomial_index(mon * src[c]), b * src.size() + c) = coef;
  for (const auto& v : kernel_basis(mat)) {
    SyzygyTriple syz;
    for (int b = 0; b < 3; ++b) {
      syz.s[b] = HomPoly(k, m);
      for (std::size_t c = 0; c < src.size(); ++c)
        if (!v[b * src.size() + c].is_zero()) syz.s[b].add_term(src[c], v[b * src.size() + c]);
    }
    out.push_back(std::move(syz));
  }
  return out;
}

std::optional<SyzygyTriple> syzygy_min_degree(const HomPoly& f, const std::optional<HomPoly>& ell, int m) {
  const FieldSpec& k = f.spec();
  const int d = f.degree();
  if (m < 0 || d < 1) return std::nullopt;
  Partials pd = partials(f);
  const std::array<const HomPoly*, 3> df{&pd.fx, &pd.fy, &pd.fz};
  SyzygyTriple out;
  if (!ell) {
    auto all = global_syzygies(f, m);
    if (all.empty()) return std::nullopt;
    return all.front();
  }
  if (ell->degree() != 1 || ell->is_zero()) fail(ErrorCode::InvalidInput, "ell must be a nonzero linear form");
  ProjPoint lp = coefficient_point(*ell);
  std::array<BinaryForm, 3> r;
  for (int b = 0; b < 3; ++b) r[b] = restrict_to_line(*df[b], lp);
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  Mat mat(static_cast<std::size_t>(m + d), 3 * n, k);
  for (int b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < n; ++c)
      for (int e = 0; e <= d - 1; ++e)
        if (!r[b][e].is_zero()) mat.at(c + static_cast<std::size_t>(e), b * n + c) = r[b][e];
  auto ker = kernel_basis(mat);
  if (ker.empty()) return std::nullopt;
  auto fi = free_indices(lp);
  HomPoly total(k, m + d - 1);
  for (int b = 0; b < 3; ++b) {
    std::vector<Scalar> cs(ker[0].begin() + b * n, ker[0].begin() + (b + 1) * n);
    out.s[b] = lift_binary(BinaryForm(k, cs), fi[0], fi[1]);
    total = total + out.s[b] * *df[b];
  }
  out.mod_ell = *ell;
  if (total.is_zero()) {
    out.s3 = HomPoly(k, m + d - 2);
  } else {
    auto q = divide_by_linear(total, *ell);
    ensure(q.has_value(), "lifted syzygy not divisible by ell");
    out.s3 = -*q;
  }
  return out;
}

std::optional<SyzygyTriple> least_syzygy(const HomPoly& f, const std::optional<HomPoly>& ell) {
  for (int m = 0; m <= f.degree(); ++m)
    if (auto s = syzygy_min_degree(f, ell, m)) return s;
  return std::nullopt;
}

std::array<HomPoly, 3> cross_with_xyz(const SyzygyTriple& syz) {
  const FieldSpec& k = syz.s[0].spec();
  HomPoly x = HomPoly::monomial({1, 0, 0}, Scalar::one(k));
  HomPoly y = HomPoly::monomial({0, 1, 0}, Scalar::one(k));
  HomPoly z = HomPoly::monomial({0, 0, 1}, Scalar::one(k));
  return {y * syz.s[2] - z * syz.s[1], z * syz.s[0] - x * syz.s[2], x * syz.s[1] - y * syz.s[0]};
}

BinaryForm compose(const HomPoly& g, const std::array<BinaryForm, 3>& phi) {
  const FieldSpec& k = g.spec();
  int e = phi[0].degree();
  BinaryForm out(k, g.degree() * e);
  std::array<std::vector<BinaryForm>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back(BinaryForm(k, std::vector<Scalar>{Scalar::one(k)}));
    for (int i = 1; i <= g.degree(); ++i) pw[v].push_back(pw[v].back() * phi[v]);
  }
  for (const auto& [m, c] : g.terms()) out = out + (pw[0][m.a] * pw[1][m.b] * pw[2][m.c]).scaled(c);
  return out;
}

Parametrization parametrize(const PointConfig& z, const ProjPoint& p, const SyzygyTriple& syz,
                            const GenericMode& mode, Rng& rng) {
  const FieldSpec& base = z.spec();
  std::uint64_t ch = base.characteristic();
  if (ch != 0 && z.size() % ch == 0) fail(ErrorCode::CharacteristicObstruction, "characteristic divides |Z|");
  Splitting s = compute_splitting(z, mode, rng);
  int m = s.a;
  if (m > s.b - 1) fail(ErrorCode::InvalidInput, "parametrization needs m_Z <= u_Z");
  if (syz.degree() != m) fail(ErrorCode::InvalidInput, "syzygy degree differs from m_Z");
  const FieldSpec& k = p.spec();
  if (syz.s[0].spec() != k) fail(ErrorCode::FieldMismatch, "syzygy and P over different fields");
  if (syz.mod_ell && coefficient_point(*syz.mod_ell) != p)
    fail(ErrorCode::InvalidInput, "the syzygy is taken modulo a line other than the dual of P");

  CurveRecord rec = decompose(curve_CP(z, p, m), z, mode, rng);
  auto t = cross_with_xyz(syz);
  std::array<BinaryForm, 3> tb;
  for (int i = 0; i < 3; ++i) tb[i] = restrict_to_line(t[i], p);
  Parametrization out;
  out.h = binary_gcd(binary_gcd(tb[0], tb[1]), tb[2]);
  out.n = out.h.degree();
  if (out.n != static_cast<int>(rec.peeled.size()))
    fail(ErrorCode::GcdDegreeMismatch, "gcd degree " + std::to_string(out.n) + " but " +
                                           std::to_string(rec.peeled.size()) + " peeled lines");
  for (int i = 0; i < 3; ++i) {
    auto q = tb[i].divide(out.h);
    ensure(q.has_value(), "gcd does not divide a component");
    out.phi[i] = *q;
  }
  out.component_degree = m + 1 - out.n;
  ensure(out.phi[0].degree() == out.component_degree, "map degree differs from m_Z + 1 - n");
  ensure(rec.core->degree() == out.component_degree, "core degree differs from m_Z + 1 - n");
  ensure(compose(*rec.core, out.phi).is_zero(), "core does not vanish on the parametrization");

  BinaryForm prod(k, std::vector<Scalar>{Scalar::one(k)});
  for (const auto& pl : rec.peeled) {
    const ProjPoint& q = z[pl.point];
    prod = prod * restrict_to_line(HomPoly::linear(q.spec() == k ? q : q.embed(k)), p);
  }
  out.h_splits = prod.monic() == out.h.monic();
  return out;
}

std::optional<bool> irreducible_by_global_syzygy(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  std::uint64_t ch = z.spec().characteristic();
  if (ch != 0 && z.size() % ch == 0) return std::nullopt;
  Splitting s = compute_splitting(z, mode, rng);
  if (s.a > s.b - 1) return std::nullopt;
  auto cert = saito_certificate(dual_lines(z), s.a, s.b);
  if (!cert) return std::nullopt;
  auto t = cross_with_xyz(cert->first);
  for (const auto& q : z.points()) {
    HomPoly l = HomPoly::linear(q);
    if (divide_by_linear(t[0], l) && divide_by_linear(t[1], l) && divide_by_linear(t[2], l)) return false;
  }
  return true;
}

bool mz_after_adding_dual(const PointConfig& z, const ProjPoint& q, const SyzygyTriple& syz) {
  std::uint64_t ch = z.spec().characteristic();
  if (ch != 0 && (z.size() % ch == 0 || (z.size() + 1) % ch == 0))
    fail(ErrorCode::CharacteristicObstruction, "characteristic divides |Z| or |Z| + 1");
  if (z.contains(q)) fail(ErrorCode::PointInZ, q.str() + " lies in Z");
  const FieldSpec& k = syz.s[0].spec();
  ProjPoint qk = q.spec() == k ? q : q.embed(k);
  HomPoly r = syz.s[0].scaled(qk[0]) + syz.s[1].scaled(qk[1]) + syz.s[2].scaled(qk[2]);
  HomPoly lq = HomPoly::linear(qk);
  if (!syz.mod_ell) return r.is_zero() || divide_by_linear(r, lq).has_value();
  ProjPoint lp = coefficient_point(*syz.mod_ell);
  BinaryForm rb = restrict_to_line(r, lp);
  if (rb.is_zero()) return true;
  return rb.divide(restrict_to_line(lq, lp)).has_value();
}

std::vector<ProjPoint> common_points(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  const FieldSpec& k = z.spec();
  if (!k.is_prime_field()) fail(ErrorCode::UnsupportedField, "common points are enumerated over GF(p) only");
  Splitting s = compute_splitting(z, mode, rng);
  auto syz = syzygy_min_degree(dual_lines(z).product(), std::nullopt, s.a);
  if (!syz) fail(ErrorCode::InvalidInput, "no global syzygy of degree m_Z");
  std::vector<ProjPoint> out;
  long p = static_cast<long>(k.characteristic());
  auto test = [&](long a, long b, long c) {
    ProjPoint q = ProjPoint::from_ints(k, a, b, c);
    if (!z.contains(q) && mz_after_adding_dual(z, q, *syz)) out.push_back(q);
  };
  for (long b = 0; b < p; ++b)
    for (long c = 0; c < p; ++c) test(1, b, c);
  for (long c = 0; c < p; ++c) test(0, 1, c);
  test(0, 0, 1);
  return out;
}

}  // namespace uc
