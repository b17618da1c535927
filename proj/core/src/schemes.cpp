#include "uc/schemes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fatpoint.hpp"

namespace uc {

// ---------------------------------------------------------------- PointConfig

PointConfig::PointConfig(const FieldSpec& spec, std::vector<ProjPoint> points) : spec_(spec), pts_(std::move(points)) {
  if (pts_.empty()) fail(ErrorCode::InvalidInput, "a point configuration needs at least one point");
  std::set<std::string> seen;
  for (const auto& p : pts_) {
    if (p.spec() != spec_) fail(ErrorCode::FieldMismatch, "point " + p.str() + " is not over " + spec_.str());
    if (!seen.insert(p.str()).second) fail(ErrorCode::InvalidInput, "repeated point " + p.str());
  }
}

std::optional<std::size_t> PointConfig::index_of(const ProjPoint& p) const {
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (pts_[i] == p) return i;
  return std::nullopt;
}

PointConfig PointConfig::with_point(const ProjPoint& p) const {
  if (contains(p)) fail(ErrorCode::PointInZ, p.str() + " already lies in Z");
  auto pts = pts_;
  pts.push_back(p);
  return PointConfig(spec_, std::move(pts));
}

PointConfig PointConfig::without(std::size_t i) const {
  auto pts = pts_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
  return PointConfig(spec_, std::move(pts));
}

// ---------------------------------------------------------------- LineArrangement

LineArrangement::LineArrangement(const FieldSpec& spec, std::vector<ProjPoint> forms)
    : spec_(spec), forms_(std::move(forms)) {
  std::set<std::string> seen;
  for (const auto& f : forms_) {
    if (f.spec() != spec_) fail(ErrorCode::FieldMismatch, "line " + f.str() + " is not over " + spec_.str());
    if (!seen.insert(f.str()).second) fail(ErrorCode::InvalidInput, "repeated line " + f.str());
  }
}

HomPoly LineArrangement::product() const {
  HomPoly f = HomPoly::monomial({0, 0, 0}, Scalar::one(spec_));
  for (std::size_t i = 0; i < forms_.size(); ++i) f = f * form(i);
  return f;
}

LineArrangement LineArrangement::without(std::size_t i) const {
  auto f = forms_;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
  return LineArrangement(spec_, std::move(f));
}

LineArrangement LineArrangement::with_line(const ProjPoint& coeffs) const {
  auto f = forms_;
  f.push_back(coeffs);
  return LineArrangement(spec_, std::move(f));
}

LineArrangement dual_lines(const PointConfig& z) { return LineArrangement(z.spec(), z.points()); }
PointConfig dual_points(const LineArrangement& a) { return PointConfig(a.spec(), a.all_coeffs()); }

const char* cert_level_name(CertLevel c) {
  switch (c) {
    case CertLevel::Certified: return "certified";
    case CertLevel::RampConsistent: return "ramp_consistent";
    case CertLevel::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

DimCertificate weakest(const DimCertificate& a, const DimCertificate& b) {
  DimCertificate r = a.level <= b.level ? a : b;
  r.symbolic = a.symbolic && b.symbolic;
  const DimCertificate& other = a.level <= b.level ? b : a;
  for (const auto& p : other.probes)
    if (std::find(r.probes.begin(), r.probes.end(), p) == r.probes.end()) r.probes.push_back(p);
  return r;
}

// ---------------------------------------------------------------- evaluation matrices

namespace detail {

std::vector<Monomial> fat_columns(int j, int t) {
  std::vector<Monomial> cols;
  if (t < 0) return cols;
  for (const auto& m : monomial_basis(t))
    if (m.a + m.b >= j) cols.push_back(m);
  return cols;
}

std::vector<std::array<mpz_class, 3>> integer_coords(const PointConfig& z) {
  std::vector<std::array<mpz_class, 3>> out;
  for (const auto& p : z.points()) {
    mpz_class l = 1;
    for (int i = 0; i < 3; ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p[i].rational().get_den().get_mpz_t());
    std::array<mpz_class, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = p[i].rational().get_num() * (l / p[i].rational().get_den());
    out.push_back(v);
  }
  return out;
}

std::vector<std::array<std::uint64_t, 3>> residue_coords(const PointConfig& z) {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (const auto& p : z.points()) out.push_back({p[0].residue(), p[1].residue(), p[2].residue()});
  return out;
}

std::vector<std::array<Scalar, 3>> moved_coords(const PointConfig& z, const ProjPoint& p) {
  int k = p.first_nonzero();
  std::array<int, 2> other{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) other[n++] = i;
  std::vector<std::array<Scalar, 3>> out;
  for (const auto& q : z.points()) {
    const ProjPoint qq = q.spec() == p.spec() ? q : q.embed(p.spec());
    out.push_back({qq[other[0]] - p[other[0]] * qq[k], qq[other[1]] - p[other[1]] * qq[k], qq[k]});
  }
  return out;
}

la::IntMatrix eval_matrix_int(const std::vector<std::array<mpz_class, 3>>& pts, const std::vector<Monomial>& cols) {
  la::IntMatrix m(pts.size(), cols.size());
  int t = cols.empty() ? 0 : cols[0].degree();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::array<std::vector<mpz_class>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].push_back(1);
      for (int e = 1; e <= t; ++e) pw[v].push_back(pw[v].back() * pts[i][v]);
    }
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(i, c) = pw[0][cols[c].a] * pw[1][cols[c].b] * pw[2][cols[c].c];
  }
  return m;
}

la::ModMatrix eval_matrix_mod(const std::vector<std::array<std::uint64_t, 3>>& pts,
                              const std::vector<Monomial>& cols, std::uint64_t p) {
  la::ModMatrix m(pts.size(), cols.size(), p);
  int t = cols.empty() ? 0 : cols[0].degree();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::array<std::vector<std::uint64_t>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].push_back(1 % p);
      for (int e = 1; e <= t; ++e) pw[v].push_back(modp::mul(pw[v].back(), pts[i][v] % p, p));
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.at(i, c) = modp::mul(modp::mul(pw[0][cols[c].a], pw[1][cols[c].b], p), pw[2][cols[c].c], p);
  }
  return m;
}

std::size_t eval_rank(const std::vector<std::array<Scalar, 3>>& pts, const std::vector<Monomial>& cols,
                      const FieldSpec& spec) {
  if (pts.empty() || cols.empty()) return 0;
  if (spec.is_rationals()) {
    std::vector<std::array<mpz_class, 3>> ip;
    for (const auto& q : pts) {
      mpz_class l = 1;
      for (int i = 0; i < 3; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q[i].rational().get_den().get_mpz_t());
      std::array<mpz_class, 3> v;
      for (int i = 0; i < 3; ++i) v[i] = q[i].rational().get_num() * (l / q[i].rational().get_den());
      ip.push_back(v);
    }
    return la::rank_integer(eval_matrix_int(ip, cols));
  }
  if (spec.is_prime_field()) {
    std::vector<std::array<std::uint64_t, 3>> rp;
    for (const auto& q : pts) rp.push_back({q[0].residue(), q[1].residue(), q[2].residue()});
    return la::rank_mod(eval_matrix_mod(rp, cols, spec.characteristic()));
  }
  Mat m(pts.size(), cols.size(), spec);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.at(i, c) = pts[i][0].pow(cols[c].a) * pts[i][1].pow(cols[c].b) * pts[i][2].pow(cols[c].c);
  return rank(m);
}

}  // namespace detail

// ---------------------------------------------------------------- Hilbert function

std::size_t ideal_dim(const PointConfig& z, int t) {
  if (t < 0) return 0;
  auto cols = monomial_basis(t);
  std::vector<std::array<Scalar, 3>> pts;
  for (const auto& p : z.points()) pts.push_back(p.coords());
  return cols.size() - detail::eval_rank(pts, cols, z.spec());
}

std::size_t hilbert_function(const PointConfig& z, int t) { return basis_size(t) - ideal_dim(z, t); }

std::vector<std::size_t> delta_hf(const PointConfig& z) {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (int t = 0;; ++t) {
    std::size_t h = hilbert_function(z, t);
    out.push_back(h - prev);
    prev = h;
    if (h == z.size()) break;
  }
  return out;
}

std::size_t fatpoint_dim(const PointConfig& z, const ProjPoint& p, int j, int t) {
  if (z.contains(p)) fail(ErrorCode::PointInZ, p.str() + " lies in Z");
  auto cols = detail::fat_columns(j, t);
  if (cols.empty()) return 0;
  return cols.size() - detail::eval_rank(detail::moved_coords(z, p), cols, p.spec());
}

std::size_t max_collinear(const PointConfig& z) {
  if (z.size() < 2) return z.size();
  std::map<std::string, std::set<std::size_t>> lines;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k < z.size(); ++k) {
      auto& s = lines[z[i].cross(z[k]).str()];
      s.insert(i);
      s.insert(k);
    }
  std::size_t best = 2;
  for (const auto& [key, s] : lines) best = std::max(best, s.size());
  return best;
}

std::size_t h1_fatpoint(const PointConfig& z, int j, const GenericMode& mode, Rng& rng) {
  long v = static_cast<long>(generic_fatpoint_dim(z, j, j + 1, mode, rng).value) + static_cast<long>(z.size()) -
           (2L * j + 3);
  return static_cast<std::size_t>(std::max(0L, v));
}

}  // namespace uc
