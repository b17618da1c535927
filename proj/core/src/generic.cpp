#include <algorithm>
#include <functional>

#include "fatpoint.hpp"
#include "uc/schemes.hpp"

namespace uc {

namespace {

// GF(p^k) with elements encoded as base-p digit strings; multiplication through log tables.
class GFq {
 public:
  GFq(std::uint64_t p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    ensure(q_ <= (1u << 24), "extension field too large for tables");
    find_primitive();
  }

  std::uint32_t size() const { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      std::uint32_t d = static_cast<std::uint32_t>((a % p_ + b % p_) % p_);
      r += d * scale;
      scale *= static_cast<std::uint32_t>(p_);
      a /= static_cast<std::uint32_t>(p_);
      b /= static_cast<std::uint32_t>(p_);
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      std::uint32_t d = static_cast<std::uint32_t>((p_ - a % p_) % p_);
      r += d * scale;
      scale *= static_cast<std::uint32_t>(p_);
      a /= static_cast<std::uint32_t>(p_);
    }
    return r;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!a || !b) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t inv(std::uint32_t a) const {
    ensure(a != 0, "inverse of zero in GF(q)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  std::uint32_t pow(std::uint32_t a, unsigned e) const {
    if (e == 0) return 1;
    if (!a) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * e) % (q_ - 1))];
  }

  std::size_t rank(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols) const {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && a[piv * cols + c] == 0) ++piv;
      if (piv == rows) continue;
      if (piv != r)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
      std::uint32_t inv_p = inv(a[r * cols + c]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        std::uint32_t v = a[i * cols + c];
        if (!v) continue;
        std::uint32_t f = mul(v, inv_p);
        for (std::size_t j = c; j < cols; ++j)
          if (a[r * cols + j]) a[i * cols + j] = sub(a[i * cols + j], mul(f, a[r * cols + j]));
      }
      ++r;
    }
    return r;
  }

 private:
  // Search monic f of degree k with x of multiplicative order q - 1.
  void find_primitive() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(k_), 0);
    for (std::uint32_t code = 1; code < q_; ++code) {
      std::uint32_t v = code;
      for (int i = 0; i < k_; ++i) {
        c[static_cast<std::size_t>(i)] = v % static_cast<std::uint32_t>(p_);
        v /= static_cast<std::uint32_t>(p_);
      }
      if (c[0] == 0) continue;
      // x * (sum d_i x^i) reduced by x^k = -sum c_i x^i
      auto times_x = [&](std::uint32_t e) {
        std::vector<std::uint32_t> d(static_cast<std::size_t>(k_) + 1, 0);
        for (int i = 0; i < k_; ++i) {
          d[static_cast<std::size_t>(i) + 1] = e % static_cast<std::uint32_t>(p_);
          e /= static_cast<std::uint32_t>(p_);
        }
        std::uint32_t top = d[static_cast<std::size_t>(k_)];
        std::uint32_t r = 0, scale = 1;
        for (int i = 0; i < k_; ++i) {
          std::uint64_t val = d[static_cast<std::size_t>(i)] + (p_ - top) * c[static_cast<std::size_t>(i)] % p_;
          r += static_cast<std::uint32_t>(val % p_) * scale;
          scale *= static_cast<std::uint32_t>(p_);
        }
        return r;
      };
      if (fill_tables(times_x)) return;
    }
    fail(ErrorCode::Internal, "no primitive polynomial found");
  }

  bool fill_tables(const std::function<std::uint32_t(std::uint32_t)>& step) {
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
      if (e > 0 && x == 1) return false;
      exp_[e] = x;
      log_[x] = e;
      x = step(x);
    }
    return x == 1;
  }

  std::uint64_t p_;
  int k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> exp_, log_;
};

// Sum of the n largest values.
std::size_t top_sum(std::vector<int> v, std::size_t n) {
  std::sort(v.begin(), v.end(), std::greater<>());
  std::size_t s = 0;
  for (std::size_t i = 0; i < n && i < v.size(); ++i) s += static_cast<std::size_t>(v[i]);
  return s;
}

struct GridBounds {
  std::size_t ds, dt;
};

// Degree bounds in s and t for minors of size n of the matrix with P = [s:t:1].
GridBounds minor_bounds(const std::vector<Monomial>& cols, std::size_t n, bool any_affine) {
  if (!any_affine) return {0, 0};
  std::vector<int> a, b;
  int max_a = 0, max_b = 0;
  for (const auto& m : cols) {
    a.push_back(m.a);
    b.push_back(m.b);
    max_a = std::max(max_a, m.a);
    max_b = std::max(max_b, m.b);
  }
  std::size_t ds = std::min(top_sum(a, n), n * static_cast<std::size_t>(max_a));
  std::size_t dt = std::min(top_sum(b, n), n * static_cast<std::size_t>(max_b));
  return {ds, dt};
}

// Generic rank of the fat-point matrix with P = [s:t:1], as the maximum rank over a
// (ds + 1) x (dt + 1) grid sized by the degree bounds of the next minor size.
class GridRank {
 public:
  GridRank(const PointConfig& z, std::vector<Monomial> cols, Rng& rng)
      : z_(z), cols_(std::move(cols)), rng_(rng), spec_(z.spec()) {
    rows_ = z.size();
    full_ = std::min(rows_, cols_.size());
    for (const auto& p : z.points())
      if (!p[2].is_zero()) any_affine_ = true;
  }

  std::size_t run() {
    if (full_ == 0) return 0;
    if (spec_.is_rationals()) return run_rational();
    return run_finite();
  }

 private:
  std::size_t rank_rational(const mpz_class& s, const mpz_class& t) {
    if (ipts_.empty()) ipts_ = detail::integer_coords(z_);
    std::vector<std::array<mpz_class, 3>> moved;
    moved.reserve(ipts_.size());
    for (const auto& q : ipts_) moved.push_back({q[0] - s * q[2], q[1] - t * q[2], q[2]});
    return la::rank_integer(detail::eval_matrix_int(moved, cols_));
  }

  std::size_t run_rational() {
    std::size_t r = 0;
    for (int i = 0; i < 2 && r < full_; ++i) {
      mpz_class s = rng_.range(-(1L << 20), 1L << 20), t = rng_.range(-(1L << 20), 1L << 20);
      r = std::max(r, rank_rational(s, t));
    }
    while (r < full_) {
      GridBounds g = minor_bounds(cols_, r + 1, any_affine_);
      long hs = static_cast<long>(g.ds / 2), ht = static_cast<long>(g.dt / 2);
      bool improved = false;
      for (long si = 0; si <= static_cast<long>(g.ds) && !improved; ++si)
        for (long ti = 0; ti <= static_cast<long>(g.dt) && !improved; ++ti) {
          std::size_t rr = rank_rational(si - hs, ti - ht);
          if (rr > r) {
            r = rr;
            improved = true;
          }
        }
      if (!improved) break;
    }
    return r;
  }

  std::size_t run_finite() {
    std::uint64_t p = spec_.characteristic();
    GridBounds gfull = minor_bounds(cols_, full_, any_affine_);
    std::uint64_t need = std::max<std::uint64_t>({gfull.ds, gfull.dt, 1}) + 1;
    auto rpts = detail::residue_coords(z_);
    if (p >= need) {
      auto rank_at = [&](std::uint64_t s, std::uint64_t t) {
        std::vector<std::array<std::uint64_t, 3>> moved;
        for (const auto& q : rpts)
          moved.push_back({(q[0] + p - modp::mul(s, q[2], p)) % p, (q[1] + p - modp::mul(t, q[2], p)) % p, q[2]});
        return la::rank_mod(detail::eval_matrix_mod(moved, cols_, p));
      };
      std::size_t r = 0;
      for (int i = 0; i < 2 && r < full_; ++i) r = std::max(r, rank_at(rng_.uniform(p), rng_.uniform(p)));
      while (r < full_) {
        GridBounds g = minor_bounds(cols_, r + 1, any_affine_);
        bool improved = false;
        for (std::uint64_t s = 0; s <= g.ds && !improved; ++s)
          for (std::uint64_t t = 0; t <= g.dt && !improved; ++t) {
            std::size_t rr = rank_at(s, t);
            if (rr > r) {
              r = rr;
              improved = true;
            }
          }
        if (!improved) break;
      }
      return r;
    }
    int k = 1;
    std::uint64_t q = p;
    while (q < need) {
      q *= p;
      ++k;
    }
    GFq F(p, k);
    auto rank_at = [&](std::uint32_t s, std::uint32_t t) {
      std::vector<std::uint32_t> a(rows_ * cols_.size());
      for (std::size_t i = 0; i < rows_; ++i) {
        std::uint32_t q0 = static_cast<std::uint32_t>(rpts[i][0]), q1 = static_cast<std::uint32_t>(rpts[i][1]),
                      q2 = static_cast<std::uint32_t>(rpts[i][2]);
        std::uint32_t x = F.sub(q0, F.mul(s, q2)), y = F.sub(q1, F.mul(t, q2));
        for (std::size_t c = 0; c < cols_.size(); ++c) {
          const Monomial& m = cols_[c];
          a[i * cols_.size() + c] = F.mul(F.mul(F.pow(x, static_cast<unsigned>(m.a)), F.pow(y, static_cast<unsigned>(m.b))),
                                          F.pow(q2, static_cast<unsigned>(m.c)));
        }
      }
      return F.rank(std::move(a), rows_, cols_.size());
    };
    std::size_t r = 0;
    for (int i = 0; i < 2 && r < full_; ++i)
      r = std::max(r, rank_at(static_cast<std::uint32_t>(rng_.uniform(F.size())),
                              static_cast<std::uint32_t>(rng_.uniform(F.size()))));
    while (r < full_) {
      GridBounds g = minor_bounds(cols_, r + 1, any_affine_);
      bool improved = false;
      for (std::uint32_t s = 0; s <= g.ds && !improved; ++s)
        for (std::uint32_t t = 0; t <= g.dt && !improved; ++t) {
          std::size_t rr = rank_at(s, t);
          if (rr > r) {
            r = rr;
            improved = true;
          }
        }
      if (!improved) break;
    }
    return r;
  }

  const PointConfig& z_;
  std::vector<Monomial> cols_;
  Rng& rng_;
  FieldSpec spec_;
  std::size_t rows_ = 0, full_ = 0;
  bool any_affine_ = false;
  std::vector<std::array<mpz_class, 3>> ipts_;
};

bool on_spanned_line(const PointConfig& z, const ProjPoint& p) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k < z.size(); ++k)
      if (collinear(z[i], z[k], p)) return true;
  return false;
}

}  // namespace

ProjPoint sample_point(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  const FieldSpec& k = z.spec();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Scalar a = random_scalar(k, mode.bound, rng), b = random_scalar(k, mode.bound, rng);
    ProjPoint p(a, b, Scalar::one(k));
    if (z.contains(p)) continue;
    if (mode.avoid_lines && on_spanned_line(z, p)) continue;
    return p;
  }
  fail(ErrorCode::DegenerateProbe, "could not sample a point off Z after 64 attempts");
}

GenericDim generic_fatpoint_dim(const PointConfig& z, int j, int t, const GenericMode& mode, Rng& rng) {
  GenericDim out;
  auto cols = detail::fat_columns(j, t);
  if (cols.empty()) {
    out.cert.level = CertLevel::Certified;
    out.cert.note = "no monomials";
    return out;
  }
  const FieldSpec& k = z.spec();
  if (k.is_function_field()) fail(ErrorCode::UnsupportedField, "configurations must be over Q or GF(p)");
  bool tiny = k.is_prime_field() && k.characteristic() < 100;
  if (mode.is_symbolic() || tiny) {
    GridRank g(z, cols, rng);
    out.value = cols.size() - g.run();
    out.cert.level = CertLevel::Certified;
    out.cert.symbolic = true;
    out.cert.note = tiny && !mode.is_symbolic() ? "escalated to symbolic over a small field" : "symbolic";
    return out;
  }
  std::size_t best = cols.size();
  for (std::size_t i = 0; i < std::max<std::size_t>(1, mode.samples); ++i) {
    ProjPoint p = sample_point(z, mode, rng);
    out.cert.probes.push_back(p);
    std::size_t v = cols.size() - detail::eval_rank(detail::moved_coords(z, p), cols, k);
    best = std::min(best, v);
    if (best == 0) break;
  }
  out.value = best;
  out.cert.level = best == 0 ? CertLevel::Certified : CertLevel::MonteCarlo;
  out.cert.note = best == 0 ? "vanishing at a probe" : "probe minimum";
  return out;
}

Mat symbolic_fatpoint_matrix(const PointConfig& z, int j, int t) {
  FieldSpec ff = z.spec().with_function_field();
  ProjPoint p(Scalar::var_s(ff), Scalar::var_t(ff), Scalar::one(ff));
  auto cols = detail::fat_columns(j, t);
  auto pts = detail::moved_coords(z, p);
  Mat m(pts.size(), cols.size(), ff);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.at(i, c) = pts[i][0].pow(static_cast<unsigned>(cols[c].a)) * pts[i][1].pow(static_cast<unsigned>(cols[c].b)) *
                   pts[i][2].pow(static_cast<unsigned>(cols[c].c));
  return m;
}

}  // namespace uc
