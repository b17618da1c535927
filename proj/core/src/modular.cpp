#include <algorithm>
#include <cmath>

#include "uc/linalg.hpp"

namespace uc::la {

namespace {

// Multiplication mod p; floating-point quotient estimate for p < 2^50.
struct ModArith {
  std::uint64_t p;
  double pinv;
  bool fast;
  explicit ModArith(std::uint64_t prime)
      : p(prime), pinv(1.0 / static_cast<double>(prime)), fast(prime < (1ull << 50)) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!fast) return modp::mul(a, b, p);
    std::uint64_t q = static_cast<std::uint64_t>(static_cast<double>(a) * static_cast<double>(b) * pinv);
    std::int64_t r = static_cast<std::int64_t>(a * b - q * p);
    while (r < 0) r += static_cast<std::int64_t>(p);
    while (r >= static_cast<std::int64_t>(p)) r -= static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
};

// row[i] -= f * row[r] on columns [from, cols)
inline void axpy(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t f, std::size_t from,
                 std::size_t to, const ModArith& A) {
  for (std::size_t j = from; j < to; ++j) {
    if (src[j] == 0) continue;
    dst[j] = A.sub(dst[j], A.mul(f, src[j]));
  }
}

std::vector<std::vector<mpq_class>> rref_rows_rational(std::vector<std::vector<mpq_class>> rows,
                                                       std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    mpq_class inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<std::vector<mpq_class>> kernel_rational_small(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows, std::vector<mpq_class>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
  auto R = rref_rows_rational(std::move(rows), m.cols);
  std::vector<std::size_t> pivots;
  for (const auto& row : R) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<std::vector<mpq_class>> ker;
  std::size_t pi = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (pi < pivots.size() && pivots[pi] == f) {
      ++pi;
      continue;
    }
    std::vector<mpq_class> v(m.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < R.size(); ++i) v[pivots[i]] = -R[i][f];
    ker.push_back(std::move(v));
  }
  return rref_rows_rational(std::move(ker), m.cols);
}

double log2_abs(const mpz_class& z) {
  if (z == 0) return -1e300;
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

}  // namespace

std::uint64_t large_prime(std::size_t index) {
  static std::vector<std::uint64_t> cache;
  static const std::uint64_t start = 1ull << 50;
  while (cache.size() <= index) cache.push_back(modp::prime_below(cache.empty() ? start : cache.back()));
  return cache[index];
}

IntMatrix clear_denominators(const std::vector<mpq_class>& entries, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = entries[i * cols + j];
      if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    mpz_class g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = entries[i * cols + j];
      m.at(i, j) = q.get_num() * (l / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.at(i, j).get_mpz_t());
    }
    if (g > 1)
      for (std::size_t j = 0; j < cols; ++j) mpz_divexact(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), g.get_mpz_t());
  }
  return m;
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t p) {
  ModMatrix r(m.rows, m.cols, p);
  for (std::size_t k = 0; k < m.a.size(); ++k) {
    const mpz_class& z = m.a[k];
    if (z == 0) continue;
    if (mpz_fits_slong_p(z.get_mpz_t())) {
      long v = z.get_si() % static_cast<long>(p);
      r.a[k] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long>(p) : v);
    } else {
      r.a[k] = modp::reduce(z, p);
    }
  }
  return r;
}

std::size_t rank_bareiss(IntMatrix m) {
  mpz_class prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    const mpz_class& pv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      mpz_class f = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_class& e = m.at(i, j);
        e *= pv;
        if (f != 0) {
          tmp = f * m.at(r, j);
          e -= tmp;
        }
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = pv;
    ++r;
  }
  return r;
}

std::size_t rank_mod(ModMatrix m) {
  ModArith A(m.p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    std::uint64_t inv = modp::inv(m.at(r, c), m.p);
    const std::uint64_t* src = &m.a[r * m.cols];
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint64_t v = m.at(i, c);
      if (v == 0) continue;
      std::uint64_t f = A.mul(v, inv);
      axpy(&m.a[i * m.cols], src, f, c, m.cols, A);
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> rref_mod(ModMatrix& m) {
  ModArith A(m.p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    std::uint64_t inv = modp::inv(m.at(r, c), m.p);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = A.mul(m.at(r, j), inv);
    const std::uint64_t* src = &m.a[r * m.cols];
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = m.at(i, c);
      if (f == 0) continue;
      axpy(&m.a[i * m.cols], src, f, c, m.cols, A);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> kernel_mod(ModMatrix m) {
  ModArith A(m.p);
  auto pivots = rref_mod(m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : pivots) is_piv[c] = true;
  ModMatrix K(m.cols - pivots.size(), m.cols, m.p);
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    K.at(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::uint64_t v = m.at(i, f);
      K.at(k, pivots[i]) = v ? m.p - v : 0;
    }
    ++k;
  }
  rref_mod(K);
  std::vector<std::vector<std::uint64_t>> out(K.rows, std::vector<std::uint64_t>(K.cols));
  for (std::size_t i = 0; i < K.rows; ++i)
    for (std::size_t j = 0; j < K.cols; ++j) out[i][j] = K.at(i, j);
  return out;
}

std::size_t rank_multimodular(const IntMatrix& m) {
  std::vector<double> norms;
  for (std::size_t i = 0; i < m.rows; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) s += m.at(i, j) * m.at(i, j);
    if (s != 0) norms.push_back(0.5 * log2_abs(s));
  }
  std::size_t cap = std::min(norms.size(), m.cols);
  if (cap == 0) return 0;
  std::sort(norms.begin(), norms.end(), std::greater<>());
  double bound_bits = 1.0;
  for (std::size_t i = 0; i < cap; ++i) bound_bits += norms[i];
  double have_bits = 0.0;
  std::size_t best = 0;
  for (std::size_t k = 0;; ++k) {
    std::uint64_t p = large_prime(k);
    best = std::max(best, rank_mod(reduce_mod(m, p)));
    if (best == cap) return best;
    have_bits += std::log2(static_cast<double>(p));
    if (have_bits > bound_bits) return best;
  }
}

std::size_t rank_integer(const IntMatrix& m) {
  std::size_t small = std::min(m.rows, m.cols);
  if (small <= 24 || m.rows * m.cols <= 1200) return rank_bareiss(m);
  return rank_multimodular(m);
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& mod, mpq_class& out) {
  mpz_class bound;
  mpz_class half = mod / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = mod, r1 = a % mod;
  if (r1 < 0) r1 += mod;
  mpz_class s0 = 0, s1 = 1, q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return true;
}

std::vector<std::vector<mpq_class>> kernel_rational(const IntMatrix& m) {
  if (m.cols <= 24 || m.rows * m.cols <= 1200) return kernel_rational_small(m);

  std::vector<std::size_t> ref_pivots;
  bool have_ref = false;
  std::vector<mpz_class> residues;  // r x |free| CRT accumulators
  mpz_class modulus = 1;
  std::vector<std::size_t> free_cols;
  std::size_t primes_since_check = 0;
  for (std::size_t k = 0; k < 4000; ++k) {
    std::uint64_t p = large_prime(k);
    ModMatrix mm = reduce_mod(m, p);
    auto piv = rref_mod(mm);
    bool better = !have_ref || piv.size() > ref_pivots.size() ||
                  (piv.size() == ref_pivots.size() && piv < ref_pivots);
    bool same = have_ref && piv == ref_pivots;
    if (!better && !same) continue;
    if (better) {
      ref_pivots = piv;
      have_ref = true;
      free_cols.clear();
      std::vector<bool> is_piv(m.cols, false);
      for (auto c : piv) is_piv[c] = true;
      for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
      residues.assign(piv.size() * free_cols.size(), 0);
      modulus = 1;
    }
    // CRT: x = x + modulus * ((v - x) * modulus^{-1} mod p)
    mpz_class pz(static_cast<unsigned long>(p));
    std::uint64_t minv = modp::inv(modp::reduce(modulus, p), p);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        mpz_class& x = residues[i * free_cols.size() + f];
        std::uint64_t v = mm.at(i, free_cols[f]);
        std::uint64_t xr = modp::reduce(x, p);
        std::uint64_t d = modp::mul(v >= xr ? v - xr : v + p - xr, minv, p);
        if (d) x += modulus * static_cast<unsigned long>(d);
      }
    }
    modulus *= pz;
    if (free_cols.empty()) return {};
    if (++primes_since_check < std::max<std::size_t>(1, k / 4)) continue;
    primes_since_check = 0;

    // attempt reconstruction and exact verification
    std::vector<std::vector<mpq_class>> ker;
    bool ok = true;
    for (std::size_t f = 0; f < free_cols.size() && ok; ++f) {
      std::vector<mpq_class> v(m.cols);
      v[free_cols[f]] = 1;
      for (std::size_t i = 0; i < piv.size() && ok; ++i) {
        mpq_class q;
        ok = rational_reconstruct(residues[i * free_cols.size() + f], modulus, q);
        v[piv[i]] = -q;
      }
      ker.push_back(std::move(v));
    }
    if (!ok) continue;
    for (const auto& v : ker) {
      mpz_class l = 1;
      for (const auto& q : v)
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
      std::vector<mpz_class> w(m.cols);
      for (std::size_t j = 0; j < m.cols; ++j) w[j] = v[j].get_num() * (l / v[j].get_den());
      for (std::size_t i = 0; i < m.rows && ok; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
          if (w[j] != 0 && m.at(i, j) != 0) acc += m.at(i, j) * w[j];
        ok = acc == 0;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    return rref_rows_rational(std::move(ker), m.cols);
  }
  return kernel_rational_small(m);
}

std::size_t rank_bipoly(std::vector<BiPoly> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> BiPoly& { return a[i * cols + j]; };
  std::uint64_t p = 0;
  for (const auto& e : a)
    if (e.modulus()) p = e.modulus();
  BiPoly prev = BiPoly::constant(1, p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    std::size_t best_terms = ~std::size_t(0);
    for (std::size_t i = r; i < rows; ++i) {
      if (at(i, c).is_zero()) continue;
      std::size_t t = at(i, c).term_count();
      if (t < best_terms) {
        best_terms = t;
        piv = i;
      }
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(r, j), at(piv, j));
    BiPoly pv = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      BiPoly f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        BiPoly e = at(i, j) * pv;
        if (!f.is_zero() && !at(r, j).is_zero()) e = e - f * at(r, j);
        at(i, j) = prev.is_one() ? e : BiPoly::exact_div(e, prev);
      }
      at(i, c) = BiPoly(p);
    }
    prev = pv;
    ++r;
  }
  return r;
}

}  // namespace uc::la
