#include "uc/linalg.hpp"

namespace uc {

Mat::Mat(std::size_t rows, std::size_t cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), e_(rows * cols, Scalar::zero(spec)) {}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.spec() != spec_) fail(ErrorCode::FieldMismatch, "matrix entry from " + v.spec().str());
  e_[i * cols_ + j] = v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, spec_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  ensure(v.size() == cols_, "Mat::apply size");
  std::vector<Scalar> out(rows_, Scalar::zero(spec_));
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = Scalar::zero(spec_);
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc = acc + at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

la::IntMatrix to_int(const Mat& m) {
  std::vector<mpq_class> q;
  q.reserve(m.entries().size());
  for (const auto& e : m.entries()) q.push_back(e.rational());
  return la::clear_denominators(q, m.rows(), m.cols());
}

la::ModMatrix to_mod(const Mat& m) {
  la::ModMatrix r(m.rows(), m.cols(), m.spec().characteristic());
  for (std::size_t k = 0; k < m.entries().size(); ++k) r.a[k] = m.entries()[k].residue();
  return r;
}

// Rows scaled by the product of distinct denominators, as polynomial matrix.
std::vector<BiPoly> to_bipoly(const Mat& m) {
  std::uint64_t p = m.spec().characteristic();
  std::vector<BiPoly> out(m.rows() * m.cols(), BiPoly(p));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BiPoly l = BiPoly::constant(1, p);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& e = m.at(i, j);
      if (e.is_zero()) continue;
      const BiPoly& d = e.ratfunc().den();
      if (d.is_one()) continue;
      BiPoly g = BiPoly::gcd(l, d);
      l = l * BiPoly::exact_div(d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& e = m.at(i, j);
      if (e.is_zero()) continue;
      const RatFunc& f = e.ratfunc();
      out[i * m.cols() + j] = f.den().is_one() ? f.num() * l : f.num() * BiPoly::exact_div(l, f.den());
    }
  }
  return out;
}

std::vector<std::vector<Scalar>> rref_scalar(std::vector<std::vector<Scalar>> rows, std::size_t cols,
                                             std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] = rows[r][j] * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

void check_kernel(const Mat& m, const std::vector<std::vector<Scalar>>& ker) {
  for (const auto& v : ker)
    for (const auto& x : m.apply(v)) ensure(x.is_zero(), "kernel vector fails M*v = 0");
}

}  // namespace

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const FieldSpec& f = m.spec();
  if (f.is_rationals()) return la::rank_integer(to_int(m));
  if (f.is_prime_field()) return la::rank_mod(to_mod(m));
  return la::rank_bipoly(to_bipoly(m), m.rows(), m.cols());
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m) {
  const FieldSpec& f = m.spec();
  std::vector<std::vector<Scalar>> out;
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Scalar> v(m.cols(), Scalar::zero(f));
      v[j] = Scalar::one(f);
      out.push_back(std::move(v));
    }
    return out;
  }
  if (f.is_rationals()) {
    for (auto& v : la::kernel_rational(to_int(m))) {
      std::vector<Scalar> s;
      s.reserve(v.size());
      for (auto& q : v) s.push_back(Scalar::from_rational(f, q));
      out.push_back(std::move(s));
    }
  } else if (f.is_prime_field()) {
    for (auto& v : la::kernel_mod(to_mod(m))) {
      std::vector<Scalar> s;
      s.reserve(v.size());
      for (auto x : v) s.push_back(Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(x))));
      out.push_back(std::move(s));
    }
  } else {
    std::vector<std::vector<Scalar>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      rows[i].assign(m.entries().begin() + i * m.cols(), m.entries().begin() + (i + 1) * m.cols());
    std::vector<std::size_t> pivots;
    auto R = rref_scalar(std::move(rows), m.cols(), &pivots);
    std::size_t pi = 0;
    std::vector<std::vector<Scalar>> ker;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
      if (pi < pivots.size() && pivots[pi] == fc) {
        ++pi;
        continue;
      }
      std::vector<Scalar> v(m.cols(), Scalar::zero(f));
      v[fc] = Scalar::one(f);
      for (std::size_t i = 0; i < R.size(); ++i) v[pivots[i]] = -R[i][fc];
      ker.push_back(std::move(v));
    }
    out = rref_scalar(std::move(ker), m.cols(), nullptr);
  }
  check_kernel(m, out);
  return out;
}

}  // namespace uc
