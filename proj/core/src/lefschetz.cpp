#include "uc/lefschetz.hpp"

#include <algorithm>

namespace uc {

namespace {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

void add_multiples(Mat& m, std::size_t& row, const HomPoly& g, int t) {
  int deg = t - g.degree();
  if (deg < 0) return;
  for (const auto& mon : monomial_basis(deg)) {
    for (const auto& [gm, c] : g.terms()) m.at(row, monomial_index(gm * mon)) = c;
    ++row;
  }
}

HomPoly linear_power(const ProjPoint& l, int e) { return HomPoly::linear(l).pow(static_cast<unsigned>(e)); }

Mat stack(const Mat& top, const HomPoly& g, int t) {
  int deg = t - g.degree();
  std::size_t extra = deg < 0 ? 0 : basis_size(deg);
  Mat m(top.rows() + extra, top.cols(), top.spec());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
  std::size_t row = top.rows();
  add_multiples(m, row, g, t);
  return m;
}

ProjPoint random_form(const FieldSpec& k, const GenericMode& mode, Rng& rng) {
  std::uint64_t bound = mode.bound ? mode.bound : 10000;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Scalar a = random_scalar(k, bound, rng), b = random_scalar(k, bound, rng), c = random_scalar(k, bound, rng);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    return ProjPoint(a, b, c);
  }
  fail(ErrorCode::DegenerateProbe, "could not draw a nonzero linear form");
}

std::size_t falling(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n - i);
  return r;
}

}  // namespace

PowerIdeal::PowerIdeal(const FieldSpec& k, std::vector<std::pair<ProjPoint, int>> gens)
    : spec(k), generators(std::move(gens)) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].second < 1) fail(ErrorCode::InvalidInput, "exponents must be positive");
    if (generators[i].first.spec() != k) fail(ErrorCode::FieldMismatch, "generator over a different field");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[i].first == generators[j].first)
        fail(ErrorCode::InvalidInput, "proportional forms " + generators[i].first.str());
  }
}

PowerIdeal PowerIdeal::uniform(const LineArrangement& a, int exponent) {
  std::vector<std::pair<ProjPoint, int>> g;
  for (const auto& c : a.all_coeffs()) g.push_back({c, exponent});
  return PowerIdeal(a.spec(), std::move(g));
}

int PowerIdeal::max_exponent() const {
  int m = 0;
  for (const auto& g : generators) m = std::max(m, g.second);
  return m;
}

int PowerIdeal::min_exponent() const {
  int m = generators.empty() ? 0 : generators.front().second;
  for (const auto& g : generators) m = std::min(m, g.second);
  return m;
}

Mat power_ideal_rows(const PowerIdeal& pi, int t) {
  std::size_t rows = 0;
  for (const auto& [l, a] : pi.generators)
    if (t >= a) rows += basis_size(t - a);
  Mat m(rows, basis_size(t), pi.spec);
  std::size_t row = 0;
  for (const auto& [l, a] : pi.generators)
    if (t >= a) add_multiples(m, row, linear_power(l, a), t);
  return m;
}

std::size_t power_ideal_hf(const PowerIdeal& pi, int j) {
  if (j < 0) return 0;
  return basis_size(j) - rank(power_ideal_rows(pi, j));
}

std::vector<std::size_t> power_ideal_hf_sequence(const PowerIdeal& pi) {
  if (pi.generators.size() < 3) fail(ErrorCode::InvalidInput, "need at least three forms for an artinian quotient");
  std::vector<std::size_t> out;
  const int cap = 3 * pi.max_exponent() + 3;
  for (int j = 0; j <= cap; ++j) {
    std::size_t h = power_ideal_hf(pi, j);
    if (h == 0) return out;
    out.push_back(h);
  }
  fail(ErrorCode::InvalidInput, "quotient is not artinian");
}

std::size_t quotient_hf(const PowerIdeal& pi, const ProjPoint& L, int k, int j) {
  if (j < 0) return 0;
  Mat m = stack(power_ideal_rows(pi, j), linear_power(L, k), j);
  return basis_size(j) - rank(m);
}

std::pair<std::size_t, std::size_t> multiplication_rank(const PowerIdeal& pi, const ProjPoint& L, int k, int dlow) {
  if (k < 0 || dlow < 0) fail(ErrorCode::InvalidInput, "degrees must be nonnegative");
  const int t = dlow + k;
  Mat it = power_ideal_rows(pi, t);
  const std::size_t target = basis_size(t) - rank(it);
  const std::size_t coker = basis_size(t) - rank(stack(it, linear_power(L, k), t));
  const std::size_t by_cokernel = target - coker;

  auto dual = kernel_basis(it);
  ensure(dual.size() == target, "inverse system has the wrong dimension");
  HomPoly lk = linear_power(L, k);
  auto src = monomial_basis(dlow);
  Mat pairing(dual.size(), src.size(), pi.spec);
  for (std::size_t c = 0; c < src.size(); ++c) {
    HomPoly img = lk * HomPoly::monomial(src[c], Scalar::one(pi.spec));
    for (std::size_t r = 0; r < dual.size(); ++r) {
      Scalar acc = Scalar::zero(pi.spec);
      for (const auto& [m, x] : img.terms()) acc = acc + dual[r][monomial_index(m)] * x;
      pairing.at(r, c) = acc;
    }
  }
  return {by_cokernel, rank(pairing)};
}

SLPReport slp_at(const PowerIdeal& pi, int k, int dlow, const GenericMode& mode, Rng& rng,
                 const std::optional<ProjPoint>& L) {
  if (k < 0 || dlow < 0) fail(ErrorCode::InvalidInput, "range and degree must be nonnegative");
  SLPReport r;
  r.k = k;
  r.dlow = dlow;
  r.dim_source = power_ideal_hf(pi, dlow);
  r.dim_target = power_ideal_hf(pi, dlow + k);
  const std::size_t full = std::min(r.dim_source, r.dim_target);
  auto evaluate = [&](const ProjPoint& l) {
    auto [a, b] = multiplication_rank(pi, l, k, dlow);
    ensure(a == b, "multiplication rank differs between cokernel and inverse-system routes");
    return a;
  };
  if (L) {
    if (L->spec() != pi.spec) fail(ErrorCode::FieldMismatch, "supplied form over a different field");
    r.L = *L;
    r.rank = evaluate(*L);
    r.cert.level = CertLevel::Certified;
    r.cert.note = "supplied form";
  } else {
    const std::size_t tries = std::max<std::size_t>(1, mode.is_symbolic() ? 2 : mode.samples);
    bool first = true;
    for (std::size_t i = 0; i < tries; ++i) {
      ProjPoint l = random_form(pi.spec, mode, rng);
      r.cert.probes.push_back(l);
      std::size_t v = evaluate(l);
      if (first || v > r.rank) {
        r.rank = v;
        r.L = l;
      }
      first = false;
      if (r.rank == full) break;
    }
    if (r.rank == full) {
      r.cert.level = CertLevel::Certified;
      r.cert.note = "maximal rank at a probe";
    } else {
      r.cert.level = CertLevel::MonteCarlo;
      r.cert.note = "probe maximum";
      const int t = dlow + k;
      bool dual_simple = pi.spec.is_rationals() && pi.min_exponent() == t && pi.max_exponent() == t;
      if (mode.is_symbolic() && dual_simple) {
        std::vector<ProjPoint> pts;
        for (const auto& g : pi.generators) pts.push_back(g.first);
        GenericDim g = generic_fatpoint_dim(PointConfig(pi.spec, pts), dlow + 1, t, mode, rng);
        std::size_t coker = g.value;
        ensure(coker <= r.dim_target, "cokernel larger than the target");
        ensure(r.dim_target - coker >= r.rank, "generic rank below a probe rank");
        r.rank = r.dim_target - coker;
        r.cert = g.cert;
        r.cert.note = "generic cokernel by duality with a fat point";
      }
    }
  }
  r.cokernel = r.dim_target - r.rank;
  r.maximal_rank = r.rank == full;
  r.delta = full - r.rank;
  return r;
}

SLPTable slp_table(const PowerIdeal& pi, int k, const GenericMode& mode, Rng& rng) {
  SLPTable out;
  out.k = k;
  out.hf = power_ideal_hf_sequence(pi);
  out.L = random_form(pi.spec, mode, rng);
  out.cert.probes.push_back(out.L);
  out.cert.level = CertLevel::Certified;
  out.cert.note = "maximal rank at a probe in every degree";
  for (int j = 0; j < static_cast<int>(out.hf.size()); ++j) {
    std::size_t q = quotient_hf(pi, out.L, k, j);
    if (q == 0 && j >= k) break;
    out.quotient.push_back(q);
  }
  for (int j = 0; j < static_cast<int>(out.hf.size()); ++j) {
    std::size_t src = j >= k ? out.hf[j - k] : 0;
    std::size_t q = j < static_cast<int>(out.quotient.size()) ? out.quotient[j] : 0;
    std::size_t rk = out.hf[j] - q;
    bool ok = rk == std::min(src, out.hf[j]);
    out.maximal.push_back(ok);
    if (!ok) {
      out.cert.level = CertLevel::MonteCarlo;
      out.cert.note = "rank below maximal at the probe";
    }
  }
  return out;
}

std::size_t macaulay_dual_dim(const PowerIdeal& pi, int j, DualSide side) {
  if (!pi.spec.is_rationals()) fail(ErrorCode::CharacteristicUnsupported, "Macaulay duality is used over Q only");
  if (j < pi.max_exponent()) fail(ErrorCode::InvalidInput, "degree below the largest exponent");
  if (side == DualSide::Power) return power_ideal_hf(pi, j);
  const FieldSpec& k = pi.spec;
  auto cols = monomial_basis(j);
  std::size_t rows = 0;
  for (const auto& [l, a] : pi.generators) rows += static_cast<std::size_t>(binom2(j - a + 2));
  Mat m(rows, cols.size(), k);
  std::size_t row = 0;
  for (const auto& [q, a] : pi.generators) {
    const int n = j - a + 1;
    for (const auto& d : monomial_basis(n - 1)) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& x = cols[c];
        if (x.a < d.a || x.b < d.b || x.c < d.c) continue;
        std::size_t coef = falling(x.a, d.a) * falling(x.b, d.b) * falling(x.c, d.c);
        m.at(row, c) = Scalar::from_int(k, static_cast<long>(coef)) * q[0].pow(x.a - d.a) *
                       q[1].pow(x.b - d.b) * q[2].pow(x.c - d.c);
      }
      ++row;
    }
  }
  return cols.size() - rank(m);
}

SLPEquivalence slp_unexpected_equivalence(const PointConfig& z, int j, const GenericMode& mode, Rng& rng) {
  if (j < 2) fail(ErrorCode::InvalidInput, "j must be at least 2");
  SLPEquivalence out;
  Splitting s = compute_splitting(z, mode, rng);
  out.unexpected = unexpected_in_degree_by_definition(z, j, s);
  PowerIdeal pi = PowerIdeal::uniform(dual_lines(z), j + 1);
  out.slp = slp_at(pi, 2, j - 1, mode, rng);
  out.fails_slp = !out.slp.maximal_rank;
  if (out.unexpected != out.fails_slp && !mode.is_symbolic()) {
    GenericMode sym = GenericMode::symbolic();
    sym.seed = mode.seed;
    return slp_unexpected_equivalence(z, j, sym, rng);
  }
  if (out.unexpected != out.fails_slp)
    fail(ErrorCode::CriteriaDisagree, "unexpected curve and SLP failure disagree in degree " + std::to_string(j + 1));
  return out;
}

TeraoReport terao_surjectivity(const LineArrangement& g, int a, int b, const GenericMode& mode, Rng& rng) {
  if (a < 0 || a > b) fail(ErrorCode::InvalidInput, "need 0 <= a <= b");
  if (b < 2) fail(ErrorCode::InvalidInput, "need b >= 2");
  TeraoReport out;
  out.generals = static_cast<std::size_t>(b - a);
  const std::size_t tries = std::max<std::size_t>(1, mode.is_symbolic() ? 4 : mode.samples);
  bool first = true;
  for (std::size_t i = 0; i < tries; ++i) {
    std::vector<std::pair<ProjPoint, int>> gens;
    for (const auto& c : g.all_coeffs()) gens.push_back({c, b});
    for (std::size_t n = 0; n < out.generals; ++n) {
      ProjPoint l = random_form(g.spec(), mode, rng);
      bool dup = false;
      for (const auto& x : gens) dup = dup || x.first == l;
      if (dup) {
        --n;
        continue;
      }
      gens.push_back({l, b});
      out.cert.probes.push_back(l);
    }
    PowerIdeal j(g.spec(), std::move(gens));
    ProjPoint L = random_form(g.spec(), mode, rng);
    out.cert.probes.push_back(L);
    std::size_t c = quotient_hf(j, L, 2, b);
    if (first || c < out.cokernel) out.cokernel = c;
    first = false;
    if (out.cokernel == 0) break;
  }
  out.surjective = out.cokernel == 0;
  out.cert.level = out.surjective ? CertLevel::Certified : CertLevel::MonteCarlo;
  out.cert.note = out.surjective ? "surjective at a probe" : "probe minimum";
  return out;
}

}  // namespace uc
