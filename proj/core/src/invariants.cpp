#include "uc/invariants.hpp"

#include <algorithm>

namespace uc {

namespace {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

bool tiny_field(const FieldSpec& k) { return k.is_prime_field() && k.characteristic() < 100; }

GenericMode as_probe(const GenericMode& mode) {
  GenericMode p = mode;
  p.kind = GenericMode::Kind::Probe;
  if (p.samples == 0) p.samples = 2;
  if (p.bound == 0) p.bound = 10000;
  return p;
}

struct Inconsistent {
  std::string what;
};

Splitting splitting_pass(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  const int d = static_cast<int>(z.size());
  const bool symbolic = mode.is_symbolic() || tiny_field(z.spec());
  const GenericMode probe = as_probe(mode);
  Splitting out;

  // Sweep for the first j whose probe value is positive; zeros are certified.
  int a = -1;
  bool a_certified = false;
  GenericDim at_a;
  for (int j = 0; j <= d; ++j) {
    GenericDim g = generic_fatpoint_dim(z, j, j + 1, probe, rng);
    if (g.value == 0) {
      out.ramp.push_back(g);
      continue;
    }
    if (g.cert.symbolic) {
      a = j, at_a = g, a_certified = true;
      break;
    }
    long lower = 2L * j + 3 - static_cast<long>(hilbert_function(z, j + 1));
    if (lower > 0) {
      a = j, at_a = g, a_certified = true;
      at_a.cert.note = "positive by the Hilbert function bound";
      break;
    }
    if (symbolic) {
      GenericDim s = generic_fatpoint_dim(z, j, j + 1, GenericMode::symbolic(), rng);
      if (s.value == 0) {
        out.ramp.push_back(s);
        continue;
      }
      a = j, at_a = s, a_certified = true;
    } else {
      a = j, at_a = g;
    }
    break;
  }
  if (a < 0) fail(ErrorCode::Internal, "no positive fat-point dimension up to |Z|");
  const int b = d - 1 - a;
  if (a > b) throw Inconsistent{"a exceeds b"};
  out.a = a;
  out.b = b;

  const std::size_t want = ramp_value(a, b, a);
  if (at_a.value != want) {
    if (at_a.cert.symbolic) throw Inconsistent{"dimension at a_Z is neither 1 nor 2 as predicted"};
    GenericMode more = probe;
    more.samples = probe.samples * 4;
    GenericDim again = generic_fatpoint_dim(z, a, a + 1, more, rng);
    if (again.value != want) {
      if (!a_certified) throw Inconsistent{"probe dimension at a_Z off the ramp"};
      again = generic_fatpoint_dim(z, a, a + 1, GenericMode::symbolic(), rng);
      if (again.value != want) throw Inconsistent{"dimension at a_Z off the ramp"};
    }
    again.cert.note = at_a.cert.note;
    at_a = again;
  }
  at_a.cert.level = a_certified ? CertLevel::Certified : CertLevel::MonteCarlo;
  out.ramp.push_back(at_a);

  // Remaining cells: the ramp is forced once a_Z is exact; probes are a consistency check.
  bool fits = true;
  for (int j = a + 1; j <= b + 1; ++j) {
    std::size_t r = ramp_value(a, b, j);
    GenericDim cell;
    cell.value = r;
    if (!tiny_field(z.spec())) {
      GenericDim g = generic_fatpoint_dim(z, j, j + 1, probe, rng);
      if (g.value < r) throw Inconsistent{"probe below the ramp at j = " + std::to_string(j)};
      if (g.value > r) {
        GenericMode more = probe;
        more.samples = probe.samples * 4;
        g = generic_fatpoint_dim(z, j, j + 1, more, rng);
        if (g.value != r) {
          if (!symbolic) throw Inconsistent{"probe above the ramp at j = " + std::to_string(j)};
          g = generic_fatpoint_dim(z, j, j + 1, GenericMode::symbolic(), rng);
          if (g.value != r) fail(ErrorCode::RampViolation, "symbolic dimension off the ramp at j = " + std::to_string(j));
        }
      }
      cell.cert.probes = g.cert.probes;
      fits = fits && g.value == r;
    }
    cell.cert.note = "ramp";
    out.ramp.push_back(cell);
  }

  CertLevel overall = a_certified ? CertLevel::Certified : (fits ? CertLevel::RampConsistent : CertLevel::MonteCarlo);
  for (int j = a + 1; j <= b + 1; ++j) out.ramp[j].cert.level = overall;
  if (!a_certified) out.ramp[a].cert.level = overall;
  out.cert.level = overall;
  out.cert.symbolic = at_a.cert.symbolic;
  out.cert.probes = at_a.cert.probes;
  out.cert.note = a_certified ? (at_a.cert.symbolic ? "symbolic at a_Z" : "bound at a_Z") : "probe sweep";
  return out;
}

}  // namespace

std::size_t ramp_value(int a, int b, int j) {
  return static_cast<std::size_t>(std::max(0, j - a + 1) + std::max(0, j - b + 1));
}

int compute_tZ(const PointConfig& z) {
  for (int j = 0;; ++j)
    if (static_cast<long>(ideal_dim(z, j + 1)) > binom2(j + 1)) return j;
}

Splitting compute_splitting(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  if (z.size() < 2) fail(ErrorCode::InvalidInput, "splitting type needs at least two points");
  try {
    return splitting_pass(z, mode, rng);
  } catch (const Inconsistent& e) {
    if (mode.is_symbolic()) fail(ErrorCode::RampViolation, e.what);
  }
  GenericMode sym = GenericMode::symbolic();
  sym.seed = mode.seed;
  try {
    Splitting s = splitting_pass(z, sym, rng);
    s.cert.note += " (escalated)";
    return s;
  } catch (const Inconsistent& e) {
    fail(ErrorCode::RampViolation, e.what);
  }
}

namespace {

InvariantsReport build_report(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  InvariantsReport r;
  r.d = z.size();
  r.delta_h = delta_hf(z);
  std::size_t acc = 0;
  for (auto v : r.delta_h) r.hilbert.push_back(acc += v);
  r.t_Z = compute_tZ(z);
  r.splitting = compute_splitting(z, mode, rng);
  r.m_Z = r.splitting.a;
  r.u_Z = r.splitting.b - 1;
  r.max_collinear = max_collinear(z);
  r.hZ_at_tZ = hilbert_function(z, r.t_Z);
  long d = static_cast<long>(r.d), m = r.m_Z;
  r.self_intersection = (m + 1) * (m + 1) - m * m - d;
  r.criterion_i = r.m_Z < r.t_Z;
  r.criterion_ii = 2 * m + 2 < d && static_cast<long>(r.max_collinear) <= m + 1;
  r.criterion_iii = r.splitting.a <= r.splitting.b - 2 && r.hZ_at_tZ == r.d;
  r.unexpected = r.criterion_i;
  if (r.unexpected)
    for (int deg = r.m_Z + 1; deg <= r.u_Z; ++deg) r.unexpected_degrees.push_back(deg);
  return r;
}

bool criteria_agree(const InvariantsReport& r) {
  return r.criterion_i == r.criterion_ii && r.criterion_ii == r.criterion_iii;
}

}  // namespace

InvariantsReport unexpected_report(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  if (z.size() < 2) fail(ErrorCode::InvalidInput, "report needs at least two points");
  InvariantsReport r = build_report(z, mode, rng);
  if (criteria_agree(r)) return r;
  if (r.splitting.cert.level != CertLevel::Certified && !mode.is_symbolic()) {
    GenericMode sym = GenericMode::symbolic();
    sym.seed = mode.seed;
    r = build_report(z, sym, rng);
    if (criteria_agree(r)) return r;
  }
  fail(ErrorCode::CriteriaDisagree, "unexpectedness criteria disagree: (i) " + std::to_string(r.criterion_i) +
                                        " (ii) " + std::to_string(r.criterion_ii) + " (iii) " +
                                        std::to_string(r.criterion_iii));
}

bool unexpected_in_degree_by_definition(const PointConfig& z, int j, const Splitting& s) {
  std::size_t dj = j < static_cast<int>(s.ramp.size()) ? s.ramp[j].value : ramp_value(s.a, s.b, j);
  long expected = std::max(0L, static_cast<long>(ideal_dim(z, j + 1)) - binom2(j + 1));
  return static_cast<long>(dj) > expected;
}

const char* small_tz_kind_name(SmallTzClass::Kind k) {
  switch (k) {
    case SmallTzClass::Kind::NotApplicable: return "not_applicable";
    case SmallTzClass::Kind::CompleteIntersection: return "complete_intersection";
    case SmallTzClass::Kind::Collinear: return "collinear";
  }
  return "unknown";
}

SmallTzClass small_tZ_classify(const PointConfig& z, const GenericMode& mode, Rng& rng) {
  SmallTzClass c;
  const int d = static_cast<int>(z.size());
  c.t_Z = compute_tZ(z);
  if (static_cast<int>(hilbert_function(z, c.t_Z)) == d) return c;

  std::size_t best = 0;
  ProjPoint best_line;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k < z.size(); ++k) {
      ProjPoint l = z[i].cross(z[k]);
      std::size_t n = 0;
      for (const auto& p : z.points())
        if (l.dot(p).is_zero()) ++n;
      if (n > best) {
        best = n;
        best_line = l;
      }
    }
  if (d == 1) best = 1;

  if (static_cast<int>(best) == d - c.t_Z && static_cast<int>(best) >= c.t_Z + 2) {
    c.kind = SmallTzClass::Kind::Collinear;
    c.on_line = best;
    if (d >= 2) c.line = best_line;
  } else if (d == 2 * (c.t_Z + 1) && ideal_dim(z, 2) >= 1 &&
             ideal_dim(z, c.t_Z + 1) > (c.t_Z + 1 >= 2 ? basis_size(c.t_Z - 1) : 0)) {
    c.kind = SmallTzClass::Kind::CompleteIntersection;
    c.conic_degree = 2;
    c.curve_degree = c.t_Z + 1;
  } else {
    fail(ErrorCode::Internal, "h_Z(t_Z) < |Z| but Z is neither a complete intersection nor mostly collinear");
  }
  if (d >= 2) {
    Splitting s = compute_splitting(z, mode, rng);
    ensure(s.a == c.t_Z, "small t_Z: m_Z differs from t_Z");
    ensure(s.ramp[s.a].value == 1, "small t_Z: dimension at m_Z is not 1");
  }
  return c;
}

AddPointPrediction add_point_predictions(const PointConfig& z, const std::optional<ProjPoint>& q,
                                         const GenericMode& mode, Rng& rng) {
  AddPointPrediction out;
  out.q = q;
  if (q) {
    if (z.contains(*q)) fail(ErrorCode::PointInZ, q->str() + " already lies in Z");
    out.used = *q;
  } else {
    GenericMode pm = as_probe(mode);
    pm.avoid_lines = true;
    out.used = sample_point(z, pm, rng);
  }
  const int d = static_cast<int>(z.size());
  int t = compute_tZ(z);
  Splitting s = compute_splitting(z, mode, rng);
  int m = s.a;
  out.t_lo = t;
  out.t_hi = t + 1;
  if (d % 2 == 1 && 2 * m == d - 1) {
    out.m_lo = out.m_hi = m;
    out.rule = "maximal index: m stays";
  } else if (!q && 2 * m < d - 1) {
    out.m_lo = out.m_hi = m + 1;
    out.rule = "general point: m grows by one";
  } else {
    out.m_lo = m;
    out.m_hi = m + 1;
    out.rule = "m grows by at most one";
  }
  PointConfig zq = z.with_point(out.used);
  out.t_actual = compute_tZ(zq);
  Splitting sq = compute_splitting(zq, mode, rng);
  out.m_actual = sq.a;
  out.a_actual = sq.a;
  out.b_actual = sq.b;
  ensure(out.t_actual >= out.t_lo && out.t_actual <= out.t_hi, "t after adding a point out of range");
  ensure(out.m_actual >= out.m_lo && out.m_actual <= out.m_hi, "m after adding a point out of range");
  if (out.m_actual == m)
    ensure(sq.b == s.b + 1, "splitting after adding a point: expected (a, b + 1)");
  else
    ensure(sq.a == s.a + 1 && sq.b == s.b, "splitting after adding a point: expected (a + 1, b)");
  return out;
}

}  // namespace uc
