#include "uc/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "uc/io.hpp"

namespace uc::catalog {

namespace {

ProjPoint form(const FieldSpec& k, long a, long b, long c) { return ProjPoint::from_ints(k, a, b, c); }

int int_param(const Params& p, const std::string& key, int dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidInput, "parameter " + key + " must be an integer, got '" + it->second + "'");
  }
}

std::vector<long> list_param(const Params& p, const std::string& key) {
  std::vector<long> out;
  auto it = p.find(key);
  if (it == p.end()) return out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ':')) out.push_back(std::stol(item));
  return out;
}

void check_params(const std::string& name, const Params& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(ErrorCode::InvalidInput, "entry " + name + " has no parameter '" + k + "'");
  }
}

const long kH19[19][3] = {{1, 0, 0},  {0, 1, 0},   {0, 0, 1},  {1, 1, 0},  {1, -1, 0},  {2, 1, 0},  {2, -1, 0},
                          {1, 0, 1},  {1, 0, -1},  {0, 1, 1},  {0, 1, -1}, {1, 0, 2},   {1, 0, -2}, {0, 1, 2},
                          {0, 1, -2}, {1, -1, 1},  {1, -1, -1}, {1, -1, 2}, {1, -1, -2}};

}  // namespace

Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorCode::Parse, "expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

const std::vector<Entry>& list_entries() {
  static const std::vector<Entry> entries = {
      {"fano", "", "characteristic 2", "the seven points of the Fano plane", false},
      {"b3", "", "characteristic not 2", "B3 arrangement xyz(x^2-y^2)(x^2-z^2)(y^2-z^2)", false},
      {"h19", "", "characteristic 0 or large", "19 lines with an unexpected nonic", false},
      {"a_ab", "a=3,b=13", "1 <= a <= b-1, characteristic > b", "supersolvable arrangement with splitting (a,b)", false},
      {"family_a4k", "k=1,n=4k,abscissas=1:2:..:k", "characteristic 0 or large",
       "xyz(x^2-y^2) plus blocks x-cz, y-cz, x+cz, y+cz", false},
      {"fermat", "t=5", "primitive t-th root of unity (t | p-1 over GF(p), t <= 2 over Q)",
       "factors of (x^t-y^t)(y^t-z^t)(x^t-z^t)", false},
      {"star_random", "d=5,seed=1", "any field with enough elements", "d lines, no three concurrent", false},
      {"example20_a", "", "characteristic 0 or large", "h19 without 2x+y", false},
      {"example20_b", "", "characteristic 0 or large", "h19 with 2x+y replaced by 2y-x", false},
      {"example20_c", "", "characteristic 0 or large", "h19 plus 2y-x", false},
      {"example20_d", "", "characteristic 0 or large", "h19 (18 lines plus 2x+y)", false},
      {"klein", "file=PATH", "coordinates supplied by the user", "Klein arrangement of 21 lines", true},
      {"wiman", "file=PATH", "coordinates supplied by the user", "Wiman arrangement of 45 lines", true},
  };
  return entries;
}

PointConfig fano(const FieldSpec& spec) {
  if (!spec.is_prime_field() || spec.characteristic() != 2)
    fail(ErrorCode::FieldConstraintViolated, "fano needs GF(2), got " + spec.str());
  std::vector<ProjPoint> pts;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (a || b || c) pts.push_back(form(spec, a, b, c));
  ensure(pts.size() == 7, "fano plane has 7 points");
  return PointConfig(spec, pts);
}

LineArrangement h19(const FieldSpec& spec) {
  if (spec.is_function_field()) fail(ErrorCode::FieldConstraintViolated, "h19 needs Q or GF(p)");
  std::vector<ProjPoint> f;
  for (const auto& r : kH19) f.push_back(form(spec, r[0], r[1], r[2]));
  LineArrangement a(spec, f);
  ensure(a.size() == 19, "h19 has 19 lines");
  return a;
}

LineArrangement b3(const FieldSpec& spec) { return family_a(4, {1}, spec); }

LineArrangement a_ab(int a, int b, const FieldSpec& spec) {
  if (a < 1 || b < a + 1) fail(ErrorCode::FieldConstraintViolated, "a_ab needs 1 <= a <= b-1");
  if (spec.characteristic() != 0 && static_cast<std::uint64_t>(b) >= spec.characteristic())
    fail(ErrorCode::FieldConstraintViolated, "a_ab needs characteristic greater than b");
  std::vector<ProjPoint> f{form(spec, 0, 0, 1)};
  for (int i = 0; i < a; ++i) f.push_back(form(spec, 1, 0, i));
  for (int i = 0; i < b; ++i) f.push_back(form(spec, 0, 1, i));
  LineArrangement out(spec, f);
  ensure(out.size() == static_cast<std::size_t>(a + b + 1), "a_ab has a+b+1 lines");
  return out;
}

LineArrangement family_a(int n, const std::vector<long>& abscissas, const FieldSpec& spec) {
  if (n < 0) fail(ErrorCode::InvalidInput, "n must be nonnegative");
  std::size_t blocks = static_cast<std::size_t>((n + 3) / 4);
  if (abscissas.size() < blocks) fail(ErrorCode::InvalidInput, "not enough abscissas for n added lines");
  std::vector<ProjPoint> f{form(spec, 1, 0, 0), form(spec, 0, 1, 0), form(spec, 0, 0, 1), form(spec, 1, 1, 0),
                           form(spec, 1, -1, 0)};
  for (int i = 0; i < n; ++i) {
    long c = abscissas[static_cast<std::size_t>(i / 4)];
    if (c == 0) fail(ErrorCode::InvalidInput, "abscissas must be nonzero");
    switch (i % 4) {
      case 0: f.push_back(form(spec, 1, 0, -c)); break;
      case 1: f.push_back(form(spec, 0, 1, -c)); break;
      case 2: f.push_back(form(spec, 1, 0, c)); break;
      default: f.push_back(form(spec, 0, 1, c)); break;
    }
  }
  std::vector<std::string> seen;
  for (const auto& p : f) {
    if (std::find(seen.begin(), seen.end(), p.str()) != seen.end())
      fail(ErrorCode::FieldConstraintViolated, "abscissas produce repeated lines over " + spec.str());
    seen.push_back(p.str());
  }
  LineArrangement out(spec, f);
  ensure(out.size() == static_cast<std::size_t>(n + 5), "family has n+5 lines");
  return out;
}

LineArrangement family_a4k(int k, const FieldSpec& spec) {
  if (k < 1) fail(ErrorCode::InvalidInput, "k must be at least 1");
  std::vector<long> c;
  for (int i = 1; i <= k; ++i) c.push_back(i);
  return family_a(4 * k, c, spec);
}

std::vector<Scalar> roots_of_unity(int t, const FieldSpec& spec) {
  if (t < 1) fail(ErrorCode::InvalidInput, "t must be positive");
  if (spec.is_rationals()) {
    if (t > 2) fail(ErrorCode::FieldConstraintViolated, "Q has no primitive " + std::to_string(t) + "-th root of unity");
    if (t == 1) return {Scalar::one(spec)};
    return {Scalar::one(spec), Scalar::from_int(spec, -1)};
  }
  if (!spec.is_prime_field()) fail(ErrorCode::FieldConstraintViolated, "fermat needs Q or GF(p)");
  std::uint64_t p = spec.characteristic();
  if ((p - 1) % static_cast<std::uint64_t>(t) != 0)
    fail(ErrorCode::FieldConstraintViolated, std::to_string(t) + " does not divide p-1 for p = " + std::to_string(p));
  for (std::uint64_t g = 1; g < p; ++g) {
    std::uint64_t x = 1;
    int order = 0;
    do {
      x = modp::mul(x, g, p);
      ++order;
    } while (x != 1 && order <= t);
    if (order != t) continue;
    std::vector<Scalar> out;
    std::uint64_t r = 1;
    for (int i = 0; i < t; ++i) {
      out.push_back(Scalar::from_int(spec, static_cast<long>(r)));
      r = modp::mul(r, g, p);
    }
    return out;
  }
  fail(ErrorCode::Internal, "no primitive root found");
}

LineArrangement fermat(int t, const FieldSpec& spec) {
  auto roots = roots_of_unity(t, spec);
  Scalar one = Scalar::one(spec), zero = Scalar::zero(spec);
  std::vector<ProjPoint> f;
  for (const auto& r : roots) f.push_back(ProjPoint(one, -r, zero));
  for (const auto& r : roots) f.push_back(ProjPoint(zero, one, -r));
  for (const auto& r : roots) f.push_back(ProjPoint(one, zero, -r));
  LineArrangement out(spec, f);
  ensure(out.size() == static_cast<std::size_t>(3 * t), "fermat has 3t lines");
  return out;
}

LineArrangement fermat_extended(int t, const FieldSpec& spec) {
  LineArrangement a = fermat(t, spec);
  return a.with_line(form(spec, 1, 0, 0)).with_line(form(spec, 0, 1, 0));
}

LineArrangement star_random(int d, std::uint64_t seed, const FieldSpec& spec) {
  if (d < 1) fail(ErrorCode::InvalidInput, "d must be positive");
  Rng rng(seed);
  std::vector<ProjPoint> f;
  const std::uint64_t bound = 5 + static_cast<std::uint64_t>(d);
  for (int attempt = 0; attempt < 10000 && static_cast<int>(f.size()) < d; ++attempt) {
    Scalar a = random_scalar(spec, bound, rng), b = random_scalar(spec, bound, rng), c = random_scalar(spec, bound, rng);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    ProjPoint l(a, b, c);
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i) {
      if (f[i] == l) ok = false;
      for (std::size_t j = i + 1; j < f.size() && ok; ++j) ok = !det3(f[i], f[j], l).is_zero();
    }
    if (ok) f.push_back(l);
  }
  if (static_cast<int>(f.size()) < d)
    fail(ErrorCode::FieldConstraintViolated, "could not place " + std::to_string(d) + " lines over " + spec.str());
  return LineArrangement(spec, f);
}

LineArrangement example20(char variant, const FieldSpec& spec) {
  LineArrangement h = h19(spec);
  ProjPoint long_dashed = form(spec, 2, 1, 0), short_dashed = form(spec, -1, 2, 0);
  std::size_t idx = h.size();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h.coeffs(i) == long_dashed) idx = i;
  ensure(idx < h.size(), "h19 contains 2x+y");
  switch (variant) {
    case 'a': return h.without(idx);
    case 'b': return h.without(idx).with_line(short_dashed);
    case 'c': return h.with_line(short_dashed);
    case 'd': return h;
    default: fail(ErrorCode::UnknownName, std::string("example20 variant '") + variant + "'");
  }
}

Built build(const std::string& name, const Params& p, const FieldSpec& spec) {
  Built b;
  b.name = name;
  if (name == "fano") {
    check_params(name, p, {});
    b.points = fano(spec);
  } else if (name == "h19") {
    check_params(name, p, {});
    b.lines = h19(spec);
  } else if (name == "b3") {
    check_params(name, p, {});
    b.lines = b3(spec);
  } else if (name == "a_ab") {
    check_params(name, p, {"a", "b"});
    b.lines = a_ab(int_param(p, "a", 3), int_param(p, "b", 13), spec);
  } else if (name == "family_a4k") {
    check_params(name, p, {"k", "n", "abscissas"});
    int k = int_param(p, "k", 1);
    int n = int_param(p, "n", 4 * k);
    auto c = list_param(p, "abscissas");
    if (c.empty())
      for (int i = 1; i <= (n + 3) / 4; ++i) c.push_back(i);
    b.lines = family_a(n, c, spec);
  } else if (name == "fermat") {
    check_params(name, p, {"t", "extended"});
    int t = int_param(p, "t", 5);
    b.lines = int_param(p, "extended", 0) ? fermat_extended(t, spec) : fermat(t, spec);
  } else if (name == "star_random") {
    check_params(name, p, {"d", "seed"});
    b.lines = star_random(int_param(p, "d", 5), static_cast<std::uint64_t>(int_param(p, "seed", 1)), spec);
  } else if (name.rfind("example20_", 0) == 0 && name.size() == 11) {
    check_params(name, p, {});
    b.lines = example20(name.back(), spec);
  } else if (name == "klein" || name == "wiman") {
    check_params(name, p, {"file"});
    auto it = p.find("file");
    if (it == p.end()) fail(ErrorCode::InvalidInput, name + ": coordinates required (pass file=PATH)");
    io::Loaded l = io::load_config(it->second, spec, io::Kind::Lines);
    b.lines = l.as_lines();
    std::size_t want = name == "klein" ? 21 : 45;
    if (b.lines->size() != want)
      fail(ErrorCode::InvalidInput, name + " expects " + std::to_string(want) + " lines, file has " +
                                        std::to_string(b.lines->size()));
  } else {
    fail(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
  }
  return b;
}

}  // namespace uc::catalog
