#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "uc/arrangements.hpp"
#include "uc/catalog.hpp"

using namespace uc;
using th::pt;

namespace {

std::map<std::size_t, std::size_t> multiplicity_counts(const LineArrangement& a) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& p : singular_points(a)) ++out[p.multiplicity];
  return out;
}

LineArrangement pencil(const FieldSpec& k, int d) {
  std::vector<ProjPoint> ls;
  for (int i = 0; i < d; ++i) ls.push_back(pt(k, 1, i, 0));
  return LineArrangement(k, ls);
}

LineArrangement generic_lines(const FieldSpec& k, std::size_t d, Rng& rng) {
  return dual_lines(th::generic_points(k, d, rng));
}

std::size_t index_of_line(const LineArrangement& a, const ProjPoint& l) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.coeffs(i) == l) return i;
  FAIL("line not found");
  return 0;
}

std::pair<int, int> exponents(const LineArrangement& a, Rng& rng) {
  FreenessReport r = freeness(a, GenericMode::probe(), rng);
  REQUIRE(r.free);
  return {r.a, r.b};
}

}  // namespace

TEST_CASE("singular points") {
  Rng rng(1);
  auto k = th::Q();
  auto g = multiplicity_counts(generic_lines(k, 6, rng));
  CHECK(g.size() == 1);
  CHECK(g[2] == 15);
  auto f = multiplicity_counts(catalog::fermat(5, th::Fp(11)));
  CHECK(f[3] == 25);
  CHECK(f[5] == 3);
  CHECK(f.size() == 2);
  auto b = multiplicity_counts(catalog::b3(k));
  CHECK(b[4] == 3);
  CHECK(b[3] == 4);
  CHECK(b[2] == 6);
}

TEST_CASE("Jacobian dimensions") {
  auto k = th::Q();
  LineArrangement one(k, {pt(k, 1, 0, 0)});
  for (int t = 0; t < 5; ++t) CHECK(jacobian_dim(one, t) == 0);
  Rng rng(2);
  LineArrangement three = generic_lines(k, 3, rng);
  CHECK(deg_jacobian(three).value == 3);
  CHECK(c2(three) == 1);
  for (int d = 3; d <= 5; ++d) CHECK(deg_jacobian(pencil(k, d)).value == static_cast<std::size_t>((d - 1) * (d - 1)));
  CHECK(c2(catalog::b3(k)) == 15);
}

TEST_CASE("H19 Jacobian") {
  LineArrangement h = catalog::h19(th::Q());
  CHECK(jacobian_dim(h, 25) == 243);
  CHECK(jacobian_dim(h, 26) == 244);
  CHECK(c2(h) > 80);
}

TEST_CASE("freeness decisions") {
  Rng rng(3);
  auto k = th::Q();
  FreenessReport h = freeness(catalog::h19(k), GenericMode::probe(), rng);
  CHECK_FALSE(h.free);
  CHECK(h.a == 8);
  CHECK(h.b == 10);
  CHECK(h.c2 > 80);
  FreenessReport star = freeness(catalog::star_random(5, 7, k), GenericMode::probe(), rng);
  CHECK_FALSE(star.free);
  FreenessReport a = freeness(catalog::a_ab(3, 13, k), GenericMode::probe(), rng);
  CHECK(a.free);
  CHECK(a.a == 3);
  CHECK(a.b == 13);
  CHECK(a.saito);
  FreenessReport b = freeness(catalog::b3(k), GenericMode::probe(), rng);
  CHECK(b.free);
  CHECK(b.c2 == 15);
}

TEST_CASE("freeness when the characteristic divides the degree") {
  Rng rng(4);
  auto k11 = th::Fp(11);
  FreenessReport f = freeness(catalog::fermat(5, k11), GenericMode::probe(), rng);
  CHECK(f.c2_route);
  CHECK(f.free);
  auto k3 = th::Fp(3);
  try {
    freeness(generic_lines(k3, 6, rng), GenericMode::probe(), rng);
    FAIL("expected CharDividesDegree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharDividesDegree);
  }
  std::vector<ProjPoint> ls;
  for (int i = 0; i < 3; ++i) ls.push_back(pt(k3, 1, i, 0));
  ls.push_back(pt(k3, 0, 1, 0));
  ls.push_back(pt(k3, 0, 0, 1));
  ls.push_back(pt(k3, 1, 1, 1));
  LineArrangement near_pencil(k3, ls);
  REQUIRE_FALSE(modular_points(near_pencil).empty());
  FreenessReport r = freeness(near_pencil, GenericMode::probe(), rng);
  CHECK_FALSE(r.c2_route);
  CHECK(r.free);
}

TEST_CASE("addition-deletion along the Fermat chain") {
  Rng rng(5);
  auto k = th::Fp(11);
  LineArrangement a = catalog::fermat_extended(5, k);
  for (const auto& drop : {pt(k, 0, 1, 0), pt(k, 1, 0, 0)}) {
    std::size_t i = index_of_line(a, drop);
    AddDelClaims claims;
    claims.a_exp = exponents(a, rng);
    AddDelVerdict v = addition_deletion(a, i, claims);
    CHECK(v.kind == AddDelVerdict::Kind::Implied);
    a = a.without(i);
    CHECK(v.a_prime_exp == exponents(a, rng));
  }
  CHECK(exponents(a, rng) == std::pair<int, int>{6, 8});
}

TEST_CASE("addition-deletion along the A_4k chain") {
  auto k = th::Q();
  std::vector<std::pair<int, int>> types = {{3, 5}, {4, 5}, {5, 5}, {5, 6}};
  for (int n = 4; n < 7; ++n) {
    LineArrangement big = catalog::family_a(n + 1, {1, 2}, k);
    AddDelClaims claims;
    claims.a_prime_exp = types[static_cast<std::size_t>(n - 4)];
    AddDelVerdict v = addition_deletion(big, big.size() - 1, claims);
    CHECK(v.kind == AddDelVerdict::Kind::Implied);
    CHECK(v.a_exp == types[static_cast<std::size_t>(n - 3)]);
  }
}

TEST_CASE("addition-deletion on the 20-line arrangement") {
  auto k = th::Q();
  LineArrangement c = catalog::example20('c', k);
  CHECK(c.size() == 20);
  AddDelClaims claims;
  claims.a_prime_exp = std::pair<int, int>{7, 11};
  AddDelVerdict v = addition_deletion(c, index_of_line(c, pt(k, 2, 1, 0)), claims);
  CHECK(v.kind == AddDelVerdict::Kind::Implied);
  CHECK(v.a_exp == std::pair<int, int>{8, 11});

  AddDelClaims bad;
  bad.a_prime_exp = std::pair<int, int>{7, 11};
  bad.a_exp = std::pair<int, int>{9, 10};
  CHECK(addition_deletion(c, index_of_line(c, pt(k, 2, 1, 0)), bad).kind == AddDelVerdict::Kind::Inconsistent);
}

TEST_CASE("modular points") {
  auto k = th::Q();
  auto p = supersolvable(pencil(k, 5));
  REQUIRE(p);
  CHECK(*p == std::pair<int, int>{0, 4});
  LineArrangement a = catalog::a_ab(3, 13, k);
  auto mods = modular_points(a);
  CHECK(std::find(mods.begin(), mods.end(), pt(k, 0, 1, 0)) != mods.end());
  CHECK(supersolvable(a) == std::pair<int, int>{3, 13});
  Rng rng(6);
  CHECK(modular_points(generic_lines(k, 4, rng)).empty());
}

TEST_CASE("incidence signatures") {
  auto k = th::Q();
  Rng rng(7);
  CHECK(incidence_signature(generic_lines(k, 3, rng)) == incidence_signature(generic_lines(k, 3, rng)));
  CHECK_FALSE(incidence_signature(catalog::b3(k)) == incidence_signature(generic_lines(k, 9, rng)));
  IncidenceSignature h = incidence_signature(catalog::h19(k));
  IncidenceSignature b = incidence_signature(catalog::example20('b', k));
  CHECK_FALSE(h.str().empty());
  CHECK_FALSE(b.str().empty());
}

TEST_CASE("arrangement properties on random instances") {
  Rng rng(8);
  for (const auto& k : {th::Q(), th::Fp(101)}) {
    for (int n = 0; n < 10; ++n) {
      std::size_t d = 4 + static_cast<std::size_t>(n % 5);
      LineArrangement a = generic_lines(k, d, rng);
      if (n % 2) a = a.with_line(pt(k, 1, 0, 0)).with_line(pt(k, 0, 1, 0)).with_line(pt(k, 1, 1, 0));
      std::size_t sum = 0;
      for (const auto& p : singular_points(a)) sum += p.multiplicity * (p.multiplicity - 1) / 2;
      CHECK(sum == a.size() * (a.size() - 1) / 2);
      if (k.characteristic() && a.size() % k.characteristic() == 0) continue;
      FreenessReport r = freeness(a, GenericMode::probe(), rng);
      CHECK(r.c2 >= static_cast<long>(r.a) * r.b);
      CHECK(r.free == (r.c2 == static_cast<long>(r.a) * r.b));
      if (auto s = supersolvable(a)) {
        CHECK(r.free);
        CHECK(*s == std::pair<int, int>{r.a, r.b});
      }
    }
  }
}
