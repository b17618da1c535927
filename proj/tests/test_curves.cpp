#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"
#include "uc/curves.hpp"

using namespace uc;
using th::pt;

namespace {

ProjPoint general_point(const PointConfig& z, Rng& rng) {
  GenericMode m = GenericMode::probe();
  m.avoid_lines = true;
  return sample_point(z, m, rng);
}

void check_record(const CurveRecord& rec, const PointConfig& z) {
  for (const auto& q : z.points()) CHECK(rec.F().eval(q).is_zero());
  CHECK(multiplicity_at(rec.F(), rec.P) == rec.m_Z);
  if (!rec.core) return;
  HomPoly prod = *rec.core;
  for (const auto& pl : rec.peeled) {
    prod = prod * pl.line;
    CHECK(pl.line.eval(rec.P).is_zero());
    CHECK(pl.line.eval(z[pl.point]).is_zero());
  }
  CHECK(prod.normalized() == rec.F().normalized());
  CHECK(rec.core->degree() == rec.m_Z_prime + 1);
  CHECK(static_cast<int>(rec.peeled.size()) == rec.m_Z - rec.m_Z_prime);
}

}  // namespace

TEST_CASE("Fano curve at the generic point") {
  auto f2 = th::Fp(2);
  auto ff = f2.with_function_field();
  PointConfig z = catalog::fano(f2);
  Scalar a = Scalar::var_s(ff), b = Scalar::var_t(ff), c = Scalar::one(ff);
  CurveRecord rec = curve_CP(z, ProjPoint(a, b, c), 2);
  REQUIRE(rec.basis.size() == 1);
  HomPoly x = th::poly(ff, "x"), y = th::poly(ff, "y"), zz = th::poly(ff, "z");
  HomPoly want = (y * zz * (y + zz)).scaled(a * a) + (x * zz * (x + zz)).scaled(b * b) + (x * y * (x + y)).scaled(c * c);
  CHECK(rec.F() == want.normalized());
  CHECK(rec.mult_F == 2);
  Rng rng(1);
  CurveRecord done = decompose(rec, z, GenericMode::symbolic(), rng);
  CHECK(done.peeled.empty());
}

TEST_CASE("pencil for an odd number of general points") {
  Rng rng(2);
  PointConfig z = th::generic_points(th::Q(), 7, rng);
  CurveRecord rec = curve_CP(z, general_point(z, rng), 3);
  CHECK(rec.is_pencil());
  Rng r2(3);
  CHECK_THROWS_AS(decompose(rec, z, GenericMode::probe(), r2), Error);
}

TEST_CASE("H19 curve has one line component") {
  Rng rng(4);
  PointConfig z = dual_points(catalog::h19(th::Q()));
  ProjPoint p = general_point(z, rng);
  CurveRecord rec = curve_CP(z, p, 8);
  REQUIRE(rec.basis.size() == 1);
  CHECK(rec.F().degree() == 9);
  rec = decompose(rec, z, GenericMode::probe(), rng);
  check_record(rec, z);
  REQUIRE(rec.peeled.size() == 1);
  CHECK(z[rec.peeled[0].point] == pt(th::Q(), 2, 1, 0));
  CHECK(rec.mult_core == 7);
  long c2 = static_cast<long>(rec.m_Z + 1) * (rec.m_Z + 1) - static_cast<long>(rec.m_Z) * rec.m_Z - 19;
  CHECK(c2 < -1);

  auto syz = least_syzygy(dual_lines(z).product(), HomPoly::linear(p));
  REQUIRE(syz);
  CHECK(syz->degree() == 8);
  Parametrization pm = parametrize(z, p, *syz, GenericMode::probe(), rng);
  CHECK(pm.n == 1);
  CHECK(pm.component_degree == 8);
  CHECK(compose(*rec.core, pm.phi).is_zero());

  Splitting s = compute_splitting(z, GenericMode::probe(), rng);
  DegreeFamily fam = unexpected_in_degree(z, p, 9, s);
  CHECK(fam.free_lines == 0);
  CHECK(fam.dim == 1);
  CHECK_THROWS_AS(unexpected_in_degree(z, p, 10, s), Error);
  CHECK_FALSE(irreducible_by_global_syzygy(z, GenericMode::probe(), rng).has_value());
}

TEST_CASE("B3 curve is irreducible") {
  Rng rng(5);
  PointConfig z = dual_points(catalog::b3(th::Q()));
  ProjPoint p = general_point(z, rng);
  CurveRecord rec = decompose(curve_CP(z, p, 3), z, GenericMode::probe(), rng);
  check_record(rec, z);
  CHECK(rec.peeled.empty());
  CHECK(rec.irreducible_for_this_P);
  CHECK(irreducibility_by_deletion(z, GenericMode::probe(), rng));
  auto syz = least_syzygy(dual_lines(z).product(), HomPoly::linear(p));
  REQUIRE(syz);
  Parametrization pm = parametrize(z, p, *syz, GenericMode::probe(), rng);
  CHECK(pm.n == 0);
  CHECK(pm.component_degree == 4);
  CHECK(compose(*rec.core, pm.phi).is_zero());
}

TEST_CASE("irreducibility by deletion") {
  Rng rng(6);
  CHECK_FALSE(irreducibility_by_deletion(dual_points(catalog::h19(th::Q())), GenericMode::probe(), rng));
  CHECK(irreducibility_by_deletion(th::generic_points(th::Q(), 8, rng), GenericMode::probe(), rng));
}

TEST_CASE("syzygies of products of lines") {
  auto k = th::Q();
  HomPoly f = th::poly(k, "x*y*z");
  CHECK_FALSE(syzygy_min_degree(f, std::nullopt, 0));
  auto s = least_syzygy(f, std::nullopt);
  REQUIRE(s);
  CHECK(s->degree() == 1);
  Partials p = partials(f);
  CHECK((s->s[0] * p.fx + s->s[1] * p.fy + s->s[2] * p.fz).is_zero());

  auto k11 = th::Fp(11);
  LineArrangement fer = catalog::fermat(5, k11);
  auto g = least_syzygy(fer.product(), std::nullopt);
  REQUIRE(g);
  CHECK(g->degree() == 6);
  Rng rng(7);
  auto k101 = th::Fp(101);
  fer = catalog::fermat(5, k101);
  ProjPoint q = general_point(dual_points(fer), rng);
  auto m = least_syzygy(fer.product(), HomPoly::linear(q));
  REQUIRE(m);
  CHECK(m->degree() == 6);
  Partials pf = partials(fer.product());
  REQUIRE(m->s3);
  CHECK((m->s[0] * pf.fx + m->s[1] * pf.fy + m->s[2] * pf.fz + *m->s3 * HomPoly::linear(q)).is_zero());
}

TEST_CASE("irreducibility from global syzygies") {
  Rng rng(8);
  auto fer = irreducible_by_global_syzygy(dual_points(catalog::fermat(5, th::Fp(11))), GenericMode::probe(), rng);
  REQUIRE(fer);
  CHECK(*fer);
  for (int kk = 1; kk <= 3; ++kk) {
    auto r = irreducible_by_global_syzygy(dual_points(catalog::family_a4k(kk, th::Q())), GenericMode::probe(), rng);
    REQUIRE(r);
    CHECK(*r);
  }
}

TEST_CASE("adding a dual point keeps m_Z") {
  auto k = th::Q();
  Rng rng(9);
  PointConfig z1 = dual_points(catalog::example20('a', k));
  ProjPoint p = general_point(z1, rng);
  auto syz = least_syzygy(dual_lines(z1).product(), HomPoly::linear(p));
  REQUIRE(syz);
  CHECK(syz->degree() == 7);
  CHECK(mz_after_adding_dual(z1, pt(k, -1, 2, 0), *syz));
  CHECK_FALSE(mz_after_adding_dual(z1, pt(k, 13, -29, 71), *syz));
}

TEST_CASE("common points over a finite field") {
  Rng rng(10);
  auto k31 = th::Fp(31);
  PointConfig z1 = dual_points(catalog::example20('a', k31));
  auto found = common_points(z1, GenericMode::probe(), rng);
  CHECK(found == std::vector<ProjPoint>{pt(k31, -1, 2, 0)});

  auto k = th::Fp(11);
  PointConfig z = dual_points(catalog::b3(k));
  auto pts = common_points(z, GenericMode::probe(), rng);
  int m = compute_splitting(z, GenericMode::symbolic(), rng).a;
  std::vector<ProjPoint> plane;
  for (long a = 0; a < 11; ++a)
    for (long b = 0; b < 11; ++b) plane.push_back(pt(k, 1, a, b));
  for (long b = 0; b < 11; ++b) plane.push_back(pt(k, 0, 1, b));
  plane.push_back(pt(k, 0, 0, 1));
  std::vector<ProjPoint> brute;
  for (const auto& q : plane) {
    if (z.contains(q)) continue;
    if (compute_splitting(z.with_point(q), GenericMode::symbolic(), rng).a == m) brute.push_back(q);
  }
  std::sort(pts.begin(), pts.end());
  std::sort(brute.begin(), brute.end());
  CHECK(pts == brute);
  CHECK_THROWS_AS(common_points(dual_points(catalog::b3(th::Q())), GenericMode::probe(), rng), Error);
}
