#include "doctest.h"
#include "helpers.hpp"

using namespace uc;
using th::poly;

TEST_CASE("monomial bases") {
  CHECK(monomial_basis(0).size() == 1);
  auto b1 = monomial_basis(1);
  REQUIRE(b1.size() == 3);
  CHECK(b1[0] == Monomial{1, 0, 0});
  CHECK(b1[1] == Monomial{0, 1, 0});
  CHECK(b1[2] == Monomial{0, 0, 1});
  CHECK(monomial_basis(4).size() == 15);
  for (int t = 0; t < 8; ++t) {
    auto b = monomial_basis(t);
    CHECK(b.size() == basis_size(t));
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(monomial_index(b[i]) == i);
  }
}

TEST_CASE("polynomial text round trip") {
  auto k = th::Q();
  HomPoly f = poly(k, "x^2*y - 3*z^3");
  CHECK(f.degree() == 3);
  CHECK(f.str() == "x^2*y - 3*z^3");
  CHECK(poly(k, f.str()) == f);
  CHECK_THROWS_AS(poly(k, "x^2 + y"), Error);
}

TEST_CASE("partials and the Euler identity") {
  auto k = th::Q();
  Partials p = partials(poly(k, "x^3"));
  CHECK(p.fx == poly(k, "3*x^2"));
  CHECK(p.fy.is_zero());
  CHECK(p.fz.is_zero());
  CHECK(p.euler_holds);
  Partials q = partials(poly(k, "x*y*z"));
  CHECK(q.fx == poly(k, "y*z"));
  CHECK(q.fy == poly(k, "x*z"));
  CHECK(q.fz == poly(k, "x*y"));

  auto k2 = th::Fp(2);
  HomPoly f = poly(k2, "x*y*z*(x + y)");
  Partials r = partials(f);
  CHECK(r.fx == poly(k2, "y^2*z"));
  CHECK(r.fy == poly(k2, "x^2*z"));
  CHECK(r.fz == poly(k2, "x^2*y + x*y^2"));
  HomPoly x = poly(k2, "x"), y = poly(k2, "y"), z = poly(k2, "z");
  CHECK((x * r.fx + y * r.fy + z * r.fz).is_zero());
  CHECK(r.euler_holds);
  CHECK(x * r.fx + y * r.fy == f);
}

TEST_CASE("transforms") {
  auto k = th::Q();
  HomPoly f = poly(k, "x^2*y + 2*y*z^2 - z^3");
  CHECK(apply_transform(f, ProjTransform::identity(k)) == f);
  auto swap = ProjTransform::from_rows({th::pt(k, 0, 1, 0), th::pt(k, 1, 0, 0), th::pt(k, 0, 0, 1)});
  CHECK(apply_transform(poly(k, "x^2*y"), swap) == poly(k, "x*y^2"));
  CHECK_THROWS_AS(ProjTransform::from_rows({th::pt(k, 1, 0, 0), th::pt(k, 1, 0, 0), th::pt(k, 0, 0, 1)}), Error);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    std::array<ProjPoint, 3> rows;
    for (auto& r : rows) r = ProjPoint(random_scalar(k, 9, rng), random_scalar(k, 9, rng), Scalar::one(k));
    if (det3(rows[0], rows[1], rows[2]).is_zero()) continue;
    auto m = ProjTransform::from_rows(rows);
    HomPoly g = apply_transform(f, m);
    CHECK(g.degree() == f.degree());
    CHECK(apply_transform(g, m.inverse()) == f);
  }
}

TEST_CASE("multiplicity at a point") {
  auto k = th::Q();
  CHECK(multiplicity_at(poly(k, "x^2*z + y^3"), th::pt(k, 0, 0, 1)) == 2);
  CHECK(multiplicity_at(poly(k, "x - 2*y + z"), th::pt(k, 1, 1, 1)) == 1);
  CHECK(multiplicity_at(poly(k, "x - 2*y + z"), th::pt(k, 1, 0, 0)) == 0);

  auto ff = FieldSpec::function_field(th::Fp(2));
  Scalar a = Scalar::var_s(ff), b = Scalar::var_t(ff), c = Scalar::one(ff);
  HomPoly x = poly(ff, "x"), y = poly(ff, "y"), z = poly(ff, "z");
  HomPoly fano = (y * z * (y + z)).scaled(a * a) + (x * z * (x + z)).scaled(b * b) + (x * y * (x + y)).scaled(c * c);
  CHECK(multiplicity_at(fano, ProjPoint(a, b, c)) == 2);
}

TEST_CASE("multiplicity is invariant under coordinate changes") {
  auto k = th::Q();
  Rng rng(4);
  HomPoly f = poly(k, "x^2*z + y^3 - x*y*z");
  ProjPoint p = th::pt(k, 0, 0, 1);
  for (int i = 0; i < 10; ++i) {
    std::array<ProjPoint, 3> rows;
    for (auto& r : rows) r = ProjPoint(random_scalar(k, 9, rng), random_scalar(k, 9, rng), Scalar::one(k));
    if (det3(rows[0], rows[1], rows[2]).is_zero()) continue;
    auto m = ProjTransform::from_rows(rows);
    auto inv = m.inverse();
    auto v = inv.apply(p.coords());
    CHECK(multiplicity_at(apply_transform(f, m), ProjPoint(v[0], v[1], v[2])) == 2);
  }
}

TEST_CASE("division by linear forms") {
  auto k = th::Q();
  auto q = divide_by_linear(poly(k, "x^2 - y^2"), poly(k, "x - y"));
  REQUIRE(q);
  CHECK(*q == poly(k, "x + y"));
  CHECK_FALSE(divide_by_linear(poly(k, "x^2 + y^2"), poly(k, "x - y")));
  HomPoly l1 = poly(k, "x + 2*y"), l2 = poly(k, "y - z"), l3 = poly(k, "x + y + z");
  auto r = divide_by_linear(l1 * l2 * l3, l2);
  REQUIRE(r);
  CHECK(*r == l1 * l3);
  CHECK(*r * l2 == l1 * l2 * l3);
}

TEST_CASE("restriction to lines") {
  auto k = th::Q();
  ProjPoint p = th::pt(k, 1, 2, 3);
  CHECK(restrict_to_line(HomPoly::linear(p), p).is_zero());
  for (const auto& b : dual_line_basis(p)) CHECK(p.dot(b).is_zero());
  HomPoly f = poly(k, "x^2 + y*z"), g = poly(k, "x - y + 5*z");
  CHECK(restrict_to_line(f * g, p) == restrict_to_line(f, p) * restrict_to_line(g, p));
  CHECK(restrict_to_line(f, p).degree() == 2);

  HomPoly prod = poly(k, "x") * poly(k, "y") * poly(k, "x + y") * poly(k, "x - z");
  BinaryForm r = restrict_to_line(prod, th::pt(k, 3, 7, 11));
  CHECK(r.degree() == 4);
  CHECK(binary_gcd(r, BinaryForm(k, {Scalar::zero(k), Scalar::zero(k), Scalar::zero(k), Scalar::zero(k),
                                     Scalar::zero(k)})) == r.monic());
}

TEST_CASE("binary gcd") {
  auto k = th::Q();
  auto one = Scalar::one(k), zero = Scalar::zero(k);
  BinaryForm a2b(k, {zero, one, zero, zero});  // alpha^2 beta
  BinaryForm ab2(k, {zero, zero, one, zero});  // alpha beta^2
  CHECK(binary_gcd(a2b, ab2) == BinaryForm(k, {zero, one, zero}));
  BinaryForm f(k, {Scalar::from_int(k, 2), Scalar::from_int(k, 4)});
  CHECK(binary_gcd(f, BinaryForm(k, {zero, zero})) == f.monic());

  auto lin = [&](long r) { return BinaryForm(k, {one, Scalar::from_int(k, -r)}); };
  BinaryForm g1 = lin(1) * lin(2) * lin(3), g2 = lin(4) * lin(5);
  CHECK(binary_gcd(g1, g2).degree() == 0);
  CHECK(binary_gcd(g1 * lin(7), g2 * lin(7)) == lin(7).monic());
}
