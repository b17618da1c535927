#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"
#include "uc/invariants.hpp"

using namespace uc;
using th::pt;

namespace {

PointConfig collinear3(const FieldSpec& k) { return PointConfig(k, {pt(k, 1, 0, 0), pt(k, 0, 1, 0), pt(k, 1, 1, 0)}); }

PointConfig conic(const FieldSpec& k, int n) {
  std::vector<ProjPoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back(pt(k, 1, i, i * i));
  return PointConfig(k, pts);
}

PointConfig h19_points() { return dual_points(catalog::h19(th::Q())); }

}  // namespace

TEST_CASE("ideal dimensions") {
  auto k = th::Q();
  CHECK(ideal_dim(collinear3(k), 1) == 1);
  CHECK(ideal_dim(catalog::fano(th::Fp(2)), 3) == 3);
  CHECK(ideal_dim(h19_points(), 6) == 28 - 19);
  CHECK(ideal_dim(h19_points(), 5) == 21 - 18);
}

TEST_CASE("Hilbert functions") {
  PointConfig z = h19_points();
  CHECK(delta_hf(z) == std::vector<std::size_t>{1, 2, 3, 4, 4, 4, 1});
  CHECK(hilbert_function(z, 5) == 18);
  CHECK(hilbert_function(conic(th::Q(), 6), 2) == 5);
  Rng rng(1);
  PointConfig g = th::generic_points(th::Q(), 9, rng);
  CHECK(hilbert_function(g, 10) == 9);
}

TEST_CASE("fat points at concrete and generic points") {
  auto k = th::Q();
  Rng rng(2);
  PointConfig z = th::generic_points(k, 7, rng);
  ProjPoint p = pt(k, 101, 203, 1);
  for (int t = 0; t < 5; ++t) CHECK(fatpoint_dim(z, p, 0, t) == ideal_dim(z, t));
  CHECK_THROWS_AS(fatpoint_dim(z, z[0], 1, 2), Error);
  for (int t = 1; t < 6; ++t) {
    GenericDim g = generic_fatpoint_dim(z, t, t, GenericMode::symbolic(), rng);
    CHECK(g.value == 0);
  }

  auto f2 = th::Fp(2);
  GenericDim fano = generic_fatpoint_dim(catalog::fano(f2), 2, 3, GenericMode::probe(), rng);
  CHECK(fano.value == 1);
  CHECK(fano.cert.level == CertLevel::Certified);
  GenericDim fs = generic_fatpoint_dim(catalog::fano(f2), 2, 3, GenericMode::symbolic(), rng);
  CHECK(fs.value == 1);
  CHECK(fs.cert.symbolic);
}

TEST_CASE("H19 fat-point values") {
  PointConfig z = h19_points();
  Rng rng(3);
  GenericDim d7 = generic_fatpoint_dim(z, 7, 8, GenericMode::probe(), rng);
  CHECK(d7.value == 0);
  CHECK(d7.cert.level == CertLevel::Certified);
  CHECK(generic_fatpoint_dim(z, 8, 9, GenericMode::probe(), rng).value == 1);
  CHECK(h1_fatpoint(z, 8, GenericMode::probe(), rng) == 1);
  CHECK(h1_fatpoint(z, 9, GenericMode::probe(), rng) == 0);
  CHECK(h1_fatpoint(z, 17, GenericMode::probe(), rng) == 0);
}

TEST_CASE("collinear subsets") {
  CHECK(max_collinear(collinear3(th::Q())) == 3);
  CHECK(max_collinear(catalog::fano(th::Fp(2))) == 3);
  CHECK(max_collinear(dual_points(catalog::a_ab(3, 13, th::Q()))) == 14);
}

TEST_CASE("point and line duality") {
  auto k = th::Q();
  LineArrangement a = dual_lines(PointConfig(k, {pt(k, 1, 0, 0)}));
  CHECK(a.form(0) == th::poly(k, "x"));
  Rng rng(4);
  PointConfig z = th::generic_points(k, 8, rng);
  CHECK(dual_points(dual_lines(z)).points() == z.points());
  auto k11 = th::Fp(11);
  LineArrangement fer = catalog::fermat(5, k11);
  CHECK(fer.product().normalized() ==
        th::poly(k11, "(x^5 - y^5)*(x^5 - z^5)*(y^5 - z^5)").normalized());
}

TEST_CASE("fat-point monotonicity and lower bounds") {
  Rng rng(6);
  for (const auto& k : {th::Q(), th::Fp(101)}) {
    for (int n = 0; n < 4; ++n) {
      PointConfig z = th::generic_points(k, 6 + static_cast<std::size_t>(n), rng);
      if (n % 2) z = z.with_point(pt(k, 1, 0, 0)).with_point(pt(k, 1, 1, 0)).with_point(pt(k, 1, 2, 0));
      ProjPoint p = sample_point(z, GenericMode::probe(), rng);
      std::size_t prev = 0;
      for (int j = 0; j < 6; ++j) {
        for (int t = j; t < 7; ++t) {
          CHECK(fatpoint_dim(z, p, j, t) <= fatpoint_dim(z, p, j, t + 1));
          if (j > 0) CHECK(fatpoint_dim(z, p, j, t) <= fatpoint_dim(z, p, j - 1, t));
        }
        std::size_t d = fatpoint_dim(z, p, j, j + 1);
        CHECK(d >= prev);
        prev = d;
        long bound = 2L * j + 3 - static_cast<long>(hilbert_function(z, j + 1));
        CHECK(static_cast<long>(d) >= bound);
        GenericDim sym = generic_fatpoint_dim(z, j, j + 1, GenericMode::symbolic(), rng);
        CHECK(d >= sym.value);
      }
    }
  }
}
