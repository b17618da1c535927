#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"
#include "uc/invariants.hpp"

using namespace uc;
using th::pt;

TEST_CASE("t_Z") {
  auto k = th::Q();
  std::vector<ProjPoint> line;
  for (int i = 0; i < 6; ++i) line.push_back(pt(k, 1, i, 0));
  CHECK(compute_tZ(PointConfig(k, line)) == 0);
  for (int n = 5; n <= 10; ++n) {
    std::vector<ProjPoint> c;
    for (int i = 0; i < n; ++i) c.push_back(pt(k, 1, i, i * i));
    CHECK(compute_tZ(PointConfig(k, c)) == (n - 1) / 2);
  }
  CHECK(compute_tZ(dual_points(catalog::h19(k))) == 9);
}

TEST_CASE("splitting types") {
  Rng rng(1);
  Splitting h = compute_splitting(dual_points(catalog::h19(th::Q())), GenericMode::probe(), rng);
  CHECK(h.a == 8);
  CHECK(h.b == 10);
  Splitting a = compute_splitting(dual_points(catalog::a_ab(3, 13, th::Q())), GenericMode::probe(), rng);
  CHECK(a.a == 3);
  CHECK(a.b == 13);
  Splitting g = compute_splitting(th::generic_points(th::Q(), 6, rng), GenericMode::symbolic(), rng);
  CHECK(g.a == 2);
  CHECK(g.b == 3);
  for (std::size_t j = 0; j < h.ramp.size(); ++j)
    CHECK(h.ramp[j].value == ramp_value(h.a, h.b, static_cast<int>(j)));
}

TEST_CASE("unexpectedness reports") {
  Rng rng(2);
  InvariantsReport h = unexpected_report(dual_points(catalog::h19(th::Q())), GenericMode::probe(), rng);
  CHECK(h.unexpected);
  CHECK(h.unexpected_degrees == std::vector<int>{9});
  CHECK(h.t_Z == 9);
  CHECK(h.m_Z == 8);
  CHECK(h.u_Z == 9);
  CHECK(h.self_intersection == 81 - 64 - 19);

  InvariantsReport a = unexpected_report(dual_points(catalog::a_ab(3, 13, th::Q())), GenericMode::probe(), rng);
  CHECK_FALSE(a.unexpected);
  CHECK(a.m_Z == 3);
  CHECK(a.t_Z == 3);

  InvariantsReport f = unexpected_report(dual_points(catalog::fermat(5, th::Fp(11))), GenericMode::probe(), rng);
  CHECK(f.unexpected);
  CHECK(f.unexpected_degrees == std::vector<int>{7});

  InvariantsReport fano = unexpected_report(catalog::fano(th::Fp(2)), GenericMode::probe(), rng);
  CHECK(fano.unexpected);
  CHECK(fano.unexpected_degrees == std::vector<int>{3});
}

TEST_CASE("small t_Z classification") {
  auto k = th::Q();
  Rng rng(3);
  PointConfig four(k, {pt(k, 1, 0, 0), pt(k, 0, 1, 0), pt(k, 0, 0, 1), pt(k, 1, 1, 1)});
  SmallTzClass c = small_tZ_classify(four, GenericMode::probe(), rng);
  CHECK(c.kind == SmallTzClass::Kind::CompleteIntersection);
  CHECK(c.t_Z == 1);
  CHECK(c.conic_degree == 2);
  CHECK(c.curve_degree == 2);

  PointConfig five(k, {pt(k, 0, 0, 1), pt(k, 1, 0, 1), pt(k, 2, 0, 1), pt(k, 3, 0, 1), pt(k, 0, 1, 1)});
  SmallTzClass l = small_tZ_classify(five, GenericMode::probe(), rng);
  CHECK(l.kind == SmallTzClass::Kind::Collinear);
  CHECK(l.t_Z == 1);
  CHECK(l.on_line == 4);

  SmallTzClass n = small_tZ_classify(th::generic_points(k, 7, rng), GenericMode::probe(), rng);
  CHECK(n.kind == SmallTzClass::Kind::NotApplicable);
}

TEST_CASE("adding a point") {
  auto k = th::Q();
  Rng rng(4);
  PointConfig odd = th::generic_points(k, 7, rng);
  AddPointPrediction p = add_point_predictions(odd, pt(k, 1, 0, 0), GenericMode::probe(), rng);
  CHECK(p.m_actual == 3);

  std::vector<ProjPoint> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(pt(k, 1, i, 0));
  pts.push_back(pt(k, 0, 0, 1));
  pts.push_back(pt(k, 1, 1, 1));
  PointConfig low(k, pts);
  Splitting s = compute_splitting(low, GenericMode::probe(), rng);
  REQUIRE(2 * s.a < static_cast<int>(low.size()) - 1);
  AddPointPrediction q = add_point_predictions(low, std::nullopt, GenericMode::probe(), rng);
  CHECK(q.m_actual == s.a + 1);

  PointConfig z1 = dual_points(catalog::example20('a', k));
  AddPointPrediction r = add_point_predictions(z1, pt(k, -1, 2, 0), GenericMode::probe(), rng);
  CHECK(r.m_actual == 7);
}

TEST_CASE("invariant relations on random configurations") {
  Rng rng(5);
  for (const auto& k : {th::Q(), th::Fp(101)}) {
    for (int n = 0; n < 12; ++n) {
      std::size_t d = 4 + static_cast<std::size_t>(n % 6);
      PointConfig z = th::generic_points(k, d, rng);
      if (n % 3 == 1) z = z.with_point(pt(k, 1, 0, 0)).with_point(pt(k, 1, 1, 0)).with_point(pt(k, 1, -1, 0));
      InvariantsReport r = unexpected_report(z, GenericMode::probe(), rng);
      CHECK(r.splitting.a + r.splitting.b == static_cast<int>(r.d) - 1);
      CHECK(r.u_Z == static_cast<int>(r.d) - r.m_Z - 2);
      CHECK(r.m_Z - 1 <= r.u_Z);
      CHECK(r.m_Z <= r.t_Z);
      CHECK(r.t_Z <= (static_cast<int>(r.d) - 1) / 2);
      CHECK(r.criterion_i == r.criterion_ii);
      CHECK(r.criterion_ii == r.criterion_iii);
      if (r.hZ_at_tZ < r.d) CHECK_FALSE(r.unexpected);
      if (r.unexpected) CHECK(r.t_Z <= r.u_Z);
      AddPointPrediction a = add_point_predictions(z, std::nullopt, GenericMode::probe(), rng);
      CHECK(a.t_actual - r.t_Z >= 0);
      CHECK(a.t_actual - r.t_Z <= 1);
    }
  }
}
