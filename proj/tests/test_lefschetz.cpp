#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"
#include "uc/lefschetz.hpp"

using namespace uc;
using th::pt;

namespace {

std::size_t binom2(long n) { return n < 2 ? 0 : static_cast<std::size_t>(n * (n - 1) / 2); }

PowerIdeal ctrex() { return PowerIdeal::uniform(catalog::a_ab(3, 13, th::Q()), 8); }

}  // namespace

TEST_CASE("Hilbert functions of power ideals") {
  CHECK(power_ideal_hf_sequence(ctrex()) ==
        std::vector<std::size_t>{1, 3, 6, 10, 15, 21, 28, 36, 33, 27, 19, 12, 7, 3, 1});
  auto k = th::Q();
  PowerIdeal single(k, {{pt(k, 1, 2, 3), 4}});
  for (int j = 0; j < 4; ++j) CHECK(power_ideal_hf(single, j) == binom2(j + 2));
  for (int j = 4; j < 9; ++j) CHECK(power_ideal_hf(single, j) == binom2(j + 2) - binom2(j - 2));
}

TEST_CASE("SLP in range 2 for the eighth powers") {
  Rng rng(1);
  SLPTable t = slp_table(ctrex(), 2, GenericMode::probe(), rng);
  CHECK(t.quotient == std::vector<std::size_t>{1, 3, 5, 7, 9, 11, 13, 15, 5});
  for (bool m : t.maximal) CHECK(m);
  for (int d = 0; d < 13; ++d) {
    SLPReport r = slp_at(ctrex(), 2, d, GenericMode::probe(), rng, t.L);
    CHECK(r.maximal_rank);
    CHECK(r.delta == 0);
    CHECK(r.rank == r.dim_target - r.cokernel);
  }
}

TEST_CASE("H19 ninth powers fail SLP") {
  Rng rng(2);
  PowerIdeal pi = PowerIdeal::uniform(catalog::h19(th::Q()), 9);
  SLPReport r = slp_at(pi, 2, 7, GenericMode::probe(), rng);
  CHECK_FALSE(r.maximal_rank);
  CHECK(r.delta >= 1);
  SLPReport next = slp_at(pi, 2, 8, GenericMode::probe(), rng);
  CHECK(next.maximal_rank);
}

TEST_CASE("multiplication below the generators is injective") {
  Rng rng(3);
  PowerIdeal pi = PowerIdeal::uniform(catalog::b3(th::Q()), 6);
  SLPReport r = slp_at(pi, 2, 2, GenericMode::probe(), rng);
  CHECK(r.maximal_rank);
  CHECK(r.rank == r.dim_source);
}

TEST_CASE("range zero is the identity") {
  Rng rng(4);
  PowerIdeal pi = ctrex();
  for (int d = 0; d < 15; ++d) {
    SLPReport r = slp_at(pi, 0, d, GenericMode::probe(), rng);
    CHECK(r.rank == power_ideal_hf(pi, d));
    CHECK(r.maximal_rank);
  }
}

TEST_CASE("Macaulay duality") {
  auto k = th::Q();
  PowerIdeal sq(k, {{pt(k, 1, 0, 0), 2}, {pt(k, 0, 1, 0), 2}, {pt(k, 0, 0, 1), 2}});
  CHECK(macaulay_dual_dim(sq, 2, DualSide::Power) == 3);
  CHECK(macaulay_dual_dim(sq, 2, DualSide::FatPoint) == 3);
  CHECK(macaulay_dual_dim(ctrex(), 8, DualSide::Power) == 33);
  CHECK(macaulay_dual_dim(ctrex(), 8, DualSide::FatPoint) == 33);
  PowerIdeal mixed(k, {{pt(k, 1, 0, 0), 5}, {pt(k, 0, 1, 0), 2}, {pt(k, 1, 1, 1), 3}});
  for (int j = 5; j < 9; ++j)
    CHECK(macaulay_dual_dim(mixed, j, DualSide::Power) == macaulay_dual_dim(mixed, j, DualSide::FatPoint));
  PowerIdeal fp = PowerIdeal::uniform(catalog::b3(th::Fp(7)), 3);
  CHECK_THROWS_AS(macaulay_dual_dim(fp, 4, DualSide::FatPoint), Error);
}

TEST_CASE("unexpected curves and SLP failure") {
  Rng rng(5);
  SLPEquivalence h = slp_unexpected_equivalence(dual_points(catalog::h19(th::Q())), 8, GenericMode::probe(), rng);
  CHECK(h.unexpected);
  CHECK(h.fails_slp);
  PointConfig a = dual_points(catalog::a_ab(3, 13, th::Q()));
  for (int j = 2; j < 10; ++j) {
    SLPEquivalence e = slp_unexpected_equivalence(a, j, GenericMode::probe(), rng);
    CHECK_FALSE(e.unexpected);
    CHECK_FALSE(e.fails_slp);
  }
  SLPEquivalence f = slp_unexpected_equivalence(dual_points(catalog::fermat(5, th::Fp(11))), 6,
                                                GenericMode::probe(), rng);
  CHECK(f.unexpected);
  CHECK(f.fails_slp);
}

TEST_CASE("rank of multiplication computed two ways") {
  Rng rng(6);
  for (int n = 0; n < 8; ++n) {
    PointConfig z = th::generic_points(th::Q(), 5 + static_cast<std::size_t>(n % 4), rng);
    PowerIdeal pi = PowerIdeal::uniform(dual_lines(z), 3 + n % 3);
    ProjPoint L(random_scalar(th::Q(), 100, rng), random_scalar(th::Q(), 100, rng), Scalar::one(th::Q()));
    for (int d = 0; d < 8; ++d) {
      auto [by_cokernel, by_pairing] = multiplication_rank(pi, L, 2, d);
      CHECK(by_cokernel == by_pairing);
    }
  }
}

TEST_CASE("Terao surjectivity for a free arrangement") {
  Rng rng(7);
  TeraoReport r = terao_surjectivity(catalog::a_ab(3, 13, th::Q()), 3, 13, GenericMode::probe(), rng);
  CHECK(r.surjective);
  CHECK(r.cokernel == 0);
  CHECK(r.generals == 10);
}
