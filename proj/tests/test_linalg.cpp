#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"

using namespace uc;

namespace {

void check_kernel(const Mat& m) {
  auto ker = kernel_basis(m);
  CHECK(ker.size() == m.cols() - rank(m));
  for (const auto& v : ker)
    for (const auto& e : m.apply(v)) CHECK(e.is_zero());
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(th::mat(th::Q(), {{"1", "0"}, {"0", "1"}})) == 2);
  CHECK(rank(th::mat(th::Fp(2), {{"1", "1", "1"}})) == 1);
  CHECK(rank(th::mat(th::QST(), {{"s", "t"}, {"t", "s"}})) == 2);
  CHECK(rank(th::mat(th::QST(), {{"s", "t"}, {"s*t", "t^2"}})) == 1);
  CHECK(rank(th::mat(th::Q(), {{"1/2", "1/3"}, {"3", "2"}})) == 1);
}

TEST_CASE("kernel bases are echelonized") {
  CHECK(kernel_basis(th::mat(th::Q(), {{"1", "0"}, {"0", "1"}})).empty());
  auto ker = kernel_basis(th::mat(th::Q(), {{"1", "1", "1"}}));
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    CHECK(v[lead].is_one());
  }
  check_kernel(th::mat(th::Q(), {{"1", "1", "1"}}));
}

TEST_CASE("Fano points impose independent conditions on cubics") {
  auto k = th::Fp(2);
  PointConfig z = catalog::fano(k);
  auto mons = monomial_basis(3);
  Mat m(z.size(), mons.size(), k);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t c = 0; c < mons.size(); ++c)
      m.at(i, c) = HomPoly::monomial(mons[c], Scalar::one(k)).eval(z[i]);
  CHECK(rank(m) == 7);
  CHECK(kernel_basis(m).size() == 3);
  check_kernel(m);
}

TEST_CASE("rank properties on random matrices") {
  Rng rng(5);
  for (const auto& k : {th::Q(), th::Fp(7), th::Fp(32003)}) {
    for (int n = 0; n < 30; ++n) {
      std::size_t r = 1 + rng.uniform(9), c = 1 + rng.uniform(9), lowrank = 1 + rng.uniform(4);
      Mat a(r, lowrank, k), b(lowrank, c, k);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < lowrank; ++j) a.at(i, j) = random_scalar(k, 20, rng);
      for (std::size_t i = 0; i < lowrank; ++i)
        for (std::size_t j = 0; j < c; ++j) b.at(i, j) = random_scalar(k, 20, rng);
      Mat m(r, c, k);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          Scalar s = Scalar::zero(k);
          for (std::size_t l = 0; l < lowrank; ++l) s = s + a.at(i, l) * b.at(l, j);
          m.at(i, j) = s;
        }
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(rank(m) <= lowrank);
      check_kernel(m);
    }
  }
}

TEST_CASE("function field rank bounds its specializations") {
  auto k = th::QST();
  Mat m = th::mat(k, {{"s", "t", "1"}, {"s^2", "t^2", "1"}, {"s + t", "2*t", "2"}});
  std::size_t generic = rank(m);
  CHECK(generic == 3);
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    Scalar s = random_scalar(th::Q(), 10, rng), t = random_scalar(th::Q(), 10, rng);
    Mat sp(3, 3, th::Q());
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) sp.at(r, c) = m.at(r, c).specialize(s, t);
    CHECK(rank(sp) <= generic);
  }
}

TEST_CASE("multimodular rank agrees with Bareiss") {
  Rng rng(17);
  for (int n = 0; n < 10; ++n) {
    la::IntMatrix m(12, 14);
    for (auto& e : m.a) e = rng.range(-1000000, 1000000);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(11, j) = m.at(0, j) * 3 - m.at(5, j);
    CHECK(la::rank_multimodular(m) == la::rank_bareiss(m));
    CHECK(la::rank_integer(m) == 11);
  }
}
