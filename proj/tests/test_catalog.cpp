#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"

using namespace uc;
using th::pt;

TEST_CASE("Fano points") {
  PointConfig z = catalog::fano(th::Fp(2));
  CHECK(z.size() == 7);
  for (const auto& p : z.points())
    for (int i = 0; i < 3; ++i) CHECK(p[i].residue() <= 1);
  CHECK_THROWS_AS(catalog::fano(th::Q()), Error);
}

TEST_CASE("H19 forms") {
  auto k = th::Q();
  LineArrangement h = catalog::h19(k);
  CHECK(h.size() == 19);
  CHECK(h.form(0) == th::poly(k, "x"));
  CHECK(h.form(1) == th::poly(k, "y"));
  CHECK(h.form(2) == th::poly(k, "z"));
  CHECK(h.form(18).normalized() == th::poly(k, "x - y - 2*z"));
}

TEST_CASE("sizes of the families") {
  auto k = th::Q();
  CHECK(catalog::a_ab(3, 13, k).size() == 17);
  for (int kk = 1; kk <= 3; ++kk) CHECK(catalog::family_a4k(kk, k).size() == static_cast<std::size_t>(4 * kk + 5));
  CHECK(catalog::b3(k).size() == 9);
  CHECK(catalog::fermat(2, k).size() == 6);
  CHECK_THROWS_AS(catalog::fermat(3, k), Error);
  CHECK(catalog::star_random(7, 3, k).size() == 7);
  CHECK(catalog::example20('a', k).size() == 18);
  CHECK(catalog::example20('b', k).size() == 19);
  CHECK(catalog::example20('c', k).size() == 20);
  CHECK(catalog::example20('d', k).size() == 19);
}

TEST_CASE("Fermat roots of unity") {
  auto k = th::Fp(11);
  auto roots = catalog::roots_of_unity(5, k);
  std::vector<std::uint64_t> r;
  for (const auto& s : roots) r.push_back(s.residue());
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<std::uint64_t>{1, 3, 4, 5, 9});
  for (const auto& s : roots) CHECK(s.pow(5).is_one());
  CHECK(catalog::fermat(5, k).size() == 15);
  CHECK_THROWS_AS(catalog::fermat(3, k), Error);
}

TEST_CASE("star arrangements have no triple points") {
  auto a = catalog::star_random(8, 11, th::Q());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t l = j + 1; l < a.size(); ++l) CHECK_FALSE(det3(a.coeffs(i), a.coeffs(j), a.coeffs(l)).is_zero());
}

TEST_CASE("entries and build") {
  const auto& entries = catalog::list_entries();
  auto find = [&](const std::string& n) {
    return std::find_if(entries.begin(), entries.end(), [&](const catalog::Entry& e) { return e.name == n; });
  };
  for (const char* n : {"fano", "b3", "h19", "a_ab", "family_a4k", "fermat", "star_random", "example20_a",
                        "example20_b", "example20_c", "example20_d", "klein", "wiman"})
    CHECK_MESSAGE(find(n) != entries.end(), n);
  CHECK(find("klein")->coordinates_required);
  CHECK_FALSE(find("h19")->coordinates_required);

  auto p = catalog::parse_params("a=3,b=13");
  CHECK(p.at("a") == "3");
  CHECK(p.at("b") == "13");
  auto b = catalog::build("a_ab", p, th::Q());
  REQUIRE(b.lines);
  CHECK(b.lines->size() == 17);
  CHECK(catalog::build("fano", {}, th::Fp(2)).points->size() == 7);
  try {
    catalog::build("nope", {}, th::Q());
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
  CHECK_THROWS_AS(catalog::build("klein", {}, th::Q()), Error);

  for (const auto& e : entries) {
    if (e.coordinates_required) continue;
    FieldSpec k = e.name == "fano" ? th::Fp(2) : e.name == "fermat" ? th::Fp(11) : th::Q();
    auto built = catalog::build(e.name, {}, k);
    CHECK(built.spec() == k);
    CHECK(dual_lines(built.as_points()).all_coeffs() == built.as_lines().all_coeffs());
  }
}
