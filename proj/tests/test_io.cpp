#include "doctest.h"
#include "helpers.hpp"
#include "uc/catalog.hpp"
#include "uc/io.hpp"

using namespace uc;
using th::pt;

TEST_CASE("reading configurations") {
  io::Loaded bare = io::parse_config(R"([[0,0,1],["1","0","2"],[1,"1/2",3]])", std::nullopt, io::Kind::Points);
  REQUIRE(bare.points);
  CHECK(bare.points->size() == 3);
  CHECK((*bare.points)[2] == ProjPoint::parse(th::Q(), "2,1,6"));

  io::Loaded lines = io::parse_config(R"({"schema":"1","kind":"lines","field":"Fp:7","lines":[[1,0,0],[0,1,0],[1,1,1]]})",
                                      std::nullopt, io::Kind::Points);
  REQUIRE(lines.lines);
  CHECK(lines.lines->spec() == th::Fp(7));
  CHECK(lines.as_points().size() == 3);

  io::Loaded forced = io::parse_config(R"({"field":"Fp:7","points":[[1,0,0]]})", th::Fp(5), io::Kind::Lines);
  REQUIRE(forced.points);
  CHECK(forced.points->spec() == th::Fp(5));

  CHECK_THROWS_AS(io::parse_config("[[1,2]]", std::nullopt, io::Kind::Points), Error);
  CHECK_THROWS_AS(io::parse_config("{", std::nullopt, io::Kind::Points), Error);
  CHECK_THROWS_AS(io::parse_config(R"({"schema":"2","points":[]})", std::nullopt, io::Kind::Points), Error);
  CHECK_THROWS_AS(io::parse_config("[[1.5,0,1]]", std::nullopt, io::Kind::Points), Error);
  CHECK_THROWS_AS(io::load_config("/nonexistent/file.json", std::nullopt, io::Kind::Points), Error);
}

TEST_CASE("configurations round trip") {
  for (const auto& k : {th::Q(), th::Fp(11)}) {
    LineArrangement a = k.is_rationals() ? catalog::h19(k) : catalog::fermat(5, k);
    std::string text = io::config_json(a);
    io::Loaded back = io::parse_config(text, std::nullopt, io::Kind::Points);
    REQUIRE(back.lines);
    CHECK(back.lines->all_coeffs() == a.all_coeffs());
    CHECK(io::config_json(*back.lines) == text);
  }
  PointConfig z = catalog::fano(th::Fp(2));
  CHECK(io::config_json(io::parse_config(io::config_json(z), std::nullopt, io::Kind::Lines).as_points()) ==
        io::config_json(z));
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  PointConfig z = dual_points(catalog::b3(th::Q()));
  io::Meta m{"invariants", th::Q(), "probe", 17};
  std::string first, second;
  {
    Rng rng(17);
    first = io::invariants_json(m, unexpected_report(z, GenericMode::probe(2, 10000, 17), rng));
  }
  {
    Rng rng(17);
    second = io::invariants_json(m, unexpected_report(z, GenericMode::probe(2, 10000, 17), rng));
  }
  CHECK(first == second);
  CHECK(first.find("\"schema\":\"1\"") != std::string::npos);
  CHECK(first.find("\"seed\":\"17\"") != std::string::npos);
  CHECK(first.back() == '\n');
}
