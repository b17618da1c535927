#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run ucurves(const std::string& args) {
  Run r;
  std::string cmd = std::string(UCURVES_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("invariants of H19 from the command line") {
  Run r = ucurves("invariants --catalog h19 --mode symbolic");
  CHECK(r.code == 0);
  CHECK(has(r, "\"splitting\":[8,10]"));
  CHECK(has(r, "\"t_Z\":9"));
  CHECK(has(r, "\"unexpected_degrees\":[9]"));
}

TEST_CASE("slp table from the command line") {
  Run r = ucurves("slp --catalog a_ab --params a=3,b=13 --exp 8 --range 2");
  CHECK(r.code == 0);
  CHECK(has(r, "\"hilbert_function\":[1,3,6,10,15,21,28,36,33,27,19,12,7,3,1]"));
  CHECK(has(r, "\"quotient_hilbert_function\":[1,3,5,7,9,11,13,15,5]"));
}

TEST_CASE("catalog output feeds invariants") {
  std::string path = "cli_fano.json";
  Run c = ucurves("catalog --name fano --field Fp:2 --out " + path);
  CHECK(c.code == 0);
  Run r = ucurves("invariants --in " + path);
  CHECK(r.code == 0);
  CHECK(has(r, "\"unexpected_degrees\":[3]"));
  std::remove(path.c_str());
}

TEST_CASE("oracle rows") {
  Run h = ucurves("oracle --catalog h19 --maxj 8");
  CHECK(h.code == 0);
  CHECK(has(h, "{\"j\":7,\"match\":true,\"probe\":0,\"symbolic\":0,\"t\":8}"));
  CHECK(has(h, "{\"j\":8,\"match\":true,\"probe\":1,\"symbolic\":1,\"t\":9}"));

  std::ofstream f("cli_random8.json");
  f << "[[3,-7,1],[12,5,1],[-9,2,1],[4,11,1],[-6,-13,1],[8,-1,1],[1,9,1],[-2,6,1]]";
  f.close();
  Run g = ucurves("oracle --in cli_random8.json --maxj 7");
  CHECK(g.code == 0);
  CHECK_FALSE(has(g, "\"match\":false"));
  Run one = ucurves("oracle --in cli_random8.json --maxj 7 --samples 1");
  Run five = ucurves("oracle --in cli_random8.json --maxj 7 --samples 5");
  auto rows = [](const std::string& s) { return s.substr(s.find("\"rows\"")); };
  CHECK(rows(one.out) == rows(five.out));
  std::remove("cli_random8.json");
}

TEST_CASE("identical invocations give identical output") {
  Run a = ucurves("invariants --catalog b3 --seed 9");
  Run b = ucurves("invariants --catalog b3 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has(a, "\"seed\":\"9\""));
}

TEST_CASE("exit codes") {
  CHECK(ucurves("").code == 2);
  CHECK(ucurves("frobnicate").code == 2);
  CHECK(ucurves("invariants").code == 2);
  CHECK(ucurves("invariants --catalog h19 --mode fast").code == 2);
  CHECK(ucurves("invariants --catalog nope").code == 2);
  CHECK(ucurves("arrangement --catalog b3").code == 2);
  CHECK(ucurves("invariants --catalog fano").code == 1);
  CHECK(ucurves("--help").code == 0);
}
