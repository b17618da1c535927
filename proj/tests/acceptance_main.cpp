#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "uc/acceptance.hpp"

int main(int argc, char** argv) {
  uc::acceptance::Options opt;
  if (const char* s = std::getenv("UCURVES_SEED")) opt.seed = std::strtoull(s, nullptr, 10);
  if (const char* k = std::getenv("UCURVES_KLEIN")) opt.klein_file = k;
  if (const char* w = std::getenv("UCURVES_WIMAN")) opt.wiman_file = w;
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";

  auto results = uc::acceptance::run_all(opt);
  bool ok = true;
  for (const auto& c : results) {
    const char* tag = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    std::cout << tag << "  criterion " << c.id << ": " << c.title << std::fixed << std::setprecision(2) << " ("
              << c.seconds << " s)";
    if (!c.note.empty()) std::cout << " - " << c.note;
    if (!c.gating) std::cout << " [non-gating]";
    std::cout << "\n";
    if (c.gating && !c.skipped && !c.passed) ok = false;
  }
  if (verbose || !ok) std::cout << "\n" << uc::acceptance::table(results);
  return ok ? 0 : 1;
}
