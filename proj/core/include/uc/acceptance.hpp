#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uc::acceptance {

struct Check {
  std::string what;
  std::string source;  // reference statement the value comes from
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string title;
  bool gating = true;
  bool skipped = false;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<Check> checks;
  std::string note;
};

struct Options {
  std::uint64_t seed = 1;
  std::size_t instances = 100;  // per field, per property suite
  std::string klein_file, wiman_file;
};

// Criteria are numbered 1..9; 9 needs coordinate files and never gates.
Criterion run_criterion(int id, const Options& opt);
std::vector<Criterion> run_all(const Options& opt);

std::string table(const std::vector<Criterion>& results);
std::string to_json(const std::vector<Criterion>& results, std::uint64_t seed);

}  // namespace uc::acceptance
