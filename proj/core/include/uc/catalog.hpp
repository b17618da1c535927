#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uc/schemes.hpp"

namespace uc::catalog {

using Params = std::map<std::string, std::string>;

// "a=3,b=13" -> {a: 3, b: 13}.
Params parse_params(const std::string& text);

struct Entry {
  std::string name;
  std::string params;       // accepted parameters with defaults
  std::string constraints;  // field requirements
  std::string note;
  bool coordinates_required = false;
};

const std::vector<Entry>& list_entries();

// Result of a constructor: a point configuration or a line arrangement.
struct Built {
  std::string name;
  std::optional<PointConfig> points;
  std::optional<LineArrangement> lines;

  PointConfig as_points() const { return points ? *points : dual_points(*lines); }
  LineArrangement as_lines() const { return lines ? *lines : dual_lines(*points); }
  const FieldSpec& spec() const { return points ? points->spec() : lines->spec(); }
};

Built build(const std::string& name, const Params& params, const FieldSpec& spec);

PointConfig fano(const FieldSpec& spec);
LineArrangement h19(const FieldSpec& spec);
LineArrangement b3(const FieldSpec& spec);
// z, x + i z (0 <= i < a), y + i z (0 <= i < b).
LineArrangement a_ab(int a, int b, const FieldSpec& spec);
// xyz(x+y)(x-y) followed by n added lines; each block of four added lines
// uses one abscissa c: x - cz, y - cz, x + cz, y + cz.
LineArrangement family_a(int n, const std::vector<long>& abscissas, const FieldSpec& spec);
LineArrangement family_a4k(int k, const FieldSpec& spec);
// Linear factors of (x^t - y^t)(y^t - z^t)(x^t - z^t).
LineArrangement fermat(int t, const FieldSpec& spec);
// Linear factors of xy(x^t - y^t)(x^t - z^t)(y^t - z^t).
LineArrangement fermat_extended(int t, const FieldSpec& spec);
std::vector<Scalar> roots_of_unity(int t, const FieldSpec& spec);
// d lines, no three through a point.
LineArrangement star_random(int d, std::uint64_t seed, const FieldSpec& spec);
// 'a': h19 without 2x+y; 'b': 'a' plus 2y-x; 'c': h19 plus 2y-x; 'd': h19.
LineArrangement example20(char variant, const FieldSpec& spec);

}  // namespace uc::catalog
