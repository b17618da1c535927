#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uc/arrangements.hpp"
#include "uc/curves.hpp"
#include "uc/invariants.hpp"
#include "uc/lefschetz.hpp"
#include "uc/schemes.hpp"

namespace uc::io {

inline constexpr const char* kSchema = "1";

enum class Kind { Points, Lines };

struct Loaded {
  Kind kind = Kind::Points;
  std::optional<PointConfig> points;
  std::optional<LineArrangement> lines;
  PointConfig as_points() const { return points ? *points : dual_points(*lines); }
  LineArrangement as_lines() const { return lines ? *lines : dual_lines(*points); }
};

// Accepts {"schema":"1","kind":"points"|"lines","field":..., "points"|"lines":[[a,b,c],...]}
// or a bare list of triples (read as `bare`). Entries may be strings in field
// syntax or integers. A field in the document wins unless `field` is given.
Loaded parse_config(std::string_view text, const std::optional<FieldSpec>& field, Kind bare);
Loaded load_config(const std::string& path, const std::optional<FieldSpec>& field, Kind bare);

std::string config_json(const PointConfig& z);
std::string config_json(const LineArrangement& a);

struct Meta {
  std::string command;
  FieldSpec field;
  std::string mode;  // "probe" or "symbolic"
  std::uint64_t seed = 1;
};

std::string mode_name(const GenericMode& m);

// Report documents; each carries the schema, command, field, mode and seed.
std::string invariants_json(const Meta& m, const InvariantsReport& r);
std::string curve_json(const Meta& m, const CurveRecord& r, const std::optional<Parametrization>& p);
std::string freeness_json(const Meta& m, const FreenessReport& r);
std::string incidence_json(const Meta& m, const LineArrangement& a);
std::string adddel_json(const Meta& m, const AddDelVerdict& v);
std::string slp_json(const Meta& m, const SLPReport& r);
std::string slp_table_json(const Meta& m, const SLPTable& t);
std::string terao_json(const Meta& m, const TeraoReport& r);

struct OracleRow {
  int j = 0, t = 0;
  std::size_t symbolic = 0, probe = 0;
  bool match = false;
};
std::string oracle_json(const Meta& m, const std::vector<OracleRow>& rows);

}  // namespace uc::io
