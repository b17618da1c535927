#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "uc/io.hpp"

namespace ucli {

// Bad flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string field;
  std::string mode = "probe";
  std::size_t samples = 2;
  std::uint64_t bound = 10000;
  std::uint64_t seed = 1;
  std::string in, out, format;  // empty format: the command default
  std::string catalog, params;
  bool verbose = false;

  std::optional<uc::FieldSpec> field_spec() const;
  uc::GenericMode generic_mode() const;
  uc::io::Meta meta(const std::string& command) const;
};

struct CurveArgs {
  std::string P;
  bool decompose = false, param = false;
};

struct ArrangementArgs {
  bool freeness = false, incidence = false;
  std::optional<std::size_t> adddel;
  std::string exponents, exponents_deleted;
  std::optional<std::size_t> restriction;
};

struct SlpArgs {
  int exp = 0, range = 2;
  std::optional<int> deg;
  std::string L;
};

struct TeraoArgs {
  std::string type;
};

struct CatalogArgs {
  std::string name;
  bool list = false;
};

struct VerifyArgs {
  std::size_t instances = 100;
  std::optional<int> only;
  std::string klein, wiman;
};

struct OracleArgs {
  int maxj = 10;
};

// Each returns the report text, newline terminated.
std::string cmd_invariants(const RunConfig& c);
std::string cmd_curve(const RunConfig& c, const CurveArgs& a);
std::string cmd_arrangement(const RunConfig& c, const ArrangementArgs& a);
std::string cmd_slp(const RunConfig& c, const SlpArgs& a);
std::string cmd_terao(const RunConfig& c, const TeraoArgs& a);
std::string cmd_catalog(const RunConfig& c, const CatalogArgs& a);
std::string cmd_verify(const RunConfig& c, const VerifyArgs& a, bool& all_passed);
std::string cmd_oracle(const RunConfig& c, const OracleArgs& a);

}  // namespace ucli
