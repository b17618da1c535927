#include "commands.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "uc/acceptance.hpp"
#include "uc/catalog.hpp"

namespace ucli {

using nlohmann::json;
using namespace uc;

std::optional<FieldSpec> RunConfig::field_spec() const {
  if (field.empty()) return std::nullopt;
  try {
    return FieldSpec::parse(field);
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

GenericMode RunConfig::generic_mode() const {
  if (mode == "symbolic") return GenericMode::symbolic();
  return GenericMode::probe(samples, bound, seed);
}

io::Meta RunConfig::meta(const std::string& command) const {
  io::Meta m;
  m.command = command;
  m.field = field_spec().value_or(FieldSpec::rationals());
  m.mode = mode;
  m.seed = seed;
  return m;
}

namespace {

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + cell(e);
    return s;
  }
  return v.dump();
}

// Two-column summary of a report document.
std::string as_table(const std::string& doc) {
  json j = json::parse(doc);
  std::size_t w = 0;
  for (const auto& [k, v] : j.items()) w = std::max(w, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << std::left << std::setw(static_cast<int>(w) + 2) << k << cell(v) << "\n";
  return os.str();
}

std::string render(const RunConfig& c, const std::string& doc) {
  return c.format == "table" ? as_table(doc) : doc;
}

io::Loaded load_input(const RunConfig& c, io::Kind bare) {
  if (!c.in.empty() && !c.catalog.empty()) throw UsageError("--in and --catalog are mutually exclusive");
  if (!c.catalog.empty()) {
    catalog::Params params;
    try {
      params = catalog::parse_params(c.params);
    } catch (const Error& e) {
      throw UsageError(std::string("--params: ") + e.what());
    }
    catalog::Built b;
    try {
      b = catalog::build(c.catalog, params, c.field_spec().value_or(FieldSpec::rationals()));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnknownName) throw UsageError(std::string("--catalog: ") + e.what());
      throw;
    }
    io::Loaded out;
    out.kind = b.points ? io::Kind::Points : io::Kind::Lines;
    out.points = b.points;
    out.lines = b.lines;
    return out;
  }
  if (c.in.empty()) throw UsageError("--in or --catalog is required");
  return io::load_config(c.in, c.field_spec(), bare);
}

ProjPoint parse_point_flag(const std::string& flag, const FieldSpec& k, const std::string& text) {
  try {
    return ProjPoint::parse(k, text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::pair<int, int> parse_pair(const std::string& flag, const std::string& text) {
  std::istringstream is(text);
  int a = 0, b = 0;
  char sep = 0;
  if (!(is >> a >> sep >> b) || sep != ',' || !is.eof())
    throw UsageError(flag + ": expected two integers \"a,b\", got \"" + text + "\"");
  return {a, b};
}

}  // namespace

std::string cmd_invariants(const RunConfig& c) {
  PointConfig z = load_input(c, io::Kind::Points).as_points();
  Rng rng(c.seed);
  InvariantsReport r = unexpected_report(z, c.generic_mode(), rng);
  io::Meta m = c.meta("invariants");
  m.field = z.spec();
  return render(c, io::invariants_json(m, r));
}

std::string cmd_curve(const RunConfig& c, const CurveArgs& a) {
  PointConfig z = load_input(c, io::Kind::Points).as_points();
  GenericMode mode = c.generic_mode();
  Rng rng(c.seed);
  Splitting sp = compute_splitting(z, mode, rng);
  ProjPoint p;
  if (!a.P.empty()) {
    p = parse_point_flag("--P", z.spec(), a.P);
  } else {
    GenericMode off = GenericMode::probe(c.samples, c.bound, c.seed);
    off.avoid_lines = true;
    p = sample_point(z, off, rng);
  }
  CurveRecord rec = curve_CP(z, p, sp.a);
  std::optional<Parametrization> pm;
  if (a.decompose || a.param) rec = decompose(rec, z, mode, rng);
  if (a.param) {
    auto syz = least_syzygy(dual_lines(z).product(), HomPoly::linear(p));
    if (!syz) fail(ErrorCode::StructureViolation, "no syzygy vanishing modulo the line of P");
    pm = parametrize(z, p, *syz, mode, rng);
  }
  io::Meta m = c.meta(a.param && !a.decompose ? "param" : "curve");
  m.field = z.spec();
  return render(c, io::curve_json(m, rec, pm));
}

std::string cmd_arrangement(const RunConfig& c, const ArrangementArgs& a) {
  int chosen = a.freeness + a.incidence + a.adddel.has_value();
  if (chosen != 1) throw UsageError("exactly one of --freeness, --incidence, --adddel is required");
  LineArrangement arr = load_input(c, io::Kind::Lines).as_lines();
  io::Meta m = c.meta("arrangement");
  m.field = arr.spec();
  Rng rng(c.seed);
  if (a.freeness) return render(c, io::freeness_json(m, freeness(arr, c.generic_mode(), rng)));
  if (a.incidence) return render(c, io::incidence_json(m, arr));
  if (*a.adddel >= arr.size())
    throw UsageError("--adddel: line index " + std::to_string(*a.adddel) + " out of range 0.." +
                     std::to_string(arr.size() - 1));
  AddDelClaims claims;
  if (!a.exponents.empty()) claims.a_exp = parse_pair("--exponents", a.exponents);
  if (!a.exponents_deleted.empty()) claims.a_prime_exp = parse_pair("--exponents-deleted", a.exponents_deleted);
  claims.restriction = a.restriction;
  return render(c, io::adddel_json(m, addition_deletion(arr, *a.adddel, claims)));
}

std::string cmd_slp(const RunConfig& c, const SlpArgs& a) {
  if (a.exp < 1) throw UsageError("--exp: must be a positive integer");
  if (a.range < 0) throw UsageError("--range: must be nonnegative");
  if (!a.L.empty() && !a.deg) throw UsageError("--L: only used together with --deg");
  LineArrangement arr = load_input(c, io::Kind::Lines).as_lines();
  PowerIdeal pi = PowerIdeal::uniform(arr, a.exp);
  io::Meta m = c.meta("slp");
  m.field = arr.spec();
  Rng rng(c.seed);
  if (a.deg) {
    std::optional<ProjPoint> L;
    if (!a.L.empty()) L = parse_point_flag("--L", arr.spec(), a.L);
    return render(c, io::slp_json(m, slp_at(pi, a.range, *a.deg, c.generic_mode(), rng, L)));
  }
  return render(c, io::slp_table_json(m, slp_table(pi, a.range, c.generic_mode(), rng)));
}

std::string cmd_terao(const RunConfig& c, const TeraoArgs& a) {
  auto [ea, eb] = parse_pair("--type", a.type);
  LineArrangement arr = load_input(c, io::Kind::Lines).as_lines();
  io::Meta m = c.meta("terao");
  m.field = arr.spec();
  Rng rng(c.seed);
  return render(c, io::terao_json(m, terao_surjectivity(arr, ea, eb, c.generic_mode(), rng)));
}

std::string cmd_catalog(const RunConfig& c, const CatalogArgs& a) {
  if (a.list) {
    json entries = json::array();
    std::ostringstream os;
    for (const auto& e : catalog::list_entries()) {
      entries.push_back({{"name", e.name},
                         {"params", e.params},
                         {"constraints", e.constraints},
                         {"note", e.note},
                         {"coordinates_required", e.coordinates_required}});
      os << std::left << std::setw(16) << e.name << std::setw(28) << e.params << e.constraints
         << (e.coordinates_required ? " (coordinates file required)" : "") << "\n";
    }
    if (c.format == "table") return os.str();
    return json({{"schema", io::kSchema}, {"command", "catalog"}, {"entries", entries}}).dump() + "\n";
  }
  if (a.name.empty()) throw UsageError("--name is required (or --list)");
  RunConfig named = c;
  named.catalog = a.name;
  io::Loaded l = load_input(named, io::Kind::Points);
  return l.points ? io::config_json(*l.points) : io::config_json(*l.lines);
}

std::string cmd_verify(const RunConfig& c, const VerifyArgs& a, bool& all_passed) {
  acceptance::Options opt;
  opt.seed = c.seed;
  opt.instances = a.instances;
  opt.klein_file = a.klein;
  opt.wiman_file = a.wiman;
  std::vector<acceptance::Criterion> results;
  if (a.only) {
    if (*a.only < 1 || *a.only > 9) throw UsageError("--only: criterion number must be 1..9");
    results.push_back(acceptance::run_criterion(*a.only, opt));
  } else {
    results = acceptance::run_all(opt);
  }
  all_passed = std::all_of(results.begin(), results.end(),
                           [](const acceptance::Criterion& r) { return r.passed || r.skipped || !r.gating; });
  return c.format == "json" ? acceptance::to_json(results, c.seed) : acceptance::table(results);
}

std::string cmd_oracle(const RunConfig& c, const OracleArgs& a) {
  if (a.maxj < 0) throw UsageError("--maxj: must be nonnegative");
  PointConfig z = load_input(c, io::Kind::Points).as_points();
  if (z.size() > 25) fail(ErrorCode::InvalidInput, "oracle is limited to 25 points, got " + std::to_string(z.size()));
  Rng rng(c.seed);
  GenericMode probe = GenericMode::probe(c.samples, c.bound, c.seed);
  std::vector<io::OracleRow> rows;
  for (int j = 0; j <= a.maxj; ++j) {
    io::OracleRow r;
    r.j = j;
    r.t = j + 1;
    r.symbolic = generic_fatpoint_dim(z, j, r.t, GenericMode::symbolic(), rng).value;
    r.probe = generic_fatpoint_dim(z, j, r.t, probe, rng).value;
    if (r.probe < r.symbolic)
      fail(ErrorCode::OracleMismatch, "probe value " + std::to_string(r.probe) + " below symbolic value " +
                                          std::to_string(r.symbolic) + " at j=" + std::to_string(j));
    r.match = r.probe == r.symbolic;
    rows.push_back(r);
  }
  io::Meta m = c.meta("oracle");
  m.field = z.spec();
  m.mode = "symbolic+probe";
  std::string doc = io::oracle_json(m, rows);
  if (c.format != "table") return doc;
  std::ostringstream os;
  os << "   j    t  symbolic  probe  match\n";
  for (const auto& r : rows)
    os << std::setw(4) << r.j << std::setw(5) << r.t << std::setw(10) << r.symbolic << std::setw(7) << r.probe
       << std::setw(7) << (r.match ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace ucli
