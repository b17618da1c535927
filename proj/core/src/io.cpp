#include "uc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace uc::io {

using nlohmann::json;

namespace {

json point_json(const ProjPoint& p) { return json::array({p[0].str(), p[1].str(), p[2].str()}); }

ProjPoint parse_triple(const json& t, const FieldSpec& k) {
  if (!t.is_array() || t.size() != 3) fail(ErrorCode::Parse, "expected a triple, got " + t.dump());
  std::array<Scalar, 3> c;
  for (int i = 0; i < 3; ++i) {
    const json& e = t[static_cast<std::size_t>(i)];
    if (e.is_number_integer()) c[i] = Scalar::from_int(k, e.get<long>());
    else if (e.is_string()) c[i] = Scalar::parse(k, e.get<std::string>());
    else fail(ErrorCode::Parse, "coordinates must be integers or strings, got " + e.dump());
  }
  return ProjPoint(c[0], c[1], c[2]);
}

json cert_json(const DimCertificate& c) {
  json probes = json::array();
  for (const auto& p : c.probes) probes.push_back(point_json(p));
  return {{"level", cert_level_name(c.level)}, {"symbolic", c.symbolic}, {"note", c.note}, {"probes", probes}};
}

json header(const Meta& m) {
  return {{"schema", kSchema}, {"command", m.command}, {"field", m.field.str()}, {"mode", m.mode},
          {"seed", std::to_string(m.seed)}};
}

json counts(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

json splitting_json(const Splitting& s) {
  json ramp = json::array();
  for (std::size_t j = 0; j < s.ramp.size(); ++j)
    ramp.push_back({{"j", j}, {"dim", s.ramp[j].value}, {"cert", cert_level_name(s.ramp[j].cert.level)}});
  return {{"splitting", {s.a, s.b}}, {"ramp", ramp}, {"certificate", cert_json(s.cert)}};
}

std::string finish(const json& j) { return j.dump() + "\n"; }

}  // namespace

std::string mode_name(const GenericMode& m) { return m.is_symbolic() ? "symbolic" : "probe"; }

Loaded parse_config(std::string_view text, const std::optional<FieldSpec>& field, Kind bare) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  Loaded out;
  out.kind = bare;
  FieldSpec k = field ? *field : FieldSpec::rationals();
  const json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("schema") && doc["schema"] != kSchema)
      fail(ErrorCode::Parse, "unsupported schema " + doc["schema"].dump());
    if (!field && doc.contains("field")) k = FieldSpec::parse(doc["field"].get<std::string>());
    if (doc.contains("kind")) {
      std::string kind = doc["kind"].get<std::string>();
      if (kind == "points") out.kind = Kind::Points;
      else if (kind == "lines") out.kind = Kind::Lines;
      else fail(ErrorCode::Parse, "kind must be points or lines, got " + kind);
    } else if (doc.contains("points")) {
      out.kind = Kind::Points;
    } else if (doc.contains("lines")) {
      out.kind = Kind::Lines;
    }
    const char* key = out.kind == Kind::Points ? "points" : "lines";
    if (!doc.contains(key)) fail(ErrorCode::Parse, std::string("missing \"") + key + "\" list");
    list = &doc[key];
  }
  if (!list->is_array()) fail(ErrorCode::Parse, "expected a list of triples");
  std::vector<ProjPoint> pts;
  for (const auto& t : *list) pts.push_back(parse_triple(t, k));
  if (out.kind == Kind::Points) out.points = PointConfig(k, pts);
  else out.lines = LineArrangement(k, pts);
  return out;
}

Loaded load_config(const std::string& path, const std::optional<FieldSpec>& field, Kind bare) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), field, bare);
}

std::string config_json(const PointConfig& z) {
  json pts = json::array();
  for (const auto& p : z.points()) pts.push_back(point_json(p));
  return finish({{"schema", kSchema}, {"kind", "points"}, {"field", z.spec().str()}, {"points", pts}});
}

std::string config_json(const LineArrangement& a) {
  json ls = json::array();
  for (const auto& p : a.all_coeffs()) ls.push_back(point_json(p));
  return finish({{"schema", kSchema}, {"kind", "lines"}, {"field", a.spec().str()}, {"lines", ls}});
}

std::string invariants_json(const Meta& m, const InvariantsReport& r) {
  json j = header(m);
  j["d"] = r.d;
  j["hilbert_function"] = counts(r.hilbert);
  j["delta_h"] = counts(r.delta_h);
  j["t_Z"] = r.t_Z;
  j["m_Z"] = r.m_Z;
  j["u_Z"] = r.u_Z;
  json s = splitting_json(r.splitting);
  j["splitting"] = s["splitting"];
  j["ramp"] = s["ramp"];
  j["certificate"] = s["certificate"];
  j["criteria"] = {{"m_lt_t", r.criterion_i}, {"collinearity", r.criterion_ii}, {"splitting_gap", r.criterion_iii}};
  j["unexpected"] = r.unexpected;
  j["unexpected_degrees"] = r.unexpected_degrees;
  j["max_collinear"] = r.max_collinear;
  j["h_at_t_Z"] = r.hZ_at_tZ;
  j["self_intersection"] = r.self_intersection;
  return finish(j);
}

std::string curve_json(const Meta& m, const CurveRecord& r, const std::optional<Parametrization>& p) {
  json j = header(m);
  j["P"] = point_json(r.P);
  j["m_Z"] = r.m_Z;
  json basis = json::array();
  for (const auto& f : r.basis) basis.push_back(f.str());
  j["basis"] = basis;
  j["pencil"] = r.is_pencil();
  json peeled = json::array();
  for (const auto& pl : r.peeled) peeled.push_back({{"line", pl.line.str()}, {"point", pl.point}});
  j["peeled"] = peeled;
  j["core"] = r.core ? json(r.core->str()) : json(nullptr);
  j["Z_prime"] = r.z_prime;
  j["mult_F"] = r.mult_F;
  j["mult_core"] = r.mult_core;
  j["m_Z_prime"] = r.m_Z_prime;
  j["irreducible_for_this_P"] = r.irreducible_for_this_P;
  if (p) {
    j["parametrization"] = {{"phi", {p->phi[0].str(), p->phi[1].str(), p->phi[2].str()}},
                            {"gcd", p->h.str()},
                            {"gcd_degree", p->n},
                            {"component_degree", p->component_degree},
                            {"gcd_splits", p->h_splits}};
  }
  return finish(j);
}

std::string freeness_json(const Meta& m, const FreenessReport& r) {
  json j = header(m);
  j["splitting"] = {r.a, r.b};
  j["splitting_certificate"] = cert_json(r.splitting_cert);
  j["chern_route"] = r.c2_route;
  j["deg_jacobian"] = r.deg_jac;
  j["c2"] = r.c2;
  j["free"] = r.free;
  j["saito"] = r.saito;
  j["modular_point"] = r.modular_point ? point_json(*r.modular_point) : json(nullptr);
  j["notes"] = r.notes;
  return finish(j);
}

std::string incidence_json(const Meta& m, const LineArrangement& a) {
  json j = header(m);
  json pts = json::array();
  for (const auto& p : singular_points(a))
    pts.push_back({{"point", point_json(p.point)}, {"multiplicity", p.multiplicity}, {"lines", p.incident}});
  j["singular_points"] = pts;
  IncidenceSignature s = incidence_signature(a);
  j["signature"] = {{"multiplicities", s.multiplicities}, {"per_line", s.per_line}};
  auto mod = modular_points(a);
  json mp = json::array();
  for (const auto& p : mod) mp.push_back(point_json(p));
  j["modular_points"] = mp;
  auto ss = supersolvable(a);
  j["supersolvable_splitting"] = ss ? json({ss->first, ss->second}) : json(nullptr);
  return finish(j);
}

std::string adddel_json(const Meta& m, const AddDelVerdict& v) {
  json j = header(m);
  j["verdict"] = v.kind == AddDelVerdict::Kind::Implied ? "implied" : "inconsistent";
  j["restriction"] = v.restriction;
  j["exponents"] = {v.a_exp.first, v.a_exp.second};
  j["exponents_deleted"] = {v.a_prime_exp.first, v.a_prime_exp.second};
  j["message"] = v.message;
  return finish(j);
}

std::string slp_json(const Meta& m, const SLPReport& r) {
  json j = header(m);
  j["range"] = r.k;
  j["degree"] = r.dlow;
  j["dim_source"] = r.dim_source;
  j["dim_target"] = r.dim_target;
  j["cokernel"] = r.cokernel;
  j["rank"] = r.rank;
  j["maximal_rank"] = r.maximal_rank;
  j["delta"] = r.delta;
  j["L"] = point_json(r.L);
  j["certificate"] = cert_json(r.cert);
  return finish(j);
}

std::string slp_table_json(const Meta& m, const SLPTable& t) {
  json j = header(m);
  j["range"] = t.k;
  j["L"] = point_json(t.L);
  j["hilbert_function"] = counts(t.hf);
  j["quotient_hilbert_function"] = counts(t.quotient);
  std::vector<bool> mx(t.maximal.begin(), t.maximal.end());
  j["maximal_rank"] = mx;
  j["certificate"] = cert_json(t.cert);
  return finish(j);
}

std::string terao_json(const Meta& m, const TeraoReport& r) {
  json j = header(m);
  j["surjective"] = r.surjective;
  j["cokernel"] = r.cokernel;
  j["general_forms"] = r.generals;
  j["certificate"] = cert_json(r.cert);
  return finish(j);
}

std::string oracle_json(const Meta& m, const std::vector<OracleRow>& rows) {
  json j = header(m);
  json a = json::array();
  for (const auto& r : rows)
    a.push_back({{"j", r.j}, {"t", r.t}, {"symbolic", r.symbolic}, {"probe", r.probe}, {"match", r.match}});
  j["rows"] = a;
  return finish(j);
}

}  // namespace uc::io
