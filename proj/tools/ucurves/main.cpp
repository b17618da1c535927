#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "uc/errors.hpp"

namespace {

int emit(const ucli::RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(c.out);
  if (!f) {
    std::cerr << "ucurves: --out: cannot write " << c.out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of plane point configurations and line arrangements", "ucurves"};
  app.require_subcommand(1);
  app.fallthrough();

  ucli::RunConfig cfg;
  app.add_option("--field", cfg.field, "Q, Fp:p, Q(s,t) or Fp:p(s,t); defaults to the input's field");
  app.add_option("--mode", cfg.mode, "Generic-point evaluation")->check(CLI::IsMember({"probe", "symbolic"}));
  app.add_option("--samples", cfg.samples, "Probe points per generic value")->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.bound, "Coordinate bound for probe points")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed")->envname("UCURVES_SEED");
  app.add_option("--in", cfg.in, "Input configuration (JSON)");
  app.add_option("--out", cfg.out, "Write the report here instead of stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--catalog", cfg.catalog, "Use a named catalog configuration as input");
  app.add_option("--params", cfg.params, "Catalog parameters, e.g. a=3,b=13");
  app.add_flag("-v,--verbose", cfg.verbose, "Report elapsed time on stderr");

  auto* inv = app.add_subcommand("invariants", "Hilbert function, t_Z, m_Z, u_Z, splitting, unexpected degrees");

  ucli::CurveArgs curve;
  auto* cur = app.add_subcommand("curve", "The curve of degree m_Z + 1 with a point of multiplicity m_Z at P");
  cur->add_option("--P", curve.P, "Point \"a,b,c\"; a general point is drawn when omitted");
  cur->add_flag("--decompose", curve.decompose, "Peel off lines through P");
  cur->add_flag("--param", curve.param, "Parametrize via the least syzygy");

  ucli::CurveArgs param;
  param.param = true;
  auto* par = app.add_subcommand("param", "Parametrization of the curve through P");
  par->add_option("--P", param.P, "Point \"a,b,c\"; a general point is drawn when omitted");

  ucli::ArrangementArgs arr;
  auto* arg = app.add_subcommand("arrangement", "Freeness, incidence data, addition-deletion");
  arg->add_flag("--freeness", arr.freeness, "Freeness report");
  arg->add_flag("--incidence", arr.incidence, "Singular points and modular points");
  arg->add_option("--adddel", arr.adddel, "Addition-deletion with respect to this line index");
  arg->add_option("--exponents", arr.exponents, "Claimed exponents \"a,b\" of the arrangement");
  arg->add_option("--exponents-deleted", arr.exponents_deleted, "Claimed exponents of the deleted arrangement");
  arg->add_option("--restriction", arr.restriction, "Claimed size of the restriction");

  ucli::SlpArgs slp;
  auto* sl = app.add_subcommand("slp", "Multiplication by L^k on the quotient by powers of linear forms");
  sl->add_option("--forms", cfg.in, "Linear forms (JSON); same as --in");
  sl->add_option("--exp", slp.exp, "Power applied to every form")->required();
  sl->add_option("--range", slp.range, "Exponent k of L^k");
  sl->add_option("--deg", slp.deg, "Source degree; without it a table over all degrees");
  sl->add_option("--L", slp.L, "Linear form \"a,b,c\"; a general one when omitted");

  ucli::TeraoArgs terao;
  auto* ter = app.add_subcommand("terao", "Surjectivity test for a prescribed splitting");
  ter->add_option("--forms", cfg.in, "Linear forms (JSON); same as --in");
  ter->add_option("--type", terao.type, "Splitting \"a,b\"")->required();

  ucli::CatalogArgs cat;
  auto* ctl = app.add_subcommand("catalog", "Named configurations");
  ctl->add_option("--name", cat.name, "Entry name");
  ctl->add_flag("--list", cat.list, "List the entries");

  ucli::VerifyArgs ver;
  auto* vp = app.add_subcommand("verify-paper", "Run the acceptance checks and print a pass/fail table");
  vp->add_option("--instances", ver.instances, "Random instances per field in the property suites");
  vp->add_option("--only", ver.only, "Run a single criterion");
  vp->add_option("--klein", ver.klein, "Coordinates of the Klein arrangement");
  vp->add_option("--wiman", ver.wiman, "Coordinates of the Wiman arrangement");

  ucli::OracleArgs ora;
  auto* orc = app.add_subcommand("oracle", "Compare symbolic and probe generic dimensions");
  orc->add_option("--maxj", ora.maxj, "Largest j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    std::string text;
    bool passed = true;
    if (inv->parsed()) text = ucli::cmd_invariants(cfg);
    else if (cur->parsed()) text = ucli::cmd_curve(cfg, curve);
    else if (par->parsed()) text = ucli::cmd_curve(cfg, param);
    else if (arg->parsed()) text = ucli::cmd_arrangement(cfg, arr);
    else if (sl->parsed()) text = ucli::cmd_slp(cfg, slp);
    else if (ter->parsed()) text = ucli::cmd_terao(cfg, terao);
    else if (ctl->parsed()) text = ucli::cmd_catalog(cfg, cat);
    else if (vp->parsed()) text = ucli::cmd_verify(cfg, ver, passed);
    else if (orc->parsed()) text = ucli::cmd_oracle(cfg, ora);
    int rc = emit(cfg, text);
    if (cfg.verbose)
      std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                << " s\n";
    if (rc) return rc;
    return passed ? 0 : 1;
  } catch (const ucli::UsageError& e) {
    std::cerr << "ucurves: " << e.what() << "\n";
    return 2;
  } catch (const uc::Error& e) {
    std::cerr << "ucurves: " << e.what() << "\n";
    return 1;
  }
}
