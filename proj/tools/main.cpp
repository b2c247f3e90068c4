#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "syzlab/corpus.hpp"
#include "syzlab/error.hpp"
#include "syzlab/parse.hpp"
#include "syzlab/report_json.hpp"
#include "syzlab/scan.hpp"

namespace {

unsigned long seed_from_env() {
  const char* env = std::getenv("SYZYGY_LAB_SEED");
  if (env == nullptr || *env == '\0') return syzlab::kDefaultSeed;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 0);
  if (end == nullptr || *end != '\0') {
    syzlab::fail(syzlab::Errc::usage_error,
                 std::string("SYZYGY_LAB_SEED is not a number: '") + env + "'");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace syzlab;

  CLI::App app{"homological invariants of finite-dimensional quiver algebras"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string report_path;
  int report_depth = 6;
  int report_pool_cap = 32;
  std::string report_field;
  CLI::App* rep = app.add_subcommand("report", "analyze an algebra file, print a JSON report");
  rep->add_option("file", report_path, "algebra description file")->required();
  rep->add_option("--depth", report_depth, "resolution and certificate depth");
  rep->add_option("--pool-cap", report_pool_cap, "maximum number of pool modules");
  rep->add_option("--field", report_field, "override the file's base field (gf<p> or q)");

  std::string example_name;
  CLI::App* exa = app.add_subcommand("example", "print a built-in example algebra file");
  exa->add_option("name", example_name, "example name")->required();

  ScanOptions sopts;
  std::string scan_field = "gf2";
  CLI::App* sca = app.add_subcommand("scan", "enumerate small algebras, stream JSON findings");
  sca->add_option("--vertices", sopts.max_vertices, "max vertex count (1..3)");
  sca->add_option("--arrows", sopts.max_arrows, "max arrow count (0..4)");
  sca->add_flag("--rad-cube-zero", sopts.rad_cube_zero,
                "enumerate length-2 monomial relations at nilpotency 3");
  sca->add_option("--field", scan_field, "base field (gf<p> or q)");
  sca->add_option("--depth", sopts.depth, "certificate depth per algebra");
  sca->add_option("--pool-cap", sopts.pool_cap, "maximum number of pool modules per algebra");
  sca->add_option("--jobs", sopts.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    unsigned long seed = seed_from_env();
    if (rep->parsed()) {
      AlgebraFile af = load_algebra_file(report_path);
      if (!report_field.empty()) af.field = field_from_name(report_field);
      AlgebraPtr a = build_algebra(af.presentation, af.field);
      SearchOptions so;
      so.seed = seed;
      InvariantLab lab(a, report_depth, report_pool_cap, so);
      InvariantReport r = lab.report(report_path);
      std::cout << report_file_text(r, af.field, seed);
      return r.inconsistencies.empty() ? 0 : 2;
    }
    if (exa->parsed()) {
      std::cout << serialize_algebra(corpus_algebra(example_name));
      return 0;
    }
    sopts.field = field_from_name(scan_field);
    sopts.seed = seed;
    ScanOutcome outcome = run_scan(sopts, std::cout);
    return outcome.theorem_violations > 0 ? 3 : 0;
  } catch (const Error& e) {
    std::cerr << "syzygy-lab: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "syzygy-lab: " << e.what() << "\n";
    return 1;
  }
}
