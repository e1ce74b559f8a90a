#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <dccd/dccd.hpp>

namespace {

// exit codes: 0 success, 1 semantic negative, 2 usage/parse, 3 search budget
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path)
{
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw dccd::parameter_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dccd::search_limits limits_from_env()
{
  dccd::search_limits lim;
  if (const char* env = std::getenv("DCCD_SEARCH_BUDGET")) {
    try {
      lim.max_nodes = std::stoull(env);
    } catch (const std::exception&) {
      throw dccd::parameter_error("DCCD_SEARCH_BUDGET must be an integer node count");
    }
  }
  return lim;
}

/* No command may print a design that fails its own checks. */
void emit_checked(const dccd::design& d, const std::string& name, const std::string& provenance,
                  bool pretty, int expected_m)
{
  auto chk = dccd::verify_m_change(d, expected_m);
  if (!chk.ok)
    throw dccd::structural_error("refusing to emit: not " + std::to_string(expected_m) +
                                 "-change at gap " + std::to_string(chk.first_bad_gap));
  if (!dccd::coverage(d, 2).all_covered())
    throw dccd::structural_error("refusing to emit: pair coverage incomplete");
  if (pretty)
    std::cout << dccd::pretty_design(d);
  else
    std::cout << dccd::emit_design(dccd::design_document{d, name, provenance});
}

int run(int argc, char** argv)
{
  CLI::App app{"construct, verify and search double change covering designs"};
  app.require_subcommand(1);

  // ---- bounds ----
  unsigned bv = 0, bk = 0, bt = 2;
  bool bcirc = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "minimum block count from the counting bound");
  bounds_cmd->add_option("--v", bv, "point count")->required();
  bounds_cmd->add_option("--k", bk, "block size")->required();
  bounds_cmd->add_option("--t", bt, "covering strength")->required();
  bounds_cmd->add_flag("--circular", bcirc, "circular variant of the bound");

  // ---- verify ----
  std::string vfile;
  int vm = 2;
  int vstrength = 2;
  auto* verify_cmd = app.add_subcommand("verify", "check and classify a design document");
  verify_cmd->add_option("file", vfile, "design document (or - for stdin)")->required();
  verify_cmd->add_option("--m", vm, "change number to check (default 2)");
  verify_cmd->add_option("--strength", vstrength, "coverage strength (default 2)");

  // ---- construct ----
  auto* construct_cmd = app.add_subcommand("construct", "build a design and print its document");
  construct_cmd->require_subcommand(1);
  bool pretty = false;
  construct_cmd->add_flag("--pretty", pretty, "print the table form instead of the document");

  int dfk = 0, dfc = 0;
  auto* diff_cmd = construct_cmd->add_subcommand("diff-family", "develop a difference family");
  diff_cmd->add_option("--k", dfk, "block size (>= 3)")->required();
  diff_cmd->add_option("--c", dfc, "number of base blocks (1..5)")->required();

  auto* diff61_cmd = construct_cmd->add_subcommand("diff-61", "develop the six base blocks over Z61");

  int csk = 0;
  auto* csccd_cmd = construct_cmd->add_subcommand("csccd", "consecutive-block single change ring");
  csccd_cmd->add_option("--kprime", csk, "block size k' (>= 2)")->required();

  int dbk = 0;
  auto* double_cmd = construct_cmd->add_subcommand("double", "point doubling of the k' ring");
  double_cmd->add_option("--kprime", dbk, "underlying ring block size k' (>= 2)")->required();

  int adk = 0;
  auto* adjoin_cmd = construct_cmd->add_subcommand("adjoin", "point adjunction on the doubled ring");
  adjoin_cmd->add_option("--kprime", adk, "underlying ring block size k' (>= 2)")->required();

  std::string exfile;
  auto* cexpand_cmd = construct_cmd->add_subcommand("expand", "grow a design via its expansion set");
  cexpand_cmd->add_option("file", exfile, "design document (or - for stdin)")->required();

  std::string catname;
  auto* catalog_cmd = construct_cmd->add_subcommand("catalog", "emit a named catalog design");
  catalog_cmd->add_option("name", catname, "catalog name, e.g. cdccd-7-3-7")->required();

  // ---- expansion-set ----
  std::string esfile;
  auto* es_cmd = app.add_subcommand("expansion-set", "find an expansion set of a design");
  es_cmd->add_option("file", esfile, "design document (or - for stdin)")->required();

  // ---- cost ----
  std::string costfile;
  std::int64_t test_cost = 0, change_cost = 0;
  bool full_swap = false, no_initial = false;
  auto* cost_cmd = app.add_subcommand("cost", "price a design as a test plan");
  cost_cmd->add_option("file", costfile, "design document (or - for stdin)")->required();
  cost_cmd->add_option("--test-cost", test_cost, "fee per test")->required();
  cost_cmd->add_option("--change-cost", change_cost, "fee per component swap")->required();
  cost_cmd->add_flag("--full-swap", full_swap, "replace all k components every test");
  cost_cmd->add_flag("--no-initial-load", no_initial, "do not charge the first k installs");

  // ---- search-min ----
  int sv = 0, sk = 0, sb = 0;
  bool scirc = false, sforce = false;
  auto* search_cmd = app.add_subcommand("search-min", "exhaustive minimum-block search");
  search_cmd->add_option("--v", sv, "point count")->required();
  search_cmd->add_option("--k", sk, "block size")->required();
  search_cmd->add_option("--b-max", sb, "largest block count to try")->required();
  search_cmd->add_flag("--circular", scirc, "search for circular designs");
  search_cmd->add_flag("--force", sforce, "lift the C(v,k) and b-max safety rails");

  // ---- factorize ----
  int fn = 0;
  auto* fact_cmd = app.add_subcommand("factorize", "circle-method 1-factorization of K_n");
  fact_cmd->add_option("--n", fn, "vertex count (even)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage; // --help exits 0, bad usage exits 2
  }

  if (*bounds_cmd) {
    dccd::bound_query q{bv, bk, bt};
    std::cout << (bcirc ? dccd::lower_bound_circular(q) : dccd::lower_bound_linear(q)) << "\n";
    return kExitOk;
  }

  if (*verify_cmd) {
    auto doc = dccd::parse_design(read_file(vfile));
    const auto& d = doc.d;
    auto chk = dccd::verify_m_change(d, vm);
    auto cls = dccd::classify(d);
    auto ledger = dccd::coverage(d, std::min(vstrength, d.k));
    std::cout << "v=" << d.v << " k=" << d.k << " b=" << d.b() << " "
              << (d.circular ? "circular" : "linear") << "\n";
    if (chk.ok)
      std::cout << vm << "-change: ok\n";
    else
      std::cout << vm << "-change: violated at gap " << chk.first_bad_gap
                << " (intersection size " << chk.intersection << ")\n";
    std::cout << "coverage t=" << ledger.t() << ": " << ledger.covered_count() << "/"
              << ledger.total_tsets() << " covered, " << ledger.uncovered_count()
              << " uncovered\n";
    std::cout << "economical: " << (cls.economical ? "yes" : "no") << " (bound " << cls.bound
              << ")\n";
    std::cout << "tight: " << (cls.tight ? "yes" : "no") << "\n";
    return (chk.ok && ledger.all_covered()) ? kExitOk : kExitNegative;
  }

  if (*construct_cmd) {
    if (*diff_cmd) {
      auto d = dccd::develop(dccd::base_family(dfk, dfc));
      emit_checked(d, "cdccd-" + std::to_string(d.v) + "-" + std::to_string(d.k) + "-" +
                          std::to_string(d.b()),
                   "diff-family --k " + std::to_string(dfk) + " --c " + std::to_string(dfc),
                   pretty, 2);
    } else if (*diff61_cmd) {
      auto d = dccd::develop(dccd::base_family_61());
      emit_checked(d, "cdccd-61-4-366", "diff-61", pretty, 2);
    } else if (*csccd_cmd) {
      auto d = dccd::csccd_consecutive(csk);
      emit_checked(d, "csccd-" + std::to_string(d.v) + "-" + std::to_string(d.k) + "-" +
                          std::to_string(d.b()),
                   "csccd --kprime " + std::to_string(csk), pretty, 1);
    } else if (*double_cmd) {
      auto d = dccd::double_points(dccd::csccd_consecutive(dbk));
      emit_checked(d, "cdccd-" + std::to_string(d.v) + "-" + std::to_string(d.k) + "-" +
                          std::to_string(d.b()),
                   "double --kprime " + std::to_string(dbk), pretty, 2);
    } else if (*adjoin_cmd) {
      auto d = dccd::adjoin_point(dccd::double_points(dccd::csccd_consecutive(adk)));
      emit_checked(d, "cdccd-" + std::to_string(d.v) + "-" + std::to_string(d.k) + "-" +
                          std::to_string(d.b()),
                   "adjoin --kprime " + std::to_string(adk), pretty, 2);
    } else if (*cexpand_cmd) {
      auto doc = dccd::parse_design(read_file(exfile));
      const auto& d = doc.d;
      if (d.k <= 2 || d.v % (d.k - 2) != 0)
        throw dccd::structural_error("expand: k-2 does not divide v");
      int l = d.v / (d.k - 2);
      if (l % 2 == 0) throw dccd::structural_error("expand: expansion set size would be even");
      auto es = dccd::find_expansion_set(d);
      if (!es) throw dccd::structural_error("expand: design has no expansion set");
      auto grown = dccd::expand(d, *es, dccd::circle_method(l + 1));
      std::string base = doc.name ? *doc.name : "design";
      emit_checked(grown, (grown.circular ? "cdccd-" : "dccd-") + std::to_string(grown.v) + "-" +
                              std::to_string(grown.k) + "-" + std::to_string(grown.b()),
                   "expansion of " + base + " by K" + std::to_string(l + 1), pretty, 2);
    } else if (*catalog_cmd) {
      auto entry = dccd::catalog(catname);
      if (pretty)
        std::cout << dccd::pretty_design(entry.d);
      else
        std::cout << dccd::emit_design(dccd::design_document{entry.d, entry.name,
                                                             entry.provenance});
    }
    return kExitOk;
  }

  if (*es_cmd) {
    auto doc = dccd::parse_design(read_file(esfile));
    auto es = dccd::find_expansion_set(doc.d);
    if (!es) {
      std::cout << "none\n";
      return kExitNegative;
    }
    std::cout << dccd::emit_expansion_set(*es);
    return kExitOk;
  }

  if (*cost_cmd) {
    auto doc = dccd::parse_design(read_file(costfile));
    dccd::cost_params p{test_cost, change_cost, !no_initial};
    auto r = full_swap ? dccd::full_swap_cost(doc.d.b(), doc.d.k, p)
                       : dccd::sequential_cost(doc.d, p);
    std::cout << "tests " << r.tests << "\n"
              << "changes " << r.changes << "\n"
              << "total " << r.total << "\n";
    return kExitOk;
  }

  if (*search_cmd) {
    auto lim = limits_from_env();
    lim.allow_large = sforce;
    auto result = dccd::exhaustive_min_blocks(sv, sk, scirc, sb, lim);
    if (!result) {
      std::cerr << "none: no " << (scirc ? "circular " : "") << "double change covering design on "
                << sv << " points with at most " << sb << " blocks\n";
      return kExitNegative;
    }
    emit_checked(result->d, (scirc ? "cdccd-" : "dccd-") + std::to_string(sv) + "-" +
                                std::to_string(sk) + "-" + std::to_string(result->b),
                 "search-min", false, 2);
    return kExitOk;
  }

  if (*fact_cmd) {
    auto f = dccd::circle_method(fn);
    auto rep = dccd::verify_factorization(f);
    if (!rep.ok) throw dccd::structural_error("refusing to emit: " + rep.detail);
    std::cout << dccd::emit_factorization(f);
    return kExitOk;
  }

  return kExitUsage;
}

} // namespace

int main(int argc, char** argv)
{
  try {
    return run(argc, argv);
  } catch (const dccd::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const dccd::structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const dccd::lookup_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dccd::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
