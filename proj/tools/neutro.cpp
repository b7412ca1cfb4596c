#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "neutro/algebra.hpp"
#include "neutro/error.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/io.hpp"
#include "neutro/oracle.hpp"
#include "neutro/query.hpp"

namespace {

using namespace neutro;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitMismatch = 3;

std::uint64_t materialize_cap_from_env() {
  const char* env = std::getenv("NEUTRO_MATERIALIZE_CAP");
  if (!env || !*env) return kDefaultMaterializeCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    fail(ErrorKind::ParseError, "NEUTRO_MATERIALIZE_CAP must be a positive integer");
  return v;
}

void print_relation(std::ostream& os, const NeutrosophicRelation& r) {
  os << relation_document(r);
  os << "(" << r.stored_count() << " stored row" << (r.stored_count() == 1 ? "" : "s") << ")\n";
}

int cmd_load(const std::filesystem::path& manifest_path, const std::string& name,
             const std::string& file) {
  const NeutrosophicRelation r = load_relation(file);
  CatalogManifest manifest = CatalogManifest::load_or_empty(manifest_path);
  manifest.upsert(CatalogEntry{name, file, scheme_digest(r.scheme())});
  manifest.save(manifest_path);
  std::cout << "loaded " << name << " from " << file << " (" << r.stored_count()
            << " stored rows, scheme " << r.scheme().str() << ")\n";
  return kExitOk;
}

int cmd_list(const std::filesystem::path& manifest_path) {
  const CatalogManifest manifest = CatalogManifest::load_or_empty(manifest_path);
  for (const auto& e : manifest.entries) {
    std::cout << e.name << "\t" << e.path << "\t" << e.digest << "\n";
  }
  if (manifest.entries.empty()) std::cout << "(catalog is empty)\n";
  return kExitOk;
}

Catalog open_cli_catalog(const std::filesystem::path& manifest_path) {
  const CatalogManifest manifest = CatalogManifest::load_or_empty(manifest_path);
  const auto base = manifest_path.has_parent_path() ? manifest_path.parent_path()
                                                    : std::filesystem::path(".");
  return open_catalog(manifest, base);
}

int cmd_show(const std::filesystem::path& manifest_path, const std::string& name) {
  const Catalog catalog = open_cli_catalog(manifest_path);
  const auto it = catalog.find(name);
  if (it == catalog.end())
    fail(ErrorKind::UnknownRelation, "no relation named '" + name + "' in the catalog");
  print_relation(std::cout, it->second);
  return kExitOk;
}

int cmd_check(const std::filesystem::path& manifest_path, const std::string& name) {
  const Catalog catalog = open_cli_catalog(manifest_path);
  const auto it = catalog.find(name);
  if (it == catalog.end())
    fail(ErrorKind::UnknownRelation, "no relation named '" + name + "' in the catalog");
  const Classification c = classify(it->second);
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "consistent:        " << yn(c.consistent) << "\n"
            << "complete:          " << yn(c.complete) << "\n"
            << "total:             " << yn(c.total) << "\n"
            << "pseudo-consistent: " << yn(c.pseudo_consistent) << "\n"
            << "functional:        " << yn(c.functional) << "\n";
  return kExitOk;
}

int cmd_eval(const std::filesystem::path& manifest_path, const std::string& query, bool raw) {
  const Catalog catalog = open_cli_catalog(manifest_path);
  EvalOptions options;
  options.mode = raw ? EvalMode::raw : EvalMode::robust;
  options.materialize_cap = materialize_cap_from_env();
  const ExprPtr expr = parse_query(query);
  const NeutrosophicRelation result = evaluate(*expr, catalog, options);
  print_relation(std::cout, result);
  return kExitOk;
}

int cmd_verify(std::int64_t grid_k, std::uint64_t budget, bool full) {
  const GradeGrid grid{grid_k};
  CheckBudget check_budget;
  check_budget.max_tuple_space = budget;
  check_budget.max_grid = std::max<std::int64_t>(grid_k, check_budget.max_grid);
  bool all_hold = true;

  const auto report = [&](const std::string& what, const CheckOutcome& outcome) {
    std::cout << (outcome.holds ? "[ok]   " : "[FAIL] ") << what << "  instances="
              << outcome.instances << "\n";
    if (!outcome.holds) {
      all_hold = false;
      std::cout << "       " << outcome.detail << "; first counterexample operands:\n";
      for (std::size_t i = 0; i < outcome.counterexample.size(); ++i) {
        std::cout << "       --- operand " << i + 1 << " ---\n";
        std::cout << relation_document(outcome.counterexample[i]);
      }
    }
  };

  for (const OperatorPair& op : standard_operator_suite(full)) {
    if (op.strong) report(op.name + " (strong)", check_strong(op, grid, check_budget));
    report(op.name + " (weak)", check_weak(op, grid, check_budget));
  }

  // Singleton completion sets characterize total relations, checked over every
  // consistent functional relation on a three-value scheme.
  {
    const Scheme scheme({Attribute{"A", AttributeDomain({"a", "b", "c"})}});
    std::uint64_t instances = 0;
    bool holds = true;
    for (const auto& r : enumerate_consistent_functional(scheme, grid)) {
      ++instances;
      if ((completion_count(r, grid) == 1) != classify(r).total) {
        holds = false;
        break;
      }
    }
    std::cout << (holds ? "[ok]   " : "[FAIL] ")
              << "singleton completions iff total  instances=" << instances << "\n";
    if (!holds) all_hold = false;
  }

  if (!all_hold) {
    std::cout << "verification found counterexamples\n";
    return kExitMismatch;
  }
  std::cout << "all checks hold\n";
  return kExitOk;
}

Catalog fixture_catalog(const std::vector<std::pair<std::string, std::string>>& entries) {
  Catalog catalog;
  for (const auto& [name, fixture] : entries) {
    catalog.emplace(name, parse_relation_document(fixtures::text(fixture)));
  }
  return catalog;
}

/// Evaluates one demo query and compares the canonical serialized form with
/// the bundled golden table.
bool demo_step(const Catalog& catalog, const std::string& title, const std::string& query,
               const std::string& golden_fixture, NeutrosophicRelation* out = nullptr) {
  const ExprPtr expr = parse_query(query);
  const NeutrosophicRelation result = evaluate(*expr, catalog);
  const NeutrosophicRelation golden = parse_relation_document(fixtures::text(golden_fixture));
  std::cout << "-- " << title << " = " << query << "\n";
  print_relation(std::cout, result);
  const bool ok = relation_document(result) == relation_document(golden);
  if (!ok) {
    std::cout << "MISMATCH: expected\n" << relation_document(golden);
  } else {
    std::cout << "matches the expected table\n";
  }
  std::cout << "\n";
  if (out) *out = result;
  return ok;
}

int cmd_demo(const std::string& which) {
  if (which == "example2") {
    const Catalog catalog =
        fixture_catalog({{"R", "example2_R"}, {"S", "example2_S"}});
    bool ok = true;
    ok &= demo_step(catalog, "T1", "R JOIN S", "example2_T1");
    ok &= demo_step(catalog, "T2", "PROJECT[X,Z](R JOIN S)", "example2_T2");
    ok &= demo_step(catalog, "T3", "SELECT[NOT(X = Z)](PROJECT[X,Z](R JOIN S))", "example2_T3");
    return ok ? kExitOk : kExitMismatch;
  }
  if (which == "tanks") {
    const Catalog catalog = fixture_catalog({{"RadarData", "tanks_radar_data"},
                                             {"RadarRules", "tanks_radar_rules"},
                                             {"GunData", "tanks_gun_data"},
                                             {"GunRules", "tanks_gun_rules"},
                                             {"SpeedData", "tanks_speed_data"},
                                             {"SpeedRules", "tanks_speed_rules"}});
    const std::string query =
        "PROJECT[Object-id,Object](RadarData JOIN RadarRules)"
        " INTERSECT PROJECT[Object-id,Object](GunData JOIN GunRules)"
        " INTERSECT PROJECT[Object-id,Object](SpeedData JOIN SpeedRules)";
    NeutrosophicRelation result{Scheme()};
    const bool ok = demo_step(catalog, "result", query, "tanks_result", &result);
    Grade best = Grade::zero();
    for (const auto& [t, pairs] : result.rows()) {
      for (const auto& p : pairs) best = std::max(best, p.belief);
    }
    std::cout << "note: no identification exceeds belief " << best.str()
              << "; the combined sensor evidence leaves every object's type undecided\n";
    return ok ? kExitOk : kExitMismatch;
  }
  fail(ErrorKind::ParseError, "unknown demo '" + which + "' (expected example2 or tanks)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query engine for relations with exact belief/doubt confidence pairs"};
  app.require_subcommand(1);

  std::string catalog_path = "neutro-catalog.json";
  app.add_option("--catalog", catalog_path, "Catalog manifest file")->capture_default_str();

  std::string name, file, query, which;
  bool raw = false;
  std::int64_t grid_k = 2;
  std::uint64_t budget = 4;
  bool full = false;

  auto* load = app.add_subcommand("load", "Register a relation document in the catalog");
  load->add_option("name", name, "Relation name")->required();
  load->add_option("file", file, "Relation document")->required();

  app.add_subcommand("list", "List cataloged relations");

  auto* show = app.add_subcommand("show", "Print a cataloged relation");
  show->add_option("name", name, "Relation name")->required();

  auto* check = app.add_subcommand("check", "Classify a cataloged relation");
  check->add_option("name", name, "Relation name")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a query against the catalog");
  eval->add_option("query", query, "Query text")->required();
  eval->add_flag("--raw", raw, "Apply operators directly instead of combine-op-split");

  auto* verify = app.add_subcommand(
      "verify", "Exhaustively check the operators against the fuzzy reference algebra");
  verify->add_option("--grid", grid_k, "Grade grid denominator k")->capture_default_str();
  verify->add_option("--budget", budget, "Max operand tuple-space size")->capture_default_str();
  verify->add_flag("--full", full,
                   "Include join set-equality checks over non-identical schemes (these report "
                   "a genuine counterexample and exit nonzero)");

  auto* demo = app.add_subcommand("demo", "Run a bundled demonstration pipeline");
  demo->add_option("which", which, "example2 or tanks")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (load->parsed()) return cmd_load(catalog_path, name, file);
    if (app.got_subcommand("list")) return cmd_list(catalog_path);
    if (show->parsed()) return cmd_show(catalog_path, name);
    if (check->parsed()) return cmd_check(catalog_path, name);
    if (eval->parsed()) return cmd_eval(catalog_path, query, raw);
    if (verify->parsed()) return cmd_verify(grid_k, budget, full);
    if (demo->parsed()) return cmd_demo(which);
  } catch (const NeutroError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
