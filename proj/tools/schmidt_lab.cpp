// schmidt-lab: construct Miller–Moreno groups, enumerate endomorphisms and
// test the End-based characterization of Schmidt groups.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "schmidt/commands.hpp"

int main(int argc, char** argv) {
  using namespace schmidt;

  CLI::App app{"Schmidt and Miller-Moreno groups through their endomorphism semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig   cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-group-order", cfg.max_group_order, "Cap on |G| for End enumeration")
      ->capture_default_str();
  app.add_option("--max-subgroup-order", cfg.max_subgroup_order,
                 "Cap on |G| for subgroup enumeration")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for End enumeration")
      ->capture_default_str();

  unsigned    p = 0, q = 0, v = 1;
  std::string out_path, file1, file2;

  auto* construct = app.add_subcommand("construct", "Build M(p, q, v) and write its table");
  construct->add_option("--p", p)->required();
  construct->add_option("--q", q)->required();
  construct->add_option("--v", v)->capture_default_str();
  construct->add_option("--out", out_path, "Output .cayley file");

  auto* endos = app.add_subcommand("endos", "Enumerate End(G) for a .cayley file");
  endos->add_option("file", file1)->required()->check(CLI::ExistingFile);

  std::optional<unsigned> cp, cq, cv;
  auto* check = app.add_subcommand("check-schmidt", "Run the End-based test and the lattice oracle");
  check->add_option("file", file1)->required()->check(CLI::ExistingFile);
  check->add_option("--p", cp);
  check->add_option("--q", cq);
  check->add_option("--v", cv);

  auto* compare = app.add_subcommand("compare-end", "Compare End(G1) and End(G2)");
  compare->add_option("file1", file1)->required()->check(CLI::ExistingFile);
  compare->add_option("file2", file2)->required()->check(CLI::ExistingFile);

  std::string corpus    = "catalog";
  std::size_t max_order = 24;
  auto*       sweep     = app.add_subcommand("sweep", "Oracle agreement and End uniqueness over a corpus");
  sweep->add_option("--corpus", corpus)
      ->check(CLI::IsMember({"catalog", "constructed"}))
      ->capture_default_str();
  sweep->add_option("--max-order", max_order)->capture_default_str();

  std::string out_dir;
  auto*       cat = app.add_subcommand("catalog", "List (and optionally write) the catalog groups");
  cat->add_option("--out-dir", out_dir);

  auto* sym = app.add_subcommand("symbolic", "Print the pair model of End(M(p, q, v))");
  sym->add_option("--p", p)->required();
  sym->add_option("--q", q)->required();
  sym->add_option("--v", v)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  try {
    cfg.apply_environment();
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (cfg.max_group_order == 0 || cfg.max_subgroup_order == 0 || cfg.threads == 0) {
    std::cerr << "error: caps and thread count must be positive\n";
    return kExitInputError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (construct->parsed()) {
    std::optional<std::filesystem::path> path;
    if (!out_path.empty()) {
      path = out_path;
    }
    return cmd_construct(p, q, v, path, cfg, out, err);
  }
  if (endos->parsed()) {
    return cmd_endos(file1, cfg, out, err);
  }
  if (check->parsed()) {
    std::optional<SchmidtParams> params;
    if (cp || cq || cv) {
      if (!cp || !cq) {
        err << "error: --p and --q must be given together\n";
        return kExitInputError;
      }
      params = SchmidtParams{*cp, *cq, cv.value_or(1)};
    }
    return cmd_check_schmidt(file1, params, cfg, out, err);
  }
  if (compare->parsed()) {
    return cmd_compare_end(file1, file2, cfg, out, err);
  }
  if (sweep->parsed()) {
    return cmd_sweep(corpus, max_order, cfg, out, err);
  }
  if (cat->parsed()) {
    std::optional<std::filesystem::path> dir;
    if (!out_dir.empty()) {
      dir = out_dir;
    }
    return cmd_catalog(dir, cfg, out, err);
  }
  return cmd_symbolic(p, q, v, cfg, out, err);
}
