#pragma once

// The schmidt-lab subcommands, writing to caller-supplied streams.
//
// Exit codes: 0 success or pass, 1 checked and failed, 2 internal
// disagreement between independent methods, 3 input error.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "schmidt/characterize.hpp"

namespace schmidt {

  enum ExitCode : int {
    kExitOk           = 0,
    kExitFail         = 1,
    kExitDisagreement = 2,
    kExitInputError   = 3,
  };

  enum class OutputFormat { text, json };

  struct RunConfig {
    std::size_t  max_group_order    = 60;   // End enumeration
    std::size_t  max_subgroup_order = 200;  // subgroup lattice
    std::size_t  max_construct_order = 2000;
    OutputFormat format  = OutputFormat::text;
    unsigned     threads = 1;

    // SCHMIDT_LAB_MAX_ORDER, when set to a positive integer, replaces every
    // cap above.
    void apply_environment();

    CheckOptions  check_options() const;
    OracleOptions oracle_options() const;
  };

  int cmd_construct(unsigned                                  p,
                    unsigned                                  q,
                    unsigned                                  v,
                    std::optional<std::filesystem::path> const& out_path,
                    RunConfig const&                          cfg,
                    std::ostream&                             out,
                    std::ostream&                             err);

  int cmd_endos(std::filesystem::path const& file,
                RunConfig const&             cfg,
                std::ostream&                out,
                std::ostream&                err);

  int cmd_check_schmidt(std::filesystem::path const&        file,
                        std::optional<SchmidtParams> const& params,
                        RunConfig const&                    cfg,
                        std::ostream&                       out,
                        std::ostream&                       err);

  int cmd_compare_end(std::filesystem::path const& file1,
                      std::filesystem::path const& file2,
                      RunConfig const&             cfg,
                      std::ostream&                out,
                      std::ostream&                err);

  // corpus is "catalog" or "constructed".
  int cmd_sweep(std::string const& corpus,
                std::size_t        max_order,
                RunConfig const&   cfg,
                std::ostream&      out,
                std::ostream&      err);

  // Lists the catalog; with out_dir also writes <name>.cayley files there.
  int cmd_catalog(std::optional<std::filesystem::path> const& out_dir,
                  RunConfig const&                            cfg,
                  std::ostream&                               out,
                  std::ostream&                               err);

  int cmd_symbolic(unsigned         p,
                   unsigned         q,
                   unsigned         v,
                   RunConfig const& cfg,
                   std::ostream&    out,
                   std::ostream&    err);

  // Every M(p, q, v) of order at most max_order, sorted by (order, p, q, v).
  std::vector<NamedGroup> constructed_corpus(std::size_t max_order,
                                             std::size_t construct_cap = 2000);

}  // namespace schmidt
