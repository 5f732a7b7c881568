// rvdeg: character tables and real-degree verdicts for permutation groups.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rvdeg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Character tables and real character degree verdicts for permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  rvdeg::Config cfg;
  std::uint64_t prime = 0;
  std::string cache_dir;
  app.add_option("--seed", cfg.seed, "seed for the eigenspace splitting")->envname("RVDEG_SEED");
  app.add_option("--prime", prime, "use this prime instead of the smallest admissible one")->envname("RVDEG_PRIME");
  app.add_option("--cap-order", cfg.order_cap, "largest group order to enumerate")
      ->envname("RVDEG_CAP_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-lattice", cfg.lattice_cap, "largest normal subgroup lattice to build")
      ->envname("RVDEG_CAP_LATTICE")
      ->check(CLI::PositiveNumber);
  app.add_flag("--machine", cfg.machine, "emit JSON lines")->envname("RVDEG_MACHINE");
  app.add_option("--cache-dir", cache_dir, "directory for cached tables")->envname("RVDEG_CACHE_DIR");
  app.add_option("--jobs,-j", cfg.jobs, "groups verified in parallel by scan")
      ->envname("RVDEG_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "include wall-clock timings in reports")->envname("RVDEG_TIMING");

  std::string src;
  std::string manifest;
  auto* table = app.add_subcommand("table", "print the character table");
  table->add_option("src", src, "catalog name or .grp file")->required();
  auto* verify = app.add_subcommand("verify", "verify one group");
  verify->add_option("src", src, "catalog name or .grp file")->required();
  auto* info = app.add_subcommand("info", "structural summary without the table");
  info->add_option("src", src, "catalog name or .grp file")->required();
  auto* scan = app.add_subcommand("scan", "verify every group in a manifest (default: built-in corpus)");
  scan->add_option("manifest", manifest, "file with one catalog name or .grp path per line");

  CLI11_PARSE(app, argc, argv);
  if (prime) cfg.prime_override = prime;
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

  if (*table) return rvdeg::cli::cmd_table(src, cfg, std::cout, std::cerr);
  if (*verify) return rvdeg::cli::cmd_verify(src, cfg, std::cout, std::cerr);
  if (*info) return rvdeg::cli::cmd_info(src, cfg, std::cout, std::cerr);
  return rvdeg::cli::cmd_scan(manifest.empty() ? std::nullopt : std::optional(manifest), cfg, std::cout, std::cerr);
}
