// colorcomp: count, enumerate, map and verify (an+b)-color compositions.

#include "colorcomp/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  namespace cli = colorcomp::cli;

  CLI::App app{"Exact counting, enumeration and bijections for (an+b)-color compositions"};
  app.require_subcommand(1);

  cli::CountOptions count;
  std::optional<std::int64_t> count_k;
  auto* count_cmd = app.add_subcommand("count", "Print the exact number of compositions");
  count_cmd->add_option("--a", count.a, "Color law slope a >= 0")->required();
  count_cmd->add_option("--b", count.b, "Color law offset b (may be negative)")->required();
  count_cmd->add_option("--nu", count.nu, "Integer being composed")->required();
  count_cmd->add_option("--k", count_k, "Number of parts (omit for all k)");
  count_cmd->add_option("--method", count.method, "closed | recurrence | partition | enumerate")
      ->check(CLI::IsMember(cli::count_methods()));
  count_cmd->add_flag("--all-methods", count.all_methods,
                      "Run every applicable method; exit 3 on disagreement");

  cli::EnumerateOptions enumerate;
  std::optional<std::int64_t> enumerate_j;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream objects as JSON lines");
  enumerate_cmd->add_option("--kind", enumerate.kind, "colored | domino")
      ->check(CLI::IsMember({"colored", "domino"}));
  enumerate_cmd->add_option("--a", enumerate.a)->required();
  enumerate_cmd->add_option("--b", enumerate.b)->required();
  enumerate_cmd->add_option("--nu", enumerate.nu)->required();
  enumerate_cmd->add_option("--k", enumerate.k)->required();
  enumerate_cmd->add_option("--j", enumerate_j, "Domino stratum (number of nonzero tiles)");

  cli::MapOptions map;
  auto* map_cmd = app.add_subcommand("map", "Apply phi (domino -> colored) or psi to stdin");
  map_cmd->add_option("--direction", map.direction, "phi | psi")
      ->required()
      ->check(CLI::IsMember({"phi", "psi"}));
  map_cmd->add_option("--a", map.a)->required();
  map_cmd->add_option("--b", map.b)->required();

  cli::VerifyOptions verify;
  std::string fixture;
  std::optional<std::int64_t> terms;
  auto* verify_cmd = app.add_subcommand("verify", "Check the recurrence against a b-file");
  auto* fixture_opt = verify_cmd->add_option("--fixture", fixture, "Path to an OEIS b-file");
  verify_cmd->add_option("--a", verify.a);
  verify_cmd->add_option("--b", verify.b);
  verify_cmd->add_option("--offset", verify.offset, "nu = b-file index + offset");
  verify_cmd->add_option("--terms", terms, "Compare only the first N terms with nu >= 1");
  auto* fib_flag = verify_cmd->add_flag("--fibonacci", verify.fibonacci,
                                        "Check the Fibonacci identity instead");
  verify_cmd->add_option("--max-nu", verify.max_nu, "Largest nu for --fibonacci");
  fixture_opt->excludes(fib_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::usage;
  }

  try {
    if (*count_cmd) {
      count.k = count_k;
      return cli::cmd_count(count, std::cout, std::cerr);
    }
    if (*enumerate_cmd) {
      enumerate.j = enumerate_j;
      return cli::cmd_enumerate(enumerate, std::cout, std::cerr);
    }
    if (*map_cmd) return cli::cmd_map(map, std::cin, std::cout, std::cerr);
    if (*verify_cmd) {
      if (*fixture_opt) verify.fixture = fixture;
      verify.terms = terms;
      return cli::cmd_verify(verify, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::usage;
  }
  return cli::usage;
}
