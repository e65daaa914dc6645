#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace ccs;
  using namespace ccs::cli;

  CLI::App app{"Finite 2-group invariants and TQFT matrices of cut cellular surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, CountMode> modes{
      {"fast", CountMode::fast}, {"oracle", CountMode::oracle}, {"both", CountMode::both}};
  const std::map<std::string, Output> outputs{{"json", Output::json}, {"csv", Output::csv}, {"text", Output::text}};

  auto add_common = [&](CLI::App* sub, bool needs_surface) {
    sub->add_option("--module,-M", cfg.module, "fixture name (X1..X5), crossed-module JSON file, or 'all' for verify/report");
    if (needs_surface) {
      sub->add_option("--surface,-S", cfg.surface,
                      "sphere|disk_in|disk_out|cylinder|torus, a '+'-separated gluing chain, or a JSON file");
    }
    sub->add_option("--mode", cfg.mode, "counting path")->transform(CLI::CheckedTransformer(modes));
    sub->add_option("--output,-o", cfg.output, "output format")->transform(CLI::CheckedTransformer(outputs));
    sub->add_flag("--float", cfg.show_float, "also print decimal approximations");
    sub->add_option("--workers", cfg.engine.workers, "enumeration threads (0 = all cores)");
    sub->add_option("--max-states", cfg.engine.max_fast_states, "cap on edge assignments in fast mode");
    sub->add_option("--max-oracle-states", cfg.engine.max_oracle_states, "cap on assignments in oracle mode");
  };
  auto add_verify = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.verify.seed, "seed for random move sequences");
    sub->add_option("--sequences", cfg.verify.move_sequences, "random move sequences per surface");
    sub->add_option("--depth", cfg.verify.max_move_depth, "maximum moves per sequence")->check(CLI::Range(1, 64));
  };

  auto* inv = app.add_subcommand("invariant", "print one matrix element of Z");
  add_common(inv, true);
  inv->add_option("--in", cfg.in, "in-boundary colours, comma separated");
  inv->add_option("--out", cfg.out, "out-boundary colours, comma separated");
  add_common(app.add_subcommand("matrix", "print the matrix of Z"), true);
  add_common(app.add_subcommand("classes", "2-conjugacy classes and the generalized commuting fraction"), false);
  auto* ver = app.add_subcommand("verify", "run every property suite; nonzero exit on a violation");
  add_common(ver, false);
  add_verify(ver);
  auto* rep = app.add_subcommand("report", "everything as one JSON document");
  add_common(rep, false);
  add_verify(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run_guarded(cfg, std::cout, std::cerr);
}
