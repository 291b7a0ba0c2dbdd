// brauer-terminal: command-line front end of the Brauer pair engine.

#include "brauer_terminal/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact discrepancies, terminal resolutions and terminality certificates for étale-local Brauer pairs"};
  app.name("brauer-terminal");
  app.require_subcommand(1, 1);

  bterm::CommandOptions opts;
  std::string model, out;
  app.add_option("--model", model, "Model file");
  app.add_option("--depth", opts.depth, "Certification depth (blow-ups)")->check(CLI::PositiveNumber);
  app.add_option("--max-rounds", opts.max_rounds, "Cap on fix-up blow-ups")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-fixup", opts.no_fixup, "Certify the model as given");
  app.add_option("--out", out, "Write newline-delimited JSON records here");

  for (const auto* name : {"boundary", "discrepancy", "resolve", "certify", "remark"}) {
    static const std::map<std::string, std::string> help = {
        {"boundary", "Boundary divisor Delta_{X,alpha}"},
        {"discrepancy", "Brauer and classical discrepancies of every level-1 blow-up"},
        {"resolve", "Blow up bad codimension-2 strata until the pair is level-1 Brauer terminal"},
        {"certify", "Fix up, then certify terminality to --depth blow-ups"},
        {"remark", "3-torsion example where terminality cannot be decided"}};
    app.add_subcommand(name, help.at(name))->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : bterm::kExitError;
  }

  opts.command = app.get_subcommands().front()->get_name();
  if (!model.empty()) opts.model = model;
  if (!out.empty()) opts.out = out;
  return bterm::run_command(opts, std::cout, std::cerr);
}
