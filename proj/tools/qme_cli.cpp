#include "qme/qme.h"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

struct Options {
  std::string space;
  std::string trunc = "5,2,2,2,6";
  std::string variant = "lgv";
  std::string format = "text";
  std::uint64_t seed = 1;
  long order = -1;
  std::vector<std::string> args;
};

struct Command {
  const char* name;
  const char* help;
  bool needs_space;
};

constexpr Command kCommands[] = {
    {"axioms", "check the bialgebra axioms on the space", true},
    {"bracket", "Lambda bracket of two elements", true},
    {"cobracket", "cobracket of an element (empty legs as v)", true},
    {"diff", "differential d = g*delta + Delta", true},
    {"mc-check", "Maurer-Cartan residual dx + 1/2[x,x]", true},
    {"gauge", "gauge action exp(y).x of Y on X", true},
    {"ch", "characteristic class exp(x) in the CE complex", true},
    {"hochschild", "cyclic Hochschild cohomology of ad(h)", true},
    {"obstruct", "obstruction class at level --order (default 1)", true},
    {"lift", "lift h up the filtration tower to --order", true},
    {"extspace", "extension space at level --order (default 1)", true},
    {"kunneth", "compare H(A) with the symmetric-power prediction", true},
    {"constraint", "quantum constraint Delta(h) = 0", true},
    {"example-1d", "golden suite for the one-dimensional family", false},
};

int exit_code(qme_status s) {
  if (s == QME_ERR_PRECONDITION || s == QME_ERR_INTEGRITY) return 1;
  return 2;
}

int run(const Command& c, const Options& o) {
  qme_space* space = nullptr;
  qme_status st = QME_OK;
  if (!o.space.empty()) st = qme_space_from_file(o.space.c_str(), &space);
  else if (c.needs_space) {
    std::cerr << "error: --space is required for " << c.name << '\n';
    return 2;
  }
  if (st != QME_OK) {
    std::cerr << "error (" << qme_status_name(st) << "): " << qme_last_error() << '\n';
    return 2;
  }
  nlohmann::json req{{"command", c.name}, {"args", o.args}, {"variant", o.variant}, {"trunc", o.trunc},
                     {"seed", o.seed}};
  if (o.order >= 0) req["order"] = o.order;
  char* out = nullptr;
  int verdict = 0;
  st = qme_run(space, req.dump().c_str(), o.format.c_str(), &out, &verdict);
  qme_space_free(space);
  if (st != QME_OK) {
    std::cerr << "error (" << qme_status_name(st) << "): " << qme_last_error() << '\n';
    return exit_code(st);
  }
  std::fputs(out, stdout);
  qme_string_free(out);
  return verdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum master equation toolkit: Lie bialgebra of cyclic words, CE complexes, obstructions"};
  app.require_subcommand(1);
  Options opts;
  const Command* chosen = nullptr;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--space", opts.space, "space JSON file");
    sub->add_option("--trunc", opts.trunc, "truncation profile L,K,G,N,P")->capture_default_str();
    sub->add_option("--variant", opts.variant, "hq2, lg or lgv")
        ->check(CLI::IsMember({"hq2", "lg", "lgv"}))
        ->capture_default_str();
    sub->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", opts.seed, "seed for sampled checks")->capture_default_str();
    sub->add_option("--order", opts.order, "target order or level");
    sub->add_option("elements", opts.args, "elements in the expression grammar");
    sub->callback([&chosen, &c] { chosen = &c; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return chosen ? run(*chosen, opts) : 2;
}
