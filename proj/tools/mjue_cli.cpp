// Command line front end for the convergence studies.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mjue/errors.hpp"
#include "mjue/harness.hpp"

namespace {

enum ExitCode { kPass = 0, kBandFailure = 1, kUsage = 2, kNumerical = 3 };

struct Overrides {
  std::optional<double> alpha, beta;
  std::optional<std::string> h, n, grid, s, out, config;
  std::optional<int> m;
  std::optional<double> tol, x;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  const mjue::GridSpec list = mjue::GridSpec::parse(text);
  for (double v : list.points()) {
    if (v != static_cast<int>(v)) throw mjue::ConfigError("--n: expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

mjue::ExperimentConfig assemble(mjue::StudyKind kind, const Overrides& o) {
  mjue::ExperimentConfig cfg;
  if (o.config) cfg = mjue::read_config(*o.config);
  cfg.study = kind;
  if (o.alpha) cfg.weight.alpha = *o.alpha;
  if (o.beta) cfg.weight.beta = *o.beta;
  if (o.h) cfg.weight.h = *o.h;
  if (o.n) {
    if (o.n->find(':') != std::string::npos) throw mjue::ConfigError("--n: expected a list");
    cfg.n = parse_int_list(*o.n);
  }
  if (o.grid) cfg.grid = mjue::GridSpec::parse(*o.grid);
  if (o.s) cfg.s = mjue::GridSpec::parse(*o.s).points();
  if (o.m) cfg.m = *o.m;
  if (o.out) cfg.out = *o.out;
  if (o.tol) cfg.tol = *o.tol;
  if (o.x) cfg.x = *o.x;
  cfg.validate();
  return cfg;
}

void print_report(const mjue::ConvergenceReport& r) {
  std::cout << mjue::to_csv(r);
  if (r.samples.size() >= 2) {
    std::printf("# order %.4f  constant %.4g  residual %.3g  expected %.1f +- %.2f  %s\n",
                r.fit.order, r.fit.constant, r.fit.residual, r.expected_order, r.band,
                r.pass ? "PASS" : "FAIL");
  }
}

int run(mjue::StudyKind kind, const Overrides& o) {
  const mjue::ExperimentConfig cfg = assemble(kind, o);
  using mjue::StudyKind;
  switch (kind) {
    case StudyKind::density:
    case StudyKind::bulk:
    case StudyKind::edge: {
      const auto report = kind == StudyKind::density ? mjue::run_density_study(cfg)
                          : kind == StudyKind::bulk  ? mjue::run_bulk_study(cfg)
                                                     : mjue::run_edge_study(cfg);
      print_report(report);
      if (!cfg.out.empty()) mjue::emit_csv(report, cfg.out);
      return report.pass ? kPass : kBandFailure;
    }
    case StudyKind::gap: {
      const auto report = mjue::run_gap_study(cfg);
      std::cout << mjue::to_csv(report);
      std::printf("# monotone %s\n", report.monotone ? "yes" : "no");
      if (!cfg.out.empty()) mjue::emit_csv(report, cfg.out);
      return report.monotone ? kPass : kBandFailure;
    }
    case StudyKind::asymptotics: {
      const auto report = mjue::run_asymptotics_study(cfg);
      std::cout << mjue::to_csv(report);
      for (std::size_t k = 0; k < report.bulk_ratios.size(); ++k) {
        std::printf("# ratio bulk %.3f edge %.3f\n", report.bulk_ratios[k],
                    report.edge_ratios[k]);
      }
      if (!cfg.out.empty()) mjue::emit_csv(report, cfg.out);
      return report.pass ? kPass : kBandFailure;
    }
    case StudyKind::recurrence: {
      const auto table = mjue::run_recurrence_study(cfg);
      std::cout << mjue::to_csv(table);
      if (!cfg.out.empty()) mjue::emit_csv(table, cfg.out);
      return kPass;
    }
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Jacobi unitary ensemble convergence studies", "mjue"};
  app.require_subcommand(1);
  Overrides o;

  struct Entry {
    const char* name;
    mjue::StudyKind kind;
    const char* help;
  };
  const Entry entries[] = {
      {"density", mjue::StudyKind::density, "K_n(x,x)/n against the arcsine density"},
      {"bulk", mjue::StudyKind::bulk, "scaled bulk kernel against the sine kernel"},
      {"edge", mjue::StudyKind::edge, "scaled edge kernel against the Bessel kernel"},
      {"gap", mjue::StudyKind::gap, "finite-n and limiting hard edge gap probabilities"},
      {"recurrence", mjue::StudyKind::recurrence, "recurrence coefficients a_k, b_k"},
      {"asympt", mjue::StudyKind::asymptotics, "leading-order asymptotics of 2^n pi_n"},
  };
  std::optional<mjue::StudyKind> chosen;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--alpha", o.alpha, "exponent at x = 1");
    sub->add_option("--beta", o.beta, "exponent at x = -1");
    sub->add_option("--h", o.h, "analytic factor: one, exp, runge or @file.json");
    sub->add_option("--n", o.n, "comma separated n list");
    sub->add_option("--grid", o.grid, "lo:hi:count or comma separated points");
    sub->add_option("--s", o.s, "gap sizes, comma separated");
    sub->add_option("--m", o.m, "initial Nystrom size");
    sub->add_option("--out", o.out, "CSV output path");
    sub->add_option("--tol", o.tol, "half-width of the order band");
    sub->add_option("--x", o.x, "bulk centre");
    sub->add_option("--config", o.config, "JSON config; flags take precedence");
    sub->callback([&chosen, k = e.kind] { chosen = k; });
  }

  // "--opt=value" becomes "--opt" "value" so that "--n=" reads as an empty list
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    const std::string a = argv[i];
    const auto eq = a.find('=');
    if (a.rfind("--", 0) == 0 && eq != std::string::npos) {
      args.push_back(a.substr(eq + 1));
      args.push_back(a.substr(0, eq));
    } else {
      args.push_back(a);
    }
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return run(*chosen, o);
  } catch (const mjue::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const mjue::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
