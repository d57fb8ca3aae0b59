#include "pointscheme/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pointscheme/algebra_io.hpp"
#include "pointscheme/error.hpp"
#include "pointscheme/point_scheme.hpp"
#include "pointscheme/verify.hpp"

namespace pointscheme::cli {

namespace {

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return parse_failure;
    case ErrorKind::cap_exceeded: return cap_exceeded;
    case ErrorKind::precondition:
    case ErrorKind::arithmetic: return precondition_failure;
  }
  return precondition_failure;
}

RunResult execute(const RunConfig& cfg, const AlgebraSpec& a) {
  RunResult res;
  const EnumerateOptions opts{cfg.cap, cfg.jobs};
  switch (cfg.command) {
    case Command::gamma:
      res.out = write_point_scheme(enumerate_gamma(a, cfg.n, opts));
      break;
    case Command::stabilize: {
      const auto rep = stabilization_scan(a, cfg.n_max, opts);
      res.out = render_stabilization(a, rep);
      if (rep.cap_message) {
        res.status = cap_exceeded;
        res.err = *rep.cap_message + "\n";
      }
      break;
    }
    case Command::sigma: {
      const auto gd = enumerate_gamma(a, cfg.d, opts);
      const auto gd1 = enumerate_gamma(a, cfg.d + 1, opts);
      res.out = render_sigma(a, sigma(gd, gd1));
      break;
    }
    case Command::verify: {
      const auto results = verify_algebra(a, VerifyBounds{cfg.n_max, opts});
      res.out = "# verify max=" + std::to_string(cfg.n_max) + " field=" + a.field.name() +
                " algebra=" + a.name + "\n" + render_properties(results);
      if (!all_passed(results)) res.status = property_failure;
      break;
    }
    case Command::segre_check: {
      const auto results = segre_properties(a, cfg.n, opts);
      res.out = "# segre-check n=" + std::to_string(cfg.n) + " field=" + a.field.name() +
                " algebra=" + a.name + "\n" + render_properties(results);
      if (!all_passed(results)) res.status = property_failure;
      break;
    }
  }
  return res;
}

}  // namespace

RunResult run_on_text(const RunConfig& cfg, const std::string& text, const std::string& name) {
  RunResult res;
  try {
    const AlgebraSpec a = parse_algebra(text, name);
    res = execute(cfg, a);
  } catch (const Error& e) {
    res.status = status_for(e.kind());
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }
  if (!cfg.output.empty()) {
    std::ofstream os(cfg.output, std::ios::binary);
    if (!os) {
      res.status = usage_error;
      res.err += "error: cannot write " + cfg.output + "\n";
      return res;
    }
    os << res.out;
    res.out.clear();
  }
  return res;
}

RunResult run(const RunConfig& cfg) {
  std::ifstream is(cfg.input, std::ios::binary);
  if (!is) {
    RunResult res;
    res.status = usage_error;
    res.err = "error: cannot read " + cfg.input + "\n";
    return res;
  }
  std::ostringstream buf;
  buf << is.rdbuf();
  return run_on_text(cfg, buf.str(), std::filesystem::path(cfg.input).stem().string());
}

bool parse_args(int argc, char** argv, RunConfig& cfg, RunResult& result) {
  CLI::App app{"Field points of truncated point schemes of path algebras with relations"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "algebra description file")->required()->check(CLI::ExistingFile);
    sub->add_option("--cap", cfg.cap, "maximum number of candidate tuples")->capture_default_str();
    sub->add_option("-j,--jobs", cfg.jobs, "enumeration worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  };

  auto* gamma = app.add_subcommand("gamma", "print the points of Γ_n as TSV");
  common(gamma);
  gamma->add_option("-n", cfg.n, "tuple length")->required();

  auto* stabilize = app.add_subcommand("stabilize", "point counts, truncation statistics and σ");
  common(stabilize);
  stabilize->add_option("--max", cfg.n_max, "largest length to enumerate")->required()->check(CLI::Range(1, 64));

  auto* sig = app.add_subcommand("sigma", "shift map on the image of Γ_{d+1} -> Γ_d");
  common(sig);
  sig->add_option("-d", cfg.d, "truncation level")->required();

  auto* verify = app.add_subcommand("verify", "run the exhaustive invariant suite");
  common(verify);
  verify->add_option("--max", cfg.n_max, "largest tuple length to check")->check(CLI::Range(0, 16));
  cfg.n_max = 3;

  auto* segre_check = app.add_subcommand("segre-check", "Segre embedding properties on Γ_n");
  common(segre_check);
  segre_check->add_option("-n", cfg.n, "tuple length")->required()->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    result.status = app.exit(e, out, err);
    if (result.status != 0) result.status = usage_error;
    result.out = out.str();
    result.err = err.str();
    return false;
  }
  if (gamma->parsed()) cfg.command = Command::gamma;
  if (stabilize->parsed()) cfg.command = Command::stabilize;
  if (sig->parsed()) cfg.command = Command::sigma;
  if (verify->parsed()) cfg.command = Command::verify;
  if (segre_check->parsed()) cfg.command = Command::segre_check;
  return true;
}

}  // namespace pointscheme::cli
