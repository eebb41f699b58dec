#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "qv/harness.hpp"
#include "qv/registry.hpp"
#include "qv/report_io.hpp"

namespace {

using namespace qv;

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

// Comma-separated "p/q" values for the sampling pool.
bool parse_pool(const std::string& text, std::vector<ExactScalar>& out, std::string& error) {
  std::stringstream ss(text);
  std::string item;
  bool some_rho_candidate = false;
  while (std::getline(ss, item, ',')) {
    ExactScalar v;
    try {
      v = ExactScalar::parse(item);
    } catch (const std::invalid_argument& e) {
      error = e.what();
      return false;
    }
    if (v.is_zero()) {
      error = "pool entries must be nonzero";
      return false;
    }
    ExactScalar av = v.sign() < 0 ? -v : v;
    if (!(av == ExactScalar(1))) some_rho_candidate = true;
    out.push_back(v);
  }
  if (out.empty()) {
    error = "pool is empty";
    return false;
  }
  if (!some_rho_candidate) {
    error = "pool needs at least one entry with |value| != 1 to serve as rho";
    return false;
  }
  return true;
}

struct VerifyArgs {
  std::string selector = "all";
  long n_min = 0;
  long n_max = 8;
  long ell_max = 2;
  long m_max = 2;
  int points = 1;
  std::uint64_t seed = 0;
  std::string pool_text;
  int max_resamples = 100;
  std::string format = "json";
  std::string out_path;
  int jobs = 0;
  bool fail_fast = false;
  bool stable_output = false;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.n_min > args.n_max) return usage_error("--n-min exceeds --n-max");

  auto specs = select_identities(args.selector);
  if (specs.empty())
    return usage_error("unknown identity or family: '" + args.selector + "'");

  RunConfig cfg;
  for (const IdentitySpec* spec : specs) cfg.ids.push_back(spec->id);
  cfg.n_min = args.n_min;
  cfg.n_max = args.n_max;
  cfg.ell_max = args.ell_max;
  cfg.m_max = args.m_max;
  cfg.points_per_cell = args.points;
  cfg.sample.seed = args.seed;
  cfg.sample.max_resamples = args.max_resamples;
  cfg.jobs = args.jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : args.jobs;
  if (cfg.jobs < 1) cfg.jobs = 1;
  cfg.fail_fast = args.fail_fast;
  cfg.stable_output = args.stable_output;

  if (!args.pool_text.empty()) {
    std::string error;
    if (!parse_pool(args.pool_text, cfg.sample.pool, error))
      return usage_error("bad --pool: " + error);
  }

  Report report = run_grid(cfg);

  std::string payload;
  if (args.format == "json")
    payload = report_to_json(report);
  else if (args.format == "csv")
    payload = report_to_csv(report);
  else
    payload = report_to_markdown(report);

  if (args.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) return usage_error("cannot open '" + args.out_path + "' for writing");
    out << payload;
  }

  const SummaryCounts& t = report.summary;
  std::ostringstream line;
  line << t.pass << " pass, " << t.fail << " fail, " << t.discrepant << " discrepant, "
       << t.skip_constraint << " constraint skips, " << t.skip_pole << " pole skips";
  if (report.has_failures())
    std::cerr << paint(line.str(), "31") << "\n";
  else
    std::cerr << paint(line.str(), "32") << "\n";

  return report.has_failures() ? 1 : 0;
}

int cmd_list() {
  std::size_t id_w = 0, fam_w = 0, cons_w = 0;
  for (const IdentitySpec& spec : roster()) {
    id_w = std::max(id_w, spec.id.size());
    fam_w = std::max(fam_w, std::string(family_name(spec.family)).size());
    std::size_t c = spec.constraint_text.empty() ? 1 : spec.constraint_text.size();
    cons_w = std::max(cons_w, c);
  }
  for (const IdentitySpec& spec : roster()) {
    std::string cons = spec.constraint_text.empty() ? "-" : spec.constraint_text;
    std::cout << spec.id << std::string(id_w - spec.id.size() + 2, ' ')
              << family_name(spec.family)
              << std::string(fam_w - std::string(family_name(spec.family)).size() + 2, ' ')
              << cons << std::string(cons_w - cons.size() + 2, ' ')
              << spec.citation << "\n";
  }
  return 0;
}

struct PointArgs {
  std::string id;
  std::string rho, alpha, gamma;
  long n = 0;
  long ell = 0;
  long m = 0;
  bool ell_given = false;
  bool m_given = false;
};

int cmd_point(const PointArgs& args) {
  const IdentitySpec* spec = find_identity(args.id);
  if (!spec) return usage_error("unknown identity: '" + args.id + "'");

  ParamPoint p;
  try {
    p.rho = ExactScalar::parse(args.rho);
    p.alpha = ExactScalar::parse(args.alpha);
    p.gamma = ExactScalar::parse(args.gamma);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  p.n = static_cast<int>(args.n);

  // Entries with a pinned or absent shift reject conflicting explicit values
  // instead of silently ignoring them.
  auto resolve = [&](ParamMode mode, long fixed, long given, bool was_given, const char* name,
                     long& slot) -> bool {
    switch (mode) {
      case ParamMode::Free:
        slot = given;
        return true;
      case ParamMode::Fixed:
        if (was_given && given != fixed) {
          usage_error(args.id + " pins " + name + " = " + std::to_string(fixed));
          return false;
        }
        slot = fixed;
        return true;
      case ParamMode::Unused:
        if (was_given && given != 0) {
          usage_error(args.id + " takes no " + name + " shift");
          return false;
        }
        slot = 0;
        return true;
    }
    return false;
  };
  long ell = 0, m = 0;
  if (!resolve(spec->ell_mode, spec->ell_fixed, args.ell, args.ell_given, "ell", ell)) return 2;
  if (!resolve(spec->m_mode, spec->m_fixed, args.m, args.m_given, "m", m)) return 2;
  p.ell = static_cast<int>(ell);
  p.m = static_cast<int>(m);
  if (spec->uses_uv) {
    p.u = spec->sign_u * p.ell;
    p.v = spec->sign_v * p.m;
  }

  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  if (spec->constraints && !spec->constraints(p))
    return usage_error(args.id + " requires " + spec->constraint_text);

  try {
    ExactScalar lhs = eval_lhs(*spec, p);
    ExactScalar closed = eval_rhs_closed(*spec, p);
    std::cout << "lhs         = " << lhs.str() << "\n";
    std::cout << "rhs_closed  = " << closed.str() << "\n";
    bool ok = lhs == closed;
    bool derived_ok = true;
    if (spec->has_derived()) {
      try {
        ExactScalar derived = eval_rhs_derived(*spec, p);
        std::cout << "rhs_derived = " << derived.str() << "\n";
        derived_ok = lhs == derived;
      } catch (const ConstraintError& e) {
        std::cout << "rhs_derived skipped: " << e.what() << "\n";
      }
    }
    if (ok && derived_ok) {
      std::cout << paint("PASS", "32") << ": all routes agree\n";
      return 0;
    }
    if (!ok && derived_ok && spec->has_derived())
      std::cout << paint("DISCREPANT", "33")
                << ": direct sum and derived route agree, closed form differs\n";
    else
      std::cout << paint("FAIL", "31") << ": routes disagree\n";
    return 1;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-way verifier for a family of terminating q-series identities"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "sample grid cells and compare all routes");
  verify->add_option("--identity", vargs.selector, "id, family name, or \"all\"");
  verify->add_option("--n-min", vargs.n_min, "lowest terminating index");
  verify->add_option("--n-max", vargs.n_max, "highest terminating index");
  verify->add_option("--ell-max", vargs.ell_max, "highest first shift");
  verify->add_option("--m-max", vargs.m_max, "highest second shift");
  verify->add_option("--points", vargs.points, "sampled points per cell")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vargs.seed, "sampling seed");
  verify->add_option("--pool", vargs.pool_text, "comma-separated \"p/q\" candidate values");
  verify->add_option("--max-resamples", vargs.max_resamples, "pole rejections allowed per draw")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", vargs.format, "report format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  verify->add_option("--out", vargs.out_path, "write the report to a file instead of stdout");
  verify->add_option("--jobs", vargs.jobs, "worker threads (0 = all cores)");
  verify->add_flag("--fail-fast", vargs.fail_fast, "stop scheduling cells after a failure");
  verify->add_flag("--stable-output", vargs.stable_output, "zero timing fields for byte-stable reports");

  CLI::App* list = app.add_subcommand("list", "print the roster");

  PointArgs pargs;
  CLI::App* point = app.add_subcommand("point", "evaluate one identity at an explicit point");
  point->add_option("--identity", pargs.id, "identity id")->required();
  point->add_option("--rho", pargs.rho, "square root of the base, as \"p/q\"")->required();
  point->add_option("--alpha", pargs.alpha, "square root of the first parameter")->required();
  point->add_option("--gamma", pargs.gamma, "square root of the second parameter")->required();
  point->add_option("--n", pargs.n, "terminating index")->required();
  CLI::Option* ell_opt = point->add_option("--ell", pargs.ell, "first shift");
  CLI::Option* m_opt = point->add_option("--m", pargs.m, "second shift");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  pargs.ell_given = ell_opt->count() > 0;
  pargs.m_given = m_opt->count() > 0;

  try {
    if (verify->parsed()) return cmd_verify(vargs);
    if (list->parsed()) return cmd_list();
    if (point->parsed()) return cmd_point(pargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
