// End-to-end acceptance gate. Each criterion prints exactly one line; the
// process exits nonzero if any of them fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "qv/harness.hpp"
#include "qv/phi.hpp"
#include "qv/report_io.hpp"

using namespace qv;

namespace {

std::string qv_bin() {
  const char* p = std::getenv("QV_BIN");
  return p ? p : "";
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string cmd = qv_bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[1 << 14];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

ParamPoint prepared(const IdentitySpec& spec, const ExactScalar& rho, const ExactScalar& alpha,
                    const ExactScalar& gamma, int n, int ell, int m) {
  if (spec.ell_mode == ParamMode::Fixed) ell = static_cast<int>(spec.ell_fixed);
  if (spec.ell_mode == ParamMode::Unused) ell = 0;
  if (spec.m_mode == ParamMode::Fixed) m = static_cast<int>(spec.m_fixed);
  if (spec.m_mode == ParamMode::Unused) m = 0;
  ParamPoint p;
  p.rho = rho;
  p.alpha = alpha;
  p.gamma = gamma;
  p.n = n;
  p.ell = ell;
  p.m = m;
  if (spec.uses_uv) {
    p.u = spec.sign_u * ell;
    p.v = spec.sign_v * m;
  }
  return p;
}

// -------- criterion 1: the full seeded grid through the real binary --------

bool criterion_full_grid(std::string& detail) {
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 4) jobs = 4;
  std::string flags = "verify --identity all --n-min 0 --n-max 12 --ell-max 3 --m-max 3 "
                      "--points 3 --seed 42 --stable-output --format json --jobs " +
                      std::to_string(jobs);
  auto t0 = std::chrono::steady_clock::now();
  CliResult r = run_cli(flags);
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - t0);

  if (r.exit_code != 0) {
    detail = "exit code " + std::to_string(r.exit_code);
    return false;
  }
  std::string payload = r.out;
  if (!payload.empty() && payload.back() == '\n') payload.pop_back();
  Report report = report_from_json(payload);
  std::ostringstream d;
  d << report.summary.pass << " pass / " << report.summary.skip_constraint
    << " constraint skips / " << report.summary.skip_pole << " pole skips across "
    << report.config.ids.size() << " entries in " << elapsed.count() << "s with " << jobs
    << " workers";
  detail = d.str();
  if (report.summary.fail != 0 || report.summary.discrepant != 0) {
    detail += "; " + std::to_string(report.summary.fail) + " FAIL, " +
              std::to_string(report.summary.discrepant) + " DISCREPANT";
    return false;
  }
  if (report.config.ids.size() != roster().size()) {
    detail += "; selector did not cover the roster";
    return false;
  }
  if (elapsed.count() >= 600) {
    detail += "; over the 10 minute budget";
    return false;
  }
  return true;
}

// -------- criterion 2: both right-hand routes agree with the sum --------

bool criterion_three_way(std::string& detail) {
  RunConfig cfg;
  for (const char* id : {"thm-a", "thm-b", "thm-c", "thm-d", "thm-e", "thm-f", "thm-g",
                         "thm-h", "thm-i", "thm-j", "thm-k", "thm-l", "thm-m", "thm-n",
                         "thm-o", "thm-p", "prop-a", "prop-b", "prop-c"})
    cfg.ids.push_back(id);
  cfg.n_max = 8;
  cfg.ell_max = 3;
  cfg.m_max = 3;
  cfg.points_per_cell = 2;
  cfg.sample.seed = 43;
  cfg.jobs = static_cast<int>(std::thread::hardware_concurrency());
  cfg.stable_output = true;
  Report report = run_grid(cfg);

  if (report.summary.fail != 0 || report.summary.discrepant != 0) {
    detail = std::to_string(report.summary.fail) + " FAIL, " +
             std::to_string(report.summary.discrepant) + " DISCREPANT";
    return false;
  }
  std::map<std::string, long> derived_hits;
  for (const auto& rec : report.records) {
    if (rec.status != Status::Pass) continue;
    if (!rec.rhs_derived.has_value() && !rec.derived_skipped) {
      detail = rec.identity_id + " passed without a derived route";
      return false;
    }
    if (rec.rhs_derived.has_value()) {
      if (!(*rec.rhs_derived == *rec.lhs && *rec.rhs_closed == *rec.lhs)) {
        detail = rec.identity_id + " routes disagree";
        return false;
      }
      ++derived_hits[rec.identity_id];
    }
  }
  for (const std::string& id : cfg.ids) {
    if (derived_hits[id] == 0) {
      detail = id + " never exercised its derived route";
      return false;
    }
  }
  std::ostringstream d;
  d << report.summary.pass << " sampled points, derived = closed = sum on every one";
  detail = d.str();
  return true;
}

// -------- criterion 3: shift reductions land on the classical formulas --------

bool criterion_reductions(std::string& detail) {
  struct Reduction {
    const char* outer;
    const char* inner;
    bool share_m;
  };
  const Reduction table[] = {
      {"prop-a", "andrews-watson", false}, {"thm-a", "prop-a", true},
      {"prop-b", "jain-watson", false},    {"thm-b", "prop-b", true},
      {"thm-c", "prop-c", true},           {"thm-d", "bailey-dixon", false},
      {"thm-g", "another-dixon", false},   {"thm-k", "andrews-whipple", false},
      {"thm-m", "jain-whipple", false},
  };
  const int ns[] = {1, 3, 5, 7, 10};
  long checked = 0;
  for (const auto& r : table) {
    const IdentitySpec* outer = find_identity(r.outer);
    const IdentitySpec* inner = find_identity(r.inner);
    if (!outer || !inner) {
      detail = std::string("missing entry for ") + r.outer + " vs " + r.inner;
      return false;
    }
    for (int i = 0; i < 5; ++i) {
      int n = ns[i];
      int m = r.share_m ? std::min(i, n) : 0;
      SampleConfig sample;
      sample.seed = 1000 + static_cast<std::uint64_t>(i);
      CellSampler sampler(sample, *outer, n, 0, m);
      bool compared = false;
      for (int attempt = 0; attempt < 30 && !compared; ++attempt) {
        int resamples = 0;
        ParamPoint po = sampler.next(resamples);
        ParamPoint pi = prepared(*inner, po.rho, po.alpha, po.gamma, n, 0, m);
        try {
          ExactScalar outer_lhs = eval_lhs(*outer, po);
          ExactScalar inner_lhs = eval_lhs(*inner, pi);
          ExactScalar outer_rhs = eval_rhs_closed(*outer, po);
          ExactScalar inner_rhs = eval_rhs_closed(*inner, pi);
          if (!(outer_lhs == inner_lhs && outer_rhs == inner_rhs)) {
            std::ostringstream d;
            d << r.outer << " != " << r.inner << " at n=" << n << " m=" << m;
            detail = d.str();
            return false;
          }
          compared = true;
          ++checked;
        } catch (const PoleError&) {
          // pole of the unshifted side only; try the next candidate
        }
      }
      if (!compared) {
        detail = std::string("no comparable point for ") + r.outer + " vs " + r.inner;
        return false;
      }
    }
  }
  detail = "9 reductions x 5 shared points, all equal (" + std::to_string(checked) +
           " comparisons)";
  return true;
}

// -------- criterion 4: parity of the unshifted Watson-type sums --------

bool criterion_parity(std::string& detail) {
  for (const char* id : {"andrews-watson", "thm-a"}) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) {
      detail = std::string("missing ") + id;
      return false;
    }
    for (int n = 0; n <= 11; ++n) {
      SampleConfig sample;
      sample.seed = 4242;
      CellSampler sampler(sample, *spec, n, 0, 0);
      for (int k = 0; k < 2; ++k) {
        int resamples = 0;
        ParamPoint p = sampler.next(resamples);
        p.ell = 0;
        p.m = 0;
        ExactScalar lhs = eval_lhs(*spec, p);
        ExactScalar rhs = eval_rhs_closed(*spec, p);
        if (!(lhs == rhs)) {
          detail = std::string(id) + " sides differ at n=" + std::to_string(n);
          return false;
        }
        if (n % 2 == 1 && !lhs.is_zero()) {
          detail = std::string(id) + " does not vanish at odd n=" + std::to_string(n);
          return false;
        }
        if (n % 2 == 0 && lhs.is_zero()) {
          detail = std::string(id) + " vanished at even n=" + std::to_string(n);
          return false;
        }
        if (spec->has_derived()) {
          try {
            if (!(eval_rhs_derived(*spec, p) == lhs)) {
              detail = std::string(id) + " derived route differs at n=" + std::to_string(n);
              return false;
            }
          } catch (const ConstraintError&) {
          }
        }
      }
    }
  }
  detail = "odd n <= 11 all zero, even n all common nonzero, both entries";
  return true;
}

// -------- criterion 5: every worked example matches its parent --------

bool criterion_examples(std::string& detail) {
  long entries = 0, comparisons = 0;
  for (const auto& spec : roster()) {
    if (spec.family != Family::Example) continue;
    ++entries;
    std::string parent_id = spec.id.substr(0, spec.id.find("-ex-"));
    const IdentitySpec* parent = find_identity(parent_id);
    if (!parent) {
      detail = spec.id + " has no parent " + parent_id;
      return false;
    }
    int ell = static_cast<int>(spec.ell_fixed);
    int m = static_cast<int>(spec.m_fixed);
    for (int n = 0; n <= 12; ++n) {
      ParamPoint probe = prepared(spec, ExactScalar(1, 2), ExactScalar(3), ExactScalar(5),
                                  n, ell, m);
      if (spec.constraints && !spec.constraints(probe)) continue;
      SampleConfig sample;
      sample.seed = 5150;
      CellSampler sampler(sample, spec, n, ell, m);
      bool compared = false;
      for (int attempt = 0; attempt < 30 && !compared; ++attempt) {
        int resamples = 0;
        ParamPoint pe = sampler.next(resamples);
        ParamPoint pp = prepared(*parent, pe.rho, pe.alpha, pe.gamma, n, ell, m);
        try {
          if (!(eval_lhs(spec, pe) == eval_lhs(*parent, pp))) {
            detail = spec.id + " differs from " + parent_id + " at n=" + std::to_string(n);
            return false;
          }
          compared = true;
          ++comparisons;
        } catch (const PoleError&) {
        }
      }
      if (!compared) {
        detail = "no comparable point for " + spec.id + " at n=" + std::to_string(n);
        return false;
      }
    }
  }
  std::ostringstream d;
  d << entries << " example entries, " << comparisons << " parent comparisons, all equal";
  detail = d.str();
  return true;
}

// -------- criterion 6: reports are byte-stable --------

bool criterion_determinism(std::string& detail) {
  const std::string flags =
      "verify --identity all --n-max 2 --points 2 --seed 11 --stable-output --format json";
  CliResult a = run_cli(flags + " --jobs 3");
  CliResult b = run_cli(flags + " --jobs 3");
  if (a.exit_code != 0 || b.exit_code != 0) {
    detail = "baseline runs exited " + std::to_string(a.exit_code) + "/" +
             std::to_string(b.exit_code);
    return false;
  }
  if (a.out != b.out) {
    detail = "identical flags produced different bytes";
    return false;
  }
  CliResult serial = run_cli(flags + " --jobs 1");
  CliResult wide = run_cli(flags + " --jobs 8");
  if (serial.out != wide.out) {
    detail = "--jobs 1 and --jobs 8 bytes differ";
    return false;
  }
  if (serial.out != a.out) {
    detail = "worker count leaked into the report";
    return false;
  }
  detail = "repeat runs and --jobs 1 vs 8 byte-identical (" +
           std::to_string(a.out.size()) + " bytes)";
  return true;
}

// -------- criterion 7: the corrupted fixture is caught --------

bool criterion_negative_path(std::string& detail) {
  CliResult r = run_cli(
      "verify --identity x-corrupt-jain-watson --n-max 3 --seed 3 --stable-output "
      "--format json");
  if (r.exit_code != 1) {
    detail = "expected exit 1, got " + std::to_string(r.exit_code);
    return false;
  }
  std::string payload = r.out;
  if (!payload.empty() && payload.back() == '\n') payload.pop_back();
  Report report = report_from_json(payload);
  long fails = 0;
  for (const auto& rec : report.records) {
    if (rec.status != Status::Fail) continue;
    if (!rec.lhs.has_value() || !rec.rhs_closed.has_value()) {
      detail = "FAIL record without both values";
      return false;
    }
    if (*rec.lhs == *rec.rhs_closed) {
      detail = "FAIL record with equal values";
      return false;
    }
    ++fails;
  }
  if (fails == 0) {
    detail = "no FAIL records for the fixture";
    return false;
  }
  detail = std::to_string(fails) + " FAIL records with both values, exit code 1";
  return true;
}

// -------- criterion 8: core algebra property suite --------

std::mt19937_64 prng(0xacce97ed);

ExactScalar random_scalar(bool nonzero = false) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (;;) {
    ExactScalar v(num(prng), den(prng));
    if (!nonzero || !v.is_zero()) return v;
  }
}

ExactScalar random_base() {
  for (;;) {
    ExactScalar q = random_scalar(true);
    if (!(q == ExactScalar(1)) && !(q == ExactScalar(-1))) return q;
  }
}

bool criterion_properties(std::string& detail) {
  const int cases = 1000;
  std::uniform_int_distribution<int> small(0, 12);

  for (int i = 0; i < cases; ++i) {
    ExactScalar x = random_scalar();
    ExactScalar q = random_scalar();
    int mm = small(prng), nn = small(prng);
    ExactScalar whole = qpoch(x, q, mm + nn);
    ExactScalar split = qpoch(x, q, mm) * qpoch(x * ipow(q, mm), q, nn);
    if (!(whole == split)) {
      detail = "Pochhammer splitting failed at case " + std::to_string(i);
      return false;
    }
  }

  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> order(0, 7);
  std::uniform_int_distribution<int> extra(1, 6);
  int done = 0;
  while (done < cases) {
    PhiSeries s;
    ExactScalar q = random_base();
    int t = order(prng);
    s.numerator_params.push_back(ipow(q, -t));
    int nn = count(prng), nd = count(prng);
    for (int i = 0; i < nn; ++i) s.numerator_params.push_back(random_scalar());
    for (int i = 0; i < nd; ++i) s.denominator_params.push_back(random_scalar());
    s.argument = random_scalar();
    s.term_count = t + 1;
    try {
      ExactScalar terminated = phi_sum(s, q);
      PhiSeries longer = s;
      longer.term_count = t + 1 + extra(prng);
      if (!(phi_sum(longer, q) == terminated) ||
          !(phi_sum_naive(longer, q) == terminated)) {
        detail = "termination stability failed at case " + std::to_string(done);
        return false;
      }
    } catch (const PoleError&) {
      continue;  // a denominator parameter landed on a pole; redraw
    }
    ++done;
  }

  std::uniform_int_distribution<int> expo(-6, 6);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < cases; ++i) {
    HalfMonomial h1{sign(prng) ? 1 : -1, expo(prng), expo(prng), expo(prng)};
    HalfMonomial h2{sign(prng) ? 1 : -1, expo(prng), expo(prng), expo(prng)};
    ParamPoint p;
    p.rho = random_scalar(true);
    p.alpha = random_scalar(true);
    p.gamma = random_scalar(true);
    ExactScalar together = eval_half_monomial(h1 * h2, p);
    ExactScalar apart = eval_half_monomial(h1, p) * eval_half_monomial(h2, p);
    if (!(together == apart)) {
      detail = "monomial multiplicativity failed at case " + std::to_string(i);
      return false;
    }
    int e = expo(prng);
    if (!(eval_half_monomial(hm_pow(h1, e), p) == ipow(eval_half_monomial(h1, p), e))) {
      detail = "monomial power law failed at case " + std::to_string(i);
      return false;
    }
  }

  detail = "splitting, termination, multiplicativity: 1000 cases each";
  return true;
}

}  // namespace

int main() {
  if (qv_bin().empty()) {
    std::cerr << "QV_BIN is not set\n";
    return 2;
  }

  struct Criterion {
    const char* label;
    bool (*fn)(std::string&);
  };
  const Criterion all[] = {
      {"criterion 1 (full seeded grid)", criterion_full_grid},
      {"criterion 2 (three-way oracle agreement)", criterion_three_way},
      {"criterion 3 (reduction lattice)", criterion_reductions},
      {"criterion 4 (parity behavior)", criterion_parity},
      {"criterion 5 (example consistency)", criterion_examples},
      {"criterion 6 (determinism)", criterion_determinism},
      {"criterion 7 (negative path)", criterion_negative_path},
      {"criterion 8 (algebra properties)", criterion_properties},
  };

  int failures = 0;
  for (const auto& c : all) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    std::cout << c.label << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
