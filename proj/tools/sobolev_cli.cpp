// sobolev: solve, certify and enclose embedding constants on rectangles.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sobolev/certifier.hpp"
#include "sobolev/decimal.hpp"
#include "sobolev/galerkin.hpp"
#include "sobolev/parallel.hpp"
#include "sobolev/pipeline.hpp"
#include "sobolev/series_io.hpp"

using namespace sobolev;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHard = 1;
constexpr int kExitPartial = 2;

DomainRect parse_domain(const std::string& s) {
  const auto x = s.find_first_of("xX");
  if (x == std::string::npos) throw DomainError("domain must look like LxW, e.g. 1x1");
  try {
    std::size_t used = 0;
    const double l1 = std::stod(s.substr(0, x), &used);
    if (used != x) throw DomainError("bad domain length");
    const std::string rest = s.substr(x + 1);
    const double l2 = std::stod(rest, &used);
    if (used != rest.size()) throw DomainError("bad domain width");
    return DomainRect(l1, l2);
  } catch (const std::logic_error&) {
    throw DomainError("domain must look like LxW, e.g. 1x1");
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text(path, text);
  }
}

std::string plot_path(const std::string& out) {
  if (out.empty() || out == "-") return "sobolev_plot.csv";
  return std::filesystem::path(out).replace_extension(".plot.csv").string();
}

struct Common {
  int p = 3;
  std::string domain = "1x1";
  std::string out;
  std::string format = "json";
  int plot_grid = 0;
  int threads = 1;
  bool deterministic = false;
};

void add_common(CLI::App* app, Common& c, bool with_p = true) {
  if (with_p) app->add_option("--p", c.p, "exponent of -Lap u = u^p (2..5)")->check(CLI::Range(2, 5));
  app->add_option("--domain", c.domain, "rectangle LxW");
  app->add_option("--out", c.out, "output file (stdout if omitted)");
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--deterministic", c.deterministic, "omit timing data so reports are byte-identical");
}

void print_summary(const RunReport& rep) {
  std::fprintf(stderr, "p=%d  domain %gx%g\n", rep.config.p, rep.config.domain.L1(), rep.config.domain.L2());
  for (const auto& r : rep.rows) {
    if (r.status == "certified") {
      std::fprintf(stderr, "  N=%-3d defect %.3e  K %.4g  r %.3e  r_inf %.3e  sup u_-^%d %.3e  C in %s\n", r.N,
                   r.ball->defect.hminus1.hi(), r.ball->kd.K.hi(), r.ball->r_h1.hi(), r.ball->r_inf.hi(),
                   rep.config.p - 1, r.ball->audit.sup_negative_pow,
                   format_enclosure(r.enclosure->lower, r.enclosure->upper).c_str());
    } else {
      std::fprintf(stderr, "  N=%-3d %s: %s\n", r.N, r.status.c_str(), r.message.c_str());
    }
  }
  if (rep.final)
    std::fprintf(stderr, "C_%d in %s  (lower: %s, upper: %s)\n", rep.final->p,
                 format_enclosure(rep.final->lower, rep.final->upper).c_str(), to_string(rep.final->lower_source),
                 to_string(rep.final->upper_source));
}

int write_report(const RunReport& rep, const RunConfig& cfg) {
  if (cfg.format == "csv") emit(cfg.out, report_to_csv(rep));
  else emit(cfg.out, report_to_json(rep).dump(2) + "\n");
  if (cfg.plot_grid > 0) {
    const RunRow* last = nullptr;
    for (const auto& r : rep.rows)
      if (r.ball) last = &r;
    if (last) emit_plot_data(last->ball->center, cfg.plot_grid, plot_path(cfg.out));
  }
  print_summary(rep);
  return rep.exit_code();
}

RunReport run_canned(int p, std::vector<int> ns, const Common& c, const std::string& path) {
  RunConfig cfg;
  cfg.p = p;
  cfg.domain = parse_domain(c.domain);
  cfg.Ns = std::move(ns);
  cfg.threads = c.threads;
  cfg.deterministic = c.deterministic;
  cfg.out = path;
  const RunReport rep = run_pipeline(cfg);
  write_text(path, report_to_json(rep).dump(2) + "\n");
  print_summary(rep);
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous enclosures of Sobolev embedding constants on rectangles"};
  app.require_subcommand(1);

  // solve
  Common solve_c;
  int solve_n = 20;
  double solve_tol = 1e-13;
  auto* solve = app.add_subcommand("solve", "Galerkin-Newton approximation (series JSON or grid CSV)");
  add_common(solve, solve_c);
  solve->add_option("--N", solve_n, "truncation order")->check(CLI::Range(1, 256));
  solve->add_option("--newton-tol", solve_tol, "relative residual tolerance");
  solve->add_option("--plot-grid", solve_c.plot_grid, "grid size for csv output")->check(CLI::Range(2, 4096));

  // certify
  Common cert_c;
  int cert_n = 20;
  std::string cert_series;
  auto* cert = app.add_subcommand("certify", "certificate for a stored or freshly solved approximation");
  add_common(cert, cert_c);
  cert->add_option("--N", cert_n, "truncation order when solving")->check(CLI::Range(1, 256));
  cert->add_option("--series", cert_series, "series JSON written by solve");

  // enclose
  Common enc_c;
  std::vector<int> enc_ns;
  std::string enc_config;
  auto* enc = app.add_subcommand("enclose", "full pipeline over an N sweep");
  add_common(enc, enc_c);
  enc->add_option("--N", enc_ns, "truncation orders, comma separated")->delimiter(',');
  enc->add_option("--config", enc_config, "run-config JSON (flags override it)");
  enc->add_option("--plot-grid", enc_c.plot_grid, "also write grid samples of the last certified solution")
      ->check(CLI::Range(2, 4096));

  // classical
  Common cls_c;
  int cls_n = 2;
  std::vector<double> cls_p{3, 4, 5};
  double cls_rho = 0.0, cls_measure = 0.0;
  bool cls_unchecked = false;
  auto* cls = app.add_subcommand("classical", "Talenti-based and spectral upper bounds");
  add_common(cls, cls_c, false);
  cls->add_option("--n", cls_n, "dimension")->check(CLI::Range(2, 64));
  cls->add_option("--p-list", cls_p, "Lebesgue exponents, comma separated")->delimiter(',');
  auto* rho_opt = cls->add_option("--rho", cls_rho, "lower spectral bound (needs --unchecked)");
  auto* meas_opt = cls->add_option("--measure", cls_measure, "domain measure for n >= 3");
  cls->add_flag("--unchecked", cls_unchecked, "accept a user-supplied rho without verification");

  // reproduce
  Common rep_c;
  std::string rep_which = "all";
  std::string rep_dir = ".";
  auto* rep = app.add_subcommand("reproduce", "canned runs: classical table, C4 sweep, C3 and C5");
  add_common(rep, rep_c, false);
  rep->add_option("--which", rep_which, "table2, table1, prop or all")
      ->check(CLI::IsMember({"table2", "table1", "prop", "all"}));
  rep->add_option("--out-dir", rep_dir, "directory for the report files");

  // validate
  std::string val_file;
  auto* val = app.add_subcommand("validate", "re-check the invariants of a stored run report");
  val->add_option("report", val_file, "report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitHard;
  }

  try {
    if (*solve) {
      set_worker_threads(solve_c.threads);
      const DomainRect d = parse_domain(solve_c.domain);
      SolverConfig sc;
      sc.p = solve_c.p;
      sc.N = solve_n;
      sc.newton_tol = solve_tol;
      NewtonRecord last;
      const SineSeries2D u = newton_solve(sc, initial_guess(sc.p, d), [&last](const NewtonRecord& r) { last = r; });
      if (solve_c.format == "csv") emit(solve_c.out, plot_csv(u, solve_c.plot_grid > 0 ? solve_c.plot_grid : 64));
      else emit(solve_c.out, series_to_json(u).dump(1) + "\n");
      std::fprintf(stderr, "N=%d iterations=%d residual=%.3e relative=%.3e\n", solve_n, last.iteration, last.residual,
                   last.relative);
      return kExitOk;
    }

    if (*cert) {
      set_worker_threads(cert_c.threads);
      SineSeries2D u;
      if (!cert_series.empty()) {
        u = load_series(cert_series);
      } else {
        SolverConfig sc;
        sc.p = cert_c.p;
        sc.N = cert_n;
        u = newton_solve(sc, initial_guess(sc.p, parse_domain(cert_c.domain)));
      }
      try {
        const CertifiedBall ball = certify(u, cert_c.p);
        emit(cert_c.out, certificate_to_json(ball, !cert_c.deterministic).dump(2) + "\n");
        std::fprintf(stderr, "r_h1 %.3e  r_inf %.3e  positive: %s (%s)\n", ball.r_h1.hi(), ball.r_inf.hi(),
                     ball.positive ? "yes" : "no", ball.audit.reason.c_str());
        return ball.positive ? kExitOk : kExitPartial;
      } catch (const SoundnessViolation&) {
        throw;
      } catch (const Error& e) {
        std::fprintf(stderr, "certification failed: %s: %s\n", e.kind().c_str(), e.what());
        return kExitPartial;
      }
    }

    if (*enc) {
      RunConfig cfg;
      if (!enc_config.empty()) cfg = config_from_json(read_json(enc_config));
      if (enc->count("--p")) cfg.p = enc_c.p;
      if (enc->count("--domain")) cfg.domain = parse_domain(enc_c.domain);
      if (!enc_ns.empty()) cfg.Ns = enc_ns;
      if (enc->count("--out")) cfg.out = enc_c.out;
      if (enc->count("--format")) cfg.format = enc_c.format;
      if (enc->count("--plot-grid")) cfg.plot_grid = enc_c.plot_grid;
      if (enc->count("--threads")) cfg.threads = enc_c.threads;
      if (enc_c.deterministic) cfg.deterministic = true;
      return write_report(run_pipeline(cfg), cfg);
    }

    if (*cls) {
      ClassicalOptions opt;
      if (rho_opt->count()) opt.rho = Interval(cls_rho);
      if (meas_opt->count()) opt.measure = cls_measure;
      opt.unchecked = cls_unchecked;
      const DomainRect d = parse_domain(cls_c.domain);
      const auto rows = classical_table(cls_n, cls_p, d, opt);
      if (cls_c.format == "csv") emit(cls_c.out, classical_to_csv(rows));
      else emit(cls_c.out, classical_to_json(cls_n, d, rows).dump(2) + "\n");
      return kExitOk;
    }

    if (*rep) {
      std::filesystem::create_directories(rep_dir);
      const std::filesystem::path dir(rep_dir);
      int code = kExitOk;
      auto merge = [&code](int c) { code = std::max(code, c); };
      if (rep_which == "table2" || rep_which == "all") {
        const auto rows = classical_table(2, {3, 4, 5}, parse_domain(rep_c.domain));
        write_text((dir / "table2_classical.json").string(),
                   classical_to_json(2, parse_domain(rep_c.domain), rows).dump(2) + "\n");
        for (const auto& r : rows)
          std::fprintf(stderr, "p=%g  corollary %s  plum %s\n", r.p,
                       format_enclosure(r.corollary->lo(), r.corollary->hi()).c_str(),
                       format_enclosure(r.plum->lo(), r.plum->hi()).c_str());
      }
      if (rep_which == "table1" || rep_which == "prop" || rep_which == "all")
        merge(run_canned(3, {10, 20, 30, 34}, rep_c, (dir / "table1_p3.json").string()).exit_code());
      if (rep_which == "prop" || rep_which == "all") {
        merge(run_canned(2, {20, 34, 48}, rep_c, (dir / "prop_p2.json").string()).exit_code());
        merge(run_canned(4, {20, 24}, rep_c, (dir / "prop_p4.json").string()).exit_code());
      }
      return code;
    }

    if (*val) {
      const auto problems = validate_report(read_json(val_file));
      for (const auto& s : problems) std::fprintf(stderr, "invalid: %s\n", s.c_str());
      if (problems.empty()) std::fprintf(stderr, "%s: ok\n", val_file.c_str());
      return problems.empty() ? kExitOk : kExitHard;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", e.kind().c_str(), e.what());
    return kExitHard;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitHard;
  }
  return kExitOk;
}
