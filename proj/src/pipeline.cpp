#include "sobolev/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "sobolev/decimal.hpp"
#include "sobolev/galerkin.hpp"
#include "sobolev/parallel.hpp"
#include "sobolev/series_io.hpp"
#include "sobolev/simd/dot.hpp"

namespace sobolev {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

json bound(double v, const char* rounding) { return json{{"value", v}, {"rounding", rounding}}; }
json upper_bound(double v) { return bound(v, "up"); }
json lower_bound(double v) { return bound(v, "down"); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json runtime_info() {
  return json{{"simd", simd::isa_name(simd::active_isa())},
              {"hardware_concurrency", std::thread::hardware_concurrency()},
              {"compiler", __VERSION__}};
}

}  // namespace

// ---------------------------------------------------------------------------
// configuration

json config_to_json(const RunConfig& c) {
  json sym = c.symmetry ? json(*c.symmetry) : json(nullptr);
  return json{{"format", kConfigFormat},
              {"version", kSchemaVersion},
              {"p", c.p},
              {"domain", json::array({c.domain.L1(), c.domain.L2()})},
              {"N", c.Ns},
              {"solver", {{"newton_tol", c.newton_tol}, {"max_iter", c.max_iter}, {"symmetry", sym}}},
              {"certifier",
               {{"split_order", c.split_order},
                {"max_split", c.max_split},
                {"defect_box", c.defect_box},
                {"scan_grid", c.scan_grid}}},
              {"output", {{"path", c.out}, {"format", c.format}, {"plot_grid", c.plot_grid}}},
              {"threads", c.threads},
              {"deterministic", c.deterministic}};
}

RunConfig config_from_json(const json& j, const RunConfig& base) {
  if (!j.is_object()) throw FormatError("configuration must be a JSON object");
  if (j.contains("format") && j["format"] != kConfigFormat) throw FormatError("not a run-config document");
  if (j.contains("version") && j["version"] != kSchemaVersion) throw FormatError("unsupported run-config version");
  RunConfig c = base;
  try {
    if (j.contains("p")) c.p = j["p"].get<int>();
    if (j.contains("domain")) {
      const auto& d = j["domain"];
      if (!d.is_array() || d.size() != 2) throw FormatError("domain must be [L1, L2]");
      c.domain = DomainRect(d[0].get<double>(), d[1].get<double>());
    }
    if (j.contains("N")) {
      c.Ns.clear();
      if (j["N"].is_array()) {
        for (const auto& v : j["N"]) c.Ns.push_back(v.get<int>());
      } else {
        c.Ns.push_back(j["N"].get<int>());
      }
    }
    if (j.contains("solver")) {
      const auto& s = j["solver"];
      c.newton_tol = s.value("newton_tol", c.newton_tol);
      c.max_iter = s.value("max_iter", c.max_iter);
      if (s.contains("symmetry")) {
        if (s["symmetry"].is_null()) c.symmetry.reset();
        else c.symmetry = s["symmetry"].get<bool>();
      }
    }
    if (j.contains("certifier")) {
      const auto& s = j["certifier"];
      c.split_order = s.value("split_order", c.split_order);
      c.max_split = s.value("max_split", c.max_split);
      c.defect_box = s.value("defect_box", c.defect_box);
      c.scan_grid = s.value("scan_grid", c.scan_grid);
    }
    if (j.contains("output")) {
      const auto& s = j["output"];
      c.out = s.value("path", c.out);
      c.format = s.value("format", c.format);
      c.plot_grid = s.value("plot_grid", c.plot_grid);
    }
    c.threads = j.value("threads", c.threads);
    c.deterministic = j.value("deterministic", c.deterministic);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad configuration field: ") + e.what());
  }
  return c;
}

void validate_config(const RunConfig& c) {
  if (c.p < 2 || c.p > 5) throw DomainError("p must be in 2..5");
  if (c.Ns.empty()) throw DomainError("at least one truncation order N is required");
  for (int n : c.Ns)
    if (n < 1 || n > 256) throw DomainError("N must be in 1..256");
  if (!(c.newton_tol > 0.0)) throw DomainError("newton_tol must be positive");
  if (c.max_iter < 1) throw DomainError("max_iter must be positive");
  if (c.split_order < 0 || c.max_split < 1 || c.defect_box < 0) throw DomainError("bad certifier settings");
  if (c.scan_grid < 8) throw DomainError("scan_grid must be at least 8");
  if (c.format != "json" && c.format != "csv") throw DomainError("format must be json or csv");
  if (c.plot_grid != 0 && c.plot_grid < 2) throw DomainError("plot grid must be at least 2");
  if (c.threads < 1) throw DomainError("threads must be positive");
}

// ---------------------------------------------------------------------------
// pipeline

bool RunReport::all_certified() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const RunRow& r) { return r.status == "certified"; });
}

int RunReport::exit_code() const { return all_certified() && final && final->lower_source != BoundSource::none ? 0 : 2; }

namespace {

RunRow run_row(const RunConfig& cfg, int n) {
  RunRow row;
  row.N = n;
  const auto t0 = Clock::now();
  try {
    SolverConfig sc;
    sc.p = cfg.p;
    sc.N = n;
    sc.newton_tol = cfg.newton_tol;
    sc.max_iter = cfg.max_iter;
    sc.symmetry = cfg.symmetry;
    const SineSeries2D u = newton_solve(sc, initial_guess(cfg.p, cfg.domain), [&row](const NewtonRecord& r) {
      row.newton_iterations = r.iteration;
      row.newton_residual = r.residual;
    });
    row.digest = hex64(coefficient_digest(u));

    CertifyOptions co;
    co.inverse.split_order = cfg.split_order;
    co.inverse.max_split = cfg.max_split;
    co.defect_box = cfg.defect_box;
    co.scan_grid = cfg.scan_grid;
    row.ball = certify(u, cfg.p, co);

    PositivityHint hint;
    hint.valid = true;
    hint.neg_sup = std::max(0.0, -row.ball->inf_center.lo());
    hint.neg_measure = row.ball->neg_measure;
    row.enclosure = enclosure_from_ball(u, row.ball->r_h1, cfg.p, row.ball->positive, hint);
    row.status = "certified";
  } catch (const SoundnessViolation&) {
    throw;
  } catch (const Error& e) {
    row.status = e.kind();
    row.message = e.what();
  }
  row.seconds = seconds_since(t0);
  return row;
}

}  // namespace

RunReport run_pipeline(const RunConfig& cfg_in) {
  validate_config(cfg_in);
  RunConfig cfg = cfg_in;
  std::sort(cfg.Ns.begin(), cfg.Ns.end());
  cfg.Ns.erase(std::unique(cfg.Ns.begin(), cfg.Ns.end()), cfg.Ns.end());

  RunReport rep;
  rep.config = cfg;
  json digest_src = config_to_json(cfg);
  digest_src.erase("output");
  rep.config_digest = hex64(fnv1a(digest_src.dump()));
  const auto t0 = Clock::now();

  // sweep entries on a small pool; each entry runs single-threaded inside
  const std::size_t count = cfg.Ns.size();
  const int pool = std::min<int>(cfg.threads, static_cast<int>(count));
  const int saved = worker_threads();
  set_worker_threads(pool > 1 ? 1 : cfg.threads);
  rep.rows.resize(count);
  if (pool <= 1) {
    for (std::size_t i = 0; i < count; ++i) rep.rows[i] = run_row(cfg, cfg.Ns[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> workers;
    for (int t = 0; t < pool; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            rep.rows[i] = run_row(cfg, cfg.Ns[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err) err = std::current_exception();
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    if (err) {
      set_worker_threads(saved);
      std::rethrow_exception(err);
    }
  }
  set_worker_threads(saved);

  const int q = cfg.p + 1;
  rep.classical.push_back({BoundSource::corollary, corollary_bound(2, q, cfg.domain.measure())});
  rep.classical.push_back({BoundSource::plum, plum_bound(2, q, first_eigenvalue_lower(cfg.domain))});

  // every certified row encloses the same constant, so their intersection does too
  std::optional<ExtremalBounds> best;
  for (const auto& r : rep.rows) {
    if (!r.enclosure) continue;
    if (!best) {
      best = r.enclosure;
    } else {
      best->lower = std::max(best->lower, r.enclosure->lower);
      best->upper = std::min(best->upper, r.enclosure->upper);
    }
  }
  rep.final = best_enclosure(q, cfg.domain, best, rep.classical);
  rep.seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

json certificate_to_json(const CertifiedBall& b, bool include_runtime) {
  const auto& a = b.audit;
  json j{{"format", kCertificateFormat},
         {"version", kSchemaVersion},
         {"p", b.p},
         {"domain", json::array({b.center.domain().L1(), b.center.domain().L2()})},
         {"N", b.center.N()},
         {"coefficient_digest", hex64(coefficient_digest(b.center))},
         {"delta", interval_to_json(b.defect.hminus1)},
         {"delta_l2", interval_to_json(b.defect.l2)},
         {"K", interval_to_json(b.kd.K)},
         {"split_order", b.inverse.split_order},
         {"inverse",
          {{"block_gap", lower_bound(b.inverse.block_gap)},
           {"tail_gap", lower_bound(b.inverse.tail_gap)},
           {"coupling", upper_bound(b.inverse.coupling)},
           {"potential_sup", upper_bound(b.inverse.w_sup)},
           {"classes", b.inverse.classes}}},
         {"g", interval_to_json(b.kd.g)},
         {"r_h1", interval_to_json(b.r_h1)},
         {"unique_radius", lower_bound(b.unique_radius.lo())},
         {"r_inf", interval_to_json(b.r_inf)},
         {"inf_center", interval_to_json(b.inf_center)},
         {"positive", b.positive},
         {"margins",
          {{"x0", a.x0},
           {"y0", a.y0},
           {"point", lower_bound(a.point_margin)},
           {"sup_negative", upper_bound(a.sup_negative)},
           {"sup_negative_pow", upper_bound(a.sup_negative_pow)},
           {"lambda1", interval_to_json(a.lambda1)},
           {"spectral", lower_bound(a.spectral_margin)},
           {"reason", a.reason}}}};
  if (include_runtime) {
    const auto now = std::chrono::system_clock::now();
    j["timestamps"] = {{"issued_unix", std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()}};
  }
  return j;
}

namespace {

json row_to_json(const RunRow& r) {
  json j{{"N", r.N}, {"status", r.status}};
  if (!r.message.empty()) j["message"] = r.message;
  j["newton"] = {{"iterations", r.newton_iterations}, {"residual", r.newton_residual}};
  if (!r.digest.empty()) j["coefficient_digest"] = r.digest;
  if (r.ball) {
    const auto& b = *r.ball;
    j["defect"] = {{"hminus1", interval_to_json(b.defect.hminus1)}, {"l2", interval_to_json(b.defect.l2)}};
    j["K"] = interval_to_json(b.kd.K);
    j["split_order"] = b.inverse.split_order;
    j["g"] = interval_to_json(b.kd.g);
    j["r_h1"] = interval_to_json(b.r_h1);
    j["unique_radius"] = lower_bound(b.unique_radius.lo());
    j["r_inf"] = interval_to_json(b.r_inf);
    j["inf_center"] = interval_to_json(b.inf_center);
    j["sup_negative"] = upper_bound(b.audit.sup_negative);
    j["sup_negative_pow"] = upper_bound(b.audit.sup_negative_pow);
    j["lambda1"] = interval_to_json(b.audit.lambda1);
    j["positive"] = b.positive;
    j["positivity"] = b.audit.reason;
  }
  if (r.enclosure) {
    const auto& e = *r.enclosure;
    j["h01"] = interval_to_json(e.h01);
    j["lp"] = interval_to_json(e.lp);
    j["enclosure"] = {{"lower", lower_bound(e.lower)},
                      {"upper", upper_bound(e.upper)},
                      {"decimal", format_enclosure(e.lower, e.upper)}};
  }
  return j;
}

}  // namespace

json report_to_json(const RunReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back(row_to_json(r));
  json classical = json::array();
  for (const auto& c : rep.classical) classical.push_back({{"source", to_string(c.source)}, {"value", interval_to_json(c.value)}});
  json fin = nullptr;
  if (rep.final) {
    const auto& f = *rep.final;
    fin = {{"p", f.p},
           {"lower", lower_bound(f.lower)},
           {"upper", upper_bound(f.upper)},
           {"lower_source", to_string(f.lower_source)},
           {"upper_source", to_string(f.upper_source)},
           {"decimal", format_enclosure(f.lower, f.upper)}};
  }
  json j{{"format", kReportFormat},
         {"version", kSchemaVersion},
         {"config", config_to_json(rep.config)},
         {"config_digest", rep.config_digest},
         {"rows", rows},
         {"classical", classical},
         {"final", fin},
         {"status", rep.all_certified() ? "complete" : "partial"}};
  if (!rep.config.deterministic) {
    json secs = json::array();
    for (const auto& r : rep.rows) secs.push_back(r.seconds);
    json rt = runtime_info();
    rt["threads"] = rep.config.threads;
    rt["row_seconds"] = secs;
    rt["total_seconds"] = rep.seconds;
    j["runtime"] = rt;
  }
  return j;
}

std::string report_to_csv(const RunReport& rep) {
  std::ostringstream os;
  os << "N,status,defect,K,r_h1,r_inf,sup_negative_pow,lower,upper\n";
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : rep.rows) {
    os << r.N << ',' << r.status;
    if (r.ball) {
      os << ',' << num(r.ball->defect.hminus1.hi()) << ',' << num(r.ball->kd.K.hi()) << ',' << num(r.ball->r_h1.hi())
         << ',' << num(r.ball->r_inf.hi()) << ',' << num(r.ball->audit.sup_negative_pow);
    } else {
      os << ",,,,,";
    }
    if (r.enclosure) os << ',' << num(r.enclosure->lower) << ',' << num(r.enclosure->upper);
    else os << ",,";
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// classical table

std::vector<ClassicalRow> classical_table(int n, const std::vector<double>& p_list, const DomainRect& domain,
                                          const ClassicalOptions& opt) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (opt.rho && !opt.unchecked) throw DomainError("a user-supplied rho needs the unchecked flag");
  std::optional<Interval> measure, rho;
  if (n == 2) {
    measure = domain.measure();
    rho = first_eigenvalue_lower(domain);
  }
  if (opt.measure) measure = Interval(*opt.measure);
  if (opt.rho) rho = *opt.rho;

  std::vector<ClassicalRow> rows;
  for (double p : p_list) {
    ClassicalRow r;
    r.p = p;
    std::vector<std::string> notes;
    if (measure) {
      try {
        r.corollary = corollary_bound(n, p, *measure);
      } catch (const DomainError& e) {
        notes.push_back(std::string("corollary: ") + e.what());
      }
    } else {
      notes.push_back("corollary: domain measure required");
    }
    if (rho) {
      try {
        r.plum = plum_bound(n, p, *rho);
      } catch (const DomainError& e) {
        notes.push_back(std::string("plum: ") + e.what());
      }
    } else {
      notes.push_back("plum: rho required");
    }
    for (std::size_t k = 0; k < notes.size(); ++k) r.note += (k ? "; " : "") + notes[k];
    rows.push_back(r);
  }
  return rows;
}

json classical_to_json(int n, const DomainRect& domain, const std::vector<ClassicalRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json e{{"p", r.p}};
    e["corollary"] = r.corollary ? interval_to_json(*r.corollary) : json(nullptr);
    e["plum"] = r.plum ? interval_to_json(*r.plum) : json(nullptr);
    if (r.corollary) e["corollary_decimal"] = format_enclosure(r.corollary->lo(), r.corollary->hi());
    if (r.plum) e["plum_decimal"] = format_enclosure(r.plum->lo(), r.plum->hi());
    if (!r.note.empty()) e["note"] = r.note;
    arr.push_back(e);
  }
  return json{{"format", "sobolev-embedding/classical-table"},
              {"version", kSchemaVersion},
              {"n", n},
              {"domain", json::array({domain.L1(), domain.L2()})},
              {"rows", arr}};
}

std::string classical_to_csv(const std::vector<ClassicalRow>& rows) {
  std::ostringstream os;
  os << "p,corollary_lo,corollary_hi,plum_lo,plum_hi\n";
  char buf[64];
  auto num = [&buf](const std::optional<Interval>& v, bool hi) {
    if (!v) return std::string();
    std::snprintf(buf, sizeof buf, "%.17g", hi ? v->hi() : v->lo());
    return std::string(buf);
  };
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g", r.p);
    os << buf << ',' << num(r.corollary, false) << ',' << num(r.corollary, true) << ',' << num(r.plum, false) << ','
       << num(r.plum, true) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// plot data and files

std::string plot_csv(const SineSeries2D& u, int m) {
  if (m < 2) throw DomainError("plot grid must be at least 2");
  std::vector<double> xs(m), ys(m);
  for (int k = 0; k < m; ++k) {
    xs[k] = u.domain().L1() * (k + 0.5) / m;
    ys[k] = u.domain().L2() * (k + 0.5) / m;
  }
  const IMatrix v = eval_grid(u, xs, ys);
  std::string out = "x,y,value\n";
  char buf[96];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", xs[i], ys[j], v(i, j).mid());
      out += buf;
    }
  }
  return out;
}

void emit_plot_data(const SineSeries2D& u, int m, const std::string& path) { write_text(path, plot_csv(u, m)); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IOError("write to " + path + " failed");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// report validation

std::vector<std::string> validate_report(const json& j) {
  std::vector<std::string> bad;
  auto fail = [&bad](const std::string& s) { bad.push_back(s); };
  if (!j.is_object() || j.value("format", "") != kReportFormat) {
    fail("not a run report");
    return bad;
  }
  if (j.value("version", 0) != kSchemaVersion) fail("unsupported report version");

  RunConfig cfg;
  try {
    cfg = config_from_json(j.at("config"));
    validate_config(cfg);
  } catch (const std::exception& e) {
    fail(std::string("config: ") + e.what());
    return bad;
  }

  auto iv = [&](const json& x, const std::string& what) -> std::optional<Interval> {
    try {
      if (!x.is_object() || x.value("rounding", "") != "outward") throw FormatError("missing outward rounding tag");
      return interval_from_json(x);
    } catch (const std::exception& e) {
      fail(what + ": " + e.what());
      return std::nullopt;
    }
  };
  auto scalar = [&](const json& x, const char* rounding, const std::string& what) -> std::optional<double> {
    if (!x.is_object() || x.value("rounding", "") != rounding || !x.contains("value") || !x["value"].is_number()) {
      fail(what + ": malformed bound");
      return std::nullopt;
    }
    return x["value"].get<double>();
  };

  double max_lower = 0.0, min_upper = std::numeric_limits<double>::infinity();
  int last_n = 0;
  const auto& rows = j.value("rows", json::array());
  for (const auto& r : rows) {
    const int n = r.value("N", 0);
    const std::string tag = "row N=" + std::to_string(n);
    if (n <= last_n) fail(tag + ": rows not strictly ordered by N");
    last_n = n;
    if (r.value("status", "") != "certified") continue;
    const auto rh = iv(r.at("r_h1"), tag + " r_h1");
    const auto h01 = iv(r.at("h01"), tag + " h01");
    const auto lam = iv(r.at("lambda1"), tag + " lambda1");
    const auto spow = scalar(r.at("sup_negative_pow"), "up", tag + " sup_negative_pow");
    for (const char* k : {"K", "g", "r_inf", "lp"}) iv(r.at(k), tag + " " + k);
    if (rh && rh->lo() < 0.0) fail(tag + ": negative radius");
    if (rh && h01 && !(h01->lo() > 2.0 * rh->hi())) fail(tag + ": ||u|| <= 2r");
    if (!r.value("positive", false)) fail(tag + ": certified row without positiveness");
    if (cfg.p % 2 == 1 && spow && lam && !(*spow < lam->lo())) fail(tag + ": spectral condition violated");
    const auto& e = r.at("enclosure");
    const auto lo = scalar(e.at("lower"), "down", tag + " lower");
    const auto hi = scalar(e.at("upper"), "up", tag + " upper");
    if (lo && hi) {
      if (*lo > *hi) fail(tag + ": lower > upper");
      max_lower = std::max(max_lower, *lo);
      min_upper = std::min(min_upper, *hi);
    }
  }

  // classical values are recomputed, not trusted
  const int q = cfg.p + 1;
  const Interval cor = corollary_bound(2, q, cfg.domain.measure());
  const Interval plum = plum_bound(2, q, first_eigenvalue_lower(cfg.domain));
  for (const auto& c : j.value("classical", json::array())) {
    const auto v = iv(c.at("value"), "classical");
    if (!v) continue;
    const std::string src = c.value("source", "");
    const Interval& ref = src == "corollary" ? cor : plum;
    if (!v->intersects(ref)) fail("classical " + src + " value does not match its formula");
    min_upper = std::min(min_upper, v->hi());
  }
  min_upper = std::min({min_upper, cor.hi(), plum.hi()});

  const auto& fin = j.value("final", json(nullptr));
  if (!fin.is_null()) {
    const auto lo = scalar(fin.at("lower"), "down", "final lower");
    const auto hi = scalar(fin.at("upper"), "up", "final upper");
    if (lo && hi) {
      if (*lo > *hi) fail("final: lower > upper");
      if (*lo != max_lower) fail("final lower is not the best certified row lower bound");
      if (*hi != min_upper) fail("final upper is not the minimum of the upper bounds");
      if (*lo > min_upper) fail("final lower exceeds an upper bound");
    }
    if (fin.value("p", 0) != q) fail("final exponent does not match the configuration");
  }
  return bad;
}

}  // namespace sobolev
