#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sobolev/certifier.hpp"
#include "sobolev/domain.hpp"
#include "sobolev/embedding_bounds.hpp"
#include "sobolev/sine_series.hpp"

namespace sobolev {

inline constexpr const char* kReportFormat = "sobolev-embedding/run-report";
inline constexpr const char* kCertificateFormat = "sobolev-embedding/certificate";
inline constexpr const char* kConfigFormat = "sobolev-embedding/run-config";
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  int p = 3;  // PDE exponent; the enclosed constant is C_{p+1}
  DomainRect domain{1.0, 1.0};
  std::vector<int> Ns{10, 20, 30, 34};
  // solver
  double newton_tol = 1e-13;
  int max_iter = 50;
  std::optional<bool> symmetry;
  // certifier
  int split_order = 0;  // 0: same as N
  int max_split = 160;
  int defect_box = 0;
  int scan_grid = 256;
  // output
  std::string out;
  std::string format = "json";
  int plot_grid = 0;
  int threads = 1;
  bool deterministic = false;
};

nlohmann::json config_to_json(const RunConfig& cfg);
/// Fields missing from `j` keep their value from `base`.
RunConfig config_from_json(const nlohmann::json& j, const RunConfig& base = {});
void validate_config(const RunConfig& cfg);

struct RunRow {
  int N = 0;
  std::string status = "pending";  // "certified" or the error kind
  std::string message;
  int newton_iterations = 0;
  double newton_residual = 0.0;
  std::optional<CertifiedBall> ball;
  std::optional<ExtremalBounds> enclosure;
  std::string digest;
  double seconds = 0.0;
};

struct RunReport {
  RunConfig config;
  std::string config_digest;
  std::vector<RunRow> rows;
  std::vector<ClassicalBound> classical;
  std::optional<EnclosureResult> final;
  double seconds = 0.0;

  bool all_certified() const;
  /// 0 full success, 2 partial.
  int exit_code() const;
};

/// Runs every N of the sweep (in parallel when cfg.threads > 1) and combines
/// the certified rows with the classical bounds. Failures of single rows are
/// recorded in the row; SoundnessViolation propagates.
RunReport run_pipeline(const RunConfig& cfg);

nlohmann::json certificate_to_json(const CertifiedBall& ball, bool include_runtime = false);
nlohmann::json report_to_json(const RunReport& report);

/// Flat projection of the rows, one line per N.
std::string report_to_csv(const RunReport& report);

struct ClassicalRow {
  double p = 0.0;
  std::optional<Interval> corollary;
  std::optional<Interval> plum;
  std::string note;
};

struct ClassicalOptions {
  std::optional<double> measure;    // required for n >= 3
  std::optional<Interval> rho;      // user value, only honoured with unchecked
  bool unchecked = false;
};

/// Talenti-based and spectral bounds for every p. For n = 2 the measure and rho come
/// from the rectangle.
std::vector<ClassicalRow> classical_table(int n, const std::vector<double>& p_list, const DomainRect& domain,
                                          const ClassicalOptions& opt = {});
nlohmann::json classical_to_json(int n, const DomainRect& domain, const std::vector<ClassicalRow>& rows);
std::string classical_to_csv(const std::vector<ClassicalRow>& rows);

/// CSV "x,y,value" at the midpoints of an m x m grid, 17 significant digits.
std::string plot_csv(const SineSeries2D& u, int m);
void emit_plot_data(const SineSeries2D& u, int m, const std::string& path);

/// Re-checks a serialized report; returns the list of violated invariants.
std::vector<std::string> validate_report(const nlohmann::json& j);

void write_text(const std::string& path, const std::string& text);
nlohmann::json read_json(const std::string& path);

}  // namespace sobolev
