#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexflow/speed.hpp"

namespace simplexflow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidConfig = 2,
  kExitNumericFailure = 3,
  kExitIoFailure = 4,
};

/// Rejected configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised while writing output; maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpeedSpec {
  SpeedFunction::Kind kind = SpeedFunction::Kind::kConstant;
  std::array<double, 4> coefficients{1.0, 0.0, 0.0, 0.0};

  SpeedFunction build() const;
};

/// Everything a command needs. The JSON form (to_json_text) uses the long flag
/// names with '-' replaced by '_', and is accepted back through --config.
struct RunConfig {
  std::string command = "simulate";

  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  SpeedSpec speed;
  std::array<double, 3> x0{0.5, 0.3, 0.2};
  std::int64_t steps = 1000;
  std::int64_t stride = 1;
  std::string log_domain = "auto";  // off | on | auto
  std::vector<std::string> observables{"phi", "sector"};
  std::string output;               // empty: stdout
  std::string format = "csv";       // csv | json
  std::uint64_t seed = 1;
  int threads = 0;                  // 0: hardware concurrency

  // analyze
  int cesaro_order = 2;
  double eps = 0.05;
  double grid = 0.05;
  std::int64_t burn_in = -1;        // -1: steps / 10
  double conv_tol = 1e-10;
  std::int64_t window = 100;

  // sweep
  std::vector<double> a_list;
  std::vector<double> b_list;
  std::vector<double> c_list;
  std::vector<double> f_list;
  std::int64_t starts = 0;          // 0: x0 only
  std::int64_t max_runs = 100000;

  // ode-compare
  double horizon = 5.0;
  std::vector<std::int64_t> n_list{100, 1000, 10000, 100000};
  double ref_h = 1e-3;
};

/// Throws ConfigError.
void validate(const RunConfig& cfg);

std::string to_json_text(const RunConfig& cfg);
/// Accepts a bare config object or a whole output document carrying
/// header.config. Keys not present keep their values in `base`.
RunConfig config_from_json_text(const std::string& text, RunConfig base = {});

/// Worker count: `requested` (0 means hardware concurrency), capped by the
/// SIMPLEXFLOW_THREADS environment variable when set.
int effective_threads(int requested);

// Command bodies. Each writes one document to `out` and returns an exit code;
// errors are reported on `err`.
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ode_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Sweep rows as CSV text, computed on `threads` workers.
std::string sweep_csv(const RunConfig& cfg, int threads);

/// Full front end: argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g.
std::string format_number(double v);

}  // namespace simplexflow::cli
