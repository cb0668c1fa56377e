#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "simplexflow/cli/cli.hpp"

namespace simplexflow::cli {

namespace {

// Flag values live here until parsing finishes; only flags that were given are
// copied onto the config, after any --config file.
class Flags {
 public:
  template <typename T, typename Apply>
  void add(CLI::App* app, const std::string& name, const std::string& help,
           Apply apply) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app->add_option(name, *value, help);
    if constexpr (requires { value->begin(); } && !std::is_same_v<T, std::string>) {
      opt->delimiter(',');
    }
    entries_.push_back({opt, [value, apply](RunConfig& c) { apply(c, *value); }});
    holders_.push_back(value);
  }

  void apply(RunConfig& cfg) const {
    for (const auto& [opt, fn] : entries_) {
      if (opt->count() > 0) fn(cfg);
    }
  }

 private:
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> entries_;
  std::vector<std::shared_ptr<void>> holders_;
};

void add_common(CLI::App* sub, Flags& f) {
  f.add<double>(sub, "--a", "parameter a", [](RunConfig& c, double v) { c.a = v; });
  f.add<double>(sub, "--b", "parameter b", [](RunConfig& c, double v) { c.b = v; });
  f.add<double>(sub, "--c", "parameter c", [](RunConfig& c, double v) { c.c = v; });
  f.add<double>(sub, "--f-const", "constant speed in (0,1]", [](RunConfig& c, double v) {
    c.speed = {SpeedFunction::Kind::kConstant, {v, 0.0, 0.0, 0.0}};
  });
  f.add<std::vector<double>>(sub, "--f-affine", "alpha0,alpha1,alpha2,alpha3",
                             [](RunConfig& c, const std::vector<double>& v) {
                               if (v.size() != 4) throw ConfigError("--f-affine needs 4 values");
                               c.speed = {SpeedFunction::Kind::kAffine, {v[0], v[1], v[2], v[3]}};
                             });
  f.add<std::vector<double>>(sub, "--x0", "x1,x2,x3",
                             [](RunConfig& c, const std::vector<double>& v) {
                               if (v.size() != 3) throw ConfigError("--x0 needs 3 values");
                               c.x0 = {v[0], v[1], v[2]};
                             });
  f.add<std::int64_t>(sub, "--steps", "iterations", [](RunConfig& c, std::int64_t v) { c.steps = v; });
  f.add<std::string>(sub, "--log-domain", "off, on or auto",
                     [](RunConfig& c, const std::string& v) { c.log_domain = v; });
  f.add<std::string>(sub, "--out", "output file (default stdout)",
                     [](RunConfig& c, const std::string& v) { c.output = v; });
  f.add<int>(sub, "--threads", "worker threads (0: all cores)",
             [](RunConfig& c, int v) { c.threads = v; });
}

void add_convergence(CLI::App* sub, Flags& f) {
  f.add<double>(sub, "--conv-tol", "convergence diameter", [](RunConfig& c, double v) { c.conv_tol = v; });
  f.add<std::int64_t>(sub, "--window", "convergence window", [](RunConfig& c, std::int64_t v) { c.window = v; });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate the three-species operator on the 2-simplex", "simplexflow"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config; flags override it");

  Flags flags;
  auto* sim = app.add_subcommand("simulate", "write a trajectory as CSV or JSON");
  auto* ana = app.add_subcommand("analyze", "write a JSON diagnostics report");
  auto* swp = app.add_subcommand("sweep", "parallel parameter sweep to CSV");
  auto* ode = app.add_subcommand("ode-compare", "Euler order against an RK4 reference");
  for (auto* sub : {sim, ana, swp, ode}) {
    sub->add_option("--config", config_path, "JSON config; flags override it");
    add_common(sub, flags);
  }

  flags.add<std::int64_t>(sim, "--stride", "record every k-th step",
                          [](RunConfig& c, std::int64_t v) { c.stride = v; });
  flags.add<std::string>(sim, "--format", "csv or json",
                         [](RunConfig& c, const std::string& v) { c.format = v; });
  flags.add<std::vector<std::string>>(sim, "--observables", "phi,sector,region",
                                      [](RunConfig& c, const std::vector<std::string>& v) { c.observables = v; });

  flags.add<int>(ana, "--cesaro-order", "highest Cesaro order reported",
                 [](RunConfig& c, int v) { c.cesaro_order = v; });
  flags.add<double>(ana, "--eps", "vertex neighbourhood size", [](RunConfig& c, double v) { c.eps = v; });
  flags.add<double>(ana, "--grid", "omega-limit cell width", [](RunConfig& c, double v) { c.grid = v; });
  flags.add<std::int64_t>(ana, "--burn-in", "steps skipped for omega cells",
                          [](RunConfig& c, std::int64_t v) { c.burn_in = v; });
  add_convergence(ana, flags);

  flags.add<std::vector<double>>(swp, "--a-list", "values of a", [](RunConfig& c, const std::vector<double>& v) { c.a_list = v; });
  flags.add<std::vector<double>>(swp, "--b-list", "values of b", [](RunConfig& c, const std::vector<double>& v) { c.b_list = v; });
  flags.add<std::vector<double>>(swp, "--c-list", "values of c", [](RunConfig& c, const std::vector<double>& v) { c.c_list = v; });
  flags.add<std::vector<double>>(swp, "--f-list", "constant speeds", [](RunConfig& c, const std::vector<double>& v) { c.f_list = v; });
  flags.add<std::int64_t>(swp, "--starts", "random starts per cell (0: x0)",
                          [](RunConfig& c, std::int64_t v) { c.starts = v; });
  flags.add<std::uint64_t>(swp, "--seed", "seed for random starts", [](RunConfig& c, std::uint64_t v) { c.seed = v; });
  flags.add<std::int64_t>(swp, "--max-runs", "cap on grid size", [](RunConfig& c, std::int64_t v) { c.max_runs = v; });
  add_convergence(swp, flags);

  flags.add<double>(ode, "--T", "time horizon", [](RunConfig& c, double v) { c.horizon = v; });
  flags.add<std::vector<std::int64_t>>(ode, "--n-list", "Euler substeps per unit time",
                                       [](RunConfig& c, const std::vector<std::int64_t>& v) { c.n_list = v; });
  flags.add<double>(ode, "--ref-h", "RK4 reference step", [](RunConfig& c, double v) { c.ref_h = v; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = config_from_json_text(read_file(config_path));
    flags.apply(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  }

  if (sim->parsed()) {
    cfg.command = "simulate";
    return cmd_simulate(cfg, out, err);
  }
  if (ana->parsed()) {
    cfg.command = "analyze";
    return cmd_analyze(cfg, out, err);
  }
  if (swp->parsed()) {
    cfg.command = "sweep";
    return cmd_sweep(cfg, out, err);
  }
  cfg.command = "ode-compare";
  return cmd_ode_compare(cfg, out, err);
}

}  // namespace simplexflow::cli
