#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "json.hpp"
#include "simplexflow/cesaro.hpp"
#include "simplexflow/cli/cli.hpp"
#include "simplexflow/errors.hpp"
#include "simplexflow/parameters.hpp"
#include "simplexflow/simplex.hpp"

namespace simplexflow::cli {

using nlohmann::json;

namespace {

constexpr const char* kObservables[] = {"phi", "sector", "region"};

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

std::size_t sweep_size(const RunConfig& cfg) {
  auto n = [](const std::vector<double>& v) { return v.empty() ? std::size_t{1} : v.size(); };
  const std::size_t starts = cfg.starts > 0 ? static_cast<std::size_t>(cfg.starts) : 1;
  return n(cfg.a_list) * n(cfg.b_list) * n(cfg.c_list) * n(cfg.f_list) * starts;
}

json speed_json(const SpeedSpec& s) {
  if (s.kind == SpeedFunction::Kind::kConstant) {
    return {{"kind", "constant"}, {"value", s.coefficients[0]}};
  }
  return {{"kind", "affine"}, {"coefficients", s.coefficients}};
}

SpeedSpec speed_from_json(const json& j) {
  SpeedSpec s;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    s.coefficients = {j.at("value").get<double>(), 0.0, 0.0, 0.0};
  } else if (kind == "affine") {
    s.kind = SpeedFunction::Kind::kAffine;
    s.coefficients = j.at("coefficients").get<std::array<double, 4>>();
  } else {
    throw ConfigError("speed.kind must be constant or affine");
  }
  return s;
}

template <typename T>
void read(const json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

}  // namespace

SpeedFunction SpeedSpec::build() const {
  const auto& k = coefficients;
  if (kind == SpeedFunction::Kind::kConstant) return SpeedFunction::constant(k[0]);
  return SpeedFunction::affine(k[0], k[1], k[2], k[3]);
}

void validate(const RunConfig& cfg) {
  try {
    const bool sweep = cfg.command == "sweep";
    if (!sweep) Parameters(cfg.a, cfg.b, cfg.c);
    cfg.speed.build();
    make_point(cfg.x0[0], cfg.x0[1], cfg.x0[2]);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  require(cfg.steps >= 0, "steps must be >= 0");
  require(cfg.stride >= 1, "stride must be >= 1");
  require(cfg.log_domain == "off" || cfg.log_domain == "on" || cfg.log_domain == "auto",
          "log_domain must be off, on or auto");
  for (const auto& o : cfg.observables) {
    bool known = false;
    for (const char* name : kObservables) known = known || o == name;
    require(known, "unknown observable '" + o + "'");
  }
  require(cfg.format == "csv" || cfg.format == "json", "format must be csv or json");
  require(cfg.threads >= 0, "threads must be >= 0");
  require(cfg.cesaro_order >= 0 && cfg.cesaro_order <= kMaxCesaroOrder,
          "cesaro_order out of range");
  require(cfg.eps > 0.0 && cfg.eps < 1.0, "eps must be in (0,1)");
  require(cfg.grid > 0.0 && cfg.grid <= 1.0, "grid must be in (0,1]");
  require(cfg.burn_in >= -1, "burn_in must be >= 0");
  require(cfg.conv_tol > 0.0, "conv_tol must be > 0");
  require(cfg.window >= 2, "window must be >= 2");
  require(cfg.starts >= 0, "starts must be >= 0");
  require(cfg.max_runs >= 1, "max_runs must be >= 1");
  require(sweep_size(cfg) <= static_cast<std::size_t>(cfg.max_runs),
          "sweep exceeds max_runs");
  for (double f : cfg.f_list) require(f > 0.0 && f <= 1.0, "f values must be in (0,1]");
  require(cfg.horizon >= 0.0 && std::isfinite(cfg.horizon), "horizon must be >= 0");
  require(cfg.ref_h > 0.0 && cfg.ref_h <= 1e-2, "ref_h must be in (0, 1e-2]");
  if (cfg.command == "ode-compare") {
    require(cfg.n_list.size() >= 4, "n_list needs at least four values");
    std::int64_t lo = cfg.n_list.front(), hi = lo;
    for (auto n : cfg.n_list) {
      require(n >= 1, "n_list values must be >= 1");
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    require(hi >= 100 * lo, "n_list must span two decades");
  }
}

std::string to_json_text(const RunConfig& cfg) {
  const json j = {
      {"command", cfg.command},
      {"a", cfg.a},
      {"b", cfg.b},
      {"c", cfg.c},
      {"speed", speed_json(cfg.speed)},
      {"x0", cfg.x0},
      {"steps", cfg.steps},
      {"stride", cfg.stride},
      {"log_domain", cfg.log_domain},
      {"observables", cfg.observables},
      {"output", cfg.output},
      {"format", cfg.format},
      {"seed", cfg.seed},
      {"threads", cfg.threads},
      {"cesaro_order", cfg.cesaro_order},
      {"eps", cfg.eps},
      {"grid", cfg.grid},
      {"burn_in", cfg.burn_in},
      {"conv_tol", cfg.conv_tol},
      {"window", cfg.window},
      {"a_list", cfg.a_list},
      {"b_list", cfg.b_list},
      {"c_list", cfg.c_list},
      {"f_list", cfg.f_list},
      {"starts", cfg.starts},
      {"max_runs", cfg.max_runs},
      {"horizon", cfg.horizon},
      {"n_list", cfg.n_list},
      {"ref_h", cfg.ref_h},
  };
  return j.dump();
}

RunConfig config_from_json_text(const std::string& text, RunConfig base) {
  try {
    json j = json::parse(text);
    if (j.contains("header")) j = j.at("header").at("config");
    require(j.is_object(), "config must be a JSON object");
    RunConfig& c = base;
    read(j, "command", c.command);
    read(j, "a", c.a);
    read(j, "b", c.b);
    read(j, "c", c.c);
    if (j.contains("speed")) c.speed = speed_from_json(j.at("speed"));
    read(j, "x0", c.x0);
    read(j, "steps", c.steps);
    read(j, "stride", c.stride);
    read(j, "log_domain", c.log_domain);
    read(j, "observables", c.observables);
    read(j, "output", c.output);
    read(j, "format", c.format);
    read(j, "seed", c.seed);
    read(j, "threads", c.threads);
    read(j, "cesaro_order", c.cesaro_order);
    read(j, "eps", c.eps);
    read(j, "grid", c.grid);
    read(j, "burn_in", c.burn_in);
    read(j, "conv_tol", c.conv_tol);
    read(j, "window", c.window);
    read(j, "a_list", c.a_list);
    read(j, "b_list", c.b_list);
    read(j, "c_list", c.c_list);
    read(j, "f_list", c.f_list);
    read(j, "starts", c.starts);
    read(j, "max_runs", c.max_runs);
    read(j, "horizon", c.horizon);
    read(j, "n_list", c.n_list);
    read(j, "ref_h", c.ref_h);
    return base;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

int effective_threads(int requested) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SIMPLEXFLOW_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1 && cap < n) n = static_cast<int>(cap);
  }
  return n;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace simplexflow::cli
