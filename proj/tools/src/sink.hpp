#pragma once

#include <fstream>
#include <functional>
#include <ostream>

#include "simplexflow/cli/cli.hpp"
#include "simplexflow/errors.hpp"

namespace simplexflow::cli {

/// Validates `cfg`, runs `body` against the configured destination (file or
/// `out`) and maps failures onto exit codes.
inline int guarded(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                   const std::function<void(std::ostream&)>& body) {
  try {
    validate(cfg);
    if (cfg.output.empty()) {
      body(out);
      out.flush();
      if (!out) throw IoError("write to stdout failed");
      return kExitOk;
    }
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + cfg.output);
    body(file);
    file.close();
    if (!file) throw IoError("write to " + cfg.output + " failed");
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kNumericFailure:
      case ErrorCode::kNonPositiveFactor:
      case ErrorCode::kReferenceUnavailable:
        return kExitNumericFailure;
      default:
        return kExitInvalidConfig;
    }
  }
}

}  // namespace simplexflow::cli
