#pragma once

#include <string>

#include "bozk/config.hpp"

namespace bozk::cli {

enum ExitCode { kOk = 0, kConfigError = 2, kNumericalAbort = 3, kVerifyFailed = 4 };

struct Context {
  RunManifest m;
  std::string out;
  bool quiet = false;
};

int cmd_simulate(const Context& ctx);
int cmd_linear(const Context& ctx);
int cmd_picard(const Context& ctx);
int cmd_uc(const Context& ctx);
int cmd_verify(const Context& ctx);
int cmd_diagnose(const Context& ctx);

}  // namespace bozk::cli
