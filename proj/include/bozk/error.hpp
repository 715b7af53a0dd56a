#pragma once

#include <stdexcept>
#include <string>

namespace bozk {

// Bad input or manifest. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Blow-up, failed audit, loss of resolution. Exit code 3.
struct NumericalAbort : std::runtime_error {
  NumericalAbort(std::string audit, const std::string& what)
      : std::runtime_error(what), audit_name(std::move(audit)) {}
  std::string audit_name;
};

}  // namespace bozk
