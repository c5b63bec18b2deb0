#pragma once

#include <stdexcept>
#include <string>

namespace rcb {

/// Failure raised by every library operation. `code()` is a stable
/// machine-readable identifier (e.g. "InvalidTriple") that the CLI copies
/// into its error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace rcb
