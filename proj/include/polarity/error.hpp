#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polarity {

// Precondition violations carry a stable machine-readable code next to the
// human message, so the CLI can map them to exit statuses and JSON fields.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace polarity
