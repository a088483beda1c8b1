#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

// Error taxonomy shared by the library and the CLI.  Every throw site uses
// one of these so the CLI can map failures to a stable machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

struct SizeError : Error {
  explicit SizeError(const std::string& msg) : Error("SizeError", msg) {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& msg)
      : Error("DegenerateInput", msg) {}
};

struct SingularConfiguration : Error {
  explicit SingularConfiguration(const std::string& msg)
      : Error("SingularConfiguration", msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("ConfigError", msg) {}
};

struct QuadratureError : Error {
  explicit QuadratureError(const std::string& msg)
      : Error("QuadratureError", msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("IoError", msg) {}
};

}  // namespace su11
