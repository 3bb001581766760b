#pragma once

#include <stdexcept>
#include <string>

namespace qturan {

// Single exception type for the whole library. The kind maps onto the
// error codes of the C API and the exit codes of the CLI.
class Error : public std::runtime_error {
 public:
  enum class Kind { argument, parse, io, limit };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline void require(bool condition, Error::Kind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace qturan
