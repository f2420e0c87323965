#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Every failure carries a stable machine-readable kind ("NotGCM",
// "NotExpandable", ...) next to the human message; tests match on kind.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void check(bool cond, const std::string& kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

} // namespace qf
