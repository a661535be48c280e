#pragma once

#include <stdexcept>
#include <string>

namespace ggm {

enum class ErrorCode {
  InvalidArgument,
  Config,
  DegenerateData,
  NotPositiveDefinite,
  Numeric,
  Dimension,
  Capability,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace ggm
