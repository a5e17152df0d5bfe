#pragma once

#include <stdexcept>
#include <string>

namespace gmm {

enum class ErrorKind {
  InvalidArgument,  // malformed input, violated precondition
  Parse,            // unreadable file / spec string
  Infeasible,       // a size cap was exceeded
  Budget,           // search budget exhausted before an answer was certain
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace gmm
