#pragma once

#include <stdexcept>
#include <string>

namespace qmfree {

enum class ErrorKind {
  kParse,          // malformed word, expression, order or map-spec text
  kRank,           // letter beyond the declared rank, or mismatched ranks
  kDomain,         // precondition of a mathematical operation violated
  kNotStabilized,  // homogenization horizon exhausted
  kUnknownCheck,   // verification registry lookup failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qmfree
