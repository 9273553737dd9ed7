#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

/// Library error. `input` rejects malformed or invalid data (carries a
/// witness where one exists), `math` flags a failed mathematical
/// precondition on well-formed data, `internal` signals an implementation
/// bug detected by a certification sweep.
class Error : public std::runtime_error {
 public:
  enum class Kind { input, math, internal };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Error input_error(const std::string& what) { return Error(Error::Kind::input, what); }
inline Error math_error(const std::string& what) { return Error(Error::Kind::math, what); }
inline Error internal_error(const std::string& what) { return Error(Error::Kind::internal, what); }

}  // namespace hopf
