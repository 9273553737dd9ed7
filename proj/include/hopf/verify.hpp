#pragma once

#include <string>

namespace hopf {

/// Outcome of a verification sweep. Failures carry the name of the law that
/// broke and a witness element; they are report content, not exceptions.
struct VerifyResult {
  bool ok = true;
  std::string check;
  std::string witness;

  static VerifyResult pass() { return {}; }
  static VerifyResult fail(std::string check, std::string witness) {
    return {false, std::move(check), std::move(witness)};
  }
};

}  // namespace hopf
