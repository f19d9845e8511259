#pragma once

#include <stdexcept>
#include <string>

namespace strdiag {

enum class Errc {
  InvalidGraph,        // ids out of range, arity mismatch, malformed selection
  UnsupportedPushout,  // apex with edges
  InterfaceMismatch,   // compose along interfaces of different length
  UnknownGenerator,
  TypeMismatch,
  FrobeniusInSmcMode,
  NotMda,
  NotConvex,
  RuleInvalid,
  NoComplement,
  NonMonogamousComplement,
  Cyclic,
  Parse,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace strdiag
