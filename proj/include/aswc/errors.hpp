#pragma once

#include <stdexcept>
#include <string>

namespace aswc {

// Every failure the library can signal, with the CLI exit code it maps to.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    Parse,               // exit 2
    RingMismatch,        // exit 3
    NotIntegral,         // exit 3
    NegativeExponent,    // exit 3
    ShapeMismatch,       // exit 3
    EtaleFibre,          // exit 3
    UnknownVariable,     // exit 3
    UnsupportedRing,     // exit 3
    IdentityFailure,     // exit 3
    SearchSpaceTooLarge, // exit 4
    Internal,            // exit 1
  };

  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}

  Kind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case Kind::Parse: return 2;
      case Kind::SearchSpaceTooLarge: return 4;
      case Kind::Internal: return 1;
      default: return 3;
    }
  }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace aswc
